#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Bad caller input. The CLI maps these to exit code 2.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A module invariant failed at runtime. The CLI maps these to exit code 3.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct variable_mismatch : input_error {
    variable_mismatch() : input_error("series variables do not match") {}
};

struct non_invertible_constant_term : input_error {
    non_invertible_constant_term() : input_error("series has zero constant term, cannot invert") {}
};

struct bad_constant_term : input_error {
    explicit bad_constant_term(const std::string& what) : input_error(what) {}
};

struct order_exceeded : input_error {
    order_exceeded(int k, int order)
        : input_error("coefficient " + std::to_string(k) + " requested beyond truncation order " +
                      std::to_string(order)) {}
};

struct size_mismatch : input_error {
    explicit size_mismatch(const std::string& what) : input_error(what) {}
};

struct parity_mismatch : input_error {
    explicit parity_mismatch(const std::string& what) : input_error(what) {}
};

struct degree_too_large : input_error {
    explicit degree_too_large(const std::string& what) : input_error(what) {}
};

struct unsupported_weight_kind : input_error {
    explicit unsupported_weight_kind(const std::string& what) : input_error(what) {}
};

struct unsupported_constant_term : input_error {
    explicit unsupported_constant_term(const std::string& what) : input_error(what) {}
};

struct invalid_local_type : input_error {
    explicit invalid_local_type(const std::string& what) : input_error(what) {}
};

struct incomplete_input : input_error {
    explicit incomplete_input(const std::string& what) : input_error(what) {}
};

struct on_wall : input_error {
    explicit on_wall(const std::string& what) : input_error(what) {}
};

struct insufficient_points : input_error {
    explicit insufficient_points(const std::string& what) : input_error(what) {}
};

struct validation_failure : invariant_error {
    explicit validation_failure(const std::string& what) : invariant_error(what) {}
};

struct insufficient_order : input_error {
    explicit insufficient_order(const std::string& what) : input_error(what) {}
};

struct incompatible_decoration : input_error {
    explicit incompatible_decoration(const std::string& what) : input_error(what) {}
};

}  // namespace hurwitz
