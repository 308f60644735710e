#pragma once

#include <string>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Formal variable tags. Arithmetic between series with different tags is refused.
enum class Var { beta, z, w, q, u };

std::string var_name(Var v);

// Truncated univariate power series with exact rational coefficients.
// A series of order K stores the coefficients of x^0..x^K. Binary operations
// truncate the result to the smaller order of the two operands.
class Series {
public:
    Series(Var var, int order);  // zero series of the given order
    Series(Var var, std::vector<Rat> coeffs);

    static Series one(Var var, int order);
    static Series monomial(Var var, int order, int k, Rat c);

    Var var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }

    // Unchecked access, 0 <= k <= order.
    const Rat& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    Rat& operator[](int k) { return c_[static_cast<size_t>(k)]; }

    // Checked access; throws order_exceeded when more precision is requested
    // than was computed.
    const Rat& coeff(int k) const;

    bool is_zero() const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rat& s);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rat& s) { return a *= s; }
    friend Series operator*(const Rat& s, Series a) { return a *= s; }

    Series inverse() const;            // requires nonzero constant term
    Series log() const;                // requires constant term 1
    Series exp() const;                // requires constant term 0
    Series scale_variable(long m) const;  // substitutes x -> m*x
    Series truncated(int new_order) const;
    Series with_var(Var v) const;      // retags the variable

    bool operator==(const Series&) const = default;

private:
    Var var_;
    std::vector<Rat> c_;

    void require_same_var(const Series& o) const;
};

// S(x) = 2*sinh(x/2)/x = sum_j x^(2j) / (4^j (2j+1)!). Odd coefficients vanish.
Series normalized_sinh(Var var, int order);
Series normalized_sinh_inverse(Var var, int order);

// [x^{2g}] prod_{w in weights} S(w x) / S(x)^denom_power; memoized. The local
// vertex brackets of both cover enumerations are built from this.
Rat sinh_product_coefficient(const std::vector<int>& weights, int g, int denom_power);

}  // namespace hurwitz
