#pragma once

#include <string>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

// Weight generating function G (or its dual form). The product kinds carry a
// finite parameter list c; completed cycles carry the cycle length r; the
// log-series kind stores the A_k directly.
enum class WeightKind { product_g, product_gtilde, exp, completed_cycles, log_series };

struct WeightFunction {
    WeightKind kind = WeightKind::exp;
    std::vector<Rat> c;       // product_g / product_gtilde parameters
    int cycles_r = 0;         // completed_cycles
    std::vector<Rat> a_data;  // log_series: A_0..A_k as given (A_0 must be 0)

    static WeightFunction exp_weight() { return WeightFunction{WeightKind::exp, {}, 0, {}}; }
    static WeightFunction product_g_weight(std::vector<Rat> c) {
        return WeightFunction{WeightKind::product_g, std::move(c), 0, {}};
    }
    static WeightFunction product_gtilde_weight(std::vector<Rat> c) {
        return WeightFunction{WeightKind::product_gtilde, std::move(c), 0, {}};
    }
    static WeightFunction completed_cycles_weight(int r);
    static WeightFunction log_series_weight(std::vector<Rat> a);

    std::string describe() const;
};

// log G(beta z) = sum_k A_k (beta z)^k, as the full coefficient list A_0..A_K.
// A_0 is nonzero only for completed cycles of even length.
std::vector<Rat> log_g_coefficients(const WeightFunction& w, int K);

// The A_k sequence with the A_0 = 0 requirement enforced; throws
// unsupported_constant_term otherwise.
std::vector<Rat> a_coefficients(const WeightFunction& w, int K);

// G as a truncated series in the given variable.
Series g_series(const WeightFunction& w, Var var, int order);

// G_lambda: product over parts of e_{part}(c), h_{part}(c), or 1/part! for the
// exponential kind. Signature-based formulas are undefined for the other kinds.
Rat g_lambda_weight(const WeightFunction& w, const Partition& lambda);
bool supports_g_lambda(const WeightFunction& w);

// Content product r_lambda = prod_{cells} G(beta * content), truncated at beta^R.
Series content_product_series(const WeightFunction& w, const Partition& lambda, int R);

}  // namespace hurwitz
