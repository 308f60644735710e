#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

Rat bernoulli(int k);

// Eisenstein series G_k(q) = -B_k/2k + sum_{n>=1} sigma_{k-1}(n) q^n, k even.
Series eisenstein_q(int k, int order);

// Monomial basis of the quasimodular forms of mixed weight <= weight_cap:
// all P^a Q^b R^c with 2a+4b+6c <= weight_cap, expanded to the given order.
// P = -24 G_2, Q = 240 G_4, R = -504 G_6.
struct QuasimodBasis {
    int weight_cap;
    std::vector<std::string> names;  // "1", "P", "P^2*Q", ...
    std::vector<Series> expansions;
    int dimension() const { return static_cast<int>(names.size()); }
};
QuasimodBasis quasimod_basis(int weight_cap, int order);

struct QuasimodFit {
    bool success = false;
    bool underdetermined = false;        // solved but with < 3 validation coefficients
    std::map<std::string, Rat> coords;   // basis name -> coordinate
    int validated = 0;                   // held-out coefficients checked
    int residual_index = -1;             // first failing coefficient, when unsuccessful
    std::string message;
};

// Exact fit of a q-series in the mixed-weight basis: solve on the leading
// dim-many coefficients, then validate every remaining computed coefficient.
// hold_out is the minimum number of coefficients that must remain for
// validation (insufficient_order otherwise).
QuasimodFit fit_quasimodular(const Series& s, int weight_cap, int hold_out);

// Bloch-Okounkov bracket: sum_lambda f(lambda) q^|lambda| / sum_lambda q^|lambda|.
Series q_bracket(const std::function<Rat(const Partition&)>& f, int order);
Series q_bracket(const std::map<Partition, Rat>& values, int order);

}  // namespace hurwitz
