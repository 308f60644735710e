#pragma once

#include <map>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/weights.hpp"

namespace hurwitz {

// Disconnected weighted double Hurwitz number from the character sum
//   H = r! sum_{lambda |- d} [beta^r] r_lambda^{(G,beta)} chi(mu) chi(nu) / (z_mu z_nu).
// r must have the parity of ell(mu)+ell(nu); negative-genus inputs are legal.
Rat char_double_disconnected(const WeightFunction& w, const Partition& mu, const Partition& nu,
                             int r);

struct DoubleBrute {
    Rat disconnected;
    Rat connected;
};

// Exhaustive count of transposition factorizations tau_r...tau_1 sigma_1 = sigma_2
// with classes (mu, nu), divided by d!. Guarded at d <= 6.
DoubleBrute brute_force_double_classical(const Partition& mu, const Partition& nu, int r);

// Monotone factorizations grouped by signature: lambda |- r  ->  m^lambda_{mu nu}.
std::map<Partition, Int> brute_force_signature_counts(const Partition& mu, const Partition& nu,
                                                      int r);

// (r!/d!) sum_lambda G_lambda m^lambda; the Guay-Paquet evaluation.
Rat brute_force_double_weighted(const WeightFunction& w, const Partition& mu, const Partition& nu,
                                int r);

// Connected double Hurwitz numbers by component-split inclusion-exclusion over
// the disconnected character oracle.
Rat connected_double(const WeightFunction& w, const Partition& mu, const Partition& nu, int r);

struct EllipticBrute {
    Rat disconnected;
    Rat connected;
    std::map<Partition, Int> signature_counts;  // lambda |- r -> M^lambda
};

// Exhaustive commutator factorizations sigma_1..sigma_n tau_1..tau_r = [alpha,beta]
// with monotone tau and signature weighting. Guarded at d <= 4, r <= 4.
EllipticBrute brute_force_elliptic(const WeightFunction& w, const std::vector<Partition>& profiles,
                                   int d, int r);

// Same factorization count without the monotonicity filter, weight 1 per tuple;
// equals the weighted count at W = exp.
DoubleBrute brute_force_elliptic_classical(const std::vector<Partition>& profiles, int d, int r);

// r for elliptic targets: r = 2g - 2 + sum_i (|mu^i| - ell(mu^i)).
int elliptic_r(int g, const std::vector<Partition>& profiles);

// Shifted-symmetric evaluation of the disconnected weighted elliptic number,
//   N = r! sum_{lambda |- r} sum_{gamma |- d} G_lambda prod_i f_{mu^i}(gamma) m_lambda(cont gamma).
Rat elliptic_shiftsym_disconnected(const WeightFunction& w, const std::vector<Partition>& profiles,
                                   int g, int d);

// Two-variable log transform: table[d][r] of disconnected numbers (q marks the
// degree, u^r/r! the simple branch points; row d=0 must be (1,0,...)) to the
// table of connected numbers.
std::vector<std::vector<Rat>> elliptic_connected_from_disconnected(
    const std::vector<std::vector<Rat>>& table);

// Connected weighted elliptic number; uses the table transform when there are
// no profiles and a rooted component recursion otherwise.
Rat elliptic_connected(const WeightFunction& w, const std::vector<Partition>& profiles, int g,
                       int d);

}  // namespace hurwitz
