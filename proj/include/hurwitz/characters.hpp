#pragma once

#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Irreducible character chi^lambda evaluated on the conjugacy class mu,
// |lambda| = |mu|. Murnaghan-Nakayama with memoization; always an integer.
Int character(const Partition& lambda, const Partition& mu);

// dim(lambda) = chi^lambda(1^d), by the hook length formula.
Int dimension(const Partition& lambda);

// Central character f_nu(gamma): the scalar by which the class sum of
// nu padded with 1s to |gamma| acts on the irreducible indexed by gamma,
//   f_nu(gamma) = |C_{nu 1^{...}}| chi^gamma(nu 1^{...}) / dim(gamma).
// Requires |nu| <= |gamma|. The empty nu gives 1.
Rat central_character(const Partition& nu, const Partition& gamma);

// (1/2) sum_i [(lambda_i - i + 1/2)^2 - (-i + 1/2)^2]; equals the content sum.
Rat f2_eval(const Partition& lambda);

// Monomial symmetric polynomial m_lambda evaluated at a finite list of values.
// Fewer values than ell(lambda) gives 0; the empty lambda gives 1.
Rat monomial_eval(const Partition& lambda, const std::vector<int>& values);

// Elementary and complete homogeneous symmetric polynomials of a finite
// rational alphabet, e_k(c) and h_k(c).
Rat elementary_symmetric(int k, const std::vector<Rat>& c);
Rat complete_homogeneous(int k, const std::vector<Rat>& c);

}  // namespace hurwitz
