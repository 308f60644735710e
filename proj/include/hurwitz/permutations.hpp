#pragma once

#include <vector>

#include "hurwitz/partitions.hpp"

namespace hurwitz {

// Permutation of {0..d-1} stored as its image table.
using Perm = std::vector<int>;

Perm identity_perm(int d);
Perm compose(const Perm& p, const Perm& q);  // (p*q)(x) = p(q(x))
Perm inverse(const Perm& p);
Perm commutator(const Perm& a, const Perm& b);  // a b a^-1 b^-1
Partition cycle_type(const Perm& p);

std::vector<Perm> all_perms(int d);
std::vector<Perm> conjugacy_class(const Partition& mu, int d);  // mu padded to d with 1s

// Transposition (a b) with a < b; b is the monotonicity marker.
struct Transposition {
    int a, b;
    Perm as_perm(int d) const;
};
std::vector<Transposition> all_transpositions(int d);

// True when the group generated acts transitively on {0..d-1}.
bool is_transitive(const std::vector<const Perm*>& gens, int d);

}  // namespace hurwitz
