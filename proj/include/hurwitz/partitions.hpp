#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Weakly decreasing sequence of positive integers. The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates ordering and positivity
    static Partition from_unsorted(std::vector<int> parts);

    int weight() const;  // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// An ordered tuple of positive integers; used where vertex order matters.
using Composition = std::vector<int>;

// All partitions of n, each exactly once, in reverse-lexicographic order
// ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

// Centralizer order z_mu = prod_i i^{m_i} m_i!.
Int z_order(const Partition& mu);

// Multiset of cell contents j-i, rows i and columns j 1-based, row-major order.
std::vector<int> contents(const Partition& gamma);

Partition conjugate(const Partition& lambda);

// mu extended by parts equal to 1 up to total size d.
Partition pad_with_ones(const Partition& mu, int d);

std::string partition_to_string(const Partition& p);

}  // namespace hurwitz
