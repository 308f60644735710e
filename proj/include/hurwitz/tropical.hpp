#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/weights.hpp"

namespace hurwitz {

struct CoverVertex {
    int genus = 0;
    std::vector<int> left_ends;   // weights of mu-ends attached here, sorted
    std::vector<int> right_ends;  // weights of nu-ends attached here, sorted
};

struct BoundedEdge {
    int source = 0;  // 0-based vertex indices, source < target
    int target = 0;
    int weight = 0;
    auto operator<=>(const BoundedEdge&) const = default;
};

// Admissible tropical cover of the line with vertices ordered left to right
// over the marked points. Through-edges run from a mu-end to a nu-end without
// meeting a vertex; they only occur in disconnected covers or alone at r = 0.
struct TropicalCover {
    std::vector<CoverVertex> vertices;
    std::vector<BoundedEdge> edges;
    std::vector<int> through_edges;

    int valence(int i) const;
    Composition lambda() const;  // valence + 2 genus - 2, per vertex in order
};

// Product of factorials over classes of identical incidences: left-ends and
// right-ends grouped by (vertex, weight), bounded edges by (source, target,
// weight), through-edges by weight. Ends are unlabeled.
Int cover_aut_order(const TropicalCover& c);

// Enumerates every admissible cover exactly once, deterministically, by a
// left-to-right sweep over the open-edge multiset. With connected_only set,
// emits single through-edge covers and covers whose vertex graph is connected
// with every end attached. forced_lambda restricts the vertex local types to
// exactly the given composition.
void enumerate_covers(const Partition& mu, const Partition& nu, int r, bool connected_only,
                      const std::function<void(const TropicalCover&)>& visit,
                      const Composition* forced_lambda = nullptr);

std::vector<TropicalCover> list_covers(const Partition& mu, const Partition& nu, int r,
                                       bool connected_only);

// lambda! * A_lambda * [w^{2 gv}] prod_{x in in+out} S(x w) / S(w)^2,
// with lambda = |in| + |out| + 2 gv - 2.
Rat vertex_multiplicity(const std::vector<Rat>& a_coeffs, const std::vector<int>& in_weights,
                        const std::vector<int>& out_weights, int gv);

// Per-cover weighting report: the contribution of one cover to the sum.
struct CoverReport {
    Composition lambda;
    Int aut_order = 1;
    std::vector<Rat> vertex_multiplicities;
    Int edge_weight_product = 1;  // bounded edges only
    Rat contribution;             // total term value including global factors
};

// Tropical evaluation of the weighted double Hurwitz number. The vertex data
// is weighted by (r!/l!) (1/|Aut|) prod m_{G,v} prod_{bounded} w, and each
// through-edge contributes 1/w.
Rat tropical_double(const WeightFunction& w, const Partition& mu, const Partition& nu, int r,
                    bool connected_only);

// Restriction of the cover sum to a fixed ordered vertex-type composition.
Rat refined_tropical_ordered(const WeightFunction& w, const Partition& mu, const Partition& nu,
                             const Composition& lambda, bool connected_only);

// Sum over all distinct orderings of the unordered type partition.
Rat refined_tropical(const WeightFunction& w, const Partition& mu, const Partition& nu,
                     const Partition& lambda, bool connected_only);

// Completed-cycles double Hurwitz number H^{(rcc)} with s operator insertions:
// covers with exactly s vertices, every local type equal to rcc, weighted by
// [w^{2 gv}] prod S(x w) / S(w) per vertex (no A-factor, no global factorials).
Rat completed_cycles_double(int rcc, const Partition& mu, const Partition& nu, int s,
                            bool connected_only = false);

// Per-cover reports in enumeration order, with the same weighting as
// tropical_double; used by the covers dump.
std::vector<std::pair<TropicalCover, CoverReport>> tropical_cover_reports(
    const WeightFunction& w, const Partition& mu, const Partition& nu, int r,
    bool connected_only);

}  // namespace hurwitz
