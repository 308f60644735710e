#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/weights.hpp"

namespace hurwitz {

// Feynman diagram with position-ordered vertices (the order doubles as the
// marked-point assignment on the base circle). Loops are edges with both
// endpoints equal; genus decorations determine the local types
// lambda_i = val(x_i) + 2 g_i - 2, with loops counting twice toward valence.
struct FeynmanDiagram {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // (i, j) with i <= j, 0-based, sorted
    std::vector<int> genus;                  // size n

    std::vector<int> valences() const;
    Composition lambda() const;
    int total_genus() const;      // b_1 + sum g_i
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool connected() const;
    std::string canonical_key() const;  // invariant under vertex reorder
    std::string ordered_key() const;    // distinguishes the vertex order
};

// All connected position-ordered diagrams with total genus g (sum of local
// types 2g-2, every local type >= 1). Deterministic order.
std::vector<FeynmanDiagram> enumerate_ordered_diagrams(int g);

// Isomorphism classes with their lambda-respecting automorphism counts
// (vertex permutations preserving the decorated adjacency, times the
// permutations of parallel edges and of loops at a common vertex).
std::vector<std::pair<FeynmanDiagram, Int>> enumerate_diagram_classes(int g);

// Parallel-slot symmetry of the edge list alone (vertices fixed).
Int diagram_slot_aut(const FeynmanDiagram& d);

// One propagator term: the cover edge crosses the base point `crossings`
// times with weight w, contributing q^{w*crossings}; non-loop terms with
// crossings >= 1 occur in both directions.
struct PropagatorTerm {
    int weight = 0;
    int crossings = 0;
    bool bidirectional = false;
    Rat coefficient;  // the scalar factor w
};

// Term list of the plain or loop propagator up to weight and q-degree bounds.
// The z-dependence is S(w z) once per incidence and is applied by the
// integral, not stored here.
std::vector<PropagatorTerm> propagator_terms(bool loop, int w_max, int a_max);

// One surviving propagator monomial: a tropical cover of the circle. The edge
// crosses the base point `crossings` times with this weight; non-loop edges
// additionally carry a direction.
struct EdgeData {
    int weight = 0;
    int crossings = 0;
    bool backward = false;  // non-loop edges only
};

// Enumerates the balanced per-edge assignments (the [x^0] survivors) of one
// diagram up to degree d_max; visit(edge data, degree, monomial value) where
// the value already includes the per-vertex [z^{2g}] brackets.
void for_each_cover_monomial(
    const FeynmanDiagram& d, int d_max,
    const std::function<void(const std::vector<EdgeData>&, int, const Rat&)>& visit);

// The refined integral I_{Gamma,Omega,lambda}(q) for the diagram's own order:
// per-edge propagator assignments with per-vertex flow balance ([x^0]) and
// [z_i^{2 g_i}] extraction against 1/S(z_i)^2. Labeled edge slots.
Series feynman_integral(const FeynmanDiagram& d, int d_max);

// Contribution of one ordered diagram to the connected q-series:
//   (2g-2)!/n! * prod_i lambda_i! A_{lambda_i} / slot_aut * I(q).
Series refined_type_series(const FeynmanDiagram& d, const WeightFunction& w, int d_max);

// Theorem-level sum over all ordered diagrams of total genus g.
Series feynman_qseries(const WeightFunction& w, int g, int d_max);

// Same sum, reported per diagram (canonical key, ordered key, series).
struct DiagramContribution {
    FeynmanDiagram diagram;
    Series series;
    int refined_weight_cap;  // 2 (sum g_i + |E|)
};
std::vector<DiagramContribution> feynman_per_diagram(const WeightFunction& w, int g, int d_max);

// Disconnected and connected q-series of weighted elliptic Hurwitz numbers via
// the shifted-symmetric sums and the component transform.
struct EllipticSeries {
    Series disconnected;
    Series connected;
};
EllipticSeries elliptic_qseries_pipeline(const WeightFunction& w, int g,
                                         const std::vector<Partition>& profiles, int d_max);

}  // namespace hurwitz
