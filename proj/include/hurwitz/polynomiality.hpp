#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/weights.hpp"

namespace hurwitz {

// A lattice point x in Z^n with sum 0 and no zero entries; positive entries
// are the profile over 0, negated negative entries the profile over infinity.
using BalancedPoint = std::vector<long>;

void check_balanced(const BalancedPoint& x);

// Signs of the subset sums sum_{i in I} x_i for the canonical representatives
// (proper nonempty subsets containing index 0). Throws on_wall when a subset
// sum vanishes.
struct ChamberSignature {
    int n = 0;
    std::vector<int> signs;  // indexed over canonical masks, entries +-1
    bool operator==(const ChamberSignature&) const = default;
};
ChamberSignature chamber_signature(const BalancedPoint& x);

// Every balanced lattice point with the signature of x0 within max-norm
// `radius` of x0, ordered by distance from x0 (x0 itself first).
std::vector<BalancedPoint> chamber_points_within(const BalancedPoint& x0, int radius);

// Deterministic enumeration of `count` distinct balanced lattice points with
// the signature of x0, all within max-norm `radius` of x0 (x0 itself first).
std::vector<BalancedPoint> sample_chamber(const BalancedPoint& x0, int count, int radius);

// H_G^r(x): connected weighted double Hurwitz number of the profile pair cut
// out by the signs of x; zero when r has the wrong parity. With lambda, the
// refined number restricted to that unordered type partition.
Rat hurwitz_at_point(const WeightFunction& w, int r, const BalancedPoint& x,
                     const std::optional<Partition>& lambda = std::nullopt);

// Same with the disconnected count (used by the wall-crossing middle factor).
Rat hurwitz_at_point_disconnected(const WeightFunction& w, int r, const BalancedPoint& x,
                                  const std::optional<Partition>& lambda);

// Exact polynomial in x_1..x_{n-1} (x_n eliminated through sum x = 0).
struct LatticePolynomial {
    int n = 0;
    std::map<std::vector<int>, Rat> coeffs;  // exponent vector (length n-1) -> coefficient
    Rat evaluate(const BalancedPoint& x) const;
    int total_degree() const;
    bool is_zero() const { return coeffs.empty(); }
};

struct InterpolationReport {
    LatticePolynomial poly;
    std::vector<BalancedPoint> fit_points;
    std::vector<BalancedPoint> validation_points;
    int degree_bound = 0;
};

// Fits the chamber polynomial of degree <= 4g-3+n around x0 and validates it
// exactly on hold_out further chamber points.
InterpolationReport interpolate_chamber(const WeightFunction& w, int r, const BalancedPoint& x0,
                                        const std::optional<Partition>& lambda = std::nullopt,
                                        int hold_out = 5, int radius = 6);

struct WallCrossingRow {
    BalancedPoint x;
    Rat lhs;  // P2(x) - P1(x)
    Rat rhs;  // convolution of refined Hurwitz numbers over the wall
    bool equal = false;
};

struct WallCrossingReport {
    std::vector<int> wall;  // the subset I as indices
    InterpolationReport side_negative;  // chamber with sum_I x < 0
    InterpolationReport side_positive;
    std::vector<WallCrossingRow> rows;
    bool all_equal = false;
};

// Verifies the wall-crossing formula for the wall sum_{i in I} x_i = 0:
// interpolates the refined polynomials on both adjacent chambers and compares
// their difference with the convolution formula at test points on the
// positive side of the wall.
WallCrossingReport wallcross_verify(const WeightFunction& w, const Partition& lambda,
                                    const std::vector<int>& wall_subset,
                                    const BalancedPoint& x_positive_side, int test_points = 3,
                                    int hold_out = 5, int radius = 6);

}  // namespace hurwitz
