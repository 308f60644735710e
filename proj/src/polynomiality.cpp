#include "hurwitz/polynomiality.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hurwitz/errors.hpp"
#include "hurwitz/linsolve.hpp"
#include "hurwitz/tropical.hpp"

namespace hurwitz {

void check_balanced(const BalancedPoint& x) {
    if (x.size() < 2) throw input_error("balanced points need at least two entries");
    long sum = 0;
    for (long v : x) {
        if (v == 0) throw input_error("balanced points must have nonzero entries");
        sum += v;
    }
    if (sum != 0) throw input_error("balanced point entries must sum to zero");
}

namespace {

std::vector<unsigned> canonical_masks(int n) {
    std::vector<unsigned> masks;
    unsigned full = (1u << n) - 1;
    for (unsigned m = 1; m < full; ++m)
        if (m & 1u) masks.push_back(m);
    return masks;
}

long subset_sum(const BalancedPoint& x, unsigned mask) {
    long s = 0;
    for (size_t i = 0; i < x.size(); ++i)
        if (mask & (1u << i)) s += x[i];
    return s;
}

unsigned mask_of(const std::vector<int>& subset, int n) {
    unsigned m = 0;
    for (int i : subset) {
        if (i < 0 || i >= n) throw input_error("wall subset index out of range");
        m |= (1u << i);
    }
    if (m == 0 || m == (1u << n) - 1) throw input_error("wall subset must be proper and nonempty");
    return m;
}

}  // namespace

ChamberSignature chamber_signature(const BalancedPoint& x) {
    check_balanced(x);
    int n = static_cast<int>(x.size());
    ChamberSignature sig;
    sig.n = n;
    for (unsigned m : canonical_masks(n)) {
        long s = subset_sum(x, m);
        if (s == 0) {
            std::string names;
            for (int i = 0; i < n; ++i)
                if (m & (1u << i)) names += (names.empty() ? "" : ",") + std::to_string(i + 1);
            throw on_wall("point lies on the wall of subset {" + names + "}");
        }
        sig.signs.push_back(s > 0 ? 1 : -1);
    }
    return sig;
}

std::vector<BalancedPoint> chamber_points_within(const BalancedPoint& x0, int radius) {
    ChamberSignature target = chamber_signature(x0);
    int n = static_cast<int>(x0.size());
    std::vector<BalancedPoint> found;
    std::vector<long> delta(static_cast<size_t>(n) - 1, -radius);
    auto advance = [&]() {
        for (size_t i = 0; i < delta.size(); ++i) {
            if (delta[i] < radius) {
                ++delta[i];
                std::fill(delta.begin(), delta.begin() + static_cast<long>(i),
                          -static_cast<long>(radius));
                return true;
            }
        }
        return false;
    };
    do {
        long last = -std::accumulate(delta.begin(), delta.end(), 0L);
        if (std::abs(last) > radius) continue;
        BalancedPoint x = x0;
        bool ok = true;
        for (size_t i = 0; i + 1 < x.size(); ++i) {
            x[i] += delta[i];
            if (x[i] == 0) ok = false;
        }
        x.back() += last;
        if (x.back() == 0) ok = false;
        if (!ok) continue;
        try {
            if (chamber_signature(x) == target) found.push_back(std::move(x));
        } catch (const on_wall&) {
        }
    } while (advance());
    // order by distance from x0 so that early points spread in all directions
    auto dist = [&x0](const BalancedPoint& x) {
        long m = 0;
        for (size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - x0[i]));
        return m;
    };
    std::stable_sort(found.begin(), found.end(),
                     [&](const BalancedPoint& a, const BalancedPoint& b) {
                         return std::make_pair(dist(a), a) < std::make_pair(dist(b), b);
                     });
    return found;
}

std::vector<BalancedPoint> sample_chamber(const BalancedPoint& x0, int count, int radius) {
    auto found = chamber_points_within(x0, radius);
    if (static_cast<int>(found.size()) < count)
        throw insufficient_points("chamber slice holds only " + std::to_string(found.size()) +
                                  " of the requested " + std::to_string(count) +
                                  " points; enlarge the radius");
    found.resize(static_cast<size_t>(count));
    return found;
}

namespace {

void split_profiles(const BalancedPoint& x, Partition& mu, Partition& nu) {
    std::vector<int> pos, neg;
    for (long v : x) {
        if (v > 0)
            pos.push_back(static_cast<int>(v));
        else
            neg.push_back(static_cast<int>(-v));
    }
    mu = Partition::from_unsorted(std::move(pos));
    nu = Partition::from_unsorted(std::move(neg));
}

Rat end_labeling_factor(const Partition& p) {
    Rat f(1);
    int run = 1;
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
            ++run;
        } else {
            f *= Rat(factorial(run));
            run = 1;
        }
    }
    return f;
}

// The chamber functions carry labeled ends (x is an ordered tuple), so the
// cover count is the unlabeled Hurwitz number times the multiplicity
// factorials of repeated parts on both sides.
Rat evaluate_hurwitz(const WeightFunction& w, int r, const BalancedPoint& x,
                     const std::optional<Partition>& lambda, bool connected) {
    check_balanced(x);
    if ((r - static_cast<int>(x.size())) % 2 != 0) return Rat(0);
    Partition mu, nu;
    split_profiles(x, mu, nu);
    if (mu.empty() || nu.empty()) throw input_error("profile sides must both be nonempty");
    Rat labeled = end_labeling_factor(mu) * end_labeling_factor(nu);
    if (lambda) {
        if (lambda->weight() != r) throw input_error("lambda must be a partition of r");
        return labeled * refined_tropical(w, mu, nu, *lambda, connected);
    }
    return labeled * tropical_double(w, mu, nu, r, connected);
}

}  // namespace

Rat hurwitz_at_point(const WeightFunction& w, int r, const BalancedPoint& x,
                     const std::optional<Partition>& lambda) {
    return evaluate_hurwitz(w, r, x, lambda, true);
}

Rat hurwitz_at_point_disconnected(const WeightFunction& w, int r, const BalancedPoint& x,
                                  const std::optional<Partition>& lambda) {
    return evaluate_hurwitz(w, r, x, lambda, false);
}

Rat LatticePolynomial::evaluate(const BalancedPoint& x) const {
    Rat total(0);
    for (const auto& [expo, c] : coeffs) {
        Rat term = c;
        for (size_t i = 0; i < expo.size(); ++i) {
            Rat base(static_cast<long>(x[i]));
            for (int e = 0; e < expo[i]; ++e) term *= base;
        }
        total += term;
    }
    return total;
}

int LatticePolynomial::total_degree() const {
    int deg = 0;
    for (const auto& [expo, c] : coeffs)
        deg = std::max(deg, std::accumulate(expo.begin(), expo.end(), 0));
    return deg;
}

namespace {

std::vector<std::vector<int>> monomials_up_to(int vars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(static_cast<size_t>(vars), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == vars) {
            out.push_back(e);
            return;
        }
        for (int p = 0; p <= left; ++p) {
            e[static_cast<size_t>(i)] = p;
            rec(i + 1, left - p);
        }
        e[static_cast<size_t>(i)] = 0;
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
        return std::tie(da, a) < std::tie(db, b);
    });
    return out;
}

}  // namespace

InterpolationReport interpolate_chamber(const WeightFunction& w, int r, const BalancedPoint& x0,
                                        const std::optional<Partition>& lambda, int hold_out,
                                        int radius) {
    check_balanced(x0);
    int n = static_cast<int>(x0.size());
    InterpolationReport rep;
    rep.poly.n = n;
    if ((r - n) % 2 != 0) return rep;  // identically zero at this parity
    int g = (r - n + 2) / 2;
    int degree = 4 * g - 3 + n;
    if (degree < 0) degree = 0;
    rep.degree_bound = degree;
    auto monos = monomials_up_to(n - 1, degree);
    int dim = static_cast<int>(monos.size());

    auto row_of = [&](const BalancedPoint& x) {
        std::vector<Rat> row;
        row.reserve(monos.size());
        for (const auto& e : monos) {
            Rat v(1);
            for (size_t i = 0; i < e.size(); ++i) {
                Rat base(static_cast<long>(x[i]));
                for (int k = 0; k < e[i]; ++k) v *= base;
            }
            row.push_back(std::move(v));
        }
        return row;
    };

    for (int attempt = 0; attempt < 3; ++attempt, radius *= 2) {
        std::vector<BalancedPoint> pts = chamber_points_within(x0, radius);
        if (static_cast<int>(pts.size()) < dim + hold_out) continue;  // widen the box
        // rank-greedy selection: keep only points whose Vandermonde row is
        // independent of the rows chosen so far (no Hurwitz evaluation yet)
        Matrix basis;
        std::vector<size_t> chosen;
        std::vector<bool> used(pts.size(), false);
        for (size_t i = 0; i < pts.size() && static_cast<int>(chosen.size()) < dim; ++i) {
            std::vector<Rat> row = row_of(pts[i]);
            std::vector<Rat> reduced = row;
            for (const auto& b : basis) {
                // b is normalized with leading 1 at its pivot
                size_t p = 0;
                while (p < b.size() && b[p] == 0) ++p;
                if (reduced[p] != 0) {
                    Rat f = reduced[p];
                    for (size_t j = p; j < reduced.size(); ++j) reduced[j] -= f * b[j];
                }
            }
            size_t p = 0;
            while (p < reduced.size() && reduced[p] == 0) ++p;
            if (p == reduced.size()) continue;
            Rat inv = 1 / reduced[p];
            for (size_t j = p; j < reduced.size(); ++j) reduced[j] *= inv;
            basis.push_back(std::move(reduced));
            chosen.push_back(i);
            used[i] = true;
        }
        if (static_cast<int>(chosen.size()) < dim) continue;  // widen the box

        Matrix a;
        std::vector<Rat> rhs;
        for (size_t i : chosen) {
            a.push_back(row_of(pts[i]));
            rhs.push_back(hurwitz_at_point(w, r, pts[i], lambda));
            rep.fit_points.push_back(pts[i]);
        }
        auto sol = exact_solve(std::move(a), std::move(rhs));
        if (sol.status != SolveStatus::unique)
            throw invariant_error("rank-selected interpolation system failed to solve");
        for (int j = 0; j < dim; ++j)
            if (sol.solution[static_cast<size_t>(j)] != 0)
                rep.poly.coeffs[monos[static_cast<size_t>(j)]] =
                    sol.solution[static_cast<size_t>(j)];
        int validated = 0;
        for (size_t i = 0; i < pts.size() && validated < hold_out; ++i) {
            if (used[i]) continue;
            Rat direct = hurwitz_at_point(w, r, pts[i], lambda);
            if (rep.poly.evaluate(pts[i]) != direct)
                throw validation_failure("held-out point disagrees with the fitted polynomial");
            rep.validation_points.push_back(pts[i]);
            ++validated;
        }
        if (validated < hold_out)
            throw insufficient_points("not enough spare chamber points for validation");
        return rep;
    }
    throw insufficient_points("could not collect enough independent chamber points");
}

namespace {

// Multiset splits of lambda into three (possibly empty) partitions.
void tri_splits(const Partition& lambda,
                const std::function<void(const Partition&, const Partition&, const Partition&)>& f) {
    std::vector<std::pair<int, int>> groups;
    for (int p : lambda.parts()) {
        if (!groups.empty() && groups.back().first == p)
            ++groups.back().second;
        else
            groups.emplace_back(p, 1);
    }
    std::vector<std::array<int, 3>> take(groups.size());
    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == groups.size()) {
            std::vector<int> a, b, c;
            for (size_t i = 0; i < groups.size(); ++i) {
                a.insert(a.end(), static_cast<size_t>(take[i][0]), groups[i].first);
                b.insert(b.end(), static_cast<size_t>(take[i][1]), groups[i].first);
                c.insert(c.end(), static_cast<size_t>(take[i][2]), groups[i].first);
            }
            f(Partition::from_unsorted(std::move(a)), Partition::from_unsorted(std::move(b)),
              Partition::from_unsorted(std::move(c)));
            return;
        }
        int mult = groups[gi].second;
        for (int x = 0; x <= mult; ++x)
            for (int y = 0; x + y <= mult; ++y) {
                take[gi] = {x, y, mult - x - y};
                rec(gi + 1);
            }
    };
    rec(0);
}

// Ordered-tuple sum over positive integer tuples with a given total, folded to
// partitions:  sum_y (prod y_i / ell(y)!) f(y) = sum_{p |- s} (prod p_i / prod mult!) f(p).
Rat tuple_weight(const Partition& p) {
    Rat w(1);
    for (int v : p.parts()) w *= v;
    int run = 1;
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
            ++run;
        } else {
            w /= Rat(factorial(run));
            run = 1;
        }
    }
    return w;
}

BalancedPoint concat_profiles(const std::vector<long>& left, const Partition& right_negated) {
    BalancedPoint x = left;
    for (int v : right_negated.parts()) x.push_back(-static_cast<long>(v));
    return x;
}

}  // namespace

WallCrossingReport wallcross_verify(const WeightFunction& w, const Partition& lambda,
                                    const std::vector<int>& wall_subset,
                                    const BalancedPoint& x_positive_side, int test_points,
                                    int hold_out, int radius) {
    check_balanced(x_positive_side);
    int n = static_cast<int>(x_positive_side.size());
    int r = lambda.weight();
    unsigned wall_mask = mask_of(wall_subset, n);
    long s0 = subset_sum(x_positive_side, wall_mask);
    if (s0 <= 0) throw input_error("the base point must satisfy sum_I x > 0");

    // mirror the base point across the wall: shift one I-entry down and one
    // complement entry up by 2 s0
    BalancedPoint x_neg = x_positive_side;
    int i_in = wall_subset[0];
    int j_out = -1;
    for (int i = 0; i < n; ++i)
        if (!(wall_mask & (1u << i))) {
            j_out = i;
            break;
        }
    x_neg[static_cast<size_t>(i_in)] -= 2 * s0;
    x_neg[static_cast<size_t>(j_out)] += 2 * s0;
    ChamberSignature sig_pos = chamber_signature(x_positive_side);
    ChamberSignature sig_neg = chamber_signature(x_neg);  // throws if mirroring hit a wall
    {
        auto masks = canonical_masks(n);
        int diffs = 0;
        for (size_t k = 0; k < masks.size(); ++k) {
            if (sig_pos.signs[k] == sig_neg.signs[k]) continue;
            ++diffs;
            unsigned m = masks[k];
            unsigned full = (1u << n) - 1;
            if (m != wall_mask && m != (full ^ wall_mask))
                throw input_error("chambers are not adjacent across the requested wall; "
                                  "pick a base point closer to it");
        }
        if (diffs == 0) throw input_error("mirrored point landed in the same chamber");
    }

    WallCrossingReport rep;
    rep.wall = wall_subset;
    rep.side_negative = interpolate_chamber(w, r, x_neg, lambda, hold_out, radius);
    rep.side_positive = interpolate_chamber(w, r, x_positive_side, lambda, hold_out, radius);

    auto tests = sample_chamber(x_positive_side, test_points, radius);
    rep.all_equal = true;
    for (int t = 0; t < test_points; ++t) {
        const BalancedPoint& x = tests[static_cast<size_t>(t)];
        WallCrossingRow row;
        row.x = x;
        row.lhs = rep.side_positive.poly.evaluate(x) - rep.side_negative.poly.evaluate(x);

        long s = subset_sum(x, wall_mask);
        std::vector<long> x_in, x_out;
        for (int i = 0; i < n; ++i)
            ((wall_mask & (1u << i)) ? x_in : x_out).push_back(x[static_cast<size_t>(i)]);

        Rat rhs(0);
        auto ys = partitions_of(static_cast<int>(s));
        for (const Partition& y : ys) {
            for (const Partition& z : ys) {
                Rat yz_weight = tuple_weight(y) * tuple_weight(z);
                tri_splits(lambda, [&](const Partition& l1, const Partition& l2,
                                       const Partition& l3) {
                    int r1 = l1.weight(), r2 = l2.weight(), r3 = l3.weight();
                    // parities must match the sub-profile lengths
                    if ((r1 - static_cast<int>(x_in.size()) - y.length()) % 2 != 0) return;
                    if ((r2 - y.length() - z.length()) % 2 != 0) return;
                    if ((r3 - z.length() - static_cast<int>(x_out.size())) % 2 != 0) return;
                    Rat h1 = hurwitz_at_point(w, r1, concat_profiles(x_in, y), l1);
                    if (h1 == 0) return;
                    Rat h2 = hurwitz_at_point_disconnected(
                        w, r2, concat_profiles({y.parts().begin(), y.parts().end()}, z), l2);
                    if (h2 == 0) return;
                    std::vector<long> z_pos(z.parts().begin(), z.parts().end());
                    BalancedPoint x3 = z_pos;
                    for (long v : x_out) x3.push_back(v);
                    Rat h3 = hurwitz_at_point(w, r3, x3, l3);
                    if (h3 == 0) return;
                    Rat multinomial =
                        make_rat(factorial(r), factorial(r1) * factorial(r2) * factorial(r3));
                    Rat sign = (l2.length() % 2 == 0) ? Rat(1) : Rat(-1);
                    rhs += sign * multinomial * yz_weight * h1 * h2 * h3;
                });
            }
        }
        row.rhs = rhs;
        row.equal = (row.lhs == row.rhs);
        if (!row.equal) rep.all_equal = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace hurwitz
