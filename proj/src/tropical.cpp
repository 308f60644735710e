#include "hurwitz/tropical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "hurwitz/errors.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

int TropicalCover::valence(int i) const {
    const auto& v = vertices[static_cast<size_t>(i)];
    int val = static_cast<int>(v.left_ends.size() + v.right_ends.size());
    for (const auto& e : edges) {
        if (e.source == i) ++val;
        if (e.target == i) ++val;
    }
    return val;
}

Composition TropicalCover::lambda() const {
    Composition l;
    l.reserve(vertices.size());
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        l.push_back(valence(i) + 2 * vertices[static_cast<size_t>(i)].genus - 2);
    return l;
}

Int cover_aut_order(const TropicalCover& c) {
    Int aut = 1;
    auto count_runs = [&aut](const std::vector<int>& sorted) {
        int run = 1;
        for (size_t i = 1; i <= sorted.size(); ++i) {
            if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
                ++run;
            } else {
                aut *= factorial(run);
                run = 1;
            }
        }
    };
    for (const auto& v : c.vertices) {
        count_runs(v.left_ends);
        count_runs(v.right_ends);
    }
    // bounded edges are already sorted by (source, target, weight)
    int run = 1;
    for (size_t i = 1; i <= c.edges.size(); ++i) {
        if (i < c.edges.size() && c.edges[i] == c.edges[i - 1]) {
            ++run;
        } else {
            aut *= factorial(run);
            run = 1;
        }
    }
    count_runs(c.through_edges);
    return aut;
}

namespace {

// Open item during the sweep: an edge weight together with its source
// (-1 for a mu-end that has not attached yet).
struct OpenKey {
    int weight;
    int source;
    auto operator<=>(const OpenKey&) const = default;
};

using OpenSet = std::map<OpenKey, int>;

struct SweepState {
    const Partition* nu;
    int r;
    bool connected_only;
    const Composition* forced;
    const std::function<void(const TropicalCover&)>* visit;
    TropicalCover cover;
    int lambda_used = 0;
};

bool vertex_graph_connected(const TropicalCover& c) {
    int n = static_cast<int>(c.vertices.size());
    if (n == 0) return true;
    std::vector<int> root(static_cast<size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (root[static_cast<size_t>(x)] != x) {
            root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
            x = root[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& e : c.edges) root[static_cast<size_t>(find(e.source))] = find(e.target);
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

void finalize(SweepState& st, const OpenSet& open) {
    if (st.lambda_used != st.r) return;
    if (st.forced && st.cover.vertices.size() != st.forced->size()) return;
    // leftover open items must reproduce nu: mu-sourced ones become
    // through-edges, vertex-sourced ones become right-ends
    std::vector<int> weights;
    for (const auto& [key, count] : open)
        for (int i = 0; i < count; ++i) weights.push_back(key.weight);
    std::vector<int> nu_sorted = st.nu->parts();
    std::sort(weights.begin(), weights.end(), std::greater<int>());
    if (weights != nu_sorted) return;

    TropicalCover& c = st.cover;
    c.through_edges.clear();
    for (auto& v : c.vertices) v.right_ends.clear();
    for (const auto& [key, count] : open) {
        for (int i = 0; i < count; ++i) {
            if (key.source < 0)
                c.through_edges.push_back(key.weight);
            else
                c.vertices[static_cast<size_t>(key.source)].right_ends.push_back(key.weight);
        }
    }
    for (auto& v : c.vertices) std::sort(v.right_ends.begin(), v.right_ends.end());
    std::sort(c.through_edges.begin(), c.through_edges.end());

    if (st.connected_only) {
        if (c.vertices.empty()) {
            if (c.through_edges.size() != 1) return;
        } else {
            if (!c.through_edges.empty()) return;
            if (!vertex_graph_connected(c)) return;
        }
    }
    (*st.visit)(c);
}

// Enumerate sub-multisets of `open` (as count vectors over its keys), skipping
// the empty choice, then emissions and genera for the next vertex.
void place_vertices(SweepState& st, const OpenSet& open);

void with_consumption(SweepState& st, const OpenSet& open, const std::vector<OpenKey>& keys,
                      std::vector<int>& take, size_t ki) {
    if (ki == keys.size()) {
        int consumed_count = std::accumulate(take.begin(), take.end(), 0);
        if (consumed_count == 0) return;
        int s = 0;
        for (size_t i = 0; i < keys.size(); ++i) s += take[i] * keys[i].weight;

        int vi = static_cast<int>(st.cover.vertices.size());
        int budget = st.r - st.lambda_used;
        // remaining vertices all need lambda >= 1
        int forced_lambda = st.forced ? (*st.forced)[static_cast<size_t>(vi)] : -1;

        // record the vertex skeleton: attachments and incoming edges
        CoverVertex vert;
        std::vector<BoundedEdge> saved_edges = st.cover.edges;
        for (size_t i = 0; i < keys.size(); ++i) {
            for (int cnt = 0; cnt < take[i]; ++cnt) {
                if (keys[i].source < 0)
                    vert.left_ends.push_back(keys[i].weight);
                else
                    st.cover.edges.push_back({keys[i].source, vi, keys[i].weight});
            }
        }
        std::sort(vert.left_ends.begin(), vert.left_ends.end());
        std::sort(st.cover.edges.begin(), st.cover.edges.end());
        st.cover.vertices.push_back(std::move(vert));

        OpenSet reduced = open;
        for (size_t i = 0; i < keys.size(); ++i) {
            if (take[i] == 0) continue;
            auto it = reduced.find(keys[i]);
            it->second -= take[i];
            if (it->second == 0) reduced.erase(it);
        }

        // emissions: multisets of positive weights summing to s; the local type
        // lambda = consumed + emitted + 2 genus - 2 must fit the budget
        int max_parts = budget + 2 - consumed_count;
        if (forced_lambda >= 0) max_parts = std::min(max_parts, forced_lambda + 2 - consumed_count);
        std::vector<int> emit;
        std::function<void(int, int)> emit_rec = [&](int rest, int max_part) {
            if (rest == 0) {
                int val = consumed_count + static_cast<int>(emit.size());
                int lam_min = std::max(1, val - 2);
                if ((lam_min - (val - 2)) % 2 != 0) ++lam_min;  // lambda = val-2+2g
                for (int lam = lam_min; lam <= budget; lam += 2) {
                    if (forced_lambda >= 0 && lam != forced_lambda) continue;
                    int genus = (lam - val + 2) / 2;
                    st.cover.vertices.back().genus = genus;
                    st.lambda_used += lam;
                    OpenSet next = reduced;
                    for (int e : emit) ++next[OpenKey{e, vi}];
                    finalize(st, next);
                    place_vertices(st, next);
                    st.lambda_used -= lam;
                }
                return;
            }
            for (int p = std::min(rest, max_part); p >= 1; --p) {
                if (static_cast<int>(emit.size()) + 1 > max_parts) break;
                // at least ceil(rest/p) more parts are needed; prune on count
                emit.push_back(p);
                emit_rec(rest - p, p);
                emit.pop_back();
            }
        };
        if (max_parts >= 1) emit_rec(s, s);

        st.cover.vertices.pop_back();
        st.cover.edges = std::move(saved_edges);
        return;
    }
    int avail = open.at(keys[ki]);
    for (int c = 0; c <= avail; ++c) {
        take[ki] = c;
        with_consumption(st, open, keys, take, ki + 1);
    }
    take[ki] = 0;
}

void place_vertices(SweepState& st, const OpenSet& open) {
    if (st.lambda_used >= st.r) return;  // no budget for another vertex
    std::vector<OpenKey> keys;
    keys.reserve(open.size());
    for (const auto& [k, c] : open) keys.push_back(k);
    std::vector<int> take(keys.size(), 0);
    with_consumption(st, open, keys, take, 0);
}

}  // namespace

void enumerate_covers(const Partition& mu, const Partition& nu, int r, bool connected_only,
                      const std::function<void(const TropicalCover&)>& visit,
                      const Composition* forced_lambda) {
    if (mu.weight() != nu.weight() || mu.weight() < 1)
        throw size_mismatch("cover profiles must be partitions of the same positive integer");
    if (r < 0) throw input_error("r must be non-negative");
    if (forced_lambda) {
        int sum = std::accumulate(forced_lambda->begin(), forced_lambda->end(), 0);
        if (sum != r) throw input_error("forced composition must sum to r");
        for (int p : *forced_lambda)
            if (p < 1) throw invalid_local_type("local types must be >= 1");
    }
    SweepState st;
    st.nu = &nu;
    st.r = r;
    st.connected_only = connected_only;
    st.forced = forced_lambda;
    st.visit = &visit;
    OpenSet open;
    for (int p : mu.parts()) ++open[OpenKey{p, -1}];
    finalize(st, open);  // the vertexless case (r = 0, or nothing left to place)
    place_vertices(st, open);
}

std::vector<TropicalCover> list_covers(const Partition& mu, const Partition& nu, int r,
                                       bool connected_only) {
    std::vector<TropicalCover> out;
    enumerate_covers(mu, nu, r, connected_only, [&](const TropicalCover& c) { out.push_back(c); });
    return out;
}

Rat vertex_multiplicity(const std::vector<Rat>& a_coeffs, const std::vector<int>& in_weights,
                        const std::vector<int>& out_weights, int gv) {
    int val = static_cast<int>(in_weights.size() + out_weights.size());
    int lam = val + 2 * gv - 2;
    if (lam < 1) throw invalid_local_type("vertex local type must be >= 1");
    if (in_weights.empty() || out_weights.empty())
        throw invalid_local_type("vertex needs incoming and outgoing incidences");
    if (lam >= static_cast<int>(a_coeffs.size()))
        throw input_error("A-coefficients not available up to the local type");
    Series prod = Series::one(Var::w, 2 * gv);
    for (int x : in_weights) prod = prod * normalized_sinh(Var::w, 2 * gv).scale_variable(x);
    for (int x : out_weights) prod = prod * normalized_sinh(Var::w, 2 * gv).scale_variable(x);
    Series denom = normalized_sinh(Var::w, 2 * gv);
    prod = prod * denom.inverse() * denom.inverse();
    return Rat(factorial(lam)) * a_coeffs[static_cast<size_t>(lam)] * prod[2 * gv];
}

namespace {

struct VertexLocal {
    std::vector<int> incident_weights;  // ends and bounded edges, both sides
    int genus;
    int lambda;
};

std::vector<VertexLocal> local_data(const TropicalCover& c) {
    std::vector<VertexLocal> out(c.vertices.size());
    for (size_t i = 0; i < c.vertices.size(); ++i) {
        const auto& v = c.vertices[i];
        auto& loc = out[i];
        loc.incident_weights.insert(loc.incident_weights.end(), v.left_ends.begin(),
                                    v.left_ends.end());
        loc.incident_weights.insert(loc.incident_weights.end(), v.right_ends.begin(),
                                    v.right_ends.end());
        loc.genus = v.genus;
    }
    for (const auto& e : c.edges) {
        out[static_cast<size_t>(e.source)].incident_weights.push_back(e.weight);
        out[static_cast<size_t>(e.target)].incident_weights.push_back(e.weight);
    }
    for (auto& loc : out) {
        std::sort(loc.incident_weights.begin(), loc.incident_weights.end());
        loc.lambda = static_cast<int>(loc.incident_weights.size()) + 2 * loc.genus - 2;
    }
    return out;
}

CoverReport weigh_cover(const TropicalCover& c, const std::vector<Rat>* a_coeffs, int r,
                        bool completed_cycles_mode) {
    CoverReport rep;
    rep.lambda = c.lambda();
    rep.aut_order = cover_aut_order(c);
    Rat prod(1);
    for (const auto& loc : local_data(c)) {
        Rat m;
        if (completed_cycles_mode) {
            m = sinh_product_coefficient(loc.incident_weights, loc.genus, 1);
        } else {
            m = Rat(factorial(loc.lambda)) * (*a_coeffs)[static_cast<size_t>(loc.lambda)] *
                sinh_product_coefficient(loc.incident_weights, loc.genus, 2);
        }
        rep.vertex_multiplicities.push_back(m);
        prod *= m;
    }
    for (const auto& e : c.edges) rep.edge_weight_product *= e.weight;
    Rat through(1);
    for (int w : c.through_edges) through /= w;
    Rat value = prod * Rat(rep.edge_weight_product) * through / Rat(rep.aut_order);
    if (!completed_cycles_mode) {
        // global normalization r!/l! for l placed vertices
        value *= make_rat(factorial(r), factorial(static_cast<long>(c.vertices.size())));
    }
    rep.contribution = value;
    return rep;
}

}  // namespace

Rat tropical_double(const WeightFunction& w, const Partition& mu, const Partition& nu, int r,
                    bool connected_only) {
    auto a = a_coefficients(w, r);
    Rat total(0);
    enumerate_covers(mu, nu, r, connected_only, [&](const TropicalCover& c) {
        total += weigh_cover(c, &a, r, false).contribution;
    });
    return total;
}

Rat refined_tropical_ordered(const WeightFunction& w, const Partition& mu, const Partition& nu,
                             const Composition& lambda, bool connected_only) {
    int r = std::accumulate(lambda.begin(), lambda.end(), 0);
    auto a = a_coefficients(w, r);
    Rat total(0);
    enumerate_covers(
        mu, nu, r, connected_only,
        [&](const TropicalCover& c) { total += weigh_cover(c, &a, r, false).contribution; },
        &lambda);
    return total;
}

Rat refined_tropical(const WeightFunction& w, const Partition& mu, const Partition& nu,
                     const Partition& lambda, bool connected_only) {
    Composition comp = lambda.parts();
    std::sort(comp.begin(), comp.end());
    Rat total(0);
    do {
        total += refined_tropical_ordered(w, mu, nu, comp, connected_only);
    } while (std::next_permutation(comp.begin(), comp.end()));
    return total;
}

Rat completed_cycles_double(int rcc, const Partition& mu, const Partition& nu, int s,
                            bool connected_only) {
    if (rcc < 1) throw input_error("completed-cycles local type must be >= 1");
    if (s < 0) throw input_error("number of insertions must be >= 0");
    Composition forced(static_cast<size_t>(s), rcc);
    Rat total(0);
    enumerate_covers(
        mu, nu, rcc * s, connected_only,
        [&](const TropicalCover& c) { total += weigh_cover(c, nullptr, rcc * s, true).contribution; },
        &forced);
    return total;
}

std::vector<std::pair<TropicalCover, CoverReport>> tropical_cover_reports(
    const WeightFunction& w, const Partition& mu, const Partition& nu, int r,
    bool connected_only) {
    auto a = a_coefficients(w, r);
    std::vector<std::pair<TropicalCover, CoverReport>> out;
    enumerate_covers(mu, nu, r, connected_only, [&](const TropicalCover& c) {
        out.emplace_back(c, weigh_cover(c, &a, r, false));
    });
    return out;
}

}  // namespace hurwitz
