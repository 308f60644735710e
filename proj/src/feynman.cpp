#include "hurwitz/feynman.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hurwitz/errors.hpp"
#include "hurwitz/oracles.hpp"

namespace hurwitz {

std::vector<int> FeynmanDiagram::valences() const {
    std::vector<int> val(static_cast<size_t>(n), 0);
    for (auto [i, j] : edges) {
        val[static_cast<size_t>(i)] += 1;
        val[static_cast<size_t>(j)] += 1;  // loops count twice
    }
    return val;
}

Composition FeynmanDiagram::lambda() const {
    auto val = valences();
    Composition l(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        l[static_cast<size_t>(i)] =
            val[static_cast<size_t>(i)] + 2 * genus[static_cast<size_t>(i)] - 2;
    return l;
}

int FeynmanDiagram::total_genus() const {
    int b1 = edge_count() - n + 1;
    return b1 + std::accumulate(genus.begin(), genus.end(), 0);
}

bool FeynmanDiagram::connected() const {
    if (n == 0) return false;
    std::vector<int> root(static_cast<size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (root[static_cast<size_t>(x)] != x)
            x = root[static_cast<size_t>(x)] =
                root[static_cast<size_t>(root[static_cast<size_t>(x)])];
        return x;
    };
    for (auto [i, j] : edges) root[static_cast<size_t>(find(i))] = find(j);
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

std::string FeynmanDiagram::ordered_key() const {
    std::string s = "n" + std::to_string(n) + ";g=";
    for (int g : genus) s += std::to_string(g) + ",";
    s += ";e=";
    for (auto [i, j] : edges) s += std::to_string(i + 1) + "-" + std::to_string(j + 1) + ",";
    return s;
}

std::string FeynmanDiagram::canonical_key() const {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    auto lam = lambda();
    do {
        std::vector<std::pair<int, int>> e2;
        e2.reserve(edges.size());
        for (auto [i, j] : edges) {
            int a = perm[static_cast<size_t>(i)], b = perm[static_cast<size_t>(j)];
            e2.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(e2.begin(), e2.end());
        std::vector<int> l2(static_cast<size_t>(n)), g2(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            l2[static_cast<size_t>(perm[static_cast<size_t>(i)])] = lam[static_cast<size_t>(i)];
            g2[static_cast<size_t>(perm[static_cast<size_t>(i)])] = genus[static_cast<size_t>(i)];
        }
        std::string s = "l=";
        for (int x : l2) s += std::to_string(x) + ",";
        s += ";g=";
        for (int x : g2) s += std::to_string(x) + ",";
        s += ";e=";
        for (auto [i, j] : e2) s += std::to_string(i + 1) + "-" + std::to_string(j + 1) + ",";
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Int diagram_slot_aut(const FeynmanDiagram& d) {
    Int aut = 1;
    int run = 1;
    for (size_t i = 1; i <= d.edges.size(); ++i) {
        if (i < d.edges.size() && d.edges[i] == d.edges[i - 1]) {
            ++run;
        } else {
            aut *= factorial(run);
            run = 1;
        }
    }
    return aut;
}

std::vector<FeynmanDiagram> enumerate_ordered_diagrams(int g) {
    if (g < 2) throw input_error("diagram enumeration needs g >= 2");
    int r = 2 * g - 2;
    std::vector<FeynmanDiagram> out;
    for (int n = 1; n <= r; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
        std::vector<int> mult(pairs.size(), 0);
        std::vector<int> val(static_cast<size_t>(n), 0);
        // sum of valences is 2|E| = r + 2n - 2 sum(g_i) <= r + 2n
        int val_budget = r + 2 * n;
        std::function<void(size_t, int)> rec = [&](size_t pi, int val_sum) {
            if (pi == pairs.size()) {
                for (int i = 0; i < n; ++i)
                    if (val[static_cast<size_t>(i)] < 2) return;
                FeynmanDiagram diag;
                diag.n = n;
                for (size_t k = 0; k < pairs.size(); ++k)
                    for (int c = 0; c < mult[k]; ++c) diag.edges.push_back(pairs[k]);
                if (!diag.connected()) return;
                int g_rest = r - val_sum + 2 * n;
                if (g_rest < 0 || g_rest % 2 != 0) return;
                g_rest /= 2;
                std::vector<int> gv(static_cast<size_t>(n), 0);
                std::function<void(int, int)> distribute = [&](int vi, int left) {
                    if (vi == n) {
                        if (left != 0) return;
                        diag.genus = gv;
                        for (int x : diag.lambda())
                            if (x < 1) return;
                        out.push_back(diag);
                        return;
                    }
                    for (int gi = 0; gi <= left; ++gi) {
                        gv[static_cast<size_t>(vi)] = gi;
                        distribute(vi + 1, left - gi);
                    }
                };
                distribute(0, g_rest);
                return;
            }
            auto [i, j] = pairs[pi];
            int inc = (i == j) ? 2 : 1;
            for (int m = 0;; ++m) {
                if (val_sum + 2 * m > val_budget) break;
                if (val[static_cast<size_t>(i)] + m * inc > r + 2) break;
                if (i != j && val[static_cast<size_t>(j)] + m > r + 2) break;
                mult[pi] = m;
                val[static_cast<size_t>(i)] += m * inc;
                if (i != j) val[static_cast<size_t>(j)] += m;
                rec(pi + 1, val_sum + 2 * m);
                val[static_cast<size_t>(i)] -= m * inc;
                if (i != j) val[static_cast<size_t>(j)] -= m;
            }
            mult[pi] = 0;
        };
        rec(0, 0);
    }
    return out;
}

std::vector<std::pair<FeynmanDiagram, Int>> enumerate_diagram_classes(int g) {
    std::map<std::string, std::pair<FeynmanDiagram, int>> classes;
    for (const auto& d : enumerate_ordered_diagrams(g)) {
        auto key = d.canonical_key();
        auto it = classes.find(key);
        if (it == classes.end())
            classes.emplace(std::move(key), std::make_pair(d, 1));
        else
            it->second.second += 1;
    }
    std::vector<std::pair<FeynmanDiagram, Int>> out;
    out.reserve(classes.size());
    for (auto& [key, rep] : classes) {
        const FeynmanDiagram& d = rep.first;
        // each iso class spreads over n!/(vertex aut) distinct ordered diagrams,
        // so |Aut(Gamma,lambda)| = n!/count * slot permutations
        Int aut = factorial(d.n) / rep.second * diagram_slot_aut(d);
        out.emplace_back(d, aut);
    }
    return out;
}

std::vector<PropagatorTerm> propagator_terms(bool loop, int w_max, int a_max) {
    if (w_max < 1 || a_max < 0) throw input_error("propagator bounds must be >= 1");
    std::vector<PropagatorTerm> out;
    if (!loop)
        for (int w = 1; w <= w_max; ++w) out.push_back({w, 0, false, Rat(w)});
    for (int w = 1; w <= w_max; ++w)
        for (int c = 1; w * c <= a_max; ++c) out.push_back({w, c, !loop, Rat(w)});
    return out;
}

void for_each_cover_monomial(const FeynmanDiagram& d, int d_max,
                             const std::function<void(const std::vector<EdgeData>&, int, const Rat&)>& visit) {
    if (d_max < 0) throw input_error("d_max must be non-negative");
    for (int x : d.lambda())
        if (x < 1) throw incompatible_decoration("diagram local types must be >= 1");
    size_t ne = d.edges.size();
    std::vector<EdgeData> assign(ne);
    std::vector<int> last_touch(static_cast<size_t>(d.n), -1);
    for (size_t e = 0; e < ne; ++e) {
        last_touch[static_cast<size_t>(d.edges[e].first)] = static_cast<int>(e);
        last_touch[static_cast<size_t>(d.edges[e].second)] = static_cast<int>(e);
    }
    std::vector<int> flow(static_cast<size_t>(d.n), 0);

    auto settled = [&](int vertex, size_t e) {
        return last_touch[static_cast<size_t>(vertex)] != static_cast<int>(e) ||
               flow[static_cast<size_t>(vertex)] == 0;
    };

    std::function<void(size_t, int)> rec = [&](size_t e, int deg) {
        if (e == ne) {
            Rat value(1);
            for (const auto& a : assign) value *= a.weight;
            for (int v = 0; v < d.n && value != 0; ++v) {
                std::vector<int> incident;
                for (size_t k = 0; k < ne; ++k) {
                    if (d.edges[k].first == v) incident.push_back(assign[k].weight);
                    if (d.edges[k].second == v) incident.push_back(assign[k].weight);
                }
                value *= sinh_product_coefficient(incident, d.genus[static_cast<size_t>(v)], 2);
            }
            if (value != 0) visit(assign, deg, value);
            return;
        }
        auto [i, j] = d.edges[e];
        bool loop = (i == j);
        int budget = d_max - deg;
        auto try_assign = [&](int w, int c, bool backward) {
            assign[e] = {w, c, backward};
            int df = 0;
            if (!loop) {
                df = backward ? -w : w;
                flow[static_cast<size_t>(i)] += df;
                flow[static_cast<size_t>(j)] -= df;
            }
            if (settled(i, e) && settled(j, e)) rec(e + 1, deg + w * c);
            if (!loop) {
                flow[static_cast<size_t>(i)] -= df;
                flow[static_cast<size_t>(j)] += df;
            }
        };
        if (!loop)
            for (int w = 1; w <= d_max; ++w) try_assign(w, 0, false);
        for (int w = 1; w <= budget; ++w)
            for (int c = 1; w * c <= budget; ++c) {
                try_assign(w, c, false);
                if (!loop) try_assign(w, c, true);
            }
    };
    rec(0, 0);
}

Series feynman_integral(const FeynmanDiagram& d, int d_max) {
    Series result(Var::q, d_max);
    for_each_cover_monomial(
        d, d_max,
        [&](const std::vector<EdgeData>&, int deg, const Rat& value) { result[deg] += value; });
    return result;
}

Series refined_type_series(const FeynmanDiagram& d, const WeightFunction& w, int d_max) {
    int g = d.total_genus();
    int r = 2 * g - 2;
    auto a = a_coefficients(w, r);
    Rat factor = make_rat(factorial(r), factorial(d.n));
    for (int lam : d.lambda()) factor *= Rat(factorial(lam)) * a[static_cast<size_t>(lam)];
    factor /= Rat(diagram_slot_aut(d));
    if (factor == 0) return Series(Var::q, d_max);
    return feynman_integral(d, d_max) * factor;
}

Series feynman_qseries(const WeightFunction& w, int g, int d_max) {
    a_coefficients(w, 2 * g - 2);  // reject A_0 != 0 before enumerating
    Series total(Var::q, d_max);
    for (const auto& d : enumerate_ordered_diagrams(g)) total += refined_type_series(d, w, d_max);
    return total;
}

std::vector<DiagramContribution> feynman_per_diagram(const WeightFunction& w, int g, int d_max) {
    std::vector<DiagramContribution> out;
    for (const auto& d : enumerate_ordered_diagrams(g)) {
        DiagramContribution c{d, refined_type_series(d, w, d_max), 0};
        c.refined_weight_cap =
            2 * (std::accumulate(d.genus.begin(), d.genus.end(), 0) + d.edge_count());
        out.push_back(std::move(c));
    }
    return out;
}

EllipticSeries elliptic_qseries_pipeline(const WeightFunction& w, int g,
                                         const std::vector<Partition>& profiles, int d_max) {
    if (d_max < 1) throw input_error("d_max must be at least 1");
    int r = elliptic_r(g, profiles);
    if (r < 0) throw input_error("negative branch point count for these inputs");
    Series disc(Var::q, d_max), conn(Var::q, d_max);
    for (int d = 1; d <= d_max; ++d) {
        bool fits = true;
        for (const auto& p : profiles)
            if (p.weight() > d) fits = false;
        if (!fits) continue;  // cannot pad the profiles into this degree
        disc[d] = elliptic_shiftsym_disconnected(w, profiles, g, d);
        conn[d] = elliptic_connected(w, profiles, g, d);
    }
    return {std::move(disc), std::move(conn)};
}

}  // namespace hurwitz
