#include "hurwitz/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/permutations.hpp"

namespace hurwitz {

namespace {

void check_double_input(const Partition& mu, const Partition& nu, int r) {
    if (mu.weight() != nu.weight() || mu.weight() < 1)
        throw size_mismatch("profiles must be partitions of the same positive integer");
    if (r < 0) throw input_error("r must be non-negative");
    if ((r - mu.length() - nu.length()) % 2 != 0)
        throw parity_mismatch("r must have the parity of ell(mu)+ell(nu)");
}

// Enumerates r-tuples of transpositions; monotone_only restricts to b_1 <= ... <= b_r.
// visit(choice, product) receives indices into all_transpositions(d) and the
// left-action product tau_r ... tau_1.
template <typename F>
void for_each_tau_tuple(int d, int r, bool monotone_only, F&& visit) {
    auto ts = all_transpositions(d);
    std::vector<Perm> tperms;
    tperms.reserve(ts.size());
    for (const auto& t : ts) tperms.push_back(t.as_perm(d));
    std::vector<int> choice(static_cast<size_t>(r));
    std::vector<Perm> partial;
    partial.reserve(static_cast<size_t>(r) + 1);
    partial.push_back(identity_perm(d));
    std::function<void(int)> rec = [&](int k) {
        if (k == r) {
            visit(choice, partial.back());
            return;
        }
        for (int i = 0; i < static_cast<int>(ts.size()); ++i) {
            if (monotone_only && k > 0 &&
                ts[static_cast<size_t>(i)].b <
                    ts[static_cast<size_t>(choice[static_cast<size_t>(k - 1)])].b)
                continue;
            choice[static_cast<size_t>(k)] = i;
            partial.push_back(compose(tperms[static_cast<size_t>(i)], partial.back()));
            rec(k + 1);
            partial.pop_back();
        }
    };
    rec(0);
}

Partition signature_of(const std::vector<int>& choice, const std::vector<Transposition>& ts) {
    std::vector<int> runs;
    for (size_t k = 0; k < choice.size(); ++k) {
        if (k > 0 &&
            ts[static_cast<size_t>(choice[k])].b == ts[static_cast<size_t>(choice[k - 1])].b)
            ++runs.back();
        else
            runs.push_back(1);
    }
    return Partition::from_unsorted(std::move(runs));
}

}  // namespace

Rat char_double_disconnected(const WeightFunction& w, const Partition& mu, const Partition& nu,
                             int r) {
    check_double_input(mu, nu, r);
    int d = mu.weight();
    Rat sum(0);
    for (const Partition& lambda : partitions_of(d)) {
        Series rl = content_product_series(w, lambda, r);
        if (rl[r] == 0) continue;
        sum += rl[r] * Rat(character(lambda, mu) * character(lambda, nu));
    }
    sum /= Rat(z_order(mu) * z_order(nu));
    return Rat(factorial(r)) * sum;
}

DoubleBrute brute_force_double_classical(const Partition& mu, const Partition& nu, int r) {
    if (mu.weight() != nu.weight() || mu.weight() < 1)
        throw size_mismatch("profiles must be partitions of the same positive integer");
    int d = mu.weight();
    if (d > 6) throw degree_too_large("brute-force double enumeration is guarded at d <= 6");
    // sigma_1 can be a single representative: the tuple count and the
    // transitivity test are conjugation-invariant, so the class size multiplies.
    Perm sigma1 = conjugacy_class(mu, d).front();
    Partition target = pad_with_ones(nu, d);
    auto ts = all_transpositions(d);
    Int count = 0, count_trans = 0;
    for_each_tau_tuple(d, r, false, [&](const std::vector<int>& choice, const Perm& tau_prod) {
        Perm sigma2 = compose(tau_prod, sigma1);
        if (cycle_type(sigma2) != target) return;
        ++count;
        std::vector<Perm> taus;
        taus.reserve(choice.size());
        for (int i : choice) taus.push_back(ts[static_cast<size_t>(i)].as_perm(d));
        std::vector<const Perm*> gens{&sigma1};
        for (const Perm& t : taus) gens.push_back(&t);
        if (is_transitive(gens, d)) ++count_trans;
    });
    Int class_size = factorial(d) / z_order(pad_with_ones(mu, d));
    Rat norm = make_rat(class_size, factorial(d));
    return {norm * Rat(count), norm * Rat(count_trans)};
}

std::map<Partition, Int> brute_force_signature_counts(const Partition& mu, const Partition& nu,
                                                      int r) {
    if (mu.weight() != nu.weight() || mu.weight() < 1)
        throw size_mismatch("profiles must be partitions of the same positive integer");
    int d = mu.weight();
    if (d > 6) throw degree_too_large("brute-force signature enumeration is guarded at d <= 6");
    Partition target = pad_with_ones(nu, d);
    auto ts = all_transpositions(d);
    std::map<Partition, Int> counts;
    // monotonicity is not conjugation-invariant, so sigma_1 runs over its full class
    for (const Perm& sigma1 : conjugacy_class(mu, d)) {
        for_each_tau_tuple(d, r, true, [&](const std::vector<int>& choice, const Perm& tau_prod) {
            if (cycle_type(compose(tau_prod, sigma1)) != target) return;
            counts[signature_of(choice, ts)] += 1;
        });
    }
    return counts;
}

Rat brute_force_double_weighted(const WeightFunction& w, const Partition& mu, const Partition& nu,
                                int r) {
    if (!supports_g_lambda(w))
        throw unsupported_weight_kind("signature oracle needs a product/exp weight");
    auto counts = brute_force_signature_counts(mu, nu, r);
    Rat sum(0);
    for (const auto& [lambda, m] : counts) sum += g_lambda_weight(w, lambda) * Rat(m);
    return make_rat(factorial(r), factorial(mu.weight())) * sum;
}

int elliptic_r(int g, const std::vector<Partition>& profiles) {
    int r = 2 * g - 2;
    for (const auto& p : profiles) r += p.weight() - p.length();
    return r;
}

namespace {

template <typename F>
void for_each_profile_tuple(const std::vector<std::vector<Perm>>& classes, size_t i, Perm acc,
                            F&& visit) {
    if (i == classes.size()) {
        visit(std::move(acc));
        return;
    }
    for (const Perm& s : classes[i]) for_each_profile_tuple(classes, i + 1, compose(acc, s), visit);
}

// All (alpha,beta) pairs producing each commutator value.
std::map<Perm, std::vector<std::pair<int, int>>> commutator_table(const std::vector<Perm>& perms) {
    std::map<Perm, std::vector<std::pair<int, int>>> table;
    for (int a = 0; a < static_cast<int>(perms.size()); ++a)
        for (int b = 0; b < static_cast<int>(perms.size()); ++b)
            table[commutator(perms[static_cast<size_t>(a)], perms[static_cast<size_t>(b)])]
                .emplace_back(a, b);
    return table;
}

void check_elliptic_guard(const std::vector<Partition>& profiles, int d, int r) {
    if (d < 1) throw input_error("degree must be positive");
    if (r < 0) throw input_error("r must be non-negative");
    if (d > 4 || r > 4)
        throw degree_too_large("brute-force elliptic enumeration is guarded at d <= 4, r <= 4");
    for (const auto& p : profiles)
        if (p.weight() > d) throw size_mismatch("profile exceeds the degree");
}

}  // namespace

EllipticBrute brute_force_elliptic(const WeightFunction& w, const std::vector<Partition>& profiles,
                                   int d, int r) {
    check_elliptic_guard(profiles, d, r);
    if (!supports_g_lambda(w))
        throw unsupported_weight_kind("elliptic brute force needs a product/exp weight");

    auto perms = all_perms(d);
    auto comm = commutator_table(perms);
    auto ts = all_transpositions(d);
    std::vector<std::vector<Perm>> classes;
    for (const auto& p : profiles) classes.push_back(conjugacy_class(p, d));

    std::map<Partition, Int> sig_counts;
    Rat connected_sum(0);
    for_each_profile_tuple(classes, 0, identity_perm(d), [&](Perm sigma_prod) {
        for_each_tau_tuple(d, r, true, [&](const std::vector<int>& choice, const Perm& tau_prod) {
            // product sigma_1..sigma_n tau_1..tau_r under left action: the tau
            // block multiplies as tau_r ... tau_1 on the left of the sigmas
            Perm total = compose(tau_prod, sigma_prod);
            auto it = comm.find(total);
            if (it == comm.end()) return;
            Partition sig = signature_of(choice, ts);
            sig_counts[sig] += static_cast<long>(it->second.size());
            Rat g_weight = g_lambda_weight(w, sig);
            if (g_weight == 0) return;
            std::vector<Perm> taus;
            taus.reserve(choice.size());
            for (int i : choice) taus.push_back(ts[static_cast<size_t>(i)].as_perm(d));
            for (auto [a, b] : it->second) {
                std::vector<const Perm*> gens{&perms[static_cast<size_t>(a)],
                                              &perms[static_cast<size_t>(b)], &sigma_prod};
                for (const Perm& t : taus) gens.push_back(&t);
                if (is_transitive(gens, d)) connected_sum += g_weight;
            }
        });
    });
    Rat norm = make_rat(factorial(r), factorial(d));
    Rat disconnected(0);
    for (const auto& [lambda, m] : sig_counts) disconnected += g_lambda_weight(w, lambda) * Rat(m);
    return {norm * disconnected, norm * connected_sum, std::move(sig_counts)};
}

DoubleBrute brute_force_elliptic_classical(const std::vector<Partition>& profiles, int d, int r) {
    check_elliptic_guard(profiles, d, r);
    auto perms = all_perms(d);
    auto comm = commutator_table(perms);
    auto ts = all_transpositions(d);
    std::vector<std::vector<Perm>> classes;
    for (const auto& p : profiles) classes.push_back(conjugacy_class(p, d));
    Int count = 0, count_trans = 0;
    for_each_profile_tuple(classes, 0, identity_perm(d), [&](Perm sigma_prod) {
        for_each_tau_tuple(d, r, false, [&](const std::vector<int>& choice, const Perm& tau_prod) {
            Perm total = compose(tau_prod, sigma_prod);
            auto it = comm.find(total);
            if (it == comm.end()) return;
            count += static_cast<long>(it->second.size());
            std::vector<Perm> taus;
            taus.reserve(choice.size());
            for (int i : choice) taus.push_back(ts[static_cast<size_t>(i)].as_perm(d));
            for (auto [a, b] : it->second) {
                std::vector<const Perm*> gens{&perms[static_cast<size_t>(a)],
                                              &perms[static_cast<size_t>(b)], &sigma_prod};
                for (const Perm& t : taus) gens.push_back(&t);
                if (is_transitive(gens, d)) ++count_trans;
            }
        });
    });
    Rat norm = make_rat(1, factorial(d));
    return {norm * Rat(count), norm * Rat(count_trans)};
}

namespace {

// Shifted-symmetric sum with r given directly (profiles need not determine g).
Rat shiftsym_by_r(const WeightFunction& w, const std::vector<Partition>& profiles, int r, int d) {
    if (d == 0) return r == 0 ? Rat(1) : Rat(0);
    Rat total(0);
    auto lambdas = partitions_of(r);
    for (const Partition& gamma : partitions_of(d)) {
        Rat f_prod(1);
        for (const auto& p : profiles) f_prod *= central_character(p, gamma);
        if (f_prod == 0) continue;
        auto cont = contents(gamma);
        for (const Partition& lambda : lambdas) {
            Rat gl = g_lambda_weight(w, lambda);
            if (gl == 0) continue;
            Rat m = monomial_eval(lambda, cont);
            if (m == 0) continue;
            total += gl * f_prod * m;
        }
    }
    return Rat(factorial(r)) * total;
}

}  // namespace

Rat elliptic_shiftsym_disconnected(const WeightFunction& w, const std::vector<Partition>& profiles,
                                   int g, int d) {
    if (!supports_g_lambda(w))
        throw unsupported_weight_kind("shifted-symmetric oracle needs a product/exp weight");
    if (d < 1) throw input_error("degree must be positive");
    int r = elliptic_r(g, profiles);
    if (r < 0) throw input_error("negative branch point count for these inputs");
    for (const auto& p : profiles)
        if (p.weight() > d) throw size_mismatch("profile exceeds the degree");
    return shiftsym_by_r(w, profiles, r, d);
}

std::vector<std::vector<Rat>> elliptic_connected_from_disconnected(
    const std::vector<std::vector<Rat>>& table) {
    if (table.empty() || table[0].empty()) throw incomplete_input("empty disconnected table");
    size_t dmax = table.size() - 1, rmax = table[0].size() - 1;
    for (const auto& row : table)
        if (row.size() != rmax + 1) throw incomplete_input("ragged disconnected table");
    if (table[0][0] != 1) throw incomplete_input("d=0 entry must be 1");
    for (size_t r = 1; r <= rmax; ++r)
        if (table[0][r] != 0) throw incomplete_input("d=0 row must be (1,0,...)");

    // Work with u^r/r! coefficients so components compose multiplicatively,
    // then take the truncated two-variable log coefficient by coefficient.
    auto egf = table;
    for (size_t d = 0; d <= dmax; ++d)
        for (size_t r = 0; r <= rmax; ++r) egf[d][r] /= Rat(factorial(static_cast<long>(r)));

    std::vector<std::vector<Rat>> log_t(dmax + 1, std::vector<Rat>(rmax + 1, Rat(0)));
    auto exp_of_known = [&](size_t dt, size_t rt) {
        // exp of the already-determined log terms, truncated at (dt, rt)
        std::vector<std::vector<Rat>> e(dt + 1, std::vector<Rat>(rt + 1, Rat(0)));
        e[0][0] = 1;
        for (size_t a = 0; a <= dt; ++a)
            for (size_t b = 0; b <= rt; ++b) {
                if (a == 0 && b == 0) continue;
                if (a == dt && b == rt) continue;
                if (log_t[a][b] == 0) continue;
                std::vector<std::vector<Rat>> next(dt + 1, std::vector<Rat>(rt + 1, Rat(0)));
                for (size_t x = 0; x <= dt; ++x)
                    for (size_t y = 0; y <= rt; ++y) {
                        if (e[x][y] == 0) continue;
                        Rat cm(1);
                        for (size_t m = 0;; ++m) {
                            size_t nx = x + m * a, ny = y + m * b;
                            if (nx > dt || ny > rt) break;
                            next[nx][ny] += e[x][y] * cm;
                            cm = cm * log_t[a][b] / Rat(static_cast<long>(m) + 1);
                        }
                    }
                e = std::move(next);
            }
        return e[dt][rt];
    };
    for (size_t d = 0; d <= dmax; ++d)
        for (size_t r = 0; r <= rmax; ++r) {
            if (d == 0 && r == 0) continue;
            log_t[d][r] = egf[d][r] - exp_of_known(d, r);
        }
    for (size_t d = 0; d <= dmax; ++d)
        for (size_t r = 0; r <= rmax; ++r) log_t[d][r] *= Rat(factorial(static_cast<long>(r)));
    return log_t;
}

namespace {

struct ProfileKey {
    int d, r;
    std::vector<Partition> profiles;
    auto operator<=>(const ProfileKey&) const = default;
};

// Enumerate one sub-multiset of each profile's parts.
void enumerate_subprofiles(const std::vector<Partition>& profiles, size_t i,
                           std::vector<Partition>& acc,
                           const std::function<void(const std::vector<Partition>&)>& visit) {
    if (i == profiles.size()) {
        visit(acc);
        return;
    }
    std::vector<std::pair<int, int>> groups;  // (part value, multiplicity)
    for (int p : profiles[i].parts()) {
        if (!groups.empty() && groups.back().first == p)
            ++groups.back().second;
        else
            groups.emplace_back(p, 1);
    }
    std::vector<int> take(groups.size(), 0);
    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == groups.size()) {
            std::vector<int> chosen;
            for (size_t g = 0; g < groups.size(); ++g)
                for (int c = 0; c < take[g]; ++c) chosen.push_back(groups[g].first);
            acc.emplace_back(Partition::from_unsorted(std::move(chosen)));
            enumerate_subprofiles(profiles, i + 1, acc, visit);
            acc.pop_back();
            return;
        }
        for (int c = 0; c <= groups[gi].second; ++c) {
            take[gi] = c;
            rec(gi + 1);
        }
    };
    rec(0);
}

Partition multiset_difference(const Partition& whole, const Partition& part) {
    std::vector<int> rest = whole.parts();
    for (int p : part.parts()) rest.erase(std::find(rest.begin(), rest.end(), p));
    return Partition::from_unsorted(std::move(rest));
}

}  // namespace

Rat elliptic_connected(const WeightFunction& w, const std::vector<Partition>& profiles, int g,
                       int d) {
    if (d < 1) throw input_error("degree must be positive");
    int r_total = elliptic_r(g, profiles);
    if (r_total < 0) throw input_error("negative branch point count for these inputs");

    bool all_trivial = std::all_of(profiles.begin(), profiles.end(),
                                   [](const Partition& p) { return p.empty(); });
    if (all_trivial) {
        std::vector<std::vector<Rat>> table(
            static_cast<size_t>(d) + 1, std::vector<Rat>(static_cast<size_t>(r_total) + 1, Rat(0)));
        table[0][0] = 1;
        for (int dd = 1; dd <= d; ++dd)
            for (int rr = 0; rr <= r_total; ++rr)
                table[static_cast<size_t>(dd)][static_cast<size_t>(rr)] =
                    shiftsym_by_r(w, {}, rr, dd);
        auto conn = elliptic_connected_from_disconnected(table);
        return conn[static_cast<size_t>(d)][static_cast<size_t>(r_total)];
    }

    // Rooted component recursion: the root component is the one containing a
    // distinguished sheet, which contributes the fraction d1/d; branch points
    // distribute with C(r, r1).
    std::map<ProfileKey, Rat> memo;
    std::function<Rat(int, int, const std::vector<Partition>&)> conn_rec =
        [&](int dd, int rr, const std::vector<Partition>& profs) -> Rat {
        ProfileKey key{dd, rr, profs};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Rat acc = shiftsym_by_r(w, profs, rr, dd);
        std::vector<Partition> sub;
        enumerate_subprofiles(profs, 0, sub, [&](const std::vector<Partition>& root_profs) {
            for (int d1 = 1; d1 < dd; ++d1) {
                bool fits = true;
                for (size_t i = 0; i < profs.size() && fits; ++i) {
                    if (root_profs[i].weight() > d1 ||
                        profs[i].weight() - root_profs[i].weight() > dd - d1)
                        fits = false;
                }
                if (!fits) continue;
                for (int r1 = 0; r1 <= rr; ++r1) {
                    Rat root_c = conn_rec(d1, r1, root_profs);
                    if (root_c == 0) continue;
                    std::vector<Partition> rest;
                    rest.reserve(profs.size());
                    for (size_t i = 0; i < profs.size(); ++i)
                        rest.push_back(multiset_difference(profs[i], root_profs[i]));
                    Rat rest_d = shiftsym_by_r(w, rest, rr - r1, dd - d1);
                    if (rest_d == 0) continue;
                    acc -= Rat(binomial(rr, r1)) * make_rat(d1, dd) * root_c * rest_d;
                }
            }
        });
        memo.emplace(std::move(key), acc);
        return acc;
    };
    return conn_rec(d, r_total, profiles);
}

Rat connected_double(const WeightFunction& w, const Partition& mu, const Partition& nu, int r) {
    check_double_input(mu, nu, r);
    std::map<ProfileKey, Rat> memo;
    std::function<Rat(const Partition&, const Partition&, int)> conn_rec =
        [&](const Partition& m, const Partition& n, int rr) -> Rat {
        ProfileKey key{m.weight(), rr, {m, n}};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int dd = m.weight();
        Rat acc(0);
        if ((rr - m.length() - n.length()) % 2 == 0) acc = char_double_disconnected(w, m, n, rr);
        std::vector<Partition> sub;
        std::vector<Partition> pair{m, n};
        enumerate_subprofiles(pair, 0, sub, [&](const std::vector<Partition>& root) {
            const Partition& m1 = root[0];
            const Partition& n1 = root[1];
            if (m1.weight() != n1.weight() || m1.weight() < 1 || m1.weight() >= dd) return;
            Partition m2 = multiset_difference(m, m1);
            Partition n2 = multiset_difference(n, n1);
            if (m2.weight() != n2.weight() || m2.weight() < 1) return;
            for (int r1 = 0; r1 <= rr; ++r1) {
                if ((r1 - m1.length() - n1.length()) % 2 != 0) continue;
                if ((rr - r1 - m2.length() - n2.length()) % 2 != 0) continue;
                Rat root_c = conn_rec(m1, n1, r1);
                if (root_c == 0) continue;
                Rat rest_d = char_double_disconnected(w, m2, n2, rr - r1);
                if (rest_d == 0) continue;
                acc -= Rat(binomial(rr, r1)) * make_rat(m1.weight(), dd) * root_c * rest_d;
            }
        });
        memo.emplace(std::move(key), acc);
        return acc;
    };
    return conn_rec(mu, nu, r);
}

}  // namespace hurwitz
