#include "hurwitz/permutations.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

Perm identity_perm(int d) {
    Perm p(static_cast<size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& p, const Perm& q) {
    Perm r(q.size());
    for (size_t x = 0; x < q.size(); ++x) r[x] = p[static_cast<size_t>(q[x])];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t x = 0; x < p.size(); ++x) r[static_cast<size_t>(p[x])] = static_cast<int>(x);
    return r;
}

Perm commutator(const Perm& a, const Perm& b) {
    return compose(compose(a, b), compose(inverse(a), inverse(b)));
}

Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> cycles;
    for (size_t x = 0; x < p.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        size_t y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = static_cast<size_t>(p[y]);
            ++len;
        }
        cycles.push_back(len);
    }
    return Partition::from_unsorted(std::move(cycles));
}

std::vector<Perm> all_perms(int d) {
    std::vector<Perm> out;
    Perm p = identity_perm(d);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Perm> conjugacy_class(const Partition& mu, int d) {
    Partition target = pad_with_ones(mu, d);
    std::vector<Perm> out;
    for (auto& p : all_perms(d))
        if (cycle_type(p) == target) out.push_back(std::move(p));
    return out;
}

Perm Transposition::as_perm(int d) const {
    Perm p = identity_perm(d);
    std::swap(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)]);
    return p;
}

std::vector<Transposition> all_transpositions(int d) {
    std::vector<Transposition> out;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) out.push_back({a, b});
    return out;
}

bool is_transitive(const std::vector<const Perm*>& gens, int d) {
    if (d <= 1) return true;
    std::vector<int> root(static_cast<size_t>(d));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[static_cast<size_t>(x)] != x) {
            root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
            x = root[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { root[static_cast<size_t>(find(a))] = find(b); };
    for (const Perm* g : gens)
        for (int x = 0; x < d; ++x) unite(x, (*g)[static_cast<size_t>(x)]);
    int r0 = find(0);
    for (int x = 1; x < d; ++x)
        if (find(x) != r0) return false;
    return true;
}

}  // namespace hurwitz
