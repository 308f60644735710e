#include "hurwitz/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// chi on beta-sets. mu is processed back to front (smallest parts first are
// peeled last; order is irrelevant for correctness).
Int mn_rec(std::vector<int> beta, std::vector<int> mu_rest);

std::map<std::pair<std::vector<int>, std::vector<int>>, Int> mn_memo;
std::mutex mn_mutex;

std::vector<int> beta_set(const Partition& lambda) {
    int k = lambda.length();
    std::vector<int> beta(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) beta[static_cast<size_t>(i)] = lambda[i] + (k - 1 - i);
    return beta;  // strictly decreasing
}

Int mn_rec(std::vector<int> beta, std::vector<int> mu_rest) {
    if (mu_rest.empty()) return 1;
    auto key = std::make_pair(beta, mu_rest);
    {
        std::lock_guard<std::mutex> lock(mn_mutex);
        auto it = mn_memo.find(key);
        if (it != mn_memo.end()) return it->second;
    }
    int m = mu_rest.back();
    std::vector<int> rest(mu_rest.begin(), mu_rest.end() - 1);
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - m;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // sign: one -1 per beta value jumped over when b_i drops to target
        int jumped = 0;
        for (int b : beta)
            if (b < beta[i] && b > target) ++jumped;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        Int sub = mn_rec(std::move(nb), rest);
        total += (jumped % 2 ? -sub : sub);
    }
    std::lock_guard<std::mutex> lock(mn_mutex);
    mn_memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw size_mismatch("character requires |lambda| = |mu|");
    if (lambda.empty()) return 1;
    return mn_rec(beta_set(lambda), mu.parts());
}

Int dimension(const Partition& lambda) {
    int d = lambda.weight();
    if (d == 0) return 1;
    Partition lt = conjugate(lambda);
    Int hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j) + (lt[j] - i) - 1;
    return factorial(d) / hooks;
}

Rat central_character(const Partition& nu, const Partition& gamma) {
    int d = gamma.weight();
    if (nu.weight() > d)
        throw size_mismatch("central character needs |nu| <= |gamma|");
    if (d == 0) return Rat(1);
    Partition padded = pad_with_ones(nu, d);
    Int class_size = factorial(d) / z_order(padded);
    return make_rat(class_size * character(gamma, padded), dimension(gamma));
}

Rat f2_eval(const Partition& lambda) {
    // (lambda_i - i + 1/2)^2 - (-i + 1/2)^2 = lambda_i (lambda_i - 2i + 1), 1-based i
    Int acc = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        long p = lambda[i];
        acc += Int(p) * (p - 2 * (i + 1) + 1);
    }
    return make_rat(acc, 2);
}

namespace {

// Assign the exponent groups of lambda to disjoint index subsets of the values.
Rat monomial_rec(const std::vector<std::pair<int, int>>& groups, size_t gi,
                 const std::vector<int>& values, std::vector<bool>& used) {
    if (gi == groups.size()) return Rat(1);
    auto [expo, count] = groups[gi];
    int n = static_cast<int>(values.size());
    std::vector<int> idx;
    Rat total(0);
    // enumerate size-`count` subsets of the unused positions
    std::vector<int> avail;
    for (int i = 0; i < n; ++i)
        if (!used[static_cast<size_t>(i)]) avail.push_back(i);
    if (static_cast<int>(avail.size()) < count) return Rat(0);
    std::vector<int> pick(static_cast<size_t>(count));
    auto rec = [&](auto&& self, int from, int chosen) -> void {
        if (chosen == count) {
            Rat prod(1);
            for (int c = 0; c < count; ++c) {
                Rat pw(1);
                Rat base(values[static_cast<size_t>(pick[static_cast<size_t>(c)])]);
                for (int e = 0; e < expo; ++e) pw *= base;
                prod *= pw;
            }
            for (int c = 0; c < count; ++c) used[static_cast<size_t>(pick[static_cast<size_t>(c)])] = true;
            prod *= monomial_rec(groups, gi + 1, values, used);
            for (int c = 0; c < count; ++c) used[static_cast<size_t>(pick[static_cast<size_t>(c)])] = false;
            total += prod;
            return;
        }
        for (int i = from; i < static_cast<int>(avail.size()); ++i) {
            pick[static_cast<size_t>(chosen)] = avail[static_cast<size_t>(i)];
            self(self, i + 1, chosen + 1);
        }
    };
    rec(rec, 0, 0);
    return total;
}

}  // namespace

Rat monomial_eval(const Partition& lambda, const std::vector<int>& values) {
    if (lambda.empty()) return Rat(1);
    if (lambda.length() > static_cast<int>(values.size())) return Rat(0);
    std::vector<std::pair<int, int>> groups;  // (exponent, multiplicity), exponents distinct
    for (int i = 0; i < lambda.length(); ++i) {
        if (!groups.empty() && groups.back().first == lambda[i])
            ++groups.back().second;
        else
            groups.emplace_back(lambda[i], 1);
    }
    std::vector<bool> used(values.size(), false);
    return monomial_rec(groups, 0, values, used);
}

Rat elementary_symmetric(int k, const std::vector<Rat>& c) {
    if (k < 0) return Rat(0);
    std::vector<Rat> e(static_cast<size_t>(k) + 1, Rat(0));
    e[0] = 1;
    for (const Rat& x : c)
        for (int j = k; j >= 1; --j) e[static_cast<size_t>(j)] += x * e[static_cast<size_t>(j - 1)];
    return e[static_cast<size_t>(k)];
}

Rat complete_homogeneous(int k, const std::vector<Rat>& c) {
    if (k < 0) return Rat(0);
    std::vector<Rat> h(static_cast<size_t>(k) + 1, Rat(0));
    h[0] = 1;
    for (const Rat& x : c)
        for (int j = 1; j <= k; ++j) h[static_cast<size_t>(j)] += x * h[static_cast<size_t>(j - 1)];
    return h[static_cast<size_t>(k)];
}

}  // namespace hurwitz
