#include "hurwitz/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw input_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw input_error("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

static void rev_lex_rec(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        rev_lex_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw input_error("partitions_of needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    rev_lex_rec(n, n, acc, out);
    return out;
}

Int z_order(const Partition& mu) {
    Int z = 1;
    int run = 1;
    const auto& p = mu.parts();
    for (size_t i = 0; i < p.size(); ++i) {
        z *= p[i];
        if (i + 1 < p.size() && p[i + 1] == p[i]) {
            ++run;
        } else {
            z *= factorial(run);
            run = 1;
        }
    }
    return z;
}

std::vector<int> contents(const Partition& gamma) {
    std::vector<int> c;
    c.reserve(static_cast<size_t>(gamma.weight()));
    for (int i = 0; i < gamma.length(); ++i)
        for (int j = 0; j < gamma[i]; ++j) c.push_back(j - i);
    return c;
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return lambda;
    std::vector<int> t(static_cast<size_t>(lambda[0]), 0);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) ++t[static_cast<size_t>(j)];
    return Partition(std::move(t));
}

Partition pad_with_ones(const Partition& mu, int d) {
    if (mu.weight() > d) throw size_mismatch("partition exceeds degree " + std::to_string(d));
    std::vector<int> p = mu.parts();
    p.insert(p.end(), static_cast<size_t>(d - mu.weight()), 1);
    return Partition(std::move(p));
}

std::vector<int> multiplicities_key(const Partition& p) {
    return p.parts();
}

std::string partition_to_string(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    s += ")";
    return s;
}

}  // namespace hurwitz
