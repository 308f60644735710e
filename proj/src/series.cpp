#include "hurwitz/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace hurwitz {

std::string var_name(Var v) {
    switch (v) {
        case Var::beta: return "beta";
        case Var::z: return "z";
        case Var::w: return "w";
        case Var::q: return "q";
        case Var::u: return "u";
    }
    return "?";
}

Series::Series(Var var, int order) : var_(var) {
    if (order < 0) throw input_error("series order must be non-negative");
    c_.assign(static_cast<size_t>(order) + 1, Rat(0));
}

Series::Series(Var var, std::vector<Rat> coeffs) : var_(var), c_(std::move(coeffs)) {
    if (c_.empty()) throw input_error("series needs at least the constant coefficient");
}

Series Series::one(Var var, int order) {
    Series s(var, order);
    s.c_[0] = 1;
    return s;
}

Series Series::monomial(Var var, int order, int k, Rat c) {
    Series s(var, order);
    if (k < 0 || k > order) throw order_exceeded(k, order);
    s.c_[static_cast<size_t>(k)] = std::move(c);
    return s;
}

const Rat& Series::coeff(int k) const {
    if (k < 0 || k > order()) throw order_exceeded(k, order());
    return c_[static_cast<size_t>(k)];
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

void Series::require_same_var(const Series& o) const {
    if (var_ != o.var_) throw variable_mismatch();
}

Series& Series::operator+=(const Series& o) {
    require_same_var(o);
    size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (size_t i = 0; i < n; ++i) c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    require_same_var(o);
    size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (size_t i = 0; i < n; ++i) c_[i] -= o.c_[i];
    return *this;
}

Series& Series::operator*=(const Rat& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    a.require_same_var(b);
    int n = std::min(a.order(), b.order());
    Series r(a.var(), n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n && j <= b.order(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Series Series::inverse() const {
    if (c_[0] == 0) throw non_invertible_constant_term();
    int n = order();
    Series r(var_, n);
    Rat inv0 = 1 / c_[0];
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += c_[static_cast<size_t>(j)] * r[k - j];
        r[k] = -inv0 * acc;
    }
    return r;
}

Series Series::log() const {
    if (c_[0] != 1) throw bad_constant_term("series log requires constant term 1");
    int n = order();
    Series l(var_, n);
    // n*l_n = n*a_n - sum_{k=1}^{n-1} k*l_k*a_{n-k}
    for (int m = 1; m <= n; ++m) {
        Rat acc = Rat(m) * c_[static_cast<size_t>(m)];
        for (int k = 1; k < m; ++k) acc -= Rat(k) * l[k] * c_[static_cast<size_t>(m - k)];
        l[m] = acc / m;
    }
    return l;
}

Series Series::exp() const {
    if (c_[0] != 0) throw bad_constant_term("series exp requires constant term 0");
    int n = order();
    Series e(var_, n);
    e[0] = 1;
    // m*e_m = sum_{k=1}^{m} k*a_k*e_{m-k}
    for (int m = 1; m <= n; ++m) {
        Rat acc(0);
        for (int k = 1; k <= m; ++k) acc += Rat(k) * c_[static_cast<size_t>(k)] * e[m - k];
        e[m] = acc / m;
    }
    return e;
}

Series Series::scale_variable(long m) const {
    Series r(var_, order());
    Rat pw(1);
    for (int k = 0; k <= order(); ++k) {
        r[k] = c_[static_cast<size_t>(k)] * pw;
        pw *= m;
    }
    return r;
}

Series Series::truncated(int new_order) const {
    if (new_order > order())
        throw input_error("cannot extend a truncated series; recompute at higher order");
    Series r(var_, new_order);
    for (int k = 0; k <= new_order; ++k) r[k] = c_[static_cast<size_t>(k)];
    return r;
}

Series Series::with_var(Var v) const {
    Series r = *this;
    r.var_ = v;
    return r;
}

Series normalized_sinh(Var var, int order) {
    Series s(var, order);
    Int four_pow = 1;
    for (int j = 0; 2 * j <= order; ++j) {
        s[2 * j] = make_rat(1, four_pow * factorial(2 * j + 1));
        four_pow *= 4;
    }
    return s;
}

Series normalized_sinh_inverse(Var var, int order) {
    return normalized_sinh(var, order).inverse();
}

Rat sinh_product_coefficient(const std::vector<int>& weights, int g, int denom_power) {
    static std::map<std::tuple<std::vector<int>, int, int>, Rat> memo;
    static std::mutex memo_mutex;
    std::vector<int> sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    auto key = std::make_tuple(std::move(sorted), g, denom_power);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Series prod = Series::one(Var::w, 2 * g);
    for (int x : std::get<0>(key)) prod = prod * normalized_sinh(Var::w, 2 * g).scale_variable(x);
    Series dinv = normalized_sinh(Var::w, 2 * g).inverse();
    for (int k = 0; k < denom_power; ++k) prod = prod * dinv;
    Rat val = prod[2 * g];
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), val);
    return val;
}

}  // namespace hurwitz
