#include "hurwitz/weights.hpp"

#include <algorithm>

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

WeightFunction WeightFunction::completed_cycles_weight(int r) {
    if (r < 1) throw input_error("completed cycles weight needs r >= 1");
    return WeightFunction{WeightKind::completed_cycles, {}, r, {}};
}

WeightFunction WeightFunction::log_series_weight(std::vector<Rat> a) {
    if (!a.empty() && a[0] != 0)
        throw unsupported_constant_term("log-series weight requires A_0 = 0");
    return WeightFunction{WeightKind::log_series, {}, 0, std::move(a)};
}

std::string WeightFunction::describe() const {
    auto list = [](const std::vector<Rat>& v) {
        std::string s = "(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += rat_to_string(v[i]);
        }
        return s + ")";
    };
    switch (kind) {
        case WeightKind::product_g: return "product-G" + list(c);
        case WeightKind::product_gtilde: return "product-Gtilde" + list(c);
        case WeightKind::exp: return "exp";
        case WeightKind::completed_cycles: return "completed-cycles(" + std::to_string(cycles_r) + ")";
        case WeightKind::log_series: return "log-series" + list(a_data);
    }
    return "?";
}

std::vector<Rat> log_g_coefficients(const WeightFunction& w, int K) {
    std::vector<Rat> a(static_cast<size_t>(K) + 1, Rat(0));
    switch (w.kind) {
        case WeightKind::product_g:
            // log prod(1+c_i z) = sum_n (-1)^{n+1} p_n(c) z^n / n
            for (int n = 1; n <= K; ++n) {
                Rat pn(0);
                for (const Rat& x : w.c) {
                    Rat pw(1);
                    for (int e = 0; e < n; ++e) pw *= x;
                    pn += pw;
                }
                a[static_cast<size_t>(n)] = (n % 2 ? pn : -pn) / n;
            }
            break;
        case WeightKind::product_gtilde:
            for (int n = 1; n <= K; ++n) {
                Rat pn(0);
                for (const Rat& x : w.c) {
                    Rat pw(1);
                    for (int e = 0; e < n; ++e) pw *= x;
                    pn += pw;
                }
                a[static_cast<size_t>(n)] = pn / n;
            }
            break;
        case WeightKind::exp:
            if (K >= 1) a[1] = 1;
            break;
        case WeightKind::completed_cycles: {
            // log G = S(d/dz) z^r / r! = sum_j s_{2j} z^{r-2j} / (r-2j)!
            int r = w.cycles_r;
            Series s = normalized_sinh(Var::z, r);
            for (int j = 0; 2 * j <= r; ++j) {
                int k = r - 2 * j;
                if (k <= K) a[static_cast<size_t>(k)] = s[2 * j] / factorial(k);
            }
            break;
        }
        case WeightKind::log_series:
            for (int n = 0; n <= K && n < static_cast<int>(w.a_data.size()); ++n)
                a[static_cast<size_t>(n)] = w.a_data[static_cast<size_t>(n)];
            break;
    }
    return a;
}

std::vector<Rat> a_coefficients(const WeightFunction& w, int K) {
    auto a = log_g_coefficients(w, K);
    if (a[0] != 0)
        throw unsupported_constant_term("weight " + w.describe() +
                                        " has log G(0) != 0; use the completed-cycles pipeline");
    return a;
}

Series g_series(const WeightFunction& w, Var var, int order) {
    switch (w.kind) {
        case WeightKind::product_g: {
            Series g = Series::one(var, order);
            for (const Rat& x : w.c) {
                Series f = Series::one(var, order);
                if (order >= 1) f[1] = x;
                g = g * f;
            }
            return g;
        }
        case WeightKind::product_gtilde: {
            Series g = Series::one(var, order);
            for (const Rat& x : w.c) {
                Series f = Series::one(var, order);
                if (order >= 1) f[1] = -x;
                g = g * f.inverse();
            }
            return g;
        }
        case WeightKind::exp: {
            Series e(var, order);
            if (order >= 1) e[1] = 1;
            return e.exp();
        }
        case WeightKind::completed_cycles:
        case WeightKind::log_series: {
            auto a = log_g_coefficients(w, order);
            if (a[0] != 0)
                throw unsupported_constant_term("G(0) != 1 for " + w.describe() +
                                                "; its content product is not a rational series");
            Series s(var, order);
            for (int k = 0; k <= order; ++k) s[k] = a[static_cast<size_t>(k)];
            return s.exp();
        }
    }
    throw input_error("unknown weight kind");
}

bool supports_g_lambda(const WeightFunction& w) {
    return w.kind == WeightKind::product_g || w.kind == WeightKind::product_gtilde ||
           w.kind == WeightKind::exp;
}

Rat g_lambda_weight(const WeightFunction& w, const Partition& lambda) {
    Rat prod(1);
    switch (w.kind) {
        case WeightKind::product_g:
            for (int i = 0; i < lambda.length(); ++i) prod *= elementary_symmetric(lambda[i], w.c);
            return prod;
        case WeightKind::product_gtilde:
            for (int i = 0; i < lambda.length(); ++i) prod *= complete_homogeneous(lambda[i], w.c);
            return prod;
        case WeightKind::exp:
            for (int i = 0; i < lambda.length(); ++i) prod /= factorial(lambda[i]);
            return prod;
        default:
            throw unsupported_weight_kind("no e/h/multinomial decomposition for " + w.describe());
    }
}

Series content_product_series(const WeightFunction& w, const Partition& lambda, int R) {
    Series g = g_series(w, Var::beta, R);
    Series r = Series::one(Var::beta, R);
    for (int c : contents(lambda)) r = r * g.scale_variable(c);
    return r;
}

}  // namespace hurwitz
