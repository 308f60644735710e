#include "hurwitz/quasimod.hpp"

#include <algorithm>

#include "hurwitz/errors.hpp"
#include "hurwitz/linsolve.hpp"

namespace hurwitz {

Rat bernoulli(int k) {
    if (k < 0) throw input_error("Bernoulli index must be non-negative");
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    std::vector<Rat> b(static_cast<size_t>(k) + 1);
    b[0] = 1;
    for (int m = 1; m <= k; ++m) {
        Rat acc(0);
        for (int j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * b[static_cast<size_t>(j)];
        b[static_cast<size_t>(m)] = -acc / Rat(m + 1);
    }
    return b[static_cast<size_t>(k)];
}

Series eisenstein_q(int k, int order) {
    if (k < 2 || k % 2 != 0) throw input_error("Eisenstein weight must be even and >= 2");
    Series g(Var::q, order);
    g[0] = -bernoulli(k) / Rat(2 * k);
    for (int n = 1; n <= order; ++n) {
        Int sigma = 0;
        for (int m = 1; m <= n; ++m) {
            if (n % m != 0) continue;
            Int pw = 1;
            for (int e = 0; e < k - 1; ++e) pw *= m;
            sigma += pw;
        }
        g[n] = Rat(sigma);
    }
    return g;
}

QuasimodBasis quasimod_basis(int weight_cap, int order) {
    if (weight_cap < 0 || weight_cap % 2 != 0)
        throw input_error("weight cap must be even and non-negative");
    Series p = eisenstein_q(2, order) * Rat(-24);
    Series q = eisenstein_q(4, order) * Rat(240);
    Series r = eisenstein_q(6, order) * Rat(-504);
    QuasimodBasis basis;
    basis.weight_cap = weight_cap;
    struct Mono {
        int weight, a, b, c;
    };
    std::vector<Mono> monos;
    for (int a = 0; 2 * a <= weight_cap; ++a)
        for (int b = 0; 2 * a + 4 * b <= weight_cap; ++b)
            for (int c = 0; 2 * a + 4 * b + 6 * c <= weight_cap; ++c)
                monos.push_back({2 * a + 4 * b + 6 * c, a, b, c});
    std::sort(monos.begin(), monos.end(), [](const Mono& x, const Mono& y) {
        return std::tie(x.weight, x.a, x.b, x.c) < std::tie(y.weight, y.a, y.b, y.c);
    });
    for (const auto& m : monos) {
        Series s = Series::one(Var::q, order);
        for (int i = 0; i < m.a; ++i) s = s * p;
        for (int i = 0; i < m.b; ++i) s = s * q;
        for (int i = 0; i < m.c; ++i) s = s * r;
        std::string name;
        auto add = [&name](const std::string& base, int e) {
            if (e == 0) return;
            if (!name.empty()) name += "*";
            name += base;
            if (e > 1) name += "^" + std::to_string(e);
        };
        add("P", m.a);
        add("Q", m.b);
        add("R", m.c);
        if (name.empty()) name = "1";
        basis.names.push_back(std::move(name));
        basis.expansions.push_back(std::move(s));
    }
    return basis;
}

QuasimodFit fit_quasimodular(const Series& s, int weight_cap, int hold_out) {
    QuasimodFit fit;
    int order = s.order();
    QuasimodBasis basis = quasimod_basis(weight_cap, order);
    int dim = basis.dimension();
    if (order + 1 < dim + hold_out) {
        throw insufficient_order("series order " + std::to_string(order) + " below basis size " +
                                 std::to_string(dim) + " + hold-out " + std::to_string(hold_out));
    }
    // solve on the leading rows; extend the row window if the square block is
    // singular (the coordinates stay exact either way)
    int rows = dim;
    std::vector<Rat> coords;
    while (true) {
        Matrix a(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(dim)));
        std::vector<Rat> rhs(static_cast<size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < dim; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                                              basis.expansions[static_cast<size_t>(j)][i];
            rhs[static_cast<size_t>(i)] = s[i];
        }
        auto sol = exact_solve(a, rhs);
        if (sol.status == SolveStatus::unique) {
            coords = std::move(sol.solution);
            break;
        }
        if (sol.status == SolveStatus::inconsistent) {
            fit.message = "no quasimodular combination matches the leading coefficients";
            fit.residual_index = rows - 1;
            return fit;
        }
        ++rows;
        if (rows > order + 1) {
            fit.message = "basis underdetermined by the available coefficients";
            fit.underdetermined = true;
            return fit;
        }
    }
    // validate every remaining computed coefficient
    for (int i = rows; i <= order; ++i) {
        Rat acc(0);
        for (int j = 0; j < dim; ++j)
            acc += coords[static_cast<size_t>(j)] * basis.expansions[static_cast<size_t>(j)][i];
        if (acc != s[i]) {
            fit.message = "validation failed at q^" + std::to_string(i);
            fit.residual_index = i;
            return fit;
        }
        ++fit.validated;
    }
    for (int j = 0; j < dim; ++j)
        if (coords[static_cast<size_t>(j)] != 0)
            fit.coords[basis.names[static_cast<size_t>(j)]] = coords[static_cast<size_t>(j)];
    if (fit.validated < 3) {
        fit.underdetermined = true;
        fit.message = "solved, but only " + std::to_string(fit.validated) +
                      " validation coefficients were available";
        return fit;
    }
    fit.success = true;
    return fit;
}

Series q_bracket(const std::function<Rat(const Partition&)>& f, int order) {
    Series num(Var::q, order), den(Var::q, order);
    for (int n = 0; n <= order; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            num[n] += f(lambda);
            den[n] += 1;
        }
    }
    return num * den.inverse();
}

Series q_bracket(const std::map<Partition, Rat>& values, int order) {
    return q_bracket(
        [&values, order](const Partition& lambda) {
            auto it = values.find(lambda);
            if (it == values.end())
                throw incomplete_input("q-bracket input missing " + partition_to_string(lambda) +
                                       " (needed up to size " + std::to_string(order) + ")");
            return it->second;
        },
        order);
}

}  // namespace hurwitz
