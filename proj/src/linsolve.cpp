#include "hurwitz/linsolve.hpp"

#include <algorithm>

#include "hurwitz/errors.hpp"

namespace hurwitz {

SolveResult exact_solve(Matrix a, std::vector<Rat> b) {
    size_t rows = a.size();
    if (b.size() != rows) throw input_error("matrix/rhs size mismatch");
    size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        Rat inv = 1 / a[rank][col];
        for (size_t j = col; j < cols; ++j) a[rank][j] *= inv;
        b[rank] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t i = rank; i < rows; ++i)
        if (b[i] != 0) return {SolveStatus::inconsistent, {}};
    if (rank < cols) return {SolveStatus::underdetermined, {}};
    std::vector<Rat> x(cols, Rat(0));
    for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
    return {SolveStatus::unique, std::move(x)};
}

}  // namespace hurwitz
