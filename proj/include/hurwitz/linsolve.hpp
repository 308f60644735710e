#pragma once

#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

using Matrix = std::vector<std::vector<Rat>>;

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
    SolveStatus status;
    std::vector<Rat> solution;  // filled when unique
};

// Exact Gaussian elimination on A x = b; A need not be square. Reports a
// unique solution, an underdetermined system, or inconsistency.
SolveResult exact_solve(Matrix a, std::vector<Rat> b);

}  // namespace hurwitz
