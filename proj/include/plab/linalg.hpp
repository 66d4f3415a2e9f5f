#pragma once

#include <optional>
#include <vector>

#include "plab/matrix.hpp"

namespace plab {

struct LinearSolution {
    Matrix particular;            // one solution of A x = b (cols match rhs cols)
    std::vector<Vec> nullspace;   // basis of ker A
};

// Solve A x = b exactly. Returns nullopt when inconsistent. Uses
// fraction-free (integer Bareiss) forward elimination after clearing row
// denominators, then rational back-substitution.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b);

// Basis of the kernel of A.
std::vector<Vec> nullspace(const Matrix& a);

// Exact inverse; nullopt when singular.
std::optional<Matrix> invert(const Matrix& a);

int rank(const Matrix& a);

} // namespace plab
