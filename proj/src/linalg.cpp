#include "plab/linalg.hpp"

#include <utility>

#include "plab/errors.hpp"

namespace plab {
namespace {

Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return a == 0 ? (b < 0 ? Int(-b) : b) : (a < 0 ? Int(-a) : a);
    return a / boost::integer::gcd(a < 0 ? Int(-a) : a, b < 0 ? Int(-b) : b) * b;
}

// Echelon form of [A | B]: integer Bareiss forward pass, then a rational
// reduced form of the surviving rows. Returns the RREF rows and pivot columns
// (pivots only searched among the first a_cols columns).
struct Echelon {
    Matrix rref;                // rank x (a_cols + b_cols), leading entries 1
    std::vector<int> pivot_cols;
};

Echelon reduce(const Matrix& a, const Matrix& b) {
    const int m = a.rows(), n = a.cols(), w = n + b.cols();
    // Clear denominators row by row.
    std::vector<std::vector<Int>> t(m, std::vector<Int>(w));
    for (int i = 0; i < m; ++i) {
        Int scale = 1;
        for (int j = 0; j < n; ++j) scale = lcm(scale, a(i, j).den());
        for (int j = 0; j < b.cols(); ++j) scale = lcm(scale, b(i, j).den());
        for (int j = 0; j < n; ++j) t[i][j] = a(i, j).num() * (scale / a(i, j).den());
        for (int j = 0; j < b.cols(); ++j) t[i][n + j] = b(i, j).num() * (scale / b(i, j).den());
    }

    // Fraction-free forward elimination (one-step Bareiss): every entry below
    // stays an integer minor of the scaled matrix, divided by the previous pivot.
    std::vector<int> pivots;
    Int prev = 1;
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int pr = -1;
        for (int i = r; i < m; ++i)
            if (t[i][col] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(t[r], t[pr]);
        for (int i = r + 1; i < m; ++i) {
            for (int j = col + 1; j < w; ++j)
                t[i][j] = (t[i][j] * t[r][col] - t[i][col] * t[r][j]) / prev;
            t[i][col] = 0;
        }
        prev = t[r][col];
        pivots.push_back(col);
        ++r;
    }
    // Rows at index >= rank keep only their (possibly nonzero) tail beyond the
    // A block untouched by the loop above? No: elimination zeroes the whole A
    // block of non-pivot rows, so any leftover nonzero entries sit in B.
    Echelon e;
    e.pivot_cols = pivots;
    const int rank = int(pivots.size());
    // Rational back-elimination to reduced form.
    Matrix rr(m, w);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < w; ++j) rr(i, j) = Rational(t[i][j]);
    for (int i = rank - 1; i >= 0; --i) {
        int pc = e.pivot_cols[i];
        Rational inv = rr(i, pc).inverse();
        for (int j = pc; j < w; ++j) rr(i, j) *= inv;
        for (int k = 0; k < i; ++k) {
            Rational f = rr(k, pc);
            if (f.is_zero()) continue;
            for (int j = pc; j < w; ++j) rr(k, j) -= f * rr(i, j);
        }
    }
    e.rref = std::move(rr);
    return e;
}

} // namespace

std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear rhs rows");
    const int n = a.cols();
    Echelon e = reduce(a, b);
    const int rank = int(e.pivot_cols.size());
    // Inconsistency: a zero A-row with nonzero B entries.
    for (int i = rank; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!e.rref(i, n + j).is_zero()) return std::nullopt;

    LinearSolution sol;
    sol.particular = Matrix(n, b.cols());
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < b.cols(); ++j)
            sol.particular(e.pivot_cols[i], j) = e.rref(i, n + j);

    std::vector<bool> is_pivot(n, false);
    for (int pc : e.pivot_cols) is_pivot[pc] = true;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n, 1);
        v(f, 0) = 1;
        for (int i = 0; i < rank; ++i) v(e.pivot_cols[i], 0) = -e.rref(i, f);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::vector<Vec> nullspace(const Matrix& a) {
    auto sol = solve_linear(a, Matrix(a.rows(), 0));
    return sol->nullspace;
}

std::optional<Matrix> invert(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("invert of non-square matrix");
    auto sol = solve_linear(a, Matrix::identity(a.rows()));
    if (!sol || !sol->nullspace.empty()) return std::nullopt;
    return sol->particular;
}

int rank(const Matrix& a) {
    return int(reduce(a, Matrix(a.rows(), 0)).pivot_cols.size());
}

} // namespace plab
