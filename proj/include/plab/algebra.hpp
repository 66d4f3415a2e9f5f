#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plab/check.hpp"
#include "plab/linalg.hpp"
#include "plab/matrix.hpp"
#include "plab/tensor3.hpp"

namespace plab {

enum class AlgebraKind { Unchecked, PreLie, Lie, Leibniz };

std::string kind_name(AlgebraKind k);

// Finite-dimensional algebra given by structure constants:
// e_i * e_j = sum_k product(i,j,k) e_k.
// The kind tag is only ever set by the corresponding checker.
struct Algebra {
    std::string label;
    int dim = 0;
    Tensor3 product;
    AlgebraKind kind = AlgebraKind::Unchecked;

    Vec mul(const Vec& x, const Vec& y) const { return contract(product, x, y); }

    Matrix left_mult(int i) const;   // matrix of y -> e_i * y
    Matrix right_mult(int i) const;  // matrix of y -> y * e_i
    Matrix left_of(const Vec& x) const;
    Matrix right_of(const Vec& x) const;
};

Algebra make_algebra(std::string label, int dim, Tensor3 product);

// Linear operator(s) attached to an algebra by label, so that misuse across
// algebras is caught early.
struct AveragingAlgebra {
    Algebra base;
    Matrix op; // the averaging operator P
};

CheckReport check_pre_lie(const Algebra& alg);
CheckReport check_lie(const Algebra& alg);
CheckReport check_leibniz(const Algebra& alg);
CheckReport check_averaging(const Algebra& alg, const Matrix& p);

// Run the checker and return a kind-tagged copy; KindError on failure.
Algebra certify_pre_lie(Algebra alg);
Algebra certify_lie(Algebra alg);
Algebra certify_leibniz(Algebra alg);

// Certifying constructor: runs check_averaging, throws KindError on failure.
AveragingAlgebra make_averaging(Algebra base, Matrix op);

// Commutator algebra [x,y] = x*y - y*x of a certified pre-Lie algebra.
Algebra sub_adjacent_lie(const Algebra& alg);

// Bracket [x,y] = P(x)*y - y*P(x) of an averaging pre-Lie algebra.
Algebra induced_leibniz(const AveragingAlgebra& avg);

// f(x*y) = f(x)*'f(y) on basis pairs, plus f P = P' f.
CheckReport check_homomorphism(const AveragingAlgebra& src, const AveragingAlgebra& dst,
                               const Matrix& f);

// Exhaustive enumeration of operator matrices with entries from `entries`;
// returns those passing check_averaging. Throws SearchSpaceTooLarge when
// |entries|^(dim^2) exceeds the budget.
std::vector<Matrix> search_averaging_operators(const Algebra& alg,
                                               const std::vector<Rational>& entries,
                                               std::uint64_t budget = 1000000);

// Enumeration helper shared by the search commands: all matrices of the given
// shape with entries drawn from `entries`, visited in a fixed order.
// `visit` returns false to stop early.
template <typename F>
void enumerate_matrices(int rows, int cols, const std::vector<Rational>& entries, F&& visit) {
    const int cells = rows * cols;
    std::vector<int> idx(cells, 0);
    for (;;) {
        Matrix m(rows, cols);
        for (int c = 0; c < cells; ++c) m(c / cols, c % cols) = entries[idx[c]];
        if (!visit(const_cast<const Matrix&>(m))) return;
        int c = 0;
        while (c < cells && ++idx[c] == int(entries.size())) idx[c++] = 0;
        if (c == cells) return;
    }
}

} // namespace plab
