#include "plab/algebra.hpp"

#include <cmath>

#include "plab/errors.hpp"

namespace plab {

std::string kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::PreLie: return "preLie";
        case AlgebraKind::Lie: return "Lie";
        case AlgebraKind::Leibniz: return "Leibniz";
        default: return "unchecked";
    }
}

Matrix Algebra::left_mult(int i) const {
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m(k, j) = product(i, j, k);
    return m;
}

Matrix Algebra::right_mult(int i) const {
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m(k, j) = product(j, i, k);
    return m;
}

Matrix Algebra::left_of(const Vec& x) const {
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (x(i, 0).is_zero()) continue;
        m = m + x(i, 0) * left_mult(i);
    }
    return m;
}

Matrix Algebra::right_of(const Vec& x) const {
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (x(i, 0).is_zero()) continue;
        m = m + x(i, 0) * right_mult(i);
    }
    return m;
}

Algebra make_algebra(std::string label, int dim, Tensor3 product) {
    if (product.dim1() != dim || product.dim2() != dim || product.dim3() != dim)
        throw DimensionMismatch("structure constants of " + label);
    return Algebra{std::move(label), dim, std::move(product), AlgebraKind::Unchecked};
}

namespace {

Vec basis(int n, int i) { return Matrix::basis_vector(n, i); }

void require_op(const Algebra& alg, const Matrix& p, const char* what) {
    if (p.rows() != alg.dim || p.cols() != alg.dim)
        throw DimensionMismatch(std::string(what) + " on " + alg.label);
}

} // namespace

CheckReport check_pre_lie(const Algebra& alg) {
    CheckReport rep;
    rep.name = "pre-lie(" + alg.label + ")";
    rep.item("associator symmetry");
    const int n = alg.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ei = basis(n, i), ej = basis(n, j), ek = basis(n, k);
                Vec lhs = alg.mul(alg.mul(ei, ej), ek) - alg.mul(ei, alg.mul(ej, ek));
                Vec rhs = alg.mul(alg.mul(ej, ei), ek) - alg.mul(ej, alg.mul(ei, ek));
                if (lhs != rhs)
                    rep.fail("associator symmetry", {i + 1, j + 1, k + 1}, vec_str(lhs),
                             vec_str(rhs));
            }
    return rep;
}

CheckReport check_lie(const Algebra& alg) {
    CheckReport rep;
    rep.name = "lie(" + alg.label + ")";
    rep.item("antisymmetry");
    rep.item("jacobi");
    const int n = alg.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec lhs = alg.mul(basis(n, i), basis(n, j));
            Vec rhs = -alg.mul(basis(n, j), basis(n, i));
            if (lhs != rhs) rep.fail("antisymmetry", {i + 1, j + 1}, vec_str(lhs), vec_str(rhs));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ei = basis(n, i), ej = basis(n, j), ek = basis(n, k);
                Vec sum = alg.mul(alg.mul(ei, ej), ek) + alg.mul(alg.mul(ej, ek), ei) +
                          alg.mul(alg.mul(ek, ei), ej);
                if (!sum.is_zero())
                    rep.fail("jacobi", {i + 1, j + 1, k + 1}, vec_str(sum), "(0)");
            }
    return rep;
}

CheckReport check_leibniz(const Algebra& alg) {
    CheckReport rep;
    rep.name = "leibniz(" + alg.label + ")";
    rep.item("left leibniz");
    const int n = alg.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ei = basis(n, i), ej = basis(n, j), ek = basis(n, k);
                Vec lhs = alg.mul(ei, alg.mul(ej, ek));
                Vec rhs = alg.mul(alg.mul(ei, ej), ek) + alg.mul(ej, alg.mul(ei, ek));
                if (lhs != rhs)
                    rep.fail("left leibniz", {i + 1, j + 1, k + 1}, vec_str(lhs), vec_str(rhs));
            }
    return rep;
}

CheckReport check_averaging(const Algebra& alg, const Matrix& p) {
    require_op(alg, p, "averaging operator");
    CheckReport rep;
    rep.name = "averaging(" + alg.label + ")";
    rep.item("P(x)*P(y) = P(P(x)*y)");
    rep.item("P(P(x)*y) = P(x*P(y))");
    const int n = alg.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec pi = p * basis(n, i), pj = p * basis(n, j);
            Vec a = alg.mul(pi, pj);
            Vec b = p * alg.mul(pi, basis(n, j));
            Vec c = p * alg.mul(basis(n, i), pj);
            if (a != b) rep.fail("P(x)*P(y) = P(P(x)*y)", {i + 1, j + 1}, vec_str(a), vec_str(b));
            if (b != c) rep.fail("P(P(x)*y) = P(x*P(y))", {i + 1, j + 1}, vec_str(b), vec_str(c));
        }
    return rep;
}

namespace {
Algebra certify(Algebra alg, AlgebraKind kind, CheckReport (*checker)(const Algebra&)) {
    CheckReport rep = checker(alg);
    if (!rep.pass())
        throw KindError(alg.label + " failed " + rep.name);
    alg.kind = kind;
    return alg;
}
} // namespace

Algebra certify_pre_lie(Algebra alg) { return certify(std::move(alg), AlgebraKind::PreLie, check_pre_lie); }
Algebra certify_lie(Algebra alg) { return certify(std::move(alg), AlgebraKind::Lie, check_lie); }
Algebra certify_leibniz(Algebra alg) { return certify(std::move(alg), AlgebraKind::Leibniz, check_leibniz); }

AveragingAlgebra make_averaging(Algebra base, Matrix op) {
    if (!check_averaging(base, op).pass())
        throw KindError("operator is not averaging on " + base.label);
    return AveragingAlgebra{std::move(base), std::move(op)};
}

Algebra sub_adjacent_lie(const Algebra& alg) {
    if (alg.kind != AlgebraKind::PreLie)
        throw KindError("sub_adjacent_lie needs a certified pre-Lie algebra, got " +
                        kind_name(alg.kind));
    Tensor3 c(alg.dim, alg.dim, alg.dim);
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j)
            for (int k = 0; k < alg.dim; ++k)
                c(i, j, k) = alg.product(i, j, k) - alg.product(j, i, k);
    return certify_lie(make_algebra(alg.label + ".lie", alg.dim, std::move(c)));
}

Algebra induced_leibniz(const AveragingAlgebra& avg) {
    const Algebra& a = avg.base;
    Tensor3 c(a.dim, a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec pe = avg.op * Matrix::basis_vector(a.dim, i);
            Vec br = a.mul(pe, Matrix::basis_vector(a.dim, j)) -
                     a.mul(Matrix::basis_vector(a.dim, j), pe);
            for (int k = 0; k < a.dim; ++k) c(i, j, k) = br(k, 0);
        }
    return certify_leibniz(make_algebra(a.label + ".leibniz", a.dim, std::move(c)));
}

CheckReport check_homomorphism(const AveragingAlgebra& src, const AveragingAlgebra& dst,
                               const Matrix& f) {
    if (f.cols() != src.base.dim || f.rows() != dst.base.dim)
        throw DimensionMismatch("homomorphism shape");
    CheckReport rep;
    rep.name = "homomorphism(" + src.base.label + " -> " + dst.base.label + ")";
    rep.item("f(x*y) = f(x)*f(y)");
    rep.item("f P = P' f");
    const int n = src.base.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = Matrix::basis_vector(n, i), ej = Matrix::basis_vector(n, j);
            Vec lhs = f * src.base.mul(ei, ej);
            Vec rhs = dst.base.mul(f * ei, f * ej);
            if (lhs != rhs)
                rep.fail("f(x*y) = f(x)*f(y)", {i + 1, j + 1}, vec_str(lhs), vec_str(rhs));
        }
    if (f * src.op != dst.op * f) {
        Matrix l = f * src.op, r = dst.op * f;
        rep.fail("f P = P' f", {}, l.str(), r.str());
    }
    return rep;
}

std::vector<Matrix> search_averaging_operators(const Algebra& alg,
                                               const std::vector<Rational>& entries,
                                               std::uint64_t budget) {
    const int cells = alg.dim * alg.dim;
    long double total = 1;
    for (int c = 0; c < cells; ++c) total *= (long double)entries.size();
    if (total > (long double)budget)
        throw SearchSpaceTooLarge(std::to_string((unsigned long long)total) + " candidates, budget " +
                                  std::to_string(budget));
    std::vector<Matrix> found;
    enumerate_matrices(alg.dim, alg.dim, entries, [&](const Matrix& p) {
        if (check_averaging(alg, p).pass()) found.push_back(p);
        return true;
    });
    return found;
}

} // namespace plab
