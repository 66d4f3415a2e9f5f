#pragma once

// Shared test fixtures. Every nontrivial fixture is certified in the tests by
// an independent construction (matrix models, transposed tensors, ...), not
// just by the checkers under test.

#include <array>
#include <random>
#include <vector>

#include "plab/algebra.hpp"
#include "plab/errors.hpp"
#include "plab/matrix.hpp"

namespace fixtures {

using namespace plab;

// 2-dimensional algebra with zero product.
inline Algebra z2() {
    return make_algebra("Z2", 2, Tensor3(2, 2, 2));
}

// 3-dimensional pre-Lie algebra:
//   e1*e1 = -e1, e3*e3 = -e3, e2*e3 = e3*e2 = -e2, rest 0.
inline Algebra ut2() {
    Tensor3 c(3, 3, 3);
    c(0, 0, 0) = -1;
    c(2, 2, 2) = -1;
    c(1, 2, 1) = -1;
    c(2, 1, 1) = -1;
    return make_algebra("UT2", 3, std::move(c));
}

// The averaging operator on ut2().
inline Matrix ut2_r() {
    return Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}};
}

// Independent oracle for ut2(): model the basis as the 2x2 upper-triangular
// matrices E11, E12, E22 with the product x*y := R(x)y - yR(x) - xy, where
// R keeps the diagonal part. Returns the structure constants recomputed from
// that matrix model.
inline Algebra ut2_matrix_oracle() {
    // a 2x2 matrix as a flat array {a11, a12, a21, a22}
    using M2 = std::array<Rational, 4>;
    auto mul = [](const M2& x, const M2& y) {
        return M2{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                  x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    };
    auto sub = [](const M2& x, const M2& y) {
        return M2{x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
    };
    auto diag = [](const M2& x) { return M2{x[0], 0, 0, x[3]}; };
    const M2 e[3] = {M2{1, 0, 0, 0}, M2{0, 1, 0, 0}, M2{0, 0, 0, 1}}; // E11, E12, E22
    Tensor3 c(3, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            M2 prod = sub(sub(mul(diag(e[i]), e[j]), mul(e[j], diag(e[i]))), mul(e[i], e[j]));
            // expand back in the basis: coefficients at E11, E12, E22
            c(i, j, 0) = prod[0];
            c(i, j, 1) = prod[1];
            c(i, j, 2) = prod[3];
            if (!prod[2].is_zero()) throw Error("oracle product left UT2(k)");
        }
    return make_algebra("UT2", 3, std::move(c));
}

// 2-dimensional pre-Lie algebra with e1*e1 = e2.
inline Algebra n2() {
    Tensor3 c(2, 2, 2);
    c(0, 0, 1) = 1;
    return make_algebra("N2", 2, std::move(c));
}

// Symplectic data on z2(): form [[0,1],[-1,0]], operators used by the
// quadratic Rota-Baxter pipeline.
inline Matrix sp2_omega() { return Matrix{{0, 1}, {-1, 0}}; }
inline Matrix sp2_b() { return Matrix{{Rational(-1, 2), 0}, {0, Rational(-1, 2)}}; }
inline Matrix sp2_p() { return Matrix{{1, 0}, {0, -1}}; }

// Deterministic random rational matrices for property tests.
struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    Rational entry() {
        // small numerators/denominators keep the exact arithmetic fast
        static const Rational pool[] = {0, 0, 0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 3};
        return pool[gen() % 10];
    }
    Matrix matrix(int r, int c) {
        Matrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = entry();
        return m;
    }
    Tensor3 tensor(int d) {
        Tensor3 t(d, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) t(i, j, k) = entry();
        return t;
    }
};

} // namespace fixtures
