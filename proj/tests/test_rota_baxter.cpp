#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "plab/errors.hpp"
#include "plab/rota_baxter.hpp"

using namespace plab;

namespace {

AveragingAlgebra ut2_avg() {
    return make_averaging(certify_pre_lie(fixtures::ut2()), fixtures::ut2_r());
}

// Coregular module of an algebra, with a chosen companion.
AvgRepresentation coregular_rep(const Algebra& alg, const Matrix& alpha) {
    std::vector<Matrix> rho, phi;
    for (int i = 0; i < alg.dim; ++i) {
        Matrix li = alg.left_mult(i), ri = alg.right_mult(i);
        rho.push_back(-(li - ri).transpose());
        phi.push_back(ri.transpose()); // -R* = +R^T
    }
    AvgRepresentation out;
    out.rep = make_representation(alg, alg.dim, std::move(rho), std::move(phi));
    out.alpha = alpha;
    return out;
}

} // namespace

TEST_CASE("Rota-Baxter identity: frozen weight-0 operator on N2") {
    Algebra n2 = certify_pre_lie(fixtures::n2());
    Matrix b{{1, 0}, {0, Rational(1, 2)}};
    CHECK(check_rb(n2, b, Rational(0)).pass());
    CHECK(!check_rb(n2, Matrix::identity(2), Rational(0)).pass());
    CHECK(check_rb(n2, Matrix::identity(2), Rational(-1)).pass()); // id has weight -1

    Algebra desc = descendent_product(n2, b, Rational(0));
    CHECK(desc.kind == AlgebraKind::PreLie);
    // e1 *_B e1 = B(e1)*e1 + e1*B(e1) = 2 e2
    CHECK(desc.product(0, 0, 1) == Rational(2));
}

TEST_CASE("averaging operator commuting with a Rota-Baxter operator") {
    Algebra n2 = certify_pre_lie(fixtures::n2());
    Matrix b{{1, 0}, {0, Rational(1, 2)}};
    AveragingAlgebra avg = make_averaging(n2, Matrix::identity(2));
    CHECK(check_avg_commutes_rb(avg, b, Rational(0)).pass());

    // P = diag(0,1) also averages N2 and commutes with the diagonal B
    AveragingAlgebra avg2 = make_averaging(n2, Matrix{{0, 0}, {0, 1}});
    CHECK(check_avg_commutes_rb(avg2, b, Rational(0)).pass());
}

TEST_CASE("adjoint with respect to a form, frozen") {
    BilinearForm omega{fixtures::sp2_omega()};
    Matrix m{{1, 2}, {3, 4}};
    CHECK(adjoint_wrt_form(m, omega) == Matrix{{4, -2}, {-3, 1}});
    // involution under the skew form: (M^adj)^adj = M
    CHECK(adjoint_wrt_form(adjoint_wrt_form(m, omega), omega) == m);
    CHECK_THROWS_AS(adjoint_wrt_form(m, BilinearForm{Matrix(2, 2)}), SingularForm);
}

TEST_CASE("symplectic quadratic Rota-Baxter pipeline") {
    Algebra z2 = certify_pre_lie(fixtures::z2());
    BilinearForm omega{fixtures::sp2_omega()};
    Matrix b = fixtures::sp2_b(), p = fixtures::sp2_p();
    Rational one(1);

    CHECK(check_avg_on_qrb(z2, omega, b, one, p).pass());
    CHECK(descendent_neg_adjoint_avg(z2, omega, b, one, p).pass());
    // identity P fails: P^adj = P != -P
    CHECK(!check_avg_on_qrb(z2, omega, b, one, Matrix::identity(2)).pass());

    RTensor r = build_r_from_qrb(z2, omega, b, one);
    CHECK(r.coeff == Rational(-1, 2) * fixtures::sp2_omega());
    CHECK(check_factorizable(z2, r).pass());

    // roundtrip back to the quadratic Rota-Baxter structure
    auto [b2, omega2] = factorizable_to_qrb(z2, r, one);
    CHECK(b2 == b);
    CHECK(omega2.matrix == omega.matrix);

    AvgBialgebra bi = avg_bialgebra_from_qrb(z2, omega, b, one, p);
    CHECK(bi.verified);
    CHECK(bi.s == -p);

    CHECK_THROWS_AS(build_r_from_qrb(z2, omega, b, Rational(0)), ZeroWeight);
    CHECK_THROWS_AS(avg_bialgebra_from_qrb(z2, omega, b, one, Matrix::identity(2)),
                    PreconditionFailed);
}

TEST_CASE("dual product induced by r on the symplectic solution") {
    Algebra z2 = fixtures::z2();
    RTensor r = make_rtensor(2, Rational(-1, 2) * fixtures::sp2_omega());
    Algebra dual = dual_product_r(z2, r);
    // the base product is zero, so ad* and R* vanish: the dual product is zero
    CHECK(dual.product.is_zero());
}

TEST_CASE("relative Rota-Baxter operators on the coregular module") {
    AveragingAlgebra avg = ut2_avg();
    AvgRepresentation co = coregular_rep(avg.base, fixtures::ut2_r().transpose());
    Matrix zero(3, 3);
    CHECK(check_relative_rb(avg, co, zero).pass());

    AveragingAlgebra desc = descendent_avg_prelie(avg, co, zero);
    CHECK(desc.base.product.is_zero());
    CHECK(desc.base.kind == AlgebraKind::PreLie);

    MatchedPairPreLie mp = matched_pair_from_rrb(avg, co, zero);
    CHECK(mp.verified);
    CHECK(check_averaging(build_double(mp).base, build_double(mp).op).pass());

    // a non-solution is rejected by the certifying constructions
    Matrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    if (!check_relative_rb(avg, co, swap).pass())
        CHECK_THROWS_AS(descendent_avg_prelie(avg, co, swap), PreconditionFailed);
}

TEST_CASE("symmetric relative operators are solutions of the equations") {
    AveragingAlgebra avg = ut2_avg();
    Matrix s = fixtures::ut2_r();
    // T = E11 is symmetric; it is relative Rota-Baxter for the coregular
    // module exactly when r = e1 (x) e1 solves the equations
    Matrix t{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    RTensor r = rrb_to_cybe_solution(avg, s, t);
    CHECK(r.coeff == t);
    CHECK(check_admissible_cybe(avg, s, r).pass());

    Matrix nonsym{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(rrb_to_cybe_solution(avg, s, nonsym), PreconditionFailed);
}

TEST_CASE("relative operators correspond to weight-0 Rota-Baxter operators") {
    // symplectic plane with the identity averaging operator (form-symmetric)
    AveragingAlgebra avg = make_averaging(certify_pre_lie(fixtures::z2()), Matrix::identity(2));
    BilinearForm omega{fixtures::sp2_omega()};
    fixtures::Rng rng(41);
    int holds = 0;
    for (int t = 0; t < 100; ++t)
        if (rrb_equiv_rb0(avg, omega, rng.matrix(2, 2))) ++holds;
    CHECK(holds == 100); // every operator qualifies on the zero product

    // non-form-symmetric P is rejected
    AveragingAlgebra bad = make_averaging(certify_pre_lie(fixtures::z2()), fixtures::sp2_p());
    CHECK_THROWS_AS(rrb_equiv_rb0(bad, omega, Matrix(2, 2)), PreconditionFailed);
}

TEST_CASE("three equivalent admissibility statements") {
    AveragingAlgebra avg = ut2_avg();
    AvgRepresentation reg = regular_representation(avg);
    Matrix r = fixtures::ut2_r();

    auto all = check_equiva3(avg, reg, r, r);
    CHECK(all == std::array<bool, 3>{true, true, true});

    Matrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    auto none = check_equiva3(avg, reg, swap, swap);
    CHECK(none == std::array<bool, 3>{false, false, false});

    // randomized agreement (the checker itself asserts the equivalence)
    fixtures::Rng rng(43);
    for (int t = 0; t < 60; ++t) {
        AvgRepresentation rep = reg;
        rep.alpha = rng.matrix(3, 3);
        (void)check_equiva3(avg, rep, rng.matrix(3, 3), rng.matrix(3, 3));
    }
}

TEST_CASE("lifting a relative operator to a solution on the sum") {
    AveragingAlgebra avg = ut2_avg();
    AvgRepresentation reg = regular_representation(avg);
    Matrix r = fixtures::ut2_r();

    LiftedSolution lifted = lift_T_to_r(avg, reg, r, r, Matrix(3, 3));
    CHECK(lifted.big.base.dim == 6);
    CHECK(lifted.r.coeff.is_zero());
    CHECK(lifted.r.coeff == lifted.r.coeff.transpose());

    // T = 0 always satisfies both sides of the equivalence
    CHECK(lifted_equations_iff_rrb(avg, reg, r, r, Matrix(3, 3)));

    // a T with T beta != S T makes both sides false, never one of them
    Matrix t{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
    CHECK(!lifted_equations_iff_rrb(avg, reg, r, r, t));
}
