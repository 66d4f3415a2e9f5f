#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "plab/bialgebra.hpp"
#include "plab/errors.hpp"
#include "plab/yang_baxter.hpp"

using namespace plab;

namespace {

AveragingAlgebra ut2_avg() {
    return make_averaging(certify_pre_lie(fixtures::ut2()), fixtures::ut2_r());
}

// Coboundary coproduct on UT2 from r = e1 (x) e1 (frozen constants verified
// below against delta_r).
Coalgebra ut2_coalgebra() {
    Tensor3 d(3, 3, 3);
    d(0, 0, 0) = -1;
    return make_coalgebra("UT2co", 3, std::move(d));
}

AvgBialgebra ut2_bialgebra() {
    return make_avg_bialgebra(ut2_avg(), ut2_coalgebra(), fixtures::ut2_r());
}

// N2 with the trivial coproduct.
AvgBialgebra n2_bialgebra() {
    Matrix p{{0, 0}, {0, 1}};
    return make_avg_bialgebra(make_averaging(certify_pre_lie(fixtures::n2()), p),
                              make_coalgebra("N2co", 2, Tensor3(2, 2, 2)), p);
}

} // namespace

TEST_CASE("frozen UT2 coboundary coproduct matches delta_r") {
    Coalgebra d = delta_r(fixtures::ut2(), make_rtensor(3, Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
                          "UT2co");
    CHECK(d.coproduct == ut2_coalgebra().coproduct);
}

TEST_CASE("dual of a pre-Lie algebra is a pre-Lie coalgebra, and back") {
    Coalgebra co = dualize_product(fixtures::ut2());
    CHECK(check_prelie_coalgebra(co).pass());
    CHECK(check_avg_coalgebra(co, fixtures::ut2_r().transpose()).pass());
    AveragingAlgebra back = dualize_coalgebra(co, fixtures::ut2_r().transpose());
    CHECK(back.base.product == fixtures::ut2().product);
    CHECK(back.op == fixtures::ut2_r());
}

TEST_CASE("coalgebra checker flags a non-coassociative coproduct") {
    Tensor3 d(2, 2, 2);
    d(0, 0, 0) = 1;
    d(0, 0, 1) = 1;
    d(1, 1, 0) = 1;
    Coalgebra co = make_coalgebra("bad", 2, std::move(d));
    CHECK(!check_prelie_coalgebra(co).pass());
    CHECK_THROWS_AS(certify_prelie_coalgebra(co), KindError);
}

TEST_CASE("averaging pre-Lie bialgebra checks on the fixtures") {
    AvgBialgebra bi = ut2_bialgebra();
    CHECK(bi.verified);
    CHECK(check_avg_prelie_bialgebra(bi).pass());
    CHECK(check_prelie_bialgebra(certify_pre_lie(fixtures::ut2()),
                                 certify_prelie_coalgebra(ut2_coalgebra()))
              .pass());
    CHECK(n2_bialgebra().verified);

    // breaking the coproduct breaks the cocycle condition
    Tensor3 d(3, 3, 3);
    d(1, 0, 0) = 1;
    AvgBialgebra bad{ut2_avg(), make_coalgebra("bad", 3, std::move(d)), fixtures::ut2_r(), false};
    CHECK(!check_avg_prelie_bialgebra(bad).pass());
}

TEST_CASE("quadratic form checks") {
    BilinearForm omega{fixtures::sp2_omega()};
    CHECK(omega.skew());
    CHECK(omega.nondegenerate());
    CHECK(check_quadratic(fixtures::z2(), omega).pass());
    Matrix id2 = Matrix::identity(2);
    CHECK(check_quadratic(fixtures::z2(), omega, &id2).pass());
    // diag(1,-1) is not symmetric for the symplectic form
    Matrix p = fixtures::sp2_p();
    CHECK(!check_quadratic(fixtures::z2(), omega, &p).pass());
    // a degenerate form fails
    CHECK(!check_quadratic(fixtures::z2(), BilinearForm{Matrix(2, 2)}).pass());
    CHECK_THROWS_AS(omega_sharp(BilinearForm{Matrix(2, 2)}), SingularForm);
}

TEST_CASE("Manin triple from a bialgebra, and the rep isomorphism") {
    for (AvgBialgebra bi : {ut2_bialgebra(), n2_bialgebra()}) {
        ManinTriple mt = bialgebra_to_manin(bi);
        CHECK(check_manin_triple(mt).pass());
        CHECK(verify_rep_isomorphism(mt.total, mt.omega).pass());

        // overlapping parts are rejected
        ManinTriple broken = mt;
        broken.part_b[0] = broken.part_a[0];
        CHECK_THROWS_AS(check_manin_triple(broken), PartitionError);
    }
}

TEST_CASE("Manin roundtrip recovers the bialgebra") {
    for (AvgBialgebra bi : {ut2_bialgebra(), n2_bialgebra()}) {
        ManinTriple mt = bialgebra_to_manin(bi);
        AvgBialgebra back = manin_to_bialgebra(mt, ExtractionSign::Plain);
        CHECK(back.alg.base.product == bi.alg.base.product);
        CHECK(back.co.coproduct == bi.co.coproduct);
        CHECK(back.alg.op == bi.alg.op);
        CHECK(back.s == bi.s);

        // the default convention negates the product and still certifies
        AvgBialgebra neg = manin_to_bialgebra(mt);
        CHECK(neg.verified);
        CHECK(neg.alg.base.product == -bi.alg.base.product);
    }
}

TEST_CASE("Manin correspondence requires S to be the dual of P") {
    // Z2 admits S independent of P; such a bialgebra has no standard double
    AveragingAlgebra avg = make_averaging(certify_pre_lie(fixtures::z2()), Matrix::identity(2));
    AvgBialgebra bi =
        make_avg_bialgebra(avg, make_coalgebra("Z2co", 2, Tensor3(2, 2, 2)), Matrix(2, 2));
    CHECK_THROWS_AS(bialgebra_to_manin(bi), KindError);
}

TEST_CASE("balanced condition") {
    CHECK(check_balanced(fixtures::ut2(), ut2_coalgebra()).pass());
    CHECK(check_balanced(fixtures::n2(), make_coalgebra("t", 2, Tensor3(2, 2, 2))).pass());
    // a generic coboundary candidate is evaluated either way, deterministically
    fixtures::Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        Matrix coeff = rng.matrix(2, 2);
        Coalgebra d = delta_r(fixtures::n2(), make_rtensor(2, coeff), "cand");
        CheckReport a = check_balanced(fixtures::n2(), d);
        CheckReport b = check_balanced(fixtures::n2(), d);
        CHECK(a.pass() == b.pass());
    }
}

TEST_CASE("induced averaging Lie bialgebra") {
    AvgBialgebra bi = ut2_bialgebra();
    AvgLieBialgebra lie = induced_lie_bialgebra(bi);
    CHECK(check_avg_lie_bialgebra(lie.lie, lie.delta, lie.p, lie.s).pass());
    // the UT2 coproduct is symmetric, so the induced cobracket vanishes
    CHECK(lie.delta.coproduct.is_zero());

    // trivial coproduct: the check reduces to the averaging Lie algebra laws
    AvgLieBialgebra lie0 = induced_lie_bialgebra(n2_bialgebra());
    CHECK(lie0.delta.coproduct.is_zero());
    CHECK(check_lie(lie0.lie).pass());
    CHECK(check_averaging(lie0.lie, lie0.p).pass());

    // unverified input is rejected
    AvgBialgebra raw{ut2_avg(), ut2_coalgebra(), fixtures::ut2_r(), false};
    CHECK_THROWS_AS(induced_lie_bialgebra(raw), KindError);
}

TEST_CASE("Lie bialgebra checker flags a broken cobracket") {
    Algebra lie = sub_adjacent_lie(certify_pre_lie(fixtures::ut2()));
    Tensor3 d(3, 3, 3);
    d(0, 0, 1) = 1; // not antisymmetric in the output slots
    CHECK(!check_avg_lie_bialgebra(lie, make_coalgebra("bad", 3, std::move(d)),
                                   fixtures::ut2_r(), fixtures::ut2_r())
               .pass());
}
