#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "plab/errors.hpp"
#include "plab/representation.hpp"

using namespace plab;

namespace {

AveragingAlgebra ut2_avg() {
    return make_averaging(certify_pre_lie(fixtures::ut2()), fixtures::ut2_r());
}

} // namespace

TEST_CASE("regular representation is a verified averaging representation") {
    AveragingAlgebra avg = ut2_avg();
    AvgRepresentation reg = regular_representation(avg);
    CHECK(reg.rep.verified);
    CHECK(check_prelie_representation(avg.base, reg.rep).pass());
    CHECK(check_avg_representation(avg, reg.rep, reg.alpha).pass());
    // the regular action is by the multiplication operators
    for (int i = 0; i < 3; ++i) {
        CHECK(reg.rep.rho[i] == avg.base.left_mult(i));
        CHECK(reg.rep.phi[i] == avg.base.right_mult(i));
    }
    CHECK(reg.alpha == avg.op);
}

TEST_CASE("representation checker flags a non-representation") {
    Algebra a = certify_pre_lie(fixtures::n2());
    // n2 has [e1,e2] = 0, but these rho matrices do not commute, breaking
    // rho(x*y - y*x) = rho(x)rho(y) - rho(y)rho(x)
    std::vector<Matrix> rho = {Matrix{{0, 1}, {1, 0}}, Matrix{{1, 0}, {0, 0}}};
    std::vector<Matrix> phi = {Matrix(2, 2), Matrix(2, 2)};
    Representation rep = make_representation(a, 2, rho, phi);
    CHECK(!check_prelie_representation(a, rep).pass());
    CHECK_THROWS_AS(certify_representation(a, rep), KindError);
}

TEST_CASE("semidirect averaging iff module-level averaging (randomized)") {
    AveragingAlgebra avg = ut2_avg();
    fixtures::Rng rng(11);
    int agree = 0, passing = 0;
    for (int t = 0; t < 120; ++t) {
        std::vector<Matrix> rho, phi;
        for (int i = 0; i < 3; ++i) {
            rho.push_back(rng.matrix(2, 2));
            phi.push_back(rng.matrix(2, 2));
        }
        Matrix alpha = rng.matrix(2, 2);
        Representation rep = make_representation(avg.base, 2, rho, phi);
        bool module_side = check_avg_representation(avg, rep, alpha).pass();
        auto [sd, sd_op] = semidirect_product_unchecked(avg.base, rep, avg.op, alpha);
        bool sum_side = check_averaging(sd, sd_op).pass();
        CHECK(module_side == sum_side);
        if (module_side == sum_side) ++agree;
        if (module_side) ++passing;
    }
    // make the property non-vacuous: the regular representation passes both
    AvgRepresentation reg = regular_representation(avg);
    auto [sd, sd_op] = semidirect_product_unchecked(avg.base, reg.rep, avg.op, reg.alpha);
    CHECK(check_avg_representation(avg, reg.rep, reg.alpha).pass());
    CHECK(check_averaging(sd, sd_op).pass());
    CHECK(agree == 120);
}

TEST_CASE("certified semidirect product of the regular representation") {
    AveragingAlgebra avg = ut2_avg();
    AvgRepresentation reg = regular_representation(avg);
    AveragingAlgebra sd = semidirect_product(avg, reg);
    CHECK(sd.base.dim == 6);
    CHECK(sd.base.kind == AlgebraKind::PreLie);
    CHECK(check_averaging(sd.base, sd.op).pass());
    // structure constants: A-block equals A, action blocks are rho/phi
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                CHECK(sd.base.product(i, j, k) == avg.base.product(i, j, k));
                CHECK(sd.base.product(i, 3 + j, 3 + k) == reg.rep.rho[i](k, j));
                CHECK(sd.base.product(3 + j, i, 3 + k) == reg.rep.phi[i](k, j));
            }
}

TEST_CASE("dual representation is an involution and preserves the module laws") {
    AveragingAlgebra avg = ut2_avg();
    AvgRepresentation reg = regular_representation(avg);
    Matrix beta = fixtures::ut2_r();
    DualRepresentation dual = dual_representation(reg.rep, beta);
    CHECK(dual.companion == beta.transpose());
    CHECK(check_prelie_representation(avg.base, dual.rep).pass());

    DualRepresentation back = dual_representation(dual.rep, dual.companion);
    CHECK(back.companion == beta);
    for (int i = 0; i < 3; ++i) {
        CHECK(back.rep.rho[i] == reg.rep.rho[i]);
        CHECK(back.rep.phi[i] == reg.rep.phi[i]);
    }
}

TEST_CASE("beta- and S-admissibility on UT2") {
    AveragingAlgebra avg = ut2_avg();
    AvgRepresentation reg = regular_representation(avg);
    CHECK(check_beta_admissible(avg, reg.rep, fixtures::ut2_r()).pass());
    CHECK(check_S_admissible(avg, fixtures::ut2_r()).pass());
    CHECK(check_S_admissible(avg, Matrix(3, 3)).pass()); // S = 0 is admissible

    Matrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    CHECK(!check_S_admissible(avg, swap).pass());
    CHECK(!check_beta_admissible(avg, reg.rep, swap).pass());
}

TEST_CASE("phi anticommutation") {
    AveragingAlgebra z2 = make_averaging(certify_pre_lie(fixtures::z2()), Matrix::identity(2));
    AvgRepresentation reg0 = regular_representation(z2);
    CHECK(check_phi_anticommute(reg0.rep).pass()); // zero action anticommutes

    AvgRepresentation reg = regular_representation(ut2_avg());
    CHECK(!check_phi_anticommute(reg.rep).pass()); // R_1^2 = diag(1,0,0) != 0
}

TEST_CASE("induced Leibniz representation passes the Leibniz module laws") {
    AveragingAlgebra avg = ut2_avg();
    Algebra leib = induced_leibniz(avg);
    AvgRepresentation reg = regular_representation(avg);
    LeibnizRepresentation lrep = induced_leibniz_representation(avg, reg);
    CHECK(check_leibniz_representation(leib, lrep).pass());

    // same property on (N2, id)
    AveragingAlgebra n2 = make_averaging(certify_pre_lie(fixtures::n2()), Matrix::identity(2));
    CHECK(check_leibniz_representation(induced_leibniz(n2),
                                       induced_leibniz_representation(
                                           n2, regular_representation(n2)))
              .pass());
}

TEST_CASE("leibniz representation checker requires a certified Leibniz algebra") {
    AveragingAlgebra avg = ut2_avg();
    LeibnizRepresentation lrep = induced_leibniz_representation(avg, regular_representation(avg));
    Algebra raw = fixtures::ut2(); // unchecked kind
    CHECK_THROWS_AS(check_leibniz_representation(raw, lrep), KindError);
}
