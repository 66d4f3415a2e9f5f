#pragma once

#include <array>

#include "plab/matched_pair.hpp"
#include "plab/yang_baxter.hpp"

namespace plab {

// B(x)*B(y) = B(B(x)*y + x*B(y) + lambda x*y).
CheckReport check_rb(const Algebra& alg, const Matrix& b, const Rational& lambda);

// Descendent product x *_B y = B(x)*y + x*B(y) + lambda x*y (certified
// pre-Lie when the operator checks pass on a pre-Lie base).
Algebra descendent_product(const Algebra& alg, const Matrix& b, const Rational& lambda);

// P an averaging operator commuting with the Rota-Baxter operator B; also
// certifies that P averages the descendent product.
CheckReport check_avg_commutes_rb(const AveragingAlgebra& avg, const Matrix& b,
                                  const Rational& lambda);

// Adjoint of a linear map with respect to a nondegenerate form:
// omega(Mx, y) = omega(x, M^adj y), realized as Omega^-1 M^T Omega.
Matrix adjoint_wrt_form(const Matrix& m, const BilinearForm& omega);

// On a quadratic Rota-Baxter algebra (A, *, omega, B, lambda): P averaging,
// B P^adj = -P B, and when lambda != 0 also P^adj = -P.
CheckReport check_avg_on_qrb(const Algebra& alg, const BilinearForm& omega, const Matrix& b,
                             const Rational& lambda, const Matrix& p);

// On the descendent algebra, -P^adj is an averaging operator.
CheckReport descendent_neg_adjoint_avg(const Algebra& alg, const BilinearForm& omega,
                                       const Matrix& b, const Rational& lambda, const Matrix& p);

// From a quadratic Rota-Baxter algebra of nonzero weight, the symmetric
// solution r with r_+ = (1/lambda)(B + lambda id) J_omega. Verifies the
// S-equation and the intertwining of the descendent product.
RTensor build_r_from_qrb(const Algebra& alg, const BilinearForm& omega, const Matrix& b,
                         const Rational& lambda);

// Dual-space product induced by r: xi *_r eta = ad*(r_+ xi) eta - R*(r_- eta) xi,
// returned as structure constants on the dual basis.
Algebra dual_product_r(const Algebra& alg, const RTensor& r);

// From a factorizable solution r, the quadratic Rota-Baxter structure
// B = lambda r_- I^-1, Omega = (I^-1)^T with I = r_+ - r_-.
std::pair<Matrix, BilinearForm> factorizable_to_qrb(const Algebra& alg, const RTensor& r,
                                                    const Rational& lambda);

// The full averaging pre-Lie bialgebra (A, *, D_r, P, -P^adj) built from a
// quadratic Rota-Baxter algebra with a compatible averaging operator.
AvgBialgebra avg_bialgebra_from_qrb(const Algebra& alg, const BilinearForm& omega,
                                    const Matrix& b, const Rational& lambda, const Matrix& p);

// Relative Rota-Baxter operator T : V -> A on an averaging representation:
// T(u)*T(v) = T(rho(Tu)v + phi(Tv)u) and P T = T alpha.
CheckReport check_relative_rb(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                              const Matrix& t);

// Descendent averaging pre-Lie algebra on V: u *_T v = rho(Tu)v + phi(Tv)u
// with operator alpha; also certifies T as a homomorphism to A.
AveragingAlgebra descendent_avg_prelie(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                                       const Matrix& t);

// Matched pair of the base algebra with the descendent algebra induced by a
// relative Rota-Baxter operator.
MatchedPairPreLie matched_pair_from_rrb(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                                        const Matrix& t);

// A relative Rota-Baxter operator for the coregular representation with
// companion S^T yields a solution of the compatibility equations on A, with
// r sharp equal to r_+ = T. Returns that solution.
RTensor rrb_to_cybe_solution(const AveragingAlgebra& avg, const Matrix& s, const Matrix& t);

// T is relative Rota-Baxter for the coregular representation with companion
// P^T if and only if B = T Omega^T is a weight-0 Rota-Baxter operator
// commuting with P. Checks both sides and asserts they agree.
bool rrb_equiv_rb0(const AveragingAlgebra& avg, const BilinearForm& omega, const Matrix& t);

// Three equivalent admissibility statements for (rep, alpha, beta, S):
// (a) the semidirect sum with P+alpha admits S+beta,
// (b) the dual semidirect sum with P+beta^T admits S+alpha^T,
// (c) the module-level conditions (averaging rep, S-admissible, beta-admissible,
//     and the two mixed compatibilities).
// Returns the three booleans; asserts all three agree.
std::array<bool, 3> check_equiva3(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                                  const Matrix& s, const Matrix& beta);

// Lift T : V* -> A ... realized as a symmetric tensor on the semidirect sum
// A + V* (dual representation, operator P + beta^T). Returns the big algebra,
// its operator pair and the lifted r.
struct LiftedSolution {
    AveragingAlgebra big;
    Matrix s_big;
    RTensor r;
};
LiftedSolution lift_T_to_r(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                           const Matrix& s, const Matrix& beta, const Matrix& t);

// T satisfies the lifted compatibility equations iff T is relative
// Rota-Baxter and T beta = S T; checks both sides and asserts they agree.
bool lifted_equations_iff_rrb(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                              const Matrix& s, const Matrix& beta, const Matrix& t);

} // namespace plab
