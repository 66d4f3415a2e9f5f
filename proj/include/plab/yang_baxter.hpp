#pragma once

#include "plab/bialgebra.hpp"

namespace plab {

// An element r of A(x)A, stored by its coefficient matrix:
// r = sum_{j,k} coeff(j,k) e_j (x) e_k.
struct RTensor {
    int dim = 0;
    Matrix coeff;
};

RTensor make_rtensor(int dim, Matrix coeff);

// r = sym + skew with sym symmetric and skew antisymmetric.
std::pair<RTensor, RTensor> split_sym_skew(const RTensor& r);

// Coboundary coproduct D_r(x) = (L_x (x) id + id (x) (L_x - R_x)) r.
Coalgebra delta_r(const Algebra& alg, const RTensor& r, const std::string& label);

// The S-equation tensor [[r,r]] in A(x)A(x)A.
Tensor3 double_bracket_rr(const Algebra& alg, const RTensor& r);

// [[r,r]] = 0.
CheckReport check_S_equation(const Algebra& alg, const RTensor& r);

// (L_x (x) id (x) id + id (x) L_x (x) id + id (x) id (x) ad_x)[[r,r]] = 0 for
// all basis x.
CheckReport check_Q_condition(const Algebra& alg, const RTensor& r);

// The skew part a of r satisfies (L_{x*y} - L_x L_y applied through
// L (x) id + id (x) L) a = 0 for all basis pairs.
CheckReport check_skew_condition(const Algebra& alg, const RTensor& r);

// Quasi-triangular: [[r,r]] = 0 and (L_x (x) id + id (x) ad_x)(skew part) = 0.
CheckReport check_quasi_triangular(const Algebra& alg, const RTensor& r);

// The two linear maps A* -> A induced by r: r_+(xi) = (xi (x) id) r and
// r_-(xi) = (id (x) xi) r, as matrices in the dual/primal bases.
std::pair<Matrix, Matrix> r_plus_minus(const RTensor& r);

// Quasi-triangular with r_+ - r_- invertible.
CheckReport check_factorizable(const Algebra& alg, const RTensor& r);

// The compatibility equations tying r to the pair of operators (P, S):
//   eqns: [[r,r]] = 0, (S (x) id) r = (id (x) P) r, (P (x) id) r = (id (x) S) r.
// check_admissible_cybe additionally requires S to be an admissible operator
// for (A, P) and, when r is symmetric, asserts the two linear conditions
// coincide.
CheckReport check_cybe_equations(const AveragingAlgebra& avg, const Matrix& s, const RTensor& r);
CheckReport check_admissible_cybe(const AveragingAlgebra& avg, const Matrix& s, const RTensor& r);

// The six operator identities equivalent to the coboundary coalgebra
// compatibilities; also verified against the direct coproduct-level checks.
CheckReport check_combined_conditions(const AveragingAlgebra& avg, const Matrix& s,
                                      const RTensor& r);

// Assemble (A, *, D_r, P, S) and certify it; throws PreconditionFailed naming
// the first failed prerequisite.
AvgBialgebra build_coboundary_avg_bialgebra(const AveragingAlgebra& avg, const Matrix& s,
                                            const RTensor& r);

} // namespace plab
