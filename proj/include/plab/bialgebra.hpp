#pragma once

#include <string>
#include <vector>

#include "plab/algebra.hpp"
#include "plab/check.hpp"
#include "plab/matched_pair.hpp"

namespace plab {

enum class CoalgebraKind { Unchecked, PreLieCo, LieCo };

// Coalgebra by coproduct constants: Delta(e_i) = sum_{j,k} coproduct(i,j,k) e_j (x) e_k.
struct Coalgebra {
    std::string label;
    int dim = 0;
    Tensor3 coproduct;
    CoalgebraKind kind = CoalgebraKind::Unchecked;

    // Coefficient matrix of Delta(e_i) in A (x) A: entry (j,k).
    Matrix delta(int i) const;
    Matrix delta_of(const Vec& x) const;
};

Coalgebra make_coalgebra(std::string label, int dim, Tensor3 coproduct);

// Coproduct with the constants of an algebra transposed: d(i,j,k) = c(j,k,i).
// This is the coproduct whose dual algebra is the original one.
Coalgebra dualize_product(const Algebra& alg);

CheckReport check_prelie_coalgebra(const Coalgebra& co);
Coalgebra certify_prelie_coalgebra(Coalgebra co);

// (S(x)S)Delta(x) = (S(x)id)Delta(Sx) = (id(x)S)Delta(Sx).
CheckReport check_avg_coalgebra(const Coalgebra& co, const Matrix& s);

// Dual algebra of an averaging coalgebra: c*(i,j,k) = d(k,i,j), operator S^T.
AveragingAlgebra dualize_coalgebra(const Coalgebra& co, const Matrix& s);

CheckReport check_prelie_bialgebra(const Algebra& alg, const Coalgebra& co);

struct AvgBialgebra {
    AveragingAlgebra alg;
    Coalgebra co;
    Matrix s;
    bool verified = false;
};

CheckReport check_avg_prelie_bialgebra(const AvgBialgebra& bi);
AvgBialgebra make_avg_bialgebra(AveragingAlgebra alg, Coalgebra co, Matrix s);

// Bilinear form with matrix(i,j) = omega(e_i, e_j); flags computed on demand.
struct BilinearForm {
    Matrix matrix;
    bool skew() const { return matrix == -matrix.transpose(); }
    bool nondegenerate() const;
};

// omega skew, nondegenerate, invariant: omega(x*y,z) + omega(y, x*z - z*x) = 0;
// optionally omega(Px,y) = omega(x,Py).
CheckReport check_quadratic(const Algebra& alg, const BilinearForm& omega,
                            const Matrix* p = nullptr);

// Map x -> omega(x, .) into dual coordinates; matrix is Omega^T.
Matrix omega_sharp(const BilinearForm& omega);

// omega_sharp intertwines the regular representation-with-P with its
// coregular counterpart (L* - R*, -R*, P*).
CheckReport verify_rep_isomorphism(const AveragingAlgebra& avg, const BilinearForm& omega);

struct ManinTriple {
    AveragingAlgebra total;
    BilinearForm omega;
    std::vector<int> part_a; // 0-based basis indices
    std::vector<int> part_b;
};

CheckReport check_manin_triple(const ManinTriple& mt);

// Double A |><| A* with standard form omega(x+xi, y+eta) = <xi,y> - <eta,x>.
// Requires s = P^T (the correspondence is stated for (A,*,Delta,P,P*)).
ManinTriple bialgebra_to_manin(const AvgBialgebra& bi);

// Sign convention for reading the product off a Manin triple: the source
// convention negates the restricted product (x*y = -x*_total y); the plain
// convention keeps it.
enum class ExtractionSign { Negated, Plain };

AvgBialgebra manin_to_bialgebra(const ManinTriple& mt,
                                ExtractionSign sign = ExtractionSign::Negated);

// x_(1)*y (x) x_(2) + y_(2) (x) y_(1)*x  =  y_(1)*x (x) y_(2) + x_(2) (x) x_(1)*y.
CheckReport check_balanced(const Algebra& alg, const Coalgebra& co);

struct AvgLieBialgebra {
    Algebra lie;
    Coalgebra delta;
    Matrix p;
    Matrix s;
};

// [x,y] = x*y - y*x and delta = Delta - tau Delta; throws NotBalanced.
AvgLieBialgebra induced_lie_bialgebra(const AvgBialgebra& bi);

CheckReport check_avg_lie_bialgebra(const Algebra& lie, const Coalgebra& delta, const Matrix& p,
                                    const Matrix& s);

} // namespace plab
