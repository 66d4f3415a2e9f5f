#pragma once

#include <string>
#include <vector>

#include "plab/algebra.hpp"
#include "plab/check.hpp"

namespace plab {

// Representation (V, rho, phi) of an algebra: rho[i] and phi[i] are the
// module_dim x module_dim matrices of rho(e_i) and phi(e_i).
struct Representation {
    std::string algebra_label;
    int alg_dim = 0;
    int module_dim = 0;
    std::vector<Matrix> rho;
    std::vector<Matrix> phi;
    bool verified = false; // set by the certifying constructor only

    Matrix rho_of(const Vec& x) const;  // sum_i x_i rho[i]
    Matrix phi_of(const Vec& x) const;
};

Representation make_representation(const Algebra& alg, int module_dim,
                                   std::vector<Matrix> rho, std::vector<Matrix> phi);

struct AvgRepresentation {
    Representation rep;
    Matrix alpha;
    std::string avg_label;
    bool verified = false;
};

CheckReport check_prelie_representation(const Algebra& alg, const Representation& rep);

// Certifying constructor; KindError on failure.
Representation certify_representation(const Algebra& alg, Representation rep);

CheckReport check_avg_representation(const AveragingAlgebra& avg, const Representation& rep,
                                     const Matrix& alpha);

AvgRepresentation make_avg_representation(const AveragingAlgebra& avg, Representation rep,
                                          Matrix alpha);

// (V = A, rho = L, phi = R, alpha = P).
AvgRepresentation regular_representation(const AveragingAlgebra& avg);

// Dual module (V*, rho* - phi*, -phi*) with companion beta^T, where
// M* = -M^T in dual-basis coordinates.
struct DualRepresentation {
    Representation rep;
    Matrix companion;
};
DualRepresentation dual_representation(const Representation& rep, const Matrix& beta);

// beta-admissibility of ((A,*),P) on (V, rho, phi):
//   beta(rho(Px)v) = rho(Px) beta(v) = rho(x) beta(... ) per the two laws.
CheckReport check_beta_admissible(const AveragingAlgebra& avg, const Representation& rep,
                                  const Matrix& beta);

// S-admissibility on the algebra itself:
//   P(x)*S(y) = S(P(x)*y) = S(x*S(y)) and S(x)*P(y) = S(x*P(y)) = S(S(x)*y).
CheckReport check_S_admissible(const AveragingAlgebra& avg, const Matrix& s);

// phi(e_i)phi(e_j) + phi(e_j)phi(e_i) = 0; equivalent to (V*, rho*, phi*)
// being a representation again.
CheckReport check_phi_anticommute(const Representation& rep);

// Semidirect product A (+) V:
//   (x+u)*(y+v) = x*y + rho(x)v + phi(y)u, operator P (+) alpha.
AveragingAlgebra semidirect_product(const AveragingAlgebra& avg,
                                    const AvgRepresentation& avgrep);

// Same construction without any verification; used to test that the
// semidirect operator is averaging exactly when the representation data is.
std::pair<Algebra, Matrix> semidirect_product_unchecked(const Algebra& alg,
                                                        const Representation& rep,
                                                        const Matrix& p, const Matrix& alpha);

// Leibniz representation data (rhoL, rhoR) for a Leibniz algebra.
struct LeibnizRepresentation {
    int module_dim = 0;
    std::vector<Matrix> rho_l;
    std::vector<Matrix> rho_r;

    Matrix rho_l_of(const Vec& x) const;
    Matrix rho_r_of(const Vec& x) const;
};

// rhoL(e_i) = rho(P e_i) - phi(P e_i); rhoR(e_i) = (-rho(e_i) + phi(e_i)) alpha.
LeibnizRepresentation induced_leibniz_representation(const AveragingAlgebra& avg,
                                                     const AvgRepresentation& avgrep);

CheckReport check_leibniz_representation(const Algebra& leib, const LeibnizRepresentation& rep);

} // namespace plab
