#pragma once

#include <vector>

#include "plab/algebra.hpp"
#include "plab/check.hpp"
#include "plab/representation.hpp"

namespace plab {

// Matched pair of averaging pre-Lie algebras: cross actions
//   rho_a, phi_a : A -> End(b)   (one b.dim x b.dim matrix per A basis vector)
//   rho_b, phi_b : b -> End(A)
struct MatchedPairPreLie {
    AveragingAlgebra a;
    AveragingAlgebra b;
    std::vector<Matrix> rho_a, phi_a;
    std::vector<Matrix> rho_b, phi_b;
    bool verified = false;
};

MatchedPairPreLie make_matched_pair_data(AveragingAlgebra a, AveragingAlgebra b,
                                         std::vector<Matrix> rho_a, std::vector<Matrix> phi_a,
                                         std::vector<Matrix> rho_b, std::vector<Matrix> phi_b);

// Verifies: both cross actions are averaging representations, plus the four
// mixed compatibility identities.
CheckReport check_matched_pair_prelie(const MatchedPairPreLie& mp);

MatchedPairPreLie certify_matched_pair(MatchedPairPreLie mp);

// Averaging pre-Lie algebra on A (+) b:
//   (x+a)*(y+b) = x*y + rho_b(a)y + phi_b(b)x + a*b + rho_a(x)b + phi_a(y)a
// with operator P_A (+) P_b.
AveragingAlgebra build_double(const MatchedPairPreLie& mp);

// Same sum-space structure without certification (for iff-direction tests).
std::pair<Algebra, Matrix> build_double_unchecked(const MatchedPairPreLie& mp);

// Matched pair of Leibniz algebras.
struct MatchedPairLeibniz {
    Algebra g1; // kind = Leibniz
    Algebra g2;
    LeibnizRepresentation rho; // action of g1 on g2
    LeibnizRepresentation mu;  // action of g2 on g1
    bool verified = false;
};

// Verifies both cross Leibniz representations and the six mixed identities.
CheckReport check_matched_pair_leibniz(const MatchedPairLeibniz& mp);

MatchedPairLeibniz certify_matched_pair_leibniz(MatchedPairLeibniz mp);

// Leibniz bracket on G1 (+) G2:
//   [x+s, y+t] = [x,y] + muL(s)y + muR(t)x + [s,t] + rhoL(x)t + rhoR(y)s.
Algebra build_leibniz_double(const MatchedPairLeibniz& mp);

// The Leibniz matched pair induced by an averaging pre-Lie matched pair:
//   rhoL(x) = rho_a(P_A x) - phi_a(P_A x),  rhoR(x) = (phi_a(x) - rho_a(x)) P_b,
// and the mu family symmetrically.
MatchedPairLeibniz induced_leibniz_matched_pair(const MatchedPairPreLie& mp);

} // namespace plab
