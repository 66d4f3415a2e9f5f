#include "plab/representation.hpp"

#include "plab/errors.hpp"

namespace plab {
namespace {

Matrix weighted_sum(const std::vector<Matrix>& mats, const Vec& x, int dim) {
    Matrix out(dim, dim);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (x(int(i), 0).is_zero()) continue;
        out = out + x(int(i), 0) * mats[i];
    }
    return out;
}

void require_bound(const Algebra& alg, const Representation& rep, const char* what) {
    if (rep.algebra_label != alg.label || rep.alg_dim != alg.dim)
        throw KindError(std::string(what) + ": representation bound to " + rep.algebra_label +
                        ", not " + alg.label);
}

void require_verified(const Representation& rep, const char* what) {
    if (!rep.verified)
        throw KindError(std::string(what) + ": representation of " + rep.algebra_label +
                        " is unverified");
}

} // namespace

Matrix Representation::rho_of(const Vec& x) const { return weighted_sum(rho, x, module_dim); }
Matrix Representation::phi_of(const Vec& x) const { return weighted_sum(phi, x, module_dim); }
Matrix LeibnizRepresentation::rho_l_of(const Vec& x) const { return weighted_sum(rho_l, x, module_dim); }
Matrix LeibnizRepresentation::rho_r_of(const Vec& x) const { return weighted_sum(rho_r, x, module_dim); }

Representation make_representation(const Algebra& alg, int module_dim, std::vector<Matrix> rho,
                                   std::vector<Matrix> phi) {
    if (int(rho.size()) != alg.dim || int(phi.size()) != alg.dim)
        throw DimensionMismatch("representation needs one rho/phi matrix per basis element");
    for (const auto& m : rho)
        if (m.rows() != module_dim || m.cols() != module_dim)
            throw DimensionMismatch("rho matrix shape");
    for (const auto& m : phi)
        if (m.rows() != module_dim || m.cols() != module_dim)
            throw DimensionMismatch("phi matrix shape");
    return Representation{alg.label, alg.dim, module_dim, std::move(rho), std::move(phi), false};
}

CheckReport check_prelie_representation(const Algebra& alg, const Representation& rep) {
    require_bound(alg, rep, "check_prelie_representation");
    CheckReport out;
    out.name = "representation(" + alg.label + ")";
    out.item("rho([x,y]) = [rho(x),rho(y)]");
    out.item("phi(x*y) = rho(x)phi(y) - phi(y)rho(x) + phi(y)phi(x)");
    const int n = alg.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = Matrix::basis_vector(n, i), ej = Matrix::basis_vector(n, j);
            Vec comm = alg.mul(ei, ej) - alg.mul(ej, ei);
            Matrix lhs1 = rep.rho_of(comm);
            Matrix rhs1 = rep.rho[i] * rep.rho[j] - rep.rho[j] * rep.rho[i];
            if (lhs1 != rhs1)
                out.fail("rho([x,y]) = [rho(x),rho(y)]", {i + 1, j + 1}, lhs1.str(), rhs1.str());
            Matrix lhs2 = rep.phi_of(alg.mul(ei, ej));
            Matrix rhs2 = rep.rho[i] * rep.phi[j] - rep.phi[j] * rep.rho[i] +
                          rep.phi[j] * rep.phi[i];
            if (lhs2 != rhs2)
                out.fail("phi(x*y) = rho(x)phi(y) - phi(y)rho(x) + phi(y)phi(x)", {i + 1, j + 1},
                         lhs2.str(), rhs2.str());
        }
    return out;
}

Representation certify_representation(const Algebra& alg, Representation rep) {
    if (!check_prelie_representation(alg, rep).pass())
        throw KindError("not a representation of " + alg.label);
    rep.verified = true;
    return rep;
}

CheckReport check_avg_representation(const AveragingAlgebra& avg, const Representation& rep,
                                     const Matrix& alpha) {
    // no verified-representation gate: the averaging-compatibility laws are
    // meaningful (and equivalent to the semidirect operator being averaging)
    // for raw (rho, phi, alpha) data
    require_bound(avg.base, rep, "check_avg_representation");
    if (alpha.rows() != rep.module_dim || alpha.cols() != rep.module_dim)
        throw DimensionMismatch("alpha shape");
    CheckReport out;
    out.name = "avg-representation(" + avg.base.label + ")";
    out.item("rho(Px) alpha = alpha rho(Px) = alpha rho(x) alpha");
    out.item("phi(Px) alpha = alpha phi(Px) = alpha phi(x) alpha");
    const int n = avg.base.dim;
    for (int i = 0; i < n; ++i) {
        Vec pe = avg.op * Matrix::basis_vector(n, i);
        Matrix r1 = rep.rho_of(pe) * alpha;
        Matrix r2 = alpha * rep.rho_of(pe);
        Matrix r3 = alpha * rep.rho[i] * alpha;
        if (r1 != r2 || r2 != r3)
            out.fail("rho(Px) alpha = alpha rho(Px) = alpha rho(x) alpha", {i + 1},
                     r1.str(), r1 != r2 ? r2.str() : r3.str());
        Matrix f1 = rep.phi_of(pe) * alpha;
        Matrix f2 = alpha * rep.phi_of(pe);
        Matrix f3 = alpha * rep.phi[i] * alpha;
        if (f1 != f2 || f2 != f3)
            out.fail("phi(Px) alpha = alpha phi(Px) = alpha phi(x) alpha", {i + 1},
                     f1.str(), f1 != f2 ? f2.str() : f3.str());
    }
    return out;
}

AvgRepresentation make_avg_representation(const AveragingAlgebra& avg, Representation rep,
                                          Matrix alpha) {
    if (!check_avg_representation(avg, rep, alpha).pass())
        throw KindError("not an averaging representation of " + avg.base.label);
    return AvgRepresentation{std::move(rep), std::move(alpha), avg.base.label, true};
}

AvgRepresentation regular_representation(const AveragingAlgebra& avg) {
    const Algebra& a = avg.base;
    std::vector<Matrix> rho, phi;
    for (int i = 0; i < a.dim; ++i) {
        rho.push_back(a.left_mult(i));
        phi.push_back(a.right_mult(i));
    }
    Representation rep = certify_representation(
        a, make_representation(a, a.dim, std::move(rho), std::move(phi)));
    return make_avg_representation(avg, std::move(rep), avg.op);
}

DualRepresentation dual_representation(const Representation& rep, const Matrix& beta) {
    if (beta.rows() != rep.module_dim || beta.cols() != rep.module_dim)
        throw DimensionMismatch("beta shape");
    std::vector<Matrix> rho, phi;
    for (int i = 0; i < rep.alg_dim; ++i) {
        Matrix rs = -rep.rho[i].transpose(); // rho* in dual-basis coordinates
        Matrix fs = -rep.phi[i].transpose();
        rho.push_back(rs - fs);
        phi.push_back(-fs);
    }
    Representation dual{rep.algebra_label, rep.alg_dim, rep.module_dim, std::move(rho),
                        std::move(phi), false};
    return DualRepresentation{std::move(dual), beta.transpose()};
}

CheckReport check_beta_admissible(const AveragingAlgebra& avg, const Representation& rep,
                                  const Matrix& beta) {
    require_bound(avg.base, rep, "check_beta_admissible");
    require_verified(rep, "check_beta_admissible");
    if (beta.rows() != rep.module_dim || beta.cols() != rep.module_dim)
        throw DimensionMismatch("beta shape");
    CheckReport out;
    out.name = "beta-admissible(" + avg.base.label + ")";
    out.item("rho(Px) beta = beta rho(Px) = beta rho(x) beta");
    out.item("phi(Px) beta = beta phi(Px) = beta phi(x) beta");
    const int n = avg.base.dim;
    for (int i = 0; i < n; ++i) {
        Vec pe = avg.op * Matrix::basis_vector(n, i);
        Matrix r1 = rep.rho_of(pe) * beta;
        Matrix r2 = beta * rep.rho_of(pe);
        Matrix r3 = beta * rep.rho[i] * beta;
        if (r1 != r2 || r2 != r3)
            out.fail("rho(Px) beta = beta rho(Px) = beta rho(x) beta", {i + 1}, r1.str(),
                     r1 != r2 ? r2.str() : r3.str());
        Matrix f1 = rep.phi_of(pe) * beta;
        Matrix f2 = beta * rep.phi_of(pe);
        Matrix f3 = beta * rep.phi[i] * beta;
        if (f1 != f2 || f2 != f3)
            out.fail("phi(Px) beta = beta phi(Px) = beta phi(x) beta", {i + 1}, f1.str(),
                     f1 != f2 ? f2.str() : f3.str());
    }
    return out;
}

CheckReport check_S_admissible(const AveragingAlgebra& avg, const Matrix& s) {
    const Algebra& a = avg.base;
    if (s.rows() != a.dim || s.cols() != a.dim) throw DimensionMismatch("S shape");
    CheckReport out;
    out.name = "S-admissible(" + a.label + ")";
    out.item("P(x)*S(y) = S(P(x)*y) = S(x*S(y))");
    out.item("S(x)*P(y) = S(x*P(y)) = S(S(x)*y)");
    const int n = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = Matrix::basis_vector(n, i), ej = Matrix::basis_vector(n, j);
            Vec pi = avg.op * ei, pj = avg.op * ej, si = s * ei, sj = s * ej;
            Vec a1 = a.mul(pi, sj), a2 = s * a.mul(pi, ej), a3 = s * a.mul(ei, sj);
            if (a1 != a2 || a2 != a3)
                out.fail("P(x)*S(y) = S(P(x)*y) = S(x*S(y))", {i + 1, j + 1}, vec_str(a1),
                         a1 != a2 ? vec_str(a2) : vec_str(a3));
            Vec b1 = a.mul(si, pj), b2 = s * a.mul(ei, pj), b3 = s * a.mul(si, ej);
            if (b1 != b2 || b2 != b3)
                out.fail("S(x)*P(y) = S(x*P(y)) = S(S(x)*y)", {i + 1, j + 1}, vec_str(b1),
                         b1 != b2 ? vec_str(b2) : vec_str(b3));
        }
    return out;
}

CheckReport check_phi_anticommute(const Representation& rep) {
    require_verified(rep, "check_phi_anticommute");
    CheckReport out;
    out.name = "phi-anticommute(" + rep.algebra_label + ")";
    out.item("phi(x)phi(y) + phi(y)phi(x) = 0");
    for (int i = 0; i < rep.alg_dim; ++i)
        for (int j = 0; j < rep.alg_dim; ++j) {
            Matrix sum = rep.phi[i] * rep.phi[j] + rep.phi[j] * rep.phi[i];
            if (!sum.is_zero())
                out.fail("phi(x)phi(y) + phi(y)phi(x) = 0", {i + 1, j + 1}, sum.str(), "0");
        }
    return out;
}

std::pair<Algebra, Matrix> semidirect_product_unchecked(const Algebra& alg,
                                                        const Representation& rep,
                                                        const Matrix& p, const Matrix& alpha) {
    const int n = alg.dim, m = rep.module_dim, d = n + m;
    Tensor3 c(d, d, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) c(i, j, k) = alg.product(i, j, k);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < m; ++b)
            for (int k = 0; k < m; ++k) {
                c(i, n + b, n + k) = rep.rho[i](k, b);  // e_i * f_b = rho(e_i) f_b
                c(n + b, i, n + k) = rep.phi[i](k, b);  // f_b * e_i = phi(e_i) f_b
            }
    Algebra sum = make_algebra(alg.label + "+V", d, std::move(c));
    Matrix op(d, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) op(i, j) = p(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) op(n + i, n + j) = alpha(i, j);
    return {std::move(sum), std::move(op)};
}

AveragingAlgebra semidirect_product(const AveragingAlgebra& avg, const AvgRepresentation& avgrep) {
    if (!avgrep.verified || avgrep.avg_label != avg.base.label)
        throw KindError("semidirect_product needs a verified representation of " +
                        avg.base.label);
    auto [alg, op] = semidirect_product_unchecked(avg.base, avgrep.rep, avg.op, avgrep.alpha);
    return make_averaging(certify_pre_lie(std::move(alg)), std::move(op));
}

LeibnizRepresentation induced_leibniz_representation(const AveragingAlgebra& avg,
                                                     const AvgRepresentation& avgrep) {
    if (!avgrep.verified || avgrep.avg_label != avg.base.label)
        throw KindError("induced_leibniz_representation needs a verified representation of " +
                        avg.base.label);
    const int n = avg.base.dim;
    LeibnizRepresentation out;
    out.module_dim = avgrep.rep.module_dim;
    for (int i = 0; i < n; ++i) {
        Vec pe = avg.op * Matrix::basis_vector(n, i);
        out.rho_l.push_back(avgrep.rep.rho_of(pe) - avgrep.rep.phi_of(pe));
        out.rho_r.push_back((avgrep.rep.phi[i] - avgrep.rep.rho[i]) * avgrep.alpha);
    }
    return out;
}

CheckReport check_leibniz_representation(const Algebra& leib, const LeibnizRepresentation& rep) {
    if (leib.kind != AlgebraKind::Leibniz)
        throw KindError("check_leibniz_representation needs a certified Leibniz algebra");
    if (int(rep.rho_l.size()) != leib.dim || int(rep.rho_r.size()) != leib.dim)
        throw DimensionMismatch("leibniz representation arity");
    CheckReport out;
    out.name = "leibniz-representation(" + leib.label + ")";
    out.item("rhoL([x,y]) = rhoL(x)rhoL(y) - rhoL(y)rhoL(x)");
    out.item("rhoR([x,y]) = rhoL(x)rhoR(y) - rhoR(y)rhoL(x)");
    out.item("rhoR(y)rhoL(x) = -rhoR(y)rhoR(x)");
    const int n = leib.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec br = leib.mul(Matrix::basis_vector(n, i), Matrix::basis_vector(n, j));
            Matrix l1 = rep.rho_l_of(br);
            Matrix r1 = rep.rho_l[i] * rep.rho_l[j] - rep.rho_l[j] * rep.rho_l[i];
            if (l1 != r1)
                out.fail("rhoL([x,y]) = rhoL(x)rhoL(y) - rhoL(y)rhoL(x)", {i + 1, j + 1},
                         l1.str(), r1.str());
            Matrix l2 = rep.rho_r_of(br);
            Matrix r2 = rep.rho_l[i] * rep.rho_r[j] - rep.rho_r[j] * rep.rho_l[i];
            if (l2 != r2)
                out.fail("rhoR([x,y]) = rhoL(x)rhoR(y) - rhoR(y)rhoL(x)", {i + 1, j + 1},
                         l2.str(), r2.str());
            Matrix l3 = rep.rho_r[j] * rep.rho_l[i];
            Matrix r3 = -(rep.rho_r[j] * rep.rho_r[i]);
            if (l3 != r3)
                out.fail("rhoR(y)rhoL(x) = -rhoR(y)rhoR(x)", {i + 1, j + 1}, l3.str(), r3.str());
        }
    return out;
}

} // namespace plab
