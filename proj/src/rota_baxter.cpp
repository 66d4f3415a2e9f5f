#include "plab/rota_baxter.hpp"

#include "plab/errors.hpp"

namespace plab {
namespace {

// Coregular representation of A on A*: rho = L* - R*, phi = -R*.
Representation coregular(const Algebra& alg) {
    std::vector<Matrix> rho, phi;
    for (int i = 0; i < alg.dim; ++i) {
        Matrix li = alg.left_mult(i), ri = alg.right_mult(i);
        rho.push_back(-(li - ri).transpose());
        phi.push_back(ri.transpose()); // -R* = +R^T
    }
    return make_representation(alg, alg.dim, std::move(rho), std::move(phi));
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

} // namespace

CheckReport check_rb(const Algebra& alg, const Matrix& b, const Rational& lambda) {
    if (b.rows() != alg.dim || b.cols() != alg.dim) throw DimensionMismatch("operator shape");
    CheckReport rep;
    rep.name = "rota-baxter(" + alg.label + ")";
    rep.item("B(x)*B(y) = B(B(x)*y + x*B(y) + lambda x*y)");
    const int n = alg.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = Matrix::basis_vector(n, i), ej = Matrix::basis_vector(n, j);
            Vec lhs = alg.mul(b * ei, b * ej);
            Vec inner = alg.mul(b * ei, ej) + alg.mul(ei, b * ej) + lambda * alg.mul(ei, ej);
            Vec rhs = b * inner;
            if (lhs != rhs)
                rep.fail("B(x)*B(y) = B(B(x)*y + x*B(y) + lambda x*y)", {i + 1, j + 1},
                         vec_str(lhs), vec_str(rhs));
        }
    return rep;
}

Algebra descendent_product(const Algebra& alg, const Matrix& b, const Rational& lambda) {
    if (b.rows() != alg.dim || b.cols() != alg.dim) throw DimensionMismatch("operator shape");
    const int n = alg.dim;
    Tensor3 c(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = Matrix::basis_vector(n, i), ej = Matrix::basis_vector(n, j);
            Vec prod = alg.mul(b * ei, ej) + alg.mul(ei, b * ej) + lambda * alg.mul(ei, ej);
            for (int k = 0; k < n; ++k) c(i, j, k) = prod(k, 0);
        }
    Algebra out = make_algebra(alg.label + ".desc", n, std::move(c));
    if (alg.kind == AlgebraKind::PreLie && check_rb(alg, b, lambda).pass())
        out = certify_pre_lie(std::move(out));
    return out;
}

CheckReport check_avg_commutes_rb(const AveragingAlgebra& avg, const Matrix& b,
                                  const Rational& lambda) {
    CheckReport rep;
    rep.name = "averaging-with-rota-baxter(" + avg.base.label + ")";
    rep.merge(check_rb(avg.base, b, lambda), "rb");
    rep.merge(check_averaging(avg.base, avg.op), "avg");
    rep.item("P B = B P");
    if (avg.op * b != b * avg.op) rep.fail("P B = B P", {}, (avg.op * b).str(), (b * avg.op).str());
    if (rep.pass()) {
        // Consequence check: P must average the descendent product too.
        Algebra desc = descendent_product(avg.base, b, lambda);
        if (!check_averaging(desc, avg.op).pass())
            throw Error("internal: P failed to average the descendent product");
    }
    return rep;
}

Matrix adjoint_wrt_form(const Matrix& m, const BilinearForm& omega) {
    auto oi = invert(omega.matrix);
    if (!oi) throw SingularForm("adjoint_wrt_form");
    return *oi * m.transpose() * omega.matrix;
}

CheckReport check_avg_on_qrb(const Algebra& alg, const BilinearForm& omega, const Matrix& b,
                             const Rational& lambda, const Matrix& p) {
    CheckReport rep;
    rep.name = "averaging-on-quadratic-rb(" + alg.label + ")";
    rep.merge(check_quadratic(alg, omega), "form");
    rep.merge(check_rb(alg, b, lambda), "rb");
    rep.item("B^adj = -B - lambda id");
    rep.merge(check_averaging(alg, p), "avg");
    rep.item("B P^adj = -P B");
    if (!rep.item("form.nondegenerate").pass) return rep;
    Matrix badj = adjoint_wrt_form(b, omega);
    Matrix expected = -b - lambda * Matrix::identity(alg.dim);
    if (badj != expected) rep.fail("B^adj = -B - lambda id", {}, badj.str(), expected.str());
    Matrix padj = adjoint_wrt_form(p, omega);
    if (b * padj != -(p * b)) rep.fail("B P^adj = -P B", {}, (b * padj).str(), (-(p * b)).str());
    if (!lambda.is_zero()) {
        rep.item("P^adj = -P");
        if (padj != -p) rep.fail("P^adj = -P", {}, padj.str(), (-p).str());
    }
    return rep;
}

CheckReport descendent_neg_adjoint_avg(const Algebra& alg, const BilinearForm& omega,
                                       const Matrix& b, const Rational& lambda, const Matrix& p) {
    CheckReport rep;
    rep.name = "descendent-neg-adjoint-averaging(" + alg.label + ")";
    rep.merge(check_avg_on_qrb(alg, omega, b, lambda, p), "pre");
    if (!rep.pass()) return rep;
    Algebra desc = descendent_product(alg, b, lambda);
    rep.merge(check_averaging(desc, -adjoint_wrt_form(p, omega)), "desc");
    return rep;
}

RTensor build_r_from_qrb(const Algebra& alg, const BilinearForm& omega, const Matrix& b,
                         const Rational& lambda) {
    if (lambda.is_zero()) throw ZeroWeight("build_r_from_qrb");
    auto oti = invert(omega.matrix.transpose());
    if (!oti) throw SingularForm("build_r_from_qrb");
    {
        CheckReport pre = check_quadratic(alg, omega);
        pre.merge(check_rb(alg, b, lambda), "rb");
        Matrix badj = adjoint_wrt_form(b, omega);
        if (!pre.pass() || badj != -b - lambda * Matrix::identity(alg.dim))
            throw PreconditionFailed("build_r_from_qrb needs a quadratic Rota-Baxter algebra");
    }
    const int n = alg.dim;
    Matrix j = *oti; // the form isomorphism A* -> A
    Matrix r_plus = lambda.inverse() * (b + lambda * Matrix::identity(n)) * j;
    RTensor r = make_rtensor(n, r_plus.transpose());

    if (!check_S_equation(alg, r).pass())
        throw Error("internal: r from a quadratic Rota-Baxter algebra must solve the S-equation");
    // The form isomorphism must intertwine the induced dual product with
    // (1/lambda) times the descendent product.
    Algebra dual = dual_product_r(alg, r);
    Algebra desc = descendent_product(alg, b, lambda);
    Matrix ji = omega.matrix.transpose();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Vec ei = Matrix::basis_vector(n, i), ek = Matrix::basis_vector(n, k);
            Vec lhs = dual.mul(ji * ei, ji * ek);
            Vec rhs = lambda.inverse() * (ji * desc.mul(ei, ek));
            if (lhs != rhs)
                throw Error("internal: dual product does not match the descendent product");
        }
    return r;
}

Algebra dual_product_r(const Algebra& alg, const RTensor& r) {
    if (alg.dim != r.dim) throw DimensionMismatch("dual_product_r carrier");
    const int n = alg.dim;
    auto [rp, rm] = r_plus_minus(r);
    Tensor3 c(n, n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            Vec xp = rp * Matrix::basis_vector(n, p); // r_+(eps^p) in A
            Vec xq = rm * Matrix::basis_vector(n, q); // r_-(eps^q) in A
            Matrix ad_star = -(alg.left_of(xp) - alg.right_of(xp)).transpose();
            Matrix r_star = -alg.right_of(xq).transpose();
            Vec prod = ad_star * Matrix::basis_vector(n, q) - r_star * Matrix::basis_vector(n, p);
            for (int k = 0; k < n; ++k) c(p, q, k) = prod(k, 0);
        }
    return make_algebra(alg.label + ".dual_r", n, std::move(c));
}

std::pair<Matrix, BilinearForm> factorizable_to_qrb(const Algebra& alg, const RTensor& r,
                                                    const Rational& lambda) {
    if (lambda.is_zero()) throw ZeroWeight("factorizable_to_qrb");
    if (!check_factorizable(alg, r).pass())
        throw PreconditionFailed("factorizable_to_qrb needs a factorizable solution");
    auto [rp, rm] = r_plus_minus(r);
    auto ii = invert(rp - rm);
    Matrix b = lambda * rm * *ii;
    BilinearForm omega{ii->transpose()};
    CheckReport post = check_quadratic(alg, omega);
    post.merge(check_rb(alg, b, lambda), "rb");
    if (!post.pass() || adjoint_wrt_form(b, omega) != -b - lambda * Matrix::identity(alg.dim))
        throw Error("internal: factorizable solution gave no quadratic Rota-Baxter structure");
    return {std::move(b), std::move(omega)};
}

AvgBialgebra avg_bialgebra_from_qrb(const Algebra& alg, const BilinearForm& omega,
                                    const Matrix& b, const Rational& lambda, const Matrix& p) {
    CheckReport pre = check_avg_on_qrb(alg, omega, b, lambda, p);
    for (const auto& it : pre.items)
        if (!it.pass) throw PreconditionFailed("averaging-on-quadratic-rb: " + it.law);
    RTensor r = build_r_from_qrb(alg, omega, b, lambda);
    // check_avg_on_qrb pinned P^adj = -P (lambda is nonzero here), so -P is
    // the adjoint operator acting on the coefficient side.
    Matrix s = -p;
    Algebra base = alg;
    if (base.kind != AlgebraKind::PreLie) base = certify_pre_lie(std::move(base));
    return build_coboundary_avg_bialgebra(make_averaging(std::move(base), p), s, r);
}

CheckReport check_relative_rb(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                              const Matrix& t) {
    const int n = avg.base.dim, m = rep.rep.module_dim;
    if (t.rows() != n || t.cols() != m) throw DimensionMismatch("relative operator shape");
    CheckReport out;
    out.name = "relative-rota-baxter(" + avg.base.label + ")";
    out.item("T(u)*T(v) = T(rho(Tu)v + phi(Tv)u)");
    out.item("P T = T alpha");
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            Vec fu = Matrix::basis_vector(m, u), fv = Matrix::basis_vector(m, v);
            Vec lhs = avg.base.mul(t * fu, t * fv);
            Vec rhs = t * (rep.rep.rho_of(t * fu) * fv + rep.rep.phi_of(t * fv) * fu);
            if (lhs != rhs)
                out.fail("T(u)*T(v) = T(rho(Tu)v + phi(Tv)u)", {u + 1, v + 1}, vec_str(lhs),
                         vec_str(rhs));
        }
    if (avg.op * t != t * rep.alpha)
        out.fail("P T = T alpha", {}, (avg.op * t).str(), (t * rep.alpha).str());
    return out;
}

AveragingAlgebra descendent_avg_prelie(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                                       const Matrix& t) {
    if (!check_relative_rb(avg, rep, t).pass())
        throw PreconditionFailed("descendent_avg_prelie needs a relative Rota-Baxter operator");
    const int m = rep.rep.module_dim;
    Tensor3 c(m, m, m);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            Vec fu = Matrix::basis_vector(m, u), fv = Matrix::basis_vector(m, v);
            Vec prod = rep.rep.rho_of(t * fu) * fv + rep.rep.phi_of(t * fv) * fu;
            for (int k = 0; k < m; ++k) c(u, v, k) = prod(k, 0);
        }
    AveragingAlgebra desc = make_averaging(
        certify_pre_lie(make_algebra(avg.base.label + ".desc_T", m, std::move(c))), rep.alpha);
    if (!check_homomorphism(desc, avg, t).pass())
        throw Error("internal: T is not a homomorphism from its descendent algebra");
    return desc;
}

MatchedPairPreLie matched_pair_from_rrb(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                                        const Matrix& t) {
    AveragingAlgebra desc = descendent_avg_prelie(avg, rep, t);
    const int n = avg.base.dim, m = rep.rep.module_dim;
    std::vector<Matrix> rho_a, phi_a, rho_b, phi_b;
    for (int i = 0; i < n; ++i) {
        rho_a.push_back(rep.rep.rho[i]);
        phi_a.push_back(rep.rep.phi[i]);
    }
    for (int u = 0; u < m; ++u) {
        Vec fu = Matrix::basis_vector(m, u);
        Matrix ru(n, n), pu(n, n);
        for (int j = 0; j < n; ++j) {
            Vec ej = Matrix::basis_vector(n, j);
            // rho'(u)x = -T(phi(x)u) + T(u)*x ; phi'(u)x = -T(rho(x)u) + x*T(u)
            Vec rcol = -(t * (rep.rep.phi[j] * fu)) + avg.base.mul(t * fu, ej);
            Vec pcol = -(t * (rep.rep.rho[j] * fu)) + avg.base.mul(ej, t * fu);
            for (int k = 0; k < n; ++k) {
                ru(k, j) = rcol(k, 0);
                pu(k, j) = pcol(k, 0);
            }
        }
        rho_b.push_back(std::move(ru));
        phi_b.push_back(std::move(pu));
    }
    return certify_matched_pair(make_matched_pair_data(avg, std::move(desc), std::move(rho_a),
                                                       std::move(phi_a), std::move(rho_b),
                                                       std::move(phi_b)));
}

RTensor rrb_to_cybe_solution(const AveragingAlgebra& avg, const Matrix& s, const Matrix& t) {
    const int n = avg.base.dim;
    if (t.rows() != n || t.cols() != n) throw DimensionMismatch("operator shape");
    if (t != t.transpose())
        throw PreconditionFailed("rrb_to_cybe_solution needs a symmetric operator");
    AvgRepresentation co;
    co.rep = coregular(avg.base);
    co.alpha = s.transpose();
    if (!check_relative_rb(avg, co, t).pass())
        throw PreconditionFailed(
            "rrb_to_cybe_solution needs a relative Rota-Baxter operator on the coregular module");
    RTensor r = make_rtensor(n, t.transpose());
    if (!check_cybe_equations(avg, s, r).pass())
        throw Error("internal: relative Rota-Baxter operator gave no solution");
    return r;
}

bool rrb_equiv_rb0(const AveragingAlgebra& avg, const BilinearForm& omega, const Matrix& t) {
    if (!check_quadratic(avg.base, omega, &avg.op).pass())
        throw PreconditionFailed("rrb_equiv_rb0 needs a quadratic algebra compatible with P");
    AvgRepresentation co;
    co.rep = coregular(avg.base);
    co.alpha = avg.op.transpose();
    bool side_rel = check_relative_rb(avg, co, t).pass();

    Matrix b = t * omega.matrix.transpose();
    bool side_rb = check_rb(avg.base, b, Rational(0)).pass() && (avg.op * b == b * avg.op);
    if (side_rel != side_rb)
        throw Error("internal: relative operator and weight-0 Rota-Baxter sides disagree");
    return side_rel;
}

std::array<bool, 3> check_equiva3(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                                  const Matrix& s, const Matrix& beta) {
    if (!check_pre_lie(avg.base).pass() || !check_averaging(avg.base, avg.op).pass() ||
        !check_prelie_representation(avg.base, rep.rep).pass())
        throw PreconditionFailed("check_equiva3 needs an averaging pre-Lie algebra and a module");

    auto [sd, sd_op] = semidirect_product_unchecked(avg.base, rep.rep, avg.op, rep.alpha);
    AveragingAlgebra sd_avg{sd, sd_op};
    bool a_ok = check_averaging(sd, sd_op).pass() &&
                check_S_admissible(sd_avg, block_diag(s, beta)).pass();

    DualRepresentation dual = dual_representation(rep.rep, beta);
    auto [dsd, dsd_op] = semidirect_product_unchecked(avg.base, dual.rep, avg.op, dual.companion);
    AveragingAlgebra dsd_avg{dsd, dsd_op};
    bool b_ok = check_averaging(dsd, dsd_op).pass() &&
                check_S_admissible(dsd_avg, block_diag(s, rep.alpha.transpose())).pass();

    bool c_ok = check_avg_representation(avg, rep.rep, rep.alpha).pass() &&
                check_S_admissible(avg, s).pass() &&
                check_beta_admissible(avg, rep.rep, beta).pass();
    if (c_ok) {
        const int n = avg.base.dim;
        for (int i = 0; i < n && c_ok; ++i) {
            Vec sei = s * Matrix::basis_vector(n, i);
            Matrix rs = rep.rep.rho_of(sei), fs = rep.rep.phi_of(sei);
            c_ok = (beta * rep.rep.rho[i] * rep.alpha == rs * rep.alpha) &&
                   (rs * rep.alpha == beta * rs) &&
                   (beta * rep.rep.phi[i] * rep.alpha == fs * rep.alpha) &&
                   (fs * rep.alpha == beta * fs);
        }
    }
    if (a_ok != b_ok || b_ok != c_ok)
        throw Error("internal: the three admissibility statements disagree");
    return {a_ok, b_ok, c_ok};
}

LiftedSolution lift_T_to_r(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                           const Matrix& s, const Matrix& beta, const Matrix& t) {
    const int n = avg.base.dim, m = rep.rep.module_dim;
    if (t.rows() != n || t.cols() != m) throw DimensionMismatch("operator shape");
    DualRepresentation dual = dual_representation(rep.rep, beta);
    auto [big, big_op] = semidirect_product_unchecked(avg.base, dual.rep, avg.op, dual.companion);
    Matrix coeff(n + m, n + m);
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < m; ++i) {
            coeff(a, n + i) = t(a, i);
            coeff(n + i, a) = t(a, i);
        }
    LiftedSolution out;
    out.big = AveragingAlgebra{std::move(big), std::move(big_op)};
    out.s_big = block_diag(s, rep.alpha.transpose());
    out.r = make_rtensor(n + m, std::move(coeff));
    return out;
}

bool lifted_equations_iff_rrb(const AveragingAlgebra& avg, const AvgRepresentation& rep,
                              const Matrix& s, const Matrix& beta, const Matrix& t) {
    auto adm = check_equiva3(avg, rep, s, beta);
    if (!adm[2])
        throw PreconditionFailed("lifted_equations_iff_rrb needs an admissible quadruple");
    LiftedSolution lifted = lift_T_to_r(avg, rep, s, beta, t);
    bool side_eqs = check_cybe_equations(lifted.big, lifted.s_big, lifted.r).pass();
    bool side_rel = check_relative_rb(avg, rep, t).pass() && (t * beta == s * t);
    if (side_eqs != side_rel)
        throw Error("internal: lifted equations and relative operator sides disagree");
    return side_eqs;
}

} // namespace plab
