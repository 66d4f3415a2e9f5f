#include "plab/matched_pair.hpp"

#include "plab/errors.hpp"

namespace plab {
namespace {

Matrix weighted(const std::vector<Matrix>& mats, const Vec& x) {
    Matrix out(mats[0].rows(), mats[0].cols());
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (x(int(i), 0).is_zero()) continue;
        out = out + x(int(i), 0) * mats[i];
    }
    return out;
}

} // namespace

MatchedPairPreLie make_matched_pair_data(AveragingAlgebra a, AveragingAlgebra b,
                                         std::vector<Matrix> rho_a, std::vector<Matrix> phi_a,
                                         std::vector<Matrix> rho_b, std::vector<Matrix> phi_b) {
    if (int(rho_a.size()) != a.base.dim || int(phi_a.size()) != a.base.dim ||
        int(rho_b.size()) != b.base.dim || int(phi_b.size()) != b.base.dim)
        throw DimensionMismatch("matched pair action arity");
    for (const auto& m : rho_a)
        if (m.rows() != b.base.dim || m.cols() != b.base.dim)
            throw DimensionMismatch("rho_a shape");
    for (const auto& m : phi_a)
        if (m.rows() != b.base.dim || m.cols() != b.base.dim)
            throw DimensionMismatch("phi_a shape");
    for (const auto& m : rho_b)
        if (m.rows() != a.base.dim || m.cols() != a.base.dim)
            throw DimensionMismatch("rho_b shape");
    for (const auto& m : phi_b)
        if (m.rows() != a.base.dim || m.cols() != a.base.dim)
            throw DimensionMismatch("phi_b shape");
    return MatchedPairPreLie{std::move(a), std::move(b), std::move(rho_a), std::move(phi_a),
                             std::move(rho_b), std::move(phi_b), false};
}

CheckReport check_matched_pair_prelie(const MatchedPairPreLie& mp) {
    const Algebra& A = mp.a.base;
    const Algebra& B = mp.b.base;
    const int n = A.dim, m = B.dim;
    CheckReport out;
    out.name = "matched-pair(" + A.label + ", " + B.label + ")";

    // Cross actions must be averaging representations in both directions.
    Representation ra = make_representation(A, m, mp.rho_a, mp.phi_a);
    CheckReport ra_rep = check_prelie_representation(A, ra);
    out.merge(ra_rep, "action-of-" + A.label);
    if (ra_rep.pass()) {
        ra.verified = true;
        out.merge(check_avg_representation(mp.a, ra, mp.b.op), "action-of-" + A.label);
    }
    Representation rb = make_representation(B, n, mp.rho_b, mp.phi_b);
    CheckReport rb_rep = check_prelie_representation(B, rb);
    out.merge(rb_rep, "action-of-" + B.label);
    if (rb_rep.pass()) {
        rb.verified = true;
        out.merge(check_avg_representation(mp.b, rb, mp.a.op), "action-of-" + B.label);
    }

    out.item("mixed.1");
    out.item("mixed.2");
    out.item("mixed.3");
    out.item("mixed.4");
    // Identity 1: rho_a(x)(a*b) = -rho_a(rho_b(a)x - phi_b(a)x)b
    //   + (rho_a(x)a - phi_a(x)a)*b + phi_a(phi_b(b)x)a + a*(rho_a(x)b);
    // identity 3 is the same with roles swapped; 2 and 4 are the phi laws.
    auto mixed = [&](const Algebra& alg_a, const Algebra& alg_b,
                     const std::vector<Matrix>& rho_x, const std::vector<Matrix>& phi_x,
                     const std::vector<Matrix>& rho_y, const std::vector<Matrix>& phi_y,
                     const std::string& law1, const std::string& law2) {
        const int dx = alg_a.dim, dy = alg_b.dim;
        for (int i = 0; i < dx; ++i)
            for (int p = 0; p < dy; ++p)
                for (int q = 0; q < dy; ++q) {
                    Vec fa = Matrix::basis_vector(dy, p), fb = Matrix::basis_vector(dy, q);
                    Vec ra_x_a = rho_x[i] * fa, ra_x_b = rho_x[i] * fb;
                    Vec pa_x_a = phi_x[i] * fa, pa_x_b = phi_x[i] * fb;
                    Vec act_a_on_x = weighted(rho_y, fa) * Matrix::basis_vector(dx, i) -
                                     weighted(phi_y, fa) * Matrix::basis_vector(dx, i);
                    Vec lhs1 = rho_x[i] * alg_b.mul(fa, fb);
                    Vec rhs1 = -(weighted(rho_x, act_a_on_x) * fb) +
                               alg_b.mul(ra_x_a - pa_x_a, fb) +
                               weighted(phi_x, weighted(phi_y, fb) * Matrix::basis_vector(dx, i)) * fa +
                               alg_b.mul(fa, ra_x_b);
                    if (lhs1 != rhs1)
                        out.fail(law1, {i + 1, p + 1, q + 1}, vec_str(lhs1), vec_str(rhs1));

                    Vec lhs2 = phi_x[i] * (alg_b.mul(fa, fb) - alg_b.mul(fb, fa));
                    Vec rhs2 = weighted(phi_x, weighted(rho_y, fb) * Matrix::basis_vector(dx, i)) * fa -
                               weighted(phi_x, weighted(rho_y, fa) * Matrix::basis_vector(dx, i)) * fb +
                               alg_b.mul(fa, pa_x_b) - alg_b.mul(fb, pa_x_a);
                    if (lhs2 != rhs2)
                        out.fail(law2, {i + 1, p + 1, q + 1}, vec_str(lhs2), vec_str(rhs2));
                }
    };
    mixed(A, B, mp.rho_a, mp.phi_a, mp.rho_b, mp.phi_b, "mixed.1", "mixed.2");
    mixed(B, A, mp.rho_b, mp.phi_b, mp.rho_a, mp.phi_a, "mixed.3", "mixed.4");
    return out;
}

MatchedPairPreLie certify_matched_pair(MatchedPairPreLie mp) {
    if (!check_matched_pair_prelie(mp).pass())
        throw KindError("not a matched pair: " + mp.a.base.label + ", " + mp.b.base.label);
    mp.verified = true;
    return mp;
}

std::pair<Algebra, Matrix> build_double_unchecked(const MatchedPairPreLie& mp) {
    const Algebra& A = mp.a.base;
    const Algebra& B = mp.b.base;
    const int n = A.dim, m = B.dim, d = n + m;
    Tensor3 c(d, d, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) c(i, j, k) = A.product(i, j, k);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int k = 0; k < m; ++k) c(n + p, n + q, n + k) = B.product(p, q, k);
    for (int i = 0; i < n; ++i)
        for (int q = 0; q < m; ++q)
            for (int k = 0; k < m; ++k) {
                c(i, n + q, n + k) = mp.rho_a[i](k, q); // x * b = rho_a(x) b
                c(n + q, i, n + k) = mp.phi_a[i](k, q); // a * y = phi_a(y) a
            }
    for (int p = 0; p < m; ++p)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                c(n + p, j, k) = mp.rho_b[p](k, j);     // a * y = rho_b(a) y
                c(j, n + p, k) = mp.phi_b[p](k, j);     // x * b = phi_b(b) x
            }
    Algebra sum = make_algebra(A.label + "x" + B.label, d, std::move(c));
    Matrix op(d, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) op(i, j) = mp.a.op(i, j);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) op(n + p, n + q) = mp.b.op(p, q);
    return {std::move(sum), std::move(op)};
}

AveragingAlgebra build_double(const MatchedPairPreLie& mp) {
    if (!mp.verified) throw KindError("build_double needs a certified matched pair");
    auto [alg, op] = build_double_unchecked(mp);
    return make_averaging(certify_pre_lie(std::move(alg)), std::move(op));
}

CheckReport check_matched_pair_leibniz(const MatchedPairLeibniz& mp) {
    const Algebra& G1 = mp.g1;
    const Algebra& G2 = mp.g2;
    CheckReport out;
    out.name = "leibniz-matched-pair(" + G1.label + ", " + G2.label + ")";
    out.merge(check_leibniz_representation(G1, mp.rho), "action-of-" + G1.label);
    out.merge(check_leibniz_representation(G2, mp.mu), "action-of-" + G2.label);
    for (int k = 1; k <= 6; ++k) out.item("mixed." + std::to_string(k));

    // Three identities per direction; the second triple swaps the roles of
    // (rho, mu) and of the two algebras.
    auto triple = [&](const Algebra& g1, const Algebra& g2, const LeibnizRepresentation& rho,
                      const LeibnizRepresentation& mu, int base_law) {
        const int n = g1.dim, m = g2.dim;
        for (int i = 0; i < n; ++i)
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) {
                    Vec x = Matrix::basis_vector(n, i);
                    Vec xi = Matrix::basis_vector(m, p), eta = Matrix::basis_vector(m, q);
                    Vec br = g2.mul(xi, eta);

                    Vec v1 = rho.rho_r[i] * br - g2.mul(xi, rho.rho_r[i] * eta) +
                             g2.mul(eta, rho.rho_r[i] * xi) -
                             rho.rho_r_of(mu.rho_l_of(eta) * x) * xi +
                             rho.rho_r_of(mu.rho_l_of(xi) * x) * eta;
                    if (!v1.is_zero())
                        out.fail("mixed." + std::to_string(base_law), {i + 1, p + 1, q + 1},
                                 vec_str(v1), "(0)");

                    Vec v2 = rho.rho_l[i] * br - g2.mul(rho.rho_l[i] * xi, eta) -
                             g2.mul(xi, rho.rho_l[i] * eta) -
                             rho.rho_l_of(mu.rho_r_of(xi) * x) * eta -
                             rho.rho_r_of(mu.rho_r_of(eta) * x) * xi;
                    if (!v2.is_zero())
                        out.fail("mixed." + std::to_string(base_law + 1), {i + 1, p + 1, q + 1},
                                 vec_str(v2), "(0)");

                    Vec v3 = g2.mul(rho.rho_l[i] * xi, eta) +
                             rho.rho_l_of(mu.rho_r_of(xi) * x) * eta +
                             g2.mul(rho.rho_r[i] * xi, eta) +
                             rho.rho_l_of(mu.rho_l_of(xi) * x) * eta;
                    if (!v3.is_zero())
                        out.fail("mixed." + std::to_string(base_law + 2), {i + 1, p + 1, q + 1},
                                 vec_str(v3), "(0)");
                }
    };
    triple(G1, G2, mp.rho, mp.mu, 1);
    triple(G2, G1, mp.mu, mp.rho, 4);
    return out;
}

MatchedPairLeibniz certify_matched_pair_leibniz(MatchedPairLeibniz mp) {
    if (!check_matched_pair_leibniz(mp).pass())
        throw KindError("not a Leibniz matched pair: " + mp.g1.label + ", " + mp.g2.label);
    mp.verified = true;
    return mp;
}

Algebra build_leibniz_double(const MatchedPairLeibniz& mp) {
    if (!mp.verified) throw KindError("build_leibniz_double needs a certified matched pair");
    const int n = mp.g1.dim, m = mp.g2.dim, d = n + m;
    Tensor3 c(d, d, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) c(i, j, k) = mp.g1.product(i, j, k);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int k = 0; k < m; ++k) c(n + p, n + q, n + k) = mp.g2.product(p, q, k);
    for (int i = 0; i < n; ++i)
        for (int q = 0; q < m; ++q)
            for (int k = 0; k < m; ++k) {
                c(i, n + q, n + k) = mp.rho.rho_l[i](k, q); // [x, eta] gains rhoL(x)eta
                c(n + q, i, n + k) = mp.rho.rho_r[i](k, q); // [xi, y] gains rhoR(y)xi
            }
    for (int p = 0; p < m; ++p)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                c(n + p, j, k) = mp.mu.rho_l[p](k, j);      // [xi, y] gains muL(xi)y
                c(j, n + p, k) = mp.mu.rho_r[p](k, j);      // [x, eta] gains muR(eta)x
            }
    return certify_leibniz(
        make_algebra(mp.g1.label + "x" + mp.g2.label, d, std::move(c)));
}

MatchedPairLeibniz induced_leibniz_matched_pair(const MatchedPairPreLie& mp) {
    if (!mp.verified)
        throw KindError("induced_leibniz_matched_pair needs a certified matched pair");
    MatchedPairLeibniz out;
    out.g1 = induced_leibniz(mp.a);
    out.g2 = induced_leibniz(mp.b);
    const int n = mp.a.base.dim, m = mp.b.base.dim;
    out.rho.module_dim = m;
    for (int i = 0; i < n; ++i) {
        Vec pe = mp.a.op * Matrix::basis_vector(n, i);
        Matrix rho_pe(m, m), phi_pe(m, m);
        for (int k = 0; k < n; ++k) {
            if (pe(k, 0).is_zero()) continue;
            rho_pe = rho_pe + pe(k, 0) * mp.rho_a[k];
            phi_pe = phi_pe + pe(k, 0) * mp.phi_a[k];
        }
        out.rho.rho_l.push_back(rho_pe - phi_pe);
        out.rho.rho_r.push_back((mp.phi_a[i] - mp.rho_a[i]) * mp.b.op);
    }
    out.mu.module_dim = n;
    for (int p = 0; p < m; ++p) {
        Vec pf = mp.b.op * Matrix::basis_vector(m, p);
        Matrix rho_pf(n, n), phi_pf(n, n);
        for (int k = 0; k < m; ++k) {
            if (pf(k, 0).is_zero()) continue;
            rho_pf = rho_pf + pf(k, 0) * mp.rho_b[k];
            phi_pf = phi_pf + pf(k, 0) * mp.phi_b[k];
        }
        out.mu.rho_l.push_back(rho_pf - phi_pf);
        out.mu.rho_r.push_back((mp.phi_b[p] - mp.rho_b[p]) * mp.a.op);
    }
    return certify_matched_pair_leibniz(std::move(out));
}

} // namespace plab
