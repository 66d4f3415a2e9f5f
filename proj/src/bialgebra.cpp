#include "plab/bialgebra.hpp"

#include "plab/errors.hpp"

namespace plab {
namespace {

// Coefficient-matrix view of an A(x)A element: entry (j,k) is the weight of
// e_j (x) e_k. (M (x) N) acts as M . T . N^T; tau is plain transposition.
std::string t2_str(const Matrix& t) { return t.str(); }

} // namespace

Matrix Coalgebra::delta(int i) const {
    Matrix d(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) d(j, k) = coproduct(i, j, k);
    return d;
}

Matrix Coalgebra::delta_of(const Vec& x) const {
    Matrix d(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (x(i, 0).is_zero()) continue;
        d = d + x(i, 0) * delta(i);
    }
    return d;
}

Coalgebra make_coalgebra(std::string label, int dim, Tensor3 coproduct) {
    if (coproduct.dim1() != dim || coproduct.dim2() != dim || coproduct.dim3() != dim)
        throw DimensionMismatch("coproduct constants of " + label);
    return Coalgebra{std::move(label), dim, std::move(coproduct), CoalgebraKind::Unchecked};
}

Coalgebra dualize_product(const Algebra& alg) {
    Tensor3 d(alg.dim, alg.dim, alg.dim);
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j)
            for (int k = 0; k < alg.dim; ++k) d(i, j, k) = alg.product(j, k, i);
    return make_coalgebra(alg.label + ".co", alg.dim, std::move(d));
}

CheckReport check_prelie_coalgebra(const Coalgebra& co) {
    CheckReport rep;
    rep.name = "pre-lie-coalgebra(" + co.label + ")";
    rep.item("coassociator symmetry");
    const int n = co.dim;
    for (int i = 0; i < n; ++i) {
        // Z = (Delta(x)id)Delta(e_i) - (id(x)Delta)Delta(e_i); the law says
        // Z is fixed by swapping the first two tensor slots.
        Tensor3 z(n, n, n);
        Matrix di = co.delta(i);
        for (int m = 0; m < n; ++m)
            for (int l = 0; l < n; ++l) {
                if (di(m, l).is_zero()) continue;
                Matrix dm = co.delta(m), dl = co.delta(l);
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) {
                        z(p, q, l) += di(m, l) * dm(p, q);
                        z(m, p, q) -= di(m, l) * dl(p, q);
                    }
            }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (z(a, b, c) != z(b, a, c))
                        rep.fail("coassociator symmetry", {i + 1, a + 1, b + 1, c + 1},
                                 z(a, b, c).pretty(), z(b, a, c).pretty());
    }
    return rep;
}

Coalgebra certify_prelie_coalgebra(Coalgebra co) {
    if (!check_prelie_coalgebra(co).pass())
        throw KindError(co.label + " is not a pre-Lie coalgebra");
    co.kind = CoalgebraKind::PreLieCo;
    return co;
}

CheckReport check_avg_coalgebra(const Coalgebra& co, const Matrix& s) {
    if (s.rows() != co.dim || s.cols() != co.dim) throw DimensionMismatch("S shape");
    CheckReport rep;
    rep.name = "averaging-coalgebra(" + co.label + ")";
    rep.item("(SxS)D(x) = (Sxid)D(Sx) = (idxS)D(Sx)");
    Matrix st = s.transpose();
    for (int i = 0; i < co.dim; ++i) {
        Matrix di = co.delta(i);
        Matrix ds = co.delta_of(s * Matrix::basis_vector(co.dim, i));
        Matrix a = s * di * st, b = s * ds, c = ds * st;
        if (a != b || b != c)
            rep.fail("(SxS)D(x) = (Sxid)D(Sx) = (idxS)D(Sx)", {i + 1}, t2_str(a),
                     a != b ? t2_str(b) : t2_str(c));
    }
    return rep;
}

AveragingAlgebra dualize_coalgebra(const Coalgebra& co, const Matrix& s) {
    if (!check_prelie_coalgebra(co).pass() || !check_avg_coalgebra(co, s).pass())
        throw KindError(co.label + " is not an averaging pre-Lie coalgebra");
    Tensor3 c(co.dim, co.dim, co.dim);
    for (int i = 0; i < co.dim; ++i)
        for (int j = 0; j < co.dim; ++j)
            for (int k = 0; k < co.dim; ++k) c(i, j, k) = co.coproduct(k, i, j);
    return make_averaging(certify_pre_lie(make_algebra(co.label + ".dual", co.dim, std::move(c))),
                          s.transpose());
}

namespace {

// The two compatibility conditions of a pre-Lie bialgebra, without kind gating.
void bialgebra_compat(const Algebra& alg, const Coalgebra& co, CheckReport& rep) {
    rep.item("D([x,y]) cocycle");
    rep.item("skew part of D(x*y)");
    const int n = alg.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = Matrix::basis_vector(n, i), ej = Matrix::basis_vector(n, j);
            Matrix li = alg.left_mult(i), lj = alg.left_mult(j);
            Matrix ri = alg.right_mult(i), rj = alg.right_mult(j);
            Matrix di = co.delta(i), dj = co.delta(j);
            Matrix d_comm = co.delta_of(alg.mul(ei, ej) - alg.mul(ej, ei));
            Matrix rhs1 = li * dj + dj * (li - ri).transpose() - lj * di -
                          di * (lj - rj).transpose();
            if (d_comm != rhs1)
                rep.fail("D([x,y]) cocycle", {i + 1, j + 1}, t2_str(d_comm), t2_str(rhs1));

            Matrix d_prod = co.delta_of(alg.mul(ei, ej));
            Matrix w = di * rj.transpose() + li * dj + dj * li.transpose();
            Matrix lhs2 = d_prod - d_prod.transpose();
            Matrix rhs2 = w - w.transpose();
            if (lhs2 != rhs2)
                rep.fail("skew part of D(x*y)", {i + 1, j + 1}, t2_str(lhs2), t2_str(rhs2));
        }
}

} // namespace

CheckReport check_prelie_bialgebra(const Algebra& alg, const Coalgebra& co) {
    if (alg.kind != AlgebraKind::PreLie)
        throw KindError("check_prelie_bialgebra needs a certified pre-Lie algebra");
    if (co.kind != CoalgebraKind::PreLieCo)
        throw KindError("check_prelie_bialgebra needs a certified pre-Lie coalgebra");
    if (alg.dim != co.dim) throw DimensionMismatch("bialgebra carrier");
    CheckReport rep;
    rep.name = "pre-lie-bialgebra(" + alg.label + ")";
    bialgebra_compat(alg, co, rep);
    return rep;
}

CheckReport check_avg_prelie_bialgebra(const AvgBialgebra& bi) {
    const Algebra& a = bi.alg.base;
    if (a.dim != bi.co.dim || bi.s.rows() != a.dim || bi.s.cols() != a.dim)
        throw DimensionMismatch("bialgebra components");
    CheckReport rep;
    rep.name = "averaging-pre-lie-bialgebra(" + a.label + ")";
    rep.merge(check_pre_lie(a), "alg");
    rep.merge(check_averaging(a, bi.alg.op), "alg");
    rep.merge(check_prelie_coalgebra(bi.co), "co");
    rep.merge(check_avg_coalgebra(bi.co, bi.s), "co");
    bialgebra_compat(a, bi.co, rep);
    rep.merge(check_S_admissible(bi.alg, bi.s), "adm");

    rep.item("(PxS)D(x) = (idxS)D(Px) = (Pxid)D(Px)");
    rep.item("(SxP)D(x) = (Sxid)D(Px) = (idxP)D(Px)");
    Matrix pt = bi.alg.op.transpose(), st = bi.s.transpose();
    for (int i = 0; i < a.dim; ++i) {
        Matrix di = bi.co.delta(i);
        Matrix dp = bi.co.delta_of(bi.alg.op * Matrix::basis_vector(a.dim, i));
        Matrix a1 = bi.alg.op * di * st, b1 = dp * st, c1 = bi.alg.op * dp;
        if (a1 != b1 || b1 != c1)
            rep.fail("(PxS)D(x) = (idxS)D(Px) = (Pxid)D(Px)", {i + 1}, t2_str(a1),
                     a1 != b1 ? t2_str(b1) : t2_str(c1));
        Matrix a2 = bi.s * di * pt, b2 = bi.s * dp, c2 = dp * pt;
        if (a2 != b2 || b2 != c2)
            rep.fail("(SxP)D(x) = (Sxid)D(Px) = (idxP)D(Px)", {i + 1}, t2_str(a2),
                     a2 != b2 ? t2_str(b2) : t2_str(c2));
    }
    return rep;
}

AvgBialgebra make_avg_bialgebra(AveragingAlgebra alg, Coalgebra co, Matrix s) {
    AvgBialgebra bi{std::move(alg), std::move(co), std::move(s), false};
    if (!check_avg_prelie_bialgebra(bi).pass())
        throw KindError(bi.alg.base.label + " is not an averaging pre-Lie bialgebra");
    bi.verified = true;
    bi.alg.base.kind = AlgebraKind::PreLie;
    bi.co.kind = CoalgebraKind::PreLieCo;
    return bi;
}

bool BilinearForm::nondegenerate() const { return invert(matrix).has_value(); }

CheckReport check_quadratic(const Algebra& alg, const BilinearForm& omega, const Matrix* p) {
    if (omega.matrix.rows() != alg.dim || omega.matrix.cols() != alg.dim)
        throw DimensionMismatch("form shape");
    CheckReport rep;
    rep.name = "quadratic(" + alg.label + ")";
    rep.item("skew");
    rep.item("nondegenerate");
    rep.item("invariance");
    if (!omega.skew()) rep.fail("skew", {}, omega.matrix.str(), (-omega.matrix.transpose()).str());
    if (!omega.nondegenerate()) rep.fail("nondegenerate", {}, omega.matrix.str(), "invertible");
    const int n = alg.dim;
    const Matrix& om = omega.matrix;
    auto w = [&](const Vec& x, const Vec& y) { return (x.transpose() * om * y)(0, 0); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ei = Matrix::basis_vector(n, i), ej = Matrix::basis_vector(n, j),
                    ek = Matrix::basis_vector(n, k);
                Rational v = w(alg.mul(ei, ej), ek) +
                             w(ej, alg.mul(ei, ek) - alg.mul(ek, ei));
                if (!v.is_zero())
                    rep.fail("invariance", {i + 1, j + 1, k + 1}, v.pretty(), "0");
            }
    if (p) {
        rep.item("w(Px,y) = w(x,Py)");
        Matrix lhs = p->transpose() * om, rhs = om * (*p);
        if (lhs != rhs) rep.fail("w(Px,y) = w(x,Py)", {}, lhs.str(), rhs.str());
    }
    return rep;
}

Matrix omega_sharp(const BilinearForm& omega) {
    if (!omega.nondegenerate()) throw SingularForm("omega_sharp");
    return omega.matrix.transpose();
}

CheckReport verify_rep_isomorphism(const AveragingAlgebra& avg, const BilinearForm& omega) {
    if (!check_quadratic(avg.base, omega, &avg.op).pass())
        throw KindError("verify_rep_isomorphism needs a quadratic averaging algebra");
    Matrix w = omega_sharp(omega);
    CheckReport rep;
    rep.name = "rep-isomorphism(" + avg.base.label + ")";
    rep.item("(L*-R*)(x) f = f L(x)");
    rep.item("-R*(x) f = f R(x)");
    rep.item("P* f = f P");
    const int n = avg.base.dim;
    for (int i = 0; i < n; ++i) {
        Matrix li = avg.base.left_mult(i), ri = avg.base.right_mult(i);
        Matrix lhs1 = (-(li - ri).transpose()) * w, rhs1 = w * li;
        if (lhs1 != rhs1) rep.fail("(L*-R*)(x) f = f L(x)", {i + 1}, lhs1.str(), rhs1.str());
        Matrix lhs2 = ri.transpose() * w, rhs2 = w * ri; // -R*(x) = +R(x)^T
        if (lhs2 != rhs2) rep.fail("-R*(x) f = f R(x)", {i + 1}, lhs2.str(), rhs2.str());
    }
    Matrix lhs3 = avg.op.transpose() * w, rhs3 = w * avg.op;
    if (lhs3 != rhs3) rep.fail("P* f = f P", {}, lhs3.str(), rhs3.str());
    return rep;
}

CheckReport check_manin_triple(const ManinTriple& mt) {
    const Algebra& t = mt.total.base;
    const int n = t.dim;
    std::vector<int> seen(n, 0);
    for (int i : mt.part_a) {
        if (i < 0 || i >= n) throw PartitionError("index out of range");
        seen[i]++;
    }
    for (int i : mt.part_b) {
        if (i < 0 || i >= n) throw PartitionError("index out of range");
        seen[i]++;
    }
    for (int i = 0; i < n; ++i)
        if (seen[i] != 1) throw PartitionError("parts must partition the basis index set");

    CheckReport rep;
    rep.name = "manin-triple(" + t.label + ")";
    rep.merge(check_quadratic(t, mt.omega, &mt.total.op), "form");
    rep.item("parts closed under product");
    rep.item("parts closed under operator");
    rep.item("parts isotropic");
    rep.item("parts complementary halves");
    if (mt.part_a.size() != mt.part_b.size())
        rep.fail("parts complementary halves", {}, std::to_string(mt.part_a.size()),
                 std::to_string(mt.part_b.size()));

    auto in_span = [&](const Vec& v, const std::vector<int>& part) {
        std::vector<bool> ok(n, false);
        for (int i : part) ok[i] = true;
        for (int i = 0; i < n; ++i)
            if (!ok[i] && !v(i, 0).is_zero()) return false;
        return true;
    };
    for (const auto* part : {&mt.part_a, &mt.part_b}) {
        for (int i : *part)
            for (int j : *part) {
                Vec prod = t.mul(Matrix::basis_vector(n, i), Matrix::basis_vector(n, j));
                if (!in_span(prod, *part))
                    rep.fail("parts closed under product", {i + 1, j + 1}, vec_str(prod),
                             "inside the part");
                Rational v = mt.omega.matrix(i, j);
                if (!v.is_zero())
                    rep.fail("parts isotropic", {i + 1, j + 1}, v.pretty(), "0");
            }
        for (int i : *part) {
            Vec im = mt.total.op * Matrix::basis_vector(n, i);
            if (!in_span(im, *part))
                rep.fail("parts closed under operator", {i + 1}, vec_str(im), "inside the part");
        }
    }
    return rep;
}

ManinTriple bialgebra_to_manin(const AvgBialgebra& bi) {
    if (!bi.verified) throw KindError("bialgebra_to_manin needs a certified bialgebra");
    if (bi.s != bi.alg.op.transpose())
        throw KindError("the Manin correspondence needs S = P^T (the dual of P)");
    const Algebra& a = bi.alg.base;
    const int n = a.dim;
    AveragingAlgebra dual = dualize_coalgebra(bi.co, bi.s);

    std::vector<Matrix> rho_a, phi_a, rho_b, phi_b;
    for (int i = 0; i < n; ++i) {
        Matrix li = a.left_mult(i), ri = a.right_mult(i);
        rho_a.push_back(-(li - ri).transpose()); // L* - R* on A*
        phi_a.push_back(ri.transpose()); // -R* = +R^T
    }
    for (int p = 0; p < n; ++p) {
        Matrix lp = dual.base.left_mult(p), rp = dual.base.right_mult(p);
        rho_b.push_back(-(lp - rp).transpose()); // dual action back on A
        phi_b.push_back(rp.transpose());
    }
    MatchedPairPreLie mp = certify_matched_pair(make_matched_pair_data(
        bi.alg, std::move(dual), std::move(rho_a), std::move(phi_a), std::move(rho_b),
        std::move(phi_b)));
    AveragingAlgebra total = build_double(mp);

    Matrix om(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        om(i, n + i) = -1; // omega(e_i, eps^j) = -<eps^j, e_i>
        om(n + i, i) = 1;  // omega(eps^i, e_j) = <eps^i, e_j>
    }
    ManinTriple mt;
    mt.total = std::move(total);
    mt.omega = BilinearForm{std::move(om)};
    for (int i = 0; i < n; ++i) mt.part_a.push_back(i);
    for (int i = 0; i < n; ++i) mt.part_b.push_back(n + i);
    if (!check_manin_triple(mt).pass())
        throw KindError("constructed double is not a Manin triple");
    return mt;
}

AvgBialgebra manin_to_bialgebra(const ManinTriple& mt, ExtractionSign sign) {
    if (!check_manin_triple(mt).pass())
        throw KindError("manin_to_bialgebra needs a verified Manin triple");
    const Algebra& t = mt.total.base;
    const int n = int(mt.part_a.size());

    // Pairing of part_b (playing A*) against part_a: G(p,i) = omega(f_p, e_i).
    Matrix g(n, n);
    for (int p = 0; p < n; ++p)
        for (int i = 0; i < n; ++i) g(p, i) = mt.omega.matrix(mt.part_b[p], mt.part_a[i]);
    auto gi = invert(g);
    if (!gi) throw SingularForm("isotropic parts do not pair nondegenerately");

    Rational sgn = sign == ExtractionSign::Negated ? Rational(-1) : Rational(1);
    Tensor3 c(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                c(i, j, k) = sgn * t.product(mt.part_a[i], mt.part_a[j], mt.part_a[k]);

    // Restricted product on part_b, then transported through G to coproduct
    // constants: G . D_k . G^T = M_k with M_k(p,q) = sum_s t(p,q,s) G(s,k).
    Tensor3 d(n, n, n);
    for (int k = 0; k < n; ++k) {
        Matrix mk(n, n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int s = 0; s < n; ++s)
                    mk(p, q) += t.product(mt.part_b[p], mt.part_b[q], mt.part_b[s]) * g(s, k);
        Matrix dk = *gi * mk * gi->transpose();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) d(k, a, b) = dk(a, b);
    }

    Matrix p_res(n, n), q_res(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            p_res(i, j) = mt.total.op(mt.part_a[i], mt.part_a[j]);
            q_res(i, j) = mt.total.op(mt.part_b[i], mt.part_b[j]);
        }
    // S on A is pinned by S* = restriction of the operator to part_b under the
    // identification f_p = sum_i G(p,i) eps^i:  S^T = G^T Q G^-T.
    Matrix s = (g.transpose() * q_res * gi->transpose()).transpose();

    Algebra alg = certify_pre_lie(make_algebra(t.label + ".a", n, std::move(c)));
    return make_avg_bialgebra(make_averaging(std::move(alg), std::move(p_res)),
                              make_coalgebra(t.label + ".a", n, std::move(d)), std::move(s));
}

CheckReport check_balanced(const Algebra& alg, const Coalgebra& co) {
    if (alg.dim != co.dim) throw DimensionMismatch("balanced check carrier");
    CheckReport rep;
    rep.name = "balanced(" + alg.label + ")";
    rep.item("balanced");
    const int n = alg.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix di = co.delta(i), dj = co.delta(j);
            Matrix ri = alg.right_mult(i), rj = alg.right_mult(j);
            // x_(1)*y (x) x_(2) = (R_y (x) id) D(x); y_(2) (x) y_(1)*x = tau(D(y)) R_x^T
            Matrix lhs = rj * di + dj.transpose() * ri.transpose();
            Matrix rhs = ri * dj + di.transpose() * rj.transpose();
            if (lhs != rhs) rep.fail("balanced", {i + 1, j + 1}, t2_str(lhs), t2_str(rhs));
        }
    return rep;
}

AvgLieBialgebra induced_lie_bialgebra(const AvgBialgebra& bi) {
    if (!bi.verified) throw KindError("induced_lie_bialgebra needs a certified bialgebra");
    if (!check_balanced(bi.alg.base, bi.co).pass())
        throw NotBalanced(bi.alg.base.label);
    AvgLieBialgebra out;
    out.lie = sub_adjacent_lie(bi.alg.base);
    Tensor3 dl(bi.co.dim, bi.co.dim, bi.co.dim);
    for (int i = 0; i < bi.co.dim; ++i)
        for (int j = 0; j < bi.co.dim; ++j)
            for (int k = 0; k < bi.co.dim; ++k)
                dl(i, j, k) = bi.co.coproduct(i, j, k) - bi.co.coproduct(i, k, j);
    out.delta = make_coalgebra(bi.co.label + ".lie", bi.co.dim, std::move(dl));
    out.p = bi.alg.op;
    out.s = bi.s;
    if (!check_avg_lie_bialgebra(out.lie, out.delta, out.p, out.s).pass())
        throw KindError("induced structure failed the averaging Lie bialgebra check");
    out.delta.kind = CoalgebraKind::LieCo;
    return out;
}

CheckReport check_avg_lie_bialgebra(const Algebra& lie, const Coalgebra& delta, const Matrix& p,
                                    const Matrix& s) {
    if (lie.dim != delta.dim) throw DimensionMismatch("lie bialgebra carrier");
    CheckReport rep;
    rep.name = "averaging-lie-bialgebra(" + lie.label + ")";
    rep.merge(check_lie(lie), "alg");
    rep.merge(check_averaging(lie, p), "alg");

    const int n = lie.dim;
    rep.item("co.antisymmetry");
    rep.item("co.co-jacobi");
    for (int i = 0; i < n; ++i) {
        Matrix di = delta.delta(i);
        if (di != -di.transpose())
            rep.fail("co.antisymmetry", {i + 1}, t2_str(di), t2_str(-di.transpose()));
        // T(u,p,q) = sum_v D_i(u,v) D_v(p,q); co-Jacobi: cyclic sum of slots = 0
        Tensor3 t(n, n, n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (di(u, v).is_zero()) continue;
                Matrix dv = delta.delta(v);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) t(u, a, b) += di(u, v) * dv(a, b);
            }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c2 = 0; c2 < n; ++c2) {
                    Rational v = t(a, b, c2) + t(b, c2, a) + t(c2, a, b);
                    if (!v.is_zero())
                        rep.fail("co.co-jacobi", {i + 1, a + 1, b + 1, c2 + 1}, v.pretty(), "0");
                }
    }
    rep.merge(check_avg_coalgebra(delta, s), "co");

    rep.item("cocycle");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = Matrix::basis_vector(n, i), ej = Matrix::basis_vector(n, j);
            Matrix adi = lie.left_mult(i), adj = lie.left_mult(j);
            Matrix lhs = delta.delta_of(lie.mul(ei, ej));
            Matrix rhs = adi * delta.delta(j) + delta.delta(j) * adi.transpose() -
                         adj * delta.delta(i) - delta.delta(i) * adj.transpose();
            if (lhs != rhs) rep.fail("cocycle", {i + 1, j + 1}, t2_str(lhs), t2_str(rhs));
        }

    rep.item("[Px,Sy] = S([Px,y]) = S([x,Sy])");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = Matrix::basis_vector(n, i), ej = Matrix::basis_vector(n, j);
            Vec a = lie.mul(p * ei, s * ej);
            Vec b = s * lie.mul(p * ei, ej);
            Vec c = s * lie.mul(ei, s * ej);
            if (a != b || b != c)
                rep.fail("[Px,Sy] = S([Px,y]) = S([x,Sy])", {i + 1, j + 1}, vec_str(a),
                         a != b ? vec_str(b) : vec_str(c));
        }
    rep.item("(SxP)d(x) = (Sxid)d(Px) = (idxP)d(Px)");
    Matrix pt = p.transpose();
    for (int i = 0; i < n; ++i) {
        Matrix di = delta.delta(i);
        Matrix dp = delta.delta_of(p * Matrix::basis_vector(n, i));
        Matrix a = s * di * pt, b = s * dp, c = dp * pt;
        if (a != b || b != c)
            rep.fail("(SxP)d(x) = (Sxid)d(Px) = (idxP)d(Px)", {i + 1}, t2_str(a),
                     a != b ? t2_str(b) : t2_str(c));
    }
    return rep;
}

} // namespace plab
