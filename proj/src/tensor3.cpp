#include "plab/tensor3.hpp"

#include "plab/errors.hpp"

namespace plab {

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    if (a.d1_ != b.d1_ || a.d2_ != b.d2_ || a.d3_ != b.d3_)
        throw DimensionMismatch("tensor addition");
    Tensor3 t(a.d1_, a.d2_, a.d3_);
    for (std::size_t i = 0; i < a.at_.size(); ++i) t.at_[i] = a.at_[i] + b.at_[i];
    return t;
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
    if (a.d1_ != b.d1_ || a.d2_ != b.d2_ || a.d3_ != b.d3_)
        throw DimensionMismatch("tensor subtraction");
    Tensor3 t(a.d1_, a.d2_, a.d3_);
    for (std::size_t i = 0; i < a.at_.size(); ++i) t.at_[i] = a.at_[i] - b.at_[i];
    return t;
}

Tensor3 Tensor3::operator-() const {
    Tensor3 t(d1_, d2_, d3_);
    for (std::size_t i = 0; i < at_.size(); ++i) t.at_[i] = -at_[i];
    return t;
}

std::string Tensor3::str() const {
    std::string s;
    for (int i = 0; i < d1_; ++i)
        for (int j = 0; j < d2_; ++j)
            for (int k = 0; k < d3_; ++k) {
                const Rational& x = (*this)(i, j, k);
                if (x.is_zero()) continue;
                if (!s.empty()) s += " ";
                s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                     std::to_string(k + 1) + ")=" + x.pretty();
            }
    return s.empty() ? "0" : s;
}

Vec contract(const Tensor3& c, const Vec& x, const Vec& y) {
    if (x.rows() != c.dim1() || y.rows() != c.dim2() || x.cols() != 1 || y.cols() != 1)
        throw DimensionMismatch("structure constant contraction");
    Vec out(c.dim3(), 1);
    for (int i = 0; i < c.dim1(); ++i) {
        if (x(i, 0).is_zero()) continue;
        for (int j = 0; j < c.dim2(); ++j) {
            if (y(j, 0).is_zero()) continue;
            Rational f = x(i, 0) * y(j, 0);
            for (int k = 0; k < c.dim3(); ++k) {
                const Rational& v = c(i, j, k);
                if (!v.is_zero()) out(k, 0) += f * v;
            }
        }
    }
    return out;
}

Tensor3 apply_slot(const Matrix& m, const Tensor3& t, int slot) {
    int d[3] = {t.dim1(), t.dim2(), t.dim3()};
    if (m.cols() != d[slot]) throw DimensionMismatch("tensor slot application");
    d[slot] = m.rows();
    Tensor3 out(d[0], d[1], d[2]);
    for (int i = 0; i < t.dim1(); ++i)
        for (int j = 0; j < t.dim2(); ++j)
            for (int k = 0; k < t.dim3(); ++k) {
                const Rational& v = t(i, j, k);
                if (v.is_zero()) continue;
                int src = slot == 0 ? i : slot == 1 ? j : k;
                for (int r = 0; r < m.rows(); ++r) {
                    const Rational& mr = m(r, src);
                    if (mr.is_zero()) continue;
                    int a = slot == 0 ? r : i, b = slot == 1 ? r : j, cc = slot == 2 ? r : k;
                    out(a, b, cc) += mr * v;
                }
            }
    return out;
}

} // namespace plab
