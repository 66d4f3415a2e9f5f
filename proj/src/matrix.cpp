#include "plab/matrix.hpp"

#include "plab/errors.hpp"

namespace plab {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    at_.reserve(std::size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
        for (const auto& x : r) at_.push_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::basis_vector(int n, int i) {
    Matrix v(n, 1);
    v(i, 0) = 1;
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& x : at_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < at_.size(); ++i) m.at_[i] = -at_[i];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix addition");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.at_.size(); ++i) m.at_[i] = a.at_[i] + b.at_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix subtraction");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.at_.size(); ++i) m.at_[i] = a.at_[i] - b.at_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

Matrix operator*(const Rational& c, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.at_.size(); ++i) m.at_[i] = c * a.at_[i];
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.at_ == b.at_;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

std::string Matrix::str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += (*this)(i, j).pretty();
        }
        s += "]";
    }
    return s + "]";
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (int i = 0; i < v.rows(); ++i) {
        if (i) s += ", ";
        s += v(i, 0).pretty();
    }
    return s + ")";
}

} // namespace plab
