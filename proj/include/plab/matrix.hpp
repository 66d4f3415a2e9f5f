#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "plab/rational.hpp"

namespace plab {

// Dense matrix over the rationals, row-major.
//
// Convention used throughout: a linear map f with matrix M sends the j-th
// basis vector to sum_i M(i,j) e_i, i.e. column j holds the image of e_j.
// Column vectors are n-by-1 matrices.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), at_(std::size_t(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(int n);
    static Matrix basis_vector(int n, int i); // n-by-1, single 1 at row i

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return at_[std::size_t(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return at_[std::size_t(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const;

    // Human-readable, e.g. "[[1, 0], [0, -1/2]]".
    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rational> at_;
};

// Column vector helpers.
using Vec = Matrix;

std::string vec_str(const Vec& v);

} // namespace plab
