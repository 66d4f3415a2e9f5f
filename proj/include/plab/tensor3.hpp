#pragma once

#include <string>
#include <vector>

#include "plab/matrix.hpp"
#include "plab/rational.hpp"

namespace plab {

// Dense rank-3 array of rationals.
//
// Used both for algebra structure constants c(i,j,k) (e_i * e_j = sum_k
// c(i,j,k) e_k), for coproduct constants d(i,j,k) (Delta(e_i) = sum d(i,j,k)
// e_j (x) e_k), and for elements of a triple tensor power A (x) A (x) A.
class Tensor3 {
public:
    Tensor3() : d1_(0), d2_(0), d3_(0) {}
    Tensor3(int d1, int d2, int d3)
        : d1_(d1), d2_(d2), d3_(d3), at_(std::size_t(d1) * d2 * d3) {}

    int dim1() const { return d1_; }
    int dim2() const { return d2_; }
    int dim3() const { return d3_; }

    Rational& operator()(int i, int j, int k) {
        return at_[(std::size_t(i) * d2_ + j) * d3_ + k];
    }
    const Rational& operator()(int i, int j, int k) const {
        return at_[(std::size_t(i) * d2_ + j) * d3_ + k];
    }

    bool is_zero() const {
        for (const auto& x : at_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Tensor3 operator+(const Tensor3& a, const Tensor3& b);
    friend Tensor3 operator-(const Tensor3& a, const Tensor3& b);
    Tensor3 operator-() const;
    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.d3_ == b.d3_ && a.at_ == b.at_;
    }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

    std::string str() const;

private:
    int d1_, d2_, d3_;
    std::vector<Rational> at_;
};

// Bilinear evaluation of structure constants: (x * y)_k = sum_{i,j} x_i y_j c(i,j,k).
Vec contract(const Tensor3& c, const Vec& x, const Vec& y);

// Apply M to slot `slot` (0, 1 or 2) of a rank-3 tensor.
Tensor3 apply_slot(const Matrix& m, const Tensor3& t, int slot);

} // namespace plab
