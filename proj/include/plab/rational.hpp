#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/integer/common_factor_rt.hpp>
#include <optional>
#include <string>

#include "plab/errors.hpp"

namespace plab {

using Int = boost::multiprecision::cpp_int;

// Exact rational number. Always stored reduced with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Rational operator-() const { return Rational(raw{}, -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("division by zero rational");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    Rational inverse() const {
        if (num_ == 0) throw Error("inverse of zero rational");
        return Rational(den_, num_);
    }

    // Canonical "p/q" form, e.g. "3/2", "-1/1", "0/1".
    std::string str() const { return num_.str() + "/" + den_.str(); }

    // Human form: omits the denominator when it is 1.
    std::string pretty() const {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }

    // Accepts "p", "-p", "p/q" with optional sign on either part.
    static std::optional<Rational> parse(const std::string& text);

private:
    struct raw {};
    Rational(raw, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw Error("zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = boost::integer::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

inline std::optional<Rational> Rational::parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(Int(text));
        }
        std::string n = text.substr(0, slash), d = text.substr(slash + 1);
        if (!is_int(n) || !is_int(d) || Int(d) == 0) return std::nullopt;
        return Rational(Int(n), Int(d));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace plab
