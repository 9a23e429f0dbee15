#pragma once

#include <gmpxx.h>

#include <string>

#include "noethops/error.hpp"

namespace noethops {

// Arbitrary-precision rational with canonical representation:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.  GMP keeps results of
// arithmetic canonical as long as the operands are.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) fail(Error::Code::DivisionByZero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "3", "-3/4" and decimal literals like "1.25" or "-0.5e2",
    // all converted exactly.
    static Rational from_string(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational::raw(-v_); }
    Rational operator+(const Rational& o) const { return Rational::raw(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational::raw(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational::raw(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) fail(Error::Code::DivisionByZero, "rational division by zero");
        return Rational::raw(v_ / o.v_);
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) fail(Error::Code::DivisionByZero, "inverse of zero");
        return Rational::raw(1 / v_);
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }
    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }
    bool is_integer() const { return v_.get_den() == 1; }

    const mpq_class& raw_value() const { return v_; }

private:
    static Rational raw(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }
    mpq_class v_;
};

// Best rational approximation of x with denominator at most max_den
// (continued-fraction convergents).
Rational rationalize(double x, long max_den = 1000000);

} // namespace noethops
