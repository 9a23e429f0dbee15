#pragma once

#include "noethops/gcd.hpp"
#include "noethops/polynomial.hpp"

namespace noethops {

// Fraction of exact polynomials, normalized after every operation:
// gcd(num, den) = 1 and den monic under grevlex.  A default-constructed
// value is the zero of a not-yet-attached ring and is absorbed by
// arithmetic.
class RationalFunction {
public:
    RationalFunction() = default;

    explicit RationalFunction(QPoly num) : num_(std::move(num)) {
        den_ = QPoly::constant(num_.ring(), Rational(1));
    }
    RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) fail(Error::Code::DivisionByZero, "rational function with zero denominator");
        normalize();
    }
    static RationalFunction constant(const RingPtr& ring, Rational c) {
        return RationalFunction(QPoly::constant(ring, std::move(c)));
    }
    static RationalFunction zero(const RingPtr& ring) {
        return RationalFunction(QPoly::zero(ring));
    }
    static RationalFunction one(const RingPtr& ring) { return constant(ring, Rational(1)); }

    bool attached() const { return num_.ring() != nullptr; }
    const RingPtr& ring() const { return num_.ring(); }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_is_one() && num_.is_constant() && num_.constant_value().is_one(); }
    bool den_is_one() const { return den_.is_constant() && den_.constant_value().is_one(); }

    RationalFunction operator+(const RationalFunction& o) const {
        if (!attached()) return o;
        if (!o.attached()) return *this;
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
    RationalFunction operator-() const {
        if (!attached()) return *this;
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RationalFunction operator*(const RationalFunction& o) const {
        if (!attached() || !o.attached()) return RationalFunction();
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const { return *this * o.inverse(); }

    RationalFunction inverse() const {
        if (is_zero()) fail(Error::Code::DivisionByZero, "inverse of zero rational function");
        return RationalFunction(den_, num_);
    }

    bool operator==(const RationalFunction& o) const {
        if (!attached() || !o.attached()) return is_zero() == o.is_zero();
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string to_string() const {
        if (!attached() || is_zero()) return "0";
        if (den_is_one()) return num_.to_string();
        std::string ns = num_.to_string();
        if (num_.term_count() > 1) ns = "(" + ns + ")";
        return ns + "/(" + den_.to_string() + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = QPoly::constant(num_.ring(), Rational(1));
            return;
        }
        QPoly g = multivariate_gcd(num_, den_);
        if (!(g.is_constant() && g.constant_value().is_one())) {
            num_ = *exact_divide(num_, g);
            den_ = *exact_divide(den_, g);
        }
        auto [m, c] = den_.lead_term(MonomialOrder::grevlex());
        if (!c.is_one()) {
            Rational ci = c.inverse();
            num_ = num_.scaled(ci);
            den_ = den_.scaled(ci);
        }
    }

    QPoly num_; // zero polynomial when default-constructed
    QPoly den_;
};

template <>
struct FieldTraits<RationalFunction> {
    static constexpr bool exact = true;
    static bool is_zero(const RationalFunction& a) { return a.is_zero(); }
    static RationalFunction zero_like(const RationalFunction& a) {
        return a.attached() ? RationalFunction::zero(a.ring()) : RationalFunction();
    }
    static RationalFunction one_like(const RationalFunction& a) {
        if (!a.attached()) fail(Error::Code::BadInput, "rational-function one needs a ring");
        return RationalFunction::one(a.ring());
    }
    static RationalFunction inverse(const RationalFunction& a) { return a.inverse(); }
    static std::string to_string(const RationalFunction& a) { return a.to_string(); }
    static bool compound(const RationalFunction& a) {
        if (!a.attached()) return false;
        if (!a.den_is_one()) return true;
        return a.num().term_count() > 1;
    }
};

using RFPoly = Polynomial<RationalFunction>;

} // namespace noethops
