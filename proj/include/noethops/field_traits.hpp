#pragma once

#include <complex>
#include <cstdio>
#include <string>

#include "noethops/rational.hpp"

namespace noethops {

using Complex = std::complex<double>;

// %.6g with "-0" cleaned up; shared by all numeric printing so output is
// reproducible.
inline std::string format_double(double x) {
    if (x == 0) x = 0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

inline std::string format_complex(const Complex& z) {
    double scale = std::max(std::abs(z.real()), std::abs(z.imag()));
    if (std::abs(z.imag()) <= 1e-12 * std::max(1.0, scale)) return format_double(z.real());
    if (std::abs(z.real()) <= 1e-12 * std::max(1.0, scale))
        return format_double(z.imag()) + "i";
    std::string s = format_double(z.real());
    s += z.imag() < 0 ? " - " : " + ";
    s += format_double(std::abs(z.imag()));
    s += "i";
    return s;
}

// Coefficient-field operations used by the generic polynomial and linear
// algebra code.  `compound` says whether the printed form needs parentheses
// when it appears as a factor.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static Rational inverse(const Rational& a) { return a.inverse(); }
    static std::string to_string(const Rational& a) { return a.to_string(); }
    static bool compound(const Rational&) { return false; }
};

template <>
struct FieldTraits<Complex> {
    static constexpr bool exact = false;
    static bool is_zero(const Complex& a) { return a == Complex(0.0, 0.0); }
    static Complex zero_like(const Complex&) { return Complex(0.0, 0.0); }
    static Complex one_like(const Complex&) { return Complex(1.0, 0.0); }
    static Complex inverse(const Complex& a) {
        if (is_zero(a)) fail(Error::Code::DivisionByZero, "inverse of zero");
        return Complex(1.0, 0.0) / a;
    }
    static std::string to_string(const Complex& a) { return format_complex(a); }
    static bool compound(const Complex& a) {
        double scale = std::max(std::abs(a.real()), std::abs(a.imag()));
        return std::abs(a.imag()) > 1e-12 * std::max(1.0, scale);
    }
};

} // namespace noethops
