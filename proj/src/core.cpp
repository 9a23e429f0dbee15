#include <cmath>

#include "noethops/monomial.hpp"
#include "noethops/rational.hpp"

namespace noethops {

Rational Rational::from_string(const std::string& text) {
    std::string s = text;
    if (s.empty()) fail(Error::Code::BadInput, "empty number literal");

    // plain integer or num/den form handled by GMP directly
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos) {
        try {
            mpq_class v(s);
            v.canonicalize();
            return Rational(v);
        } catch (const std::invalid_argument&) {
            fail(Error::Code::BadInput, "bad number literal '" + text + "'");
        }
    }

    // decimal literal, converted exactly: 1.25e-3 -> 125/100 * 10^-3
    bool neg = false;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) fail(Error::Code::BadInput, "bad number literal '" + text + "'");
            seen_dot = true;
        } else {
            digits += s[i];
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        }
    }
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        try {
            size_t used = 0;
            exp10 = std::stol(s.substr(i), &used);
            i += used;
        } catch (...) {
            fail(Error::Code::BadInput, "bad exponent in '" + text + "'");
        }
    }
    if (!seen_digit || i != s.size())
        fail(Error::Code::BadInput, "bad number literal '" + text + "'");

    mpz_class num(digits.empty() ? "0" : digits);
    if (neg) num = -num;
    long shift = exp10 - frac_digits;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    mpq_class v;
    if (shift >= 0) v = mpq_class(num * p10);
    else v = mpq_class(num, p10);
    v.canonicalize();
    return Rational(v);
}

Rational rationalize(double x, long max_den) {
    if (!std::isfinite(x)) fail(Error::Code::BadInput, "cannot rationalize non-finite value");
    bool neg = x < 0;
    double v = std::fabs(x);
    // continued-fraction convergents p/q
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double a_f = std::floor(frac);
        if (a_f > 1e18) break;
        long a = static_cast<long>(a_f);
        long p2 = a * p1 + p0;
        long q2 = a * q1 + q0;
        if (q2 > max_den || p2 < 0 || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - a_f;
        if (rem < 1e-15 * std::max(1.0, v)) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return neg ? -r : r;
}

namespace {
void enumerate_degree(size_t arity, int d, size_t pos, Monomial& cur, std::vector<Monomial>& out) {
    if (pos + 1 == arity) {
        cur.e[pos] = d;
        out.push_back(cur);
        cur.e[pos] = 0;
        return;
    }
    for (int k = 0; k <= d; ++k) {
        cur.e[pos] = k;
        enumerate_degree(arity, d - k, pos + 1, cur, out);
    }
    cur.e[pos] = 0;
}
} // namespace

std::vector<Monomial> monomials_of_degree(size_t arity, int d) {
    std::vector<Monomial> out;
    if (arity == 0) {
        if (d == 0) out.emplace_back(arity);
        return out;
    }
    Monomial cur(arity);
    enumerate_degree(arity, d, 0, cur, out);
    std::sort(out.begin(), out.end(), GrevlexLess{});
    return out;
}

std::vector<Monomial> monomials_up_to_degree(size_t arity, int d) {
    std::vector<Monomial> out;
    for (int k = 0; k <= d; ++k) {
        auto part = monomials_of_degree(arity, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace noethops
