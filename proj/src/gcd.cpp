#include "noethops/gcd.hpp"

#include <map>

namespace noethops {

std::optional<QPoly> exact_divide(const QPoly& f, const QPoly& g) {
    if (g.is_zero()) return std::nullopt;
    check_same_ring(f.ring(), g.ring());
    auto ord = MonomialOrder::grevlex();
    auto [gm, gc] = g.lead_term(ord);
    Rational gci = gc.inverse();
    QPoly rem = f;
    QPoly quot = QPoly::zero(f.ring());
    while (!rem.is_zero()) {
        auto [m, c] = rem.lead_term(ord);
        if (!gm.divides(m)) return std::nullopt;
        Monomial q = m.divide(gm);
        Rational qc = c * gci;
        quot.add_term(q, qc);
        rem = rem - g.mul_term(q, qc);
    }
    return quot;
}

QPoly make_monic(const QPoly& f) {
    if (f.is_zero()) return f;
    auto [m, c] = f.lead_term(MonomialOrder::grevlex());
    return f.scaled(c.inverse());
}

namespace {

int top_variable(const QPoly& a, const QPoly& b) {
    int v = -1;
    for (const auto& [m, c] : a.terms())
        for (size_t i = 0; i < m.arity(); ++i)
            if (m.e[i] > 0) v = std::max(v, static_cast<int>(i));
    for (const auto& [m, c] : b.terms())
        for (size_t i = 0; i < m.arity(); ++i)
            if (m.e[i] > 0) v = std::max(v, static_cast<int>(i));
    return v;
}

// coefficients of f viewed as a univariate polynomial in x_v
std::map<int, QPoly> slices_in(const QPoly& f, size_t v) {
    std::map<int, QPoly> out;
    for (const auto& [m, c] : f.terms()) {
        Monomial mm(m);
        int k = mm.e[v];
        mm.e[v] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, QPoly::zero(f.ring())).first;
        it->second.add_term(std::move(mm), c);
    }
    return out;
}

QPoly content_in(const QPoly& f, size_t v) {
    QPoly g = QPoly::zero(f.ring());
    for (const auto& [k, slice] : slices_in(f, v)) g = multivariate_gcd(g, slice);
    return g;
}

// pseudo-remainder of f by g with respect to x_v
QPoly prem(QPoly f, const QPoly& g, size_t v) {
    int dg = g.degree_in(v);
    auto gs = slices_in(g, v);
    QPoly lcg = gs.rbegin()->second;
    while (!f.is_zero()) {
        int df = f.degree_in(v);
        if (df < dg) break;
        auto fs = slices_in(f, v);
        QPoly lcf = fs.rbegin()->second;
        QPoly shift = QPoly::term(f.ring(), Monomial::unit(f.ring()->arity(), v, df - dg),
                                  Rational(1));
        f = f * lcg - g * shift * lcf;
    }
    return f;
}

} // namespace

QPoly multivariate_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    check_same_ring(a.ring(), b.ring());
    int v = top_variable(a, b);
    if (v < 0) return QPoly::constant(a.ring(), Rational(1)); // both constant, units
    if (a.is_constant() || b.is_constant()) return QPoly::constant(a.ring(), Rational(1));
    if (!a.involves(v) || !b.involves(v)) {
        // v appears in only one argument: gcd lives in the smaller variable set
        QPoly ca = a.involves(v) ? content_in(a, v) : a;
        QPoly cb = b.involves(v) ? content_in(b, v) : b;
        return multivariate_gcd(ca, cb);
    }

    QPoly cont_a = content_in(a, v);
    QPoly cont_b = content_in(b, v);
    QPoly pa = *exact_divide(a, cont_a);
    QPoly pb = *exact_divide(b, cont_b);
    QPoly g_cont = multivariate_gcd(cont_a, cont_b);

    QPoly r0 = std::move(pa), r1 = std::move(pb);
    if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        QPoly r = prem(r0, r1, v);
        r0 = std::move(r1);
        if (r.is_zero()) {
            r1 = QPoly::zero(a.ring());
        } else {
            QPoly c = content_in(r, v);
            r1 = *exact_divide(r, c);
        }
    }
    return make_monic(g_cont * r0);
}

QPoly multivariate_lcm(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly::zero(a.ring());
    QPoly g = multivariate_gcd(a, b);
    return make_monic(*exact_divide(a * b, g));
}

} // namespace noethops
