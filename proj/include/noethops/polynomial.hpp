#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "noethops/field_traits.hpp"
#include "noethops/monomial.hpp"
#include "noethops/ring.hpp"

namespace noethops {

inline std::string monomial_to_string(const Monomial& m, const Ring& ring) {
    std::string s;
    for (size_t i = 0; i < m.arity(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.var_name(i);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

// Exact multivariate polynomial over a coefficient field K.  Terms are kept
// in a grevlex-sorted map with no zero coefficients, so iteration order and
// printed output are reproducible.
template <class K>
class Polynomial {
public:
    using Terms = std::map<Monomial, K, GrevlexLess>;

    Polynomial() = default; // zero in a not-yet-attached ring; prefer zero(ring)

    static Polynomial zero(RingPtr ring) {
        Polynomial p;
        p.ring_ = std::move(ring);
        return p;
    }
    static Polynomial constant(RingPtr ring, K c) {
        Polynomial p = zero(std::move(ring));
        if (!FieldTraits<K>::is_zero(c)) p.terms_.emplace(Monomial(p.ring_->arity()), std::move(c));
        return p;
    }
    static Polynomial variable(RingPtr ring, size_t var, int power = 1) {
        Polynomial p = zero(ring);
        if (var >= ring->arity()) fail(Error::Code::ArityMismatch, "variable index out of range");
        K one = FieldTraits<K>::one_like(K());
        p.terms_.emplace(Monomial::unit(ring->arity(), var, power), std::move(one));
        return p;
    }
    static Polynomial term(RingPtr ring, Monomial m, K c) {
        Polynomial p = zero(std::move(ring));
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    // Caller must ensure is_constant(); zero maps to a zero coefficient.
    K constant_value() const {
        if (terms_.empty()) return FieldTraits<K>::zero_like(K());
        return terms_.begin()->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    int degree_in(size_t var) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
        return d;
    }
    bool involves(size_t var) const {
        for (const auto& [m, c] : terms_)
            if (m.e[var] > 0) return true;
        return false;
    }

    void add_term(Monomial m, K c) {
        if (FieldTraits<K>::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second = it->second + c;
            if (FieldTraits<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    const K* coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_same_ring(ring_, o.ring_);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator-() const {
        Polynomial r = zero(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, FieldTraits<K>::zero_like(c) - c);
        return r;
    }
    Polynomial operator*(const Polynomial& o) const {
        check_same_ring(ring_, o.ring_);
        Polynomial r = zero(ring_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial scaled(const K& c) const {
        Polynomial r = zero(ring_);
        if (FieldTraits<K>::is_zero(c)) return r;
        for (const auto& [m, a] : terms_) r.add_term(m, a * c);
        return r;
    }
    Polynomial mul_term(const Monomial& m, const K& c) const {
        Polynomial r = zero(ring_);
        if (FieldTraits<K>::is_zero(c)) return r;
        for (const auto& [mm, a] : terms_) r.terms_.emplace(mm * m, a * c);
        return r;
    }
    Polynomial pow(int n) const {
        Polynomial r = constant(ring_, FieldTraits<K>::one_like(K()));
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    Polynomial differentiate(size_t var, int order = 1) const {
        if (var >= ring_->arity()) fail(Error::Code::ArityMismatch, "variable index out of range");
        Polynomial f = *this;
        for (int k = 0; k < order; ++k) {
            Polynomial r = zero(ring_);
            for (const auto& [m, c] : f.terms_) {
                if (m.e[var] == 0) continue;
                Monomial mm(m);
                mm.e[var] -= 1;
                K factor = c;
                // multiply by the exponent within K
                K acc = FieldTraits<K>::zero_like(c);
                for (int i = 0; i < m.e[var]; ++i) acc = acc + factor;
                r.add_term(std::move(mm), std::move(acc));
            }
            f = std::move(r);
        }
        return f;
    }

    // Horner-free evaluation: fine at desk scale.  `conv` maps K into the
    // evaluation field E.
    template <class E, class Conv>
    E evaluate_with(std::span<const E> point, Conv conv) const {
        if (point.size() != ring_->arity())
            fail(Error::Code::ArityMismatch, "point arity does not match ring");
        E acc = E(0);
        for (const auto& [m, c] : terms_) {
            E t = conv(c);
            for (size_t i = 0; i < m.arity(); ++i)
                for (int k = 0; k < m.e[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    std::pair<Monomial, K> lead_term(const MonomialOrder& ord) const {
        if (terms_.empty()) fail(Error::Code::BadInput, "lead term of zero polynomial");
        if (ord.kind() == MonomialOrder::Kind::Grevlex) {
            auto it = terms_.rbegin();
            return {it->first, it->second};
        }
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    void erase_term(const Monomial& m) { terms_.erase(m); }

    bool operator==(const Polynomial& o) const {
        if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
        if (ring_.get() != o.ring_.get() && !ring_->same_as(*o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first) return false;
            if (!FieldTraits<K>::is_zero(it->second - jt->second)) return false;
        }
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Terms printed grevlex-descending: "x1^2 - x2*x3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string cs = FieldTraits<K>::to_string(it->second);
            bool neg = !cs.empty() && cs[0] == '-' && !FieldTraits<K>::compound(it->second);
            if (neg) cs = cs.substr(1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string ms = monomial_to_string(it->first, *ring_);
            if (ms.empty()) {
                if (FieldTraits<K>::compound(it->second)) out += "(" + cs + ")";
                else out += cs;
            } else if (cs == "1") {
                out += ms;
            } else if (FieldTraits<K>::compound(it->second)) {
                out += "(" + cs + ")*" + ms;
            } else {
                out += cs + "*" + ms;
            }
        }
        return out;
    }

private:
    RingPtr ring_;
    Terms terms_;
};

using QPoly = Polynomial<Rational>;
using CPoly = Polynomial<Complex>;

inline CPoly to_complex_poly(const QPoly& f, const RingPtr& cring) {
    CPoly r = CPoly::zero(cring);
    for (const auto& [m, c] : f.terms()) r.add_term(m, Complex(c.to_double(), 0.0));
    return r;
}

} // namespace noethops
