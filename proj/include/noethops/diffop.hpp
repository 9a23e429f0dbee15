#pragma once

#include <map>
#include <string>
#include <vector>

#include "noethops/polynomial.hpp"
#include "noethops/rational_function.hpp"

namespace noethops {

inline std::string dmonomial_to_string(const Monomial& m, const Ring& ring) {
    std::string s;
    for (size_t i = 0; i < m.arity(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "d" + ring.var_name(i);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

namespace detail {

// shared term-joining for the operator printers
inline void append_op_term(std::string& out, std::string cs, bool compound, const std::string& ms,
                           bool force_explicit_one) {
    bool neg = !cs.empty() && cs[0] == '-' && !compound;
    if (neg) cs = cs.substr(1);
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (ms.empty()) {
        out += compound ? "(" + cs + ")" : cs;
    } else if (cs == "1" && !force_explicit_one) {
        out += ms;
    } else if (compound) {
        out += "(" + cs + ")*" + ms;
    } else {
        out += cs + "*" + ms;
    }
}

} // namespace detail

// Differential operator with polynomial coefficients: a finitely supported
// map from d-monomials to elements of R.
template <class K>
class DiffOpT {
public:
    using Coeff = Polynomial<K>;
    using Terms = std::map<Monomial, Coeff, GrevlexLess>;

    DiffOpT() = default;
    explicit DiffOpT(RingPtr ring) : ring_(std::move(ring)) {}
    static DiffOpT identity(RingPtr ring, const K& one) {
        DiffOpT op(ring);
        op.add_term(Monomial(op.ring_->arity()), Coeff::constant(op.ring_, one));
        return op;
    }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(Monomial m, Coeff c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    const Coeff* coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }

    DiffOpT operator+(const DiffOpT& o) const {
        check_same_ring(ring_, o.ring_);
        DiffOpT r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    DiffOpT operator-() const {
        DiffOpT r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    DiffOpT operator-(const DiffOpT& o) const { return *this + (-o); }
    DiffOpT scaled(const Coeff& f) const {
        DiffOpT r(ring_);
        for (const auto& [m, c] : terms_) r.add_term(m, c * f);
        return r;
    }

    // A . f = sum coeff_a * d^a f
    Coeff apply(const Coeff& f) const {
        check_same_ring(ring_, f.ring());
        Coeff acc = Coeff::zero(ring_);
        for (const auto& [m, c] : terms_) {
            Coeff g = f;
            for (size_t v = 0; v < m.arity() && !g.is_zero(); ++v)
                if (m.e[v] > 0) g = g.differentiate(v, m.e[v]);
            acc = acc + c * g;
        }
        return acc;
    }

    bool constant_coefficients() const {
        for (const auto& [m, c] : terms_)
            if (!c.is_constant()) return false;
        return true;
    }

    // Terms grevlex-ascending; identity prints "1", zero prints "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_)
            detail::append_op_term(out, c.to_string(), c.term_count() > 1,
                                   dmonomial_to_string(m, *ring_), false);
        return out;
    }

private:
    RingPtr ring_;
    Terms terms_;
};

using DiffOp = DiffOpT<Rational>;

// Constant-coefficient operator over a field K; the basis elements of dual
// spaces live here.
template <class K>
class ConstDiffOp {
public:
    using Terms = std::map<Monomial, K, GrevlexLess>;

    ConstDiffOp() = default;
    explicit ConstDiffOp(RingPtr ring) : ring_(std::move(ring)) {}

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
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

    ConstDiffOp operator+(const ConstDiffOp& o) const {
        ConstDiffOp r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    ConstDiffOp scaled(const K& f) const {
        ConstDiffOp r(ring_);
        for (const auto& [m, c] : terms_) r.add_term(m, c * f);
        return r;
    }

    // Right action of x_v: contraction c*d^a -> c*a_v*d^(a - e_v).
    ConstDiffOp contract(size_t v) const {
        ConstDiffOp r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m.e[v] == 0) continue;
            Monomial mm(m);
            mm.e[v] -= 1;
            K acc = FieldTraits<K>::zero_like(c);
            for (int k = 0; k < m.e[v]; ++k) acc = acc + c;
            r.add_term(std::move(mm), std::move(acc));
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            detail::append_op_term(out, FieldTraits<K>::to_string(c), FieldTraits<K>::compound(c),
                                   dmonomial_to_string(m, *ring_), false);
        }
        return out;
    }

private:
    RingPtr ring_;
    Terms terms_;
};

// Public right action; defined for constant-coefficient operators only.
template <class K>
DiffOpT<K> right_action(size_t var, const DiffOpT<K>& A) {
    if (!A.constant_coefficients())
        fail(Error::Code::BadInput, "right action implemented for constant coefficients only");
    DiffOpT<K> r(A.ring());
    for (const auto& [m, c] : A.terms()) {
        if (m.e[var] == 0) continue;
        Monomial mm(m);
        mm.e[var] -= 1;
        r.add_term(std::move(mm), c.scaled(K(m.e[var])));
    }
    return r;
}

// Operator with rational-function coefficients in the independent
// variables, produced by the numerical interpolation pipeline.
class InterpolatedDiffOp {
public:
    InterpolatedDiffOp() = default;
    explicit InterpolatedDiffOp(RingPtr ring) : ring_(std::move(ring)) {}

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, RationalFunction, GrevlexLess>& terms() const { return terms_; }
    void add_term(Monomial m, RationalFunction c) {
        if (c.is_zero()) return;
        terms_.emplace(std::move(m), std::move(c));
    }

    // every coefficient printed explicitly, pivot included: "1*dx2 + x3*dx1"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_)
            detail::append_op_term(out, c.to_string(), FieldTraits<RationalFunction>::compound(c),
                                   dmonomial_to_string(m, *ring_), true);
        return out;
    }

private:
    RingPtr ring_;
    std::map<Monomial, RationalFunction, GrevlexLess> terms_;
};

} // namespace noethops
