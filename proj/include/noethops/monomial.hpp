#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "noethops/error.hpp"

namespace noethops {

// Exponent vector; the same type serves ring monomials x^a and
// differential monomials d^a.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(size_t arity) : e(arity, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    size_t arity() const { return e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    int operator[](size_t i) const { return e[i]; }
    bool is_one() const {
        for (int x : e) if (x != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // this / o, assuming o divides this
    Monomial divide(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }
    static Monomial unit(size_t arity, size_t var, int power = 1) {
        Monomial r(arity);
        r.e[var] = power;
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

// a < b in graded reverse lexicographic order (x0 > x1 > ... within a degree).
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (size_t i = a.e.size(); i-- > 0;) {
        int d = a.e[i] - b.e[i];
        if (d != 0) return d > 0;
    }
    return false;
}

// Stateless comparator used for canonical term storage.
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Elimination, WeightedDegree };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    // Monomials touching a block variable rank above all block-free monomials.
    static MonomialOrder elimination(std::vector<int> block_vars) {
        MonomialOrder o(Kind::Elimination);
        o.block_ = std::move(block_vars);
        return o;
    }
    static MonomialOrder weighted(std::vector<long> weights) {
        MonomialOrder o(Kind::WeightedDegree);
        o.weights_ = std::move(weights);
        return o;
    }

    Kind kind() const { return kind_; }

    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case Kind::Grevlex:
            return grevlex_less(a, b);
        case Kind::Lex:
            for (size_t i = 0; i < a.e.size(); ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
            return false;
        case Kind::Elimination: {
            int ba = 0, bb = 0;
            for (int v : block_) { ba += a.e[v]; bb += b.e[v]; }
            if (ba != bb) return ba < bb;
            return grevlex_less(a, b);
        }
        case Kind::WeightedDegree: {
            long wa = 0, wb = 0;
            for (size_t i = 0; i < a.e.size(); ++i) {
                wa += weights_[i] * a.e[i];
                wb += weights_[i] * b.e[i];
            }
            if (wa != wb) return wa < wb;
            return grevlex_less(a, b);
        }
        }
        return false;
    }

    // Cache key; distinct orders get distinct keys.
    std::string key() const {
        switch (kind_) {
        case Kind::Grevlex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::Elimination: {
            std::string s = "elim:";
            for (int v : block_) s += std::to_string(v) + ",";
            return s;
        }
        case Kind::WeightedDegree: {
            std::string s = "wt:";
            for (long w : weights_) s += std::to_string(w) + ",";
            return s;
        }
        }
        return "?";
    }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<int> block_;
    std::vector<long> weights_;
};

// All monomials in `arity` variables of total degree exactly d, grevlex ascending.
std::vector<Monomial> monomials_of_degree(size_t arity, int d);
// All monomials of total degree <= d, grevlex ascending.
std::vector<Monomial> monomials_up_to_degree(size_t arity, int d);

} // namespace noethops
