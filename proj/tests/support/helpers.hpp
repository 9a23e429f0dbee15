#pragma once

#include <random>
#include <vector>

#include "noethops/ideal.hpp"

namespace noethops::testing {

inline QPoly var(const RingPtr& r, size_t i) { return QPoly::variable(r, i); }
inline QPoly cst(const RingPtr& r, long c) { return QPoly::constant(r, Rational(c)); }

inline QPoly random_qpoly(const RingPtr& r, std::mt19937& rng, int max_deg = 3,
                          int max_terms = 4) {
    std::uniform_int_distribution<int> nd(0, max_terms);
    std::uniform_int_distribution<int> ed(0, max_deg);
    std::uniform_int_distribution<long> cd(-5, 5);
    QPoly f = QPoly::zero(r);
    int terms = nd(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m(r->arity());
        int budget = ed(rng);
        for (size_t i = 0; i < r->arity() && budget > 0; ++i) {
            std::uniform_int_distribution<int> pick(0, budget);
            m.e[i] = pick(rng);
            budget -= m.e[i];
        }
        f.add_term(std::move(m), Rational(cd(rng)));
    }
    return f;
}

// every S-polynomial of the basis reduces to zero
inline bool buchberger_criterion(const std::vector<QPoly>& gb, const MonomialOrder& ord) {
    for (size_t i = 0; i < gb.size(); ++i) {
        for (size_t j = i + 1; j < gb.size(); ++j) {
            auto [mi, ci] = gb[i].lead_term(ord);
            auto [mj, cj] = gb[j].lead_term(ord);
            Monomial l = Monomial::lcm(mi, mj);
            QPoly s = gb[i].mul_term(l.divide(mi), ci.inverse()) -
                      gb[j].mul_term(l.divide(mj), cj.inverse());
            if (!normal_form(s, gb, ord).is_zero()) return false;
        }
    }
    return true;
}

} // namespace noethops::testing
