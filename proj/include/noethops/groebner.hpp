#pragma once

#include <algorithm>
#include <vector>

#include "noethops/polynomial.hpp"

namespace noethops {

// Remainder of f on division by G: no term of the result is divisible by a
// lead term of G, and f - result lies in the ideal generated by G.
// Deterministic: the largest reducible term is reduced against the first
// matching divisor.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G,
                          const MonomialOrder& ord) {
    Polynomial<K> p = f;
    Polynomial<K> r = Polynomial<K>::zero(f.ring());
    std::vector<std::pair<Monomial, K>> leads;
    leads.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        leads.push_back(g.lead_term(ord));
    }
    while (!p.is_zero()) {
        auto [m, c] = p.lead_term(ord);
        bool reduced = false;
        size_t li = 0;
        for (size_t gi = 0; gi < G.size(); ++gi) {
            if (G[gi].is_zero()) continue;
            const auto& [gm, gc] = leads[li];
            if (gm.divides(m)) {
                K q = c * FieldTraits<K>::inverse(gc);
                p = p - G[gi].mul_term(m.divide(gm), q);
                reduced = true;
                break;
            }
            ++li;
        }
        if (!reduced) {
            r.add_term(m, c);
            p.erase_term(m);
        }
    }
    return r;
}

namespace detail {

struct SPair {
    size_t i, j;
    Monomial lcm;
};

// Gebauer-Moeller pair update on appending h to the basis.
template <class K>
void gm_update(std::vector<Polynomial<K>>& G, std::vector<Monomial>& leads,
               std::vector<SPair>& pairs, Polynomial<K> h, const MonomialOrder& ord) {
    auto [hm, hc] = h.lead_term(ord);
    if (!FieldTraits<K>::is_zero(hc - FieldTraits<K>::one_like(hc)))
        h = h.scaled(FieldTraits<K>::inverse(hc));
    size_t t = G.size();

    struct Cand {
        size_t i;
        Monomial lcm;
        bool coprime;
        bool alive = true;
    };
    std::vector<Cand> cand;
    cand.reserve(t);
    for (size_t i = 0; i < t; ++i) {
        Monomial l = Monomial::lcm(leads[i], hm);
        bool coprime = l.degree() == leads[i].degree() + hm.degree();
        cand.push_back({i, std::move(l), coprime});
    }
    // keep a candidate when coprime, or when no other live candidate's lcm
    // divides it (earlier candidates win ties)
    std::vector<Cand> kept;
    for (size_t a = 0; a < cand.size(); ++a) {
        bool dominated = false;
        if (!cand[a].coprime) {
            for (const auto& k : kept) {
                if (k.lcm.divides(cand[a].lcm)) { dominated = true; break; }
            }
            if (!dominated) {
                for (size_t b = a + 1; b < cand.size(); ++b) {
                    if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm) {
                        dominated = true;
                        break;
                    }
                }
            }
        }
        if (!dominated) kept.push_back(cand[a]);
    }
    // drop old pairs made redundant by h
    std::vector<SPair> surviving;
    surviving.reserve(pairs.size());
    for (auto& pr : pairs) {
        bool drop = hm.divides(pr.lcm) && Monomial::lcm(leads[pr.i], hm) != pr.lcm &&
                    Monomial::lcm(leads[pr.j], hm) != pr.lcm;
        if (!drop) surviving.push_back(std::move(pr));
    }
    pairs = std::move(surviving);
    for (auto& k : kept) {
        if (k.coprime) continue; // Buchberger's first criterion
        pairs.push_back({k.i, t, std::move(k.lcm)});
    }
    G.push_back(std::move(h));
    leads.push_back(std::move(hm));
}

} // namespace detail

// Reduced Groebner basis: pairwise non-divisible monic lead terms with
// reduced tails, sorted by ascending lead term.  Buchberger with
// Gebauer-Moeller pair elimination and normal (smallest-lcm) selection.
template <class K>
std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& gens,
                                      const MonomialOrder& ord) {
    static_assert(FieldTraits<K>::exact, "Groebner bases need exact coefficients");
    std::vector<Polynomial<K>> G;
    std::vector<Monomial> leads;
    std::vector<detail::SPair> pairs;

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Polynomial<K> r = normal_form(g, G, ord);
        if (!r.is_zero()) detail::gm_update(G, leads, pairs, std::move(r), ord);
    }

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (ord.less(pairs[k].lcm, pairs[best].lcm)) best = k;
        detail::SPair pr = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<long>(best));

        const auto& f = G[pr.i];
        const auto& g = G[pr.j];
        Monomial mf = pr.lcm.divide(leads[pr.i]);
        Monomial mg = pr.lcm.divide(leads[pr.j]);
        K one = FieldTraits<K>::one_like(f.lead_term(ord).second);
        Polynomial<K> spoly = f.mul_term(mf, one) - g.mul_term(mg, one);
        Polynomial<K> r = normal_form(spoly, G, ord);
        if (!r.is_zero()) detail::gm_update(G, leads, pairs, std::move(r), ord);
    }

    // minimalize: drop entries whose lead is divisible by another lead
    std::vector<bool> keep(G.size(), true);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (leads[j].divides(leads[i]) && (leads[j] != leads[i] || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Polynomial<K>> minimal;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) minimal.push_back(G[i]);

    // tail-reduce each element against the rest
    std::vector<Polynomial<K>> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<K>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial<K> r = normal_form(minimal[i], others, ord);
        if (!r.is_zero()) {
            auto [m, c] = r.lead_term(ord);
            if (!FieldTraits<K>::is_zero(c - FieldTraits<K>::one_like(c)))
                r = r.scaled(FieldTraits<K>::inverse(c));
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
        return ord.less(a.lead_term(ord).first, b.lead_term(ord).first);
    });
    return reduced;
}

} // namespace noethops
