#include "noethops/split.hpp"

#include <algorithm>
#include <functional>

namespace noethops {

namespace {

// ascending-size-index combinations of {0..n-1} of size k, lexicographic
void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

} // namespace

VariableSplit independent_sets(const Ideal& P) {
    if (P.is_unit_ideal())
        fail(Error::Code::BadInput, "independent sets are undefined for the unit ideal");
    const auto& gb = P.groebner_basis(MonomialOrder::grevlex());
    int n = static_cast<int>(P.ring()->arity());
    std::vector<std::vector<int>> supports;
    for (const auto& g : gb) {
        auto [m, c] = g.lead_term(MonomialOrder::grevlex());
        std::vector<int> sup;
        for (int i = 0; i < n; ++i)
            if (m.e[i] > 0) sup.push_back(i);
        supports.push_back(std::move(sup));
    }

    for (int size = n; size >= 0; --size) {
        std::vector<std::vector<int>> cands;
        combinations(n, size, cands);
        for (const auto& cand : cands) {
            bool ok = true;
            // a lead-term support entirely inside the candidate kills it
            for (const auto& sup : supports) {
                if (sup.empty()) { ok = false; break; }
                bool inside = true;
                for (int v : sup)
                    if (!std::binary_search(cand.begin(), cand.end(), v)) { inside = false; break; }
                if (inside) { ok = false; break; }
            }
            if (ok) {
                VariableSplit s;
                s.independent = cand;
                for (int v = 0; v < n; ++v)
                    if (!std::binary_search(cand.begin(), cand.end(), v)) s.dependent.push_back(v);
                return s;
            }
        }
    }
    fail(Error::Code::BadInput,
         "no maximal independent subset of the coordinate variables attains dim(R/P); "
         "apply a linear substitution (--subst) and retry");
}

SRingContext::SRingContext(RingPtr original, VariableSplit split)
    : original_(std::move(original)), split_(std::move(split)) {
    std::vector<std::string> tnames, snames;
    for (int v : split_.independent) tnames.push_back(original_->var_name(v));
    for (int v : split_.dependent) snames.push_back(original_->var_name(v));
    tring_ = Ring::make(std::move(tnames), CoeffField::Rational);
    sring_ = Ring::make(std::move(snames), CoeffField::RationalFunction, tring_);
}

RFPoly SRingContext::to_sring(const QPoly& f) const {
    RFPoly out = RFPoly::zero(sring_);
    for (const auto& [m, c] : f.terms()) {
        Monomial dep(split_.dependent.size());
        Monomial t(split_.independent.size());
        for (size_t i = 0; i < split_.dependent.size(); ++i)
            dep.e[i] = m.e[split_.dependent[i]];
        for (size_t i = 0; i < split_.independent.size(); ++i)
            t.e[i] = m.e[split_.independent[i]];
        RationalFunction coeff(QPoly::term(tring_, std::move(t), c));
        out.add_term(std::move(dep), std::move(coeff));
    }
    return out;
}

QPoly SRingContext::t_poly_to_original(const QPoly& f) const {
    QPoly out = QPoly::zero(original_);
    for (const auto& [m, c] : f.terms()) {
        Monomial full(original_->arity());
        for (size_t i = 0; i < split_.independent.size(); ++i)
            full.e[split_.independent[i]] = m.e[i];
        out.add_term(std::move(full), c);
    }
    return out;
}

QPoly SRingContext::from_sring(const RFPoly& f, QPoly* den_out) const {
    QPoly lcm = QPoly::constant(tring_, Rational(1));
    for (const auto& [m, c] : f.terms()) lcm = multivariate_lcm(lcm, c.den());
    QPoly out = QPoly::zero(original_);
    for (const auto& [m, c] : f.terms()) {
        QPoly tcoeff = c.num() * *exact_divide(lcm, c.den());
        for (const auto& [tm, tc] : tcoeff.terms()) {
            Monomial full(original_->arity());
            for (size_t i = 0; i < split_.dependent.size(); ++i)
                full.e[split_.dependent[i]] = m.e[i];
            for (size_t i = 0; i < split_.independent.size(); ++i)
                full.e[split_.independent[i]] = tm.e[i];
            out.add_term(std::move(full), tc);
        }
    }
    if (den_out) *den_out = t_poly_to_original(lcm);
    return out;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads, size_t arity,
                                         bool* finite) {
    *finite = true;
    if (arity == 0) {
        // the quotient is the ground field unless 1 is a lead term
        for (const auto& l : leads)
            if (l.is_one()) return {};
        return {Monomial(arity)};
    }
    std::vector<int> bound(arity, -1);
    for (const auto& l : leads) {
        size_t var = arity;
        bool pure = true;
        for (size_t i = 0; i < arity; ++i) {
            if (l.e[i] > 0) {
                if (var != arity) { pure = false; break; }
                var = i;
            }
        }
        if (l.is_one()) return {}; // unit ideal
        if (pure && var < arity)
            bound[var] = bound[var] < 0 ? l.e[var] : std::min(bound[var], l.e[var]);
    }
    for (size_t i = 0; i < arity; ++i) {
        if (bound[i] < 0) {
            *finite = false;
            return {};
        }
    }
    // enumerate below the pure-power box, filter by divisibility
    std::vector<Monomial> out;
    Monomial cur(arity);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == arity) {
            for (const auto& l : leads)
                if (l.divides(cur)) return;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k < bound[pos]; ++k) {
            cur.e[pos] = k;
            rec(pos + 1);
        }
        cur.e[pos] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(), GrevlexLess{});
    return out;
}

int multiplicity_over_prime(const Ideal& Q, const Ideal& P, const VariableSplit& split) {
    check_same_ring(Q.ring(), P.ring());
    SRingContext ctx(Q.ring(), split);
    auto count_std = [&](const Ideal& I) {
        std::vector<RFPoly> gens;
        for (const auto& g : I.generators()) gens.push_back(ctx.to_sring(g));
        auto gb = buchberger(gens, MonomialOrder::grevlex());
        std::vector<Monomial> leads;
        for (const auto& g : gb) leads.push_back(g.lead_term(MonomialOrder::grevlex()).first);
        bool finite = false;
        auto basis = standard_monomials(leads, ctx.sring()->arity(), &finite);
        if (!finite || basis.empty()) fail(Error::Code::NotPrimary, "input not primary to P");
        return static_cast<int>(basis.size());
    };
    // length over the local ring: K(t)-dimension of S/QS per K(t)-dimension
    // of the residue field F = S/PS
    int total = count_std(Q);
    int fdim = count_std(P);
    if (total % fdim != 0) fail(Error::Code::NotPrimary, "input not primary to P");
    return total / fdim;
}

} // namespace noethops
