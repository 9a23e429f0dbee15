#include "noethops/noetherian.hpp"

#include <map>

namespace noethops {

namespace {

Monomial expand_to_full(const Monomial& m, const std::vector<int>& positions, size_t arity) {
    Monomial full(arity);
    for (size_t i = 0; i < positions.size(); ++i) full.e[positions[i]] = m.e[i];
    return full;
}

Monomial restrict_to(const Monomial& full, const std::vector<int>& positions) {
    Monomial m(positions.size());
    for (size_t i = 0; i < positions.size(); ++i) m.e[i] = full.e[positions[i]];
    return m;
}

RingPtr make_yring(const Ideal& P, const VariableSplit& split) {
    std::vector<std::string> names;
    for (int v : split.dependent) names.push_back("h" + P.ring()->var_name(v));
    return Ring::make(std::move(names), CoeffField::Residue);
}

// colength of an ideal in F[y] given its reduced basis, -1 when infinite
int colength(const std::vector<FPoly>& gb, size_t arity) {
    std::vector<Monomial> leads;
    for (const auto& g : gb) leads.push_back(g.lead_term(MonomialOrder::grevlex()).first);
    bool finite = false;
    auto basis = standard_monomials(leads, arity, &finite);
    if (!finite) return -1;
    return static_cast<int>(basis.size());
}

ResidueElem factorial_scalar(const ResidueFieldPtr& F, const Monomial& m) {
    Rational v(1);
    for (size_t i = 0; i < m.arity(); ++i)
        for (int k = 2; k <= m.e[i]; ++k) v = v * Rational(k);
    return F->from_scalar(RationalFunction::constant(F->ctx().tring(), v));
}

// kernel of the symbolic Macaulay matrix over F: columns are the given
// ddx-monomials, rows are dependent-variable shifts m*g with
// deg(m*g) <= d + maxdeg(gens), entries are classes of d^alpha(m*g) in F
std::pair<std::vector<Monomial>, std::vector<std::vector<ResidueElem>>> residue_macaulay_kernel(
    const std::vector<QPoly>& gens, const ResidueFieldPtr& F, const VariableSplit& split,
    std::vector<Monomial> cols, int d) {
    const RingPtr& ring = gens.front().ring();
    size_t arity = ring->arity();
    int maxdeg = 0;
    for (const auto& g : gens)
        if (!g.is_zero()) maxdeg = std::max(maxdeg, g.total_degree());

    std::vector<QPoly> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int bound = std::max(d + maxdeg - g.total_degree(), 0);
        for (const auto& sm : monomials_up_to_degree(split.dependent.size(), bound)) {
            Monomial shift = expand_to_full(sm, split.dependent, arity);
            rows.push_back(g.mul_term(shift, Rational(1)));
        }
    }

    ResidueElem zero = F->zero();
    DenseMatrix<ResidueElem> m(rows.size(), cols.size(), zero);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < cols.size(); ++j) {
            QPoly df = rows[i];
            for (size_t v = 0; v < arity && !df.is_zero(); ++v)
                if (cols[j].e[v] > 0) df = df.differentiate(v, cols[j].e[v]);
            m.at(i, j) = F->from_qpoly(df);
        }
    }
    auto vecs = exact_kernel(std::move(m), zero, F->one());
    return {std::move(cols), std::move(vecs)};
}

// lift kernel vectors over F to operators with polynomial coefficients:
// clear the common QQ[t] denominator, map into R, reduce mod P
std::vector<DiffOp> lift_operators(const std::vector<Monomial>& cols_full,
                                   const std::vector<std::vector<ResidueElem>>& vecs,
                                   const ResidueFieldPtr& F, const Ideal& P) {
    const SRingContext& ctx = F->ctx();
    const auto& gbP = P.groebner_basis(MonomialOrder::grevlex());
    std::vector<DiffOp> ops;
    for (const auto& vec : vecs) {
        QPoly lcm = QPoly::constant(ctx.tring(), Rational(1));
        for (const auto& c : vec)
            for (const auto& [m, rf] : c.nf().terms()) lcm = multivariate_lcm(lcm, rf.den());
        RationalFunction scale(lcm);
        DiffOp op(P.ring());
        for (size_t j = 0; j < vec.size(); ++j) {
            if (vec[j].is_zero()) continue;
            RFPoly cleared = RFPoly::zero(ctx.sring());
            for (const auto& [m, rf] : vec[j].nf().terms()) cleared.add_term(m, rf * scale);
            QPoly coeff = normal_form(ctx.from_sring(cleared), gbP, MonomialOrder::grevlex());
            op.add_term(cols_full[j], coeff);
        }
        if (!op.is_zero()) ops.push_back(std::move(op));
    }
    return ops;
}

HilbPoint map_to_punctual_hilbert_ctx(const Ideal& Q, const GammaContext& ctx,
                                      const NoetherianOptions& opts) {
    size_t c = ctx.split.dependent.size();
    std::vector<FPoly> gamma_gens;
    for (const auto& g : Q.generators()) gamma_gens.push_back(gamma_embed(g, ctx));

    int prev = -1;
    std::vector<FPoly> prev_gb;
    for (int N = 1; N <= opts.colength_cap; ++N) {
        std::vector<FPoly> gens = gamma_gens;
        for (const auto& m : monomials_of_degree(c, N))
            gens.push_back(FPoly::term(ctx.yring, m, ctx.field->one()));
        auto gb = buchberger(gens, MonomialOrder::grevlex());
        int len = colength(gb, c);
        if (len < 0) fail(Error::Code::NotPrimary, "Q not primary to P");
        if (len == prev) {
            HilbPoint hp;
            hp.field = ctx.field;
            hp.yring = ctx.yring;
            hp.idealJ = std::move(prev_gb);
            hp.multiplicity = len;
            hp.split = ctx.split;
            return hp;
        }
        prev = len;
        prev_gb = std::move(gb);
    }
    fail(Error::Code::NotPrimary, "Q not primary to P");
}

// complete dual of J at the y-origin over F; J contains <y>^m so degree
// m-1 suffices
std::pair<std::vector<Monomial>, std::vector<std::vector<ResidueElem>>> hilb_inverse_system(
    const HilbPoint& hp) {
    size_t c = hp.split.dependent.size();
    int m = hp.multiplicity;
    auto cols = monomials_up_to_degree(c, m - 1);
    int maxdeg = 0;
    for (const auto& g : hp.idealJ) maxdeg = std::max(maxdeg, g.total_degree());

    std::vector<FPoly> rows;
    for (const auto& g : hp.idealJ) {
        int bound = std::max(m - 1 + maxdeg - g.total_degree(), 0);
        for (const auto& sm : monomials_up_to_degree(c, bound)) {
            FPoly row = g.mul_term(sm, hp.field->one());
            bool interacts = false;
            for (const auto& [mm, cc] : row.terms())
                if (mm.degree() < m) { interacts = true; break; }
            if (interacts) rows.push_back(std::move(row));
        }
    }

    ResidueElem zero = hp.field->zero();
    DenseMatrix<ResidueElem> mat(rows.size(), cols.size(), zero);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            if (const ResidueElem* cc = rows[i].coeff(cols[j]))
                mat.at(i, j) = *cc * factorial_scalar(hp.field, cols[j]);
    auto vecs = exact_kernel(std::move(mat), zero, hp.field->one());
    return {std::move(cols), std::move(vecs)};
}

} // namespace

GammaContext make_gamma_context(const Ideal& P, const VariableSplit& split) {
    GammaContext ctx;
    ctx.split = split;
    ctx.field = ResidueField::make(P, split);
    ctx.yring = make_yring(P, split);
    return ctx;
}

GammaContext make_gamma_context(const Ideal& P) {
    return make_gamma_context(P, independent_sets(P));
}

FPoly gamma_embed(const QPoly& f, const GammaContext& ctx) {
    const RingPtr& ring = f.ring();
    size_t arity = ring->arity();
    size_t c = ctx.split.dependent.size();

    // images of the ring variables in F[y]
    std::vector<FPoly> images;
    images.reserve(arity);
    for (size_t v = 0; v < arity; ++v) {
        ResidueElem cls = ctx.field->from_qpoly(QPoly::variable(ring, v));
        FPoly img = FPoly::constant(ctx.yring, cls);
        for (size_t i = 0; i < c; ++i) {
            if (ctx.split.dependent[i] == static_cast<int>(v)) {
                img.add_term(Monomial::unit(c, i), ctx.field->one());
                break;
            }
        }
        images.push_back(std::move(img));
    }

    FPoly out = FPoly::zero(ctx.yring);
    for (const auto& [m, coeff] : f.terms()) {
        FPoly term = FPoly::constant(
            ctx.yring,
            ctx.field->from_scalar(RationalFunction::constant(ctx.field->ctx().tring(), coeff)));
        for (size_t v = 0; v < arity; ++v)
            for (int k = 0; k < m.e[v]; ++k) term = term * images[v];
        out = out + term;
    }
    return out;
}

HilbPoint map_to_punctual_hilbert(const Ideal& Q, const Ideal& P, const NoetherianOptions& opts) {
    check_same_ring(Q.ring(), P.ring());
    if (opts.verify_input) verify_primary_inputs(Q, P);
    return map_to_punctual_hilbert_ctx(Q, make_gamma_context(P), opts);
}

NoetherianCertificate noetherian_operators_punctual(const Ideal& Q, const Ideal& P,
                                                    const NoetherianOptions& opts) {
    check_same_ring(Q.ring(), P.ring());
    if (opts.verify_input) verify_primary_inputs(Q, P);
    GammaContext ctx = make_gamma_context(P);
    HilbPoint hp = map_to_punctual_hilbert_ctx(Q, ctx, opts);
    auto [ycols, vecs] = hilb_inverse_system(hp);
    if (static_cast<int>(vecs.size()) != hp.multiplicity)
        fail(Error::Code::NoStabilization, "inverse system dimension disagrees with multiplicity");

    std::vector<Monomial> cols_full;
    for (const auto& m : ycols)
        cols_full.push_back(expand_to_full(m, ctx.split.dependent, Q.ring()->arity()));

    return NoetherianCertificate{P, lift_operators(cols_full, vecs, ctx.field, P),
                                 hp.multiplicity, ctx.split};
}

NoetherianCertificate noetherian_operators_macaulay(const Ideal& I, const Ideal& P,
                                                    const NoetherianOptions& opts) {
    check_same_ring(I.ring(), P.ring());
    VariableSplit split = independent_sets(P);
    ResidueFieldPtr F = ResidueField::make(P, split);
    size_t arity = I.ring()->arity();

    auto dep_columns = [&](int d) {
        std::vector<Monomial> cols;
        for (const auto& m : monomials_up_to_degree(split.dependent.size(), d))
            cols.push_back(expand_to_full(m, split.dependent, arity));
        return cols;
    };

    auto prev = residue_macaulay_kernel(I.generators(), F, split, dep_columns(0), 0);
    for (int d = 1; d <= opts.degree_cap; ++d) {
        auto cur = residue_macaulay_kernel(I.generators(), F, split, dep_columns(d), d);
        if (cur.second.size() == prev.second.size()) {
            return NoetherianCertificate{P, lift_operators(prev.first, prev.second, F, P),
                                         static_cast<int>(prev.second.size()), split};
        }
        prev = std::move(cur);
    }
    fail(Error::Code::NoStabilization, "Macaulay kernel did not stabilize by the degree cap");
}

std::vector<ConstDiffOp<Complex>> specialized_noetherian_operators(
    const Ideal& I, const Point& p, const std::vector<int>& dependent, const DualOptions& opts) {
    if (dependent.empty()) fail(Error::Code::BadInput, "the dependent set must be specified");
    if (p.arity() != I.ring()->arity())
        fail(Error::Code::ArityMismatch, "point arity does not match the ring");
    RingPtr cring = complex_ring_like(I.ring());
    std::vector<CPoly> gens = complex_generators(I, cring);
    for (size_t v = 0; v < cring->arity(); ++v) {
        if (std::find(dependent.begin(), dependent.end(), static_cast<int>(v)) != dependent.end())
            continue;
        CPoly slice = CPoly::variable(cring, v);
        slice.add_term(Monomial(cring->arity()), -p.coords[v]);
        gens.push_back(std::move(slice));
    }
    DualSpace<Complex> D = zero_dimensional_dual(p.coords, gens, opts);
    return D.basis;
}

NoetherianCertificate noetherian_operators_hybrid(const Ideal& I, const Ideal& P,
                                                  const NoetherianOptions& opts,
                                                  std::optional<Point> seed_point) {
    check_same_ring(I.ring(), P.ring());
    VariableSplit split = independent_sets(P);
    ResidueFieldPtr F = ResidueField::make(P, split);

    SamplerConfig cfg = opts.sampler;
    Point point =
        seed_point ? *seed_point : Point::complex_point(sample_points(P, 1, cfg).front());
    for (int attempt = 0; attempt <= opts.hybrid_retries; ++attempt) {
        try {
            auto spec_ops = specialized_noetherian_operators(I, point, split.dependent, opts.dual);
            std::set<Monomial, GrevlexLess> support;
            for (const auto& op : spec_ops)
                for (const auto& [m, c] : op.terms()) support.insert(m);
            std::vector<Monomial> cols(support.begin(), support.end());
            int d = 0;
            for (const auto& m : cols) d = std::max(d, m.degree());

            auto kern = residue_macaulay_kernel(I.generators(), F, split, cols, d);
            if (kern.second.size() == spec_ops.size())
                return NoetherianCertificate{P, lift_operators(kern.first, kern.second, F, P),
                                             static_cast<int>(kern.second.size()), split};
        } catch (const Error&) {
            // non-general point; fall through to a fresh sample
        }
        cfg.rng_seed = cfg.rng_seed * 6364136223846793005ULL + 1442695040888963407ULL;
        point = Point::complex_point(sample_points(P, 1, cfg).front());
    }
    fail(Error::Code::CapExceeded,
         "hybrid strategy found no consistent restricted system; sampled points may not be general");
}

Ideal ideal_from_noetherian_operators(const std::vector<DiffOp>& ops, const Ideal& P,
                                      const NoetherianOptions& opts) {
    if (ops.empty()) fail(Error::Code::BadInput, "operator list is empty");
    GammaContext ctx = make_gamma_context(P);
    size_t c = ctx.split.dependent.size();
    size_t arity = P.ring()->arity();
    ResidueFieldPtr F = ctx.field;

    int max_order = 0;
    for (const auto& op : ops) {
        for (const auto& [m, coeff] : op.terms()) {
            for (int v : ctx.split.independent)
                if (m.e[v] > 0)
                    fail(Error::Code::BadInput,
                         "operators must differentiate dependent variables only");
            max_order = std::max(max_order, m.degree());
        }
    }

    // operators as F-functionals on F[y]
    std::vector<Monomial> ycols = monomials_up_to_degree(c, max_order);
    std::map<Monomial, size_t, GrevlexLess> col_index;
    for (size_t j = 0; j < ycols.size(); ++j) col_index[ycols[j]] = j;
    ResidueElem zero = F->zero();

    std::vector<std::vector<ResidueElem>> vecs;
    for (const auto& op : ops) {
        std::vector<ResidueElem> v(ycols.size(), zero);
        for (const auto& [m, coeff] : op.terms())
            v[col_index[restrict_to(m, ctx.split.dependent)]] = F->from_qpoly(coeff);
        vecs.push_back(std::move(v));
    }

    // close the F-span under contraction: the differentially closed space
    // generated by the bisubmodule
    std::vector<std::vector<ResidueElem>> basis = echelonize_rows(vecs, zero);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::vector<ResidueElem>> extended = basis;
        for (const auto& v : basis) {
            for (size_t yi = 0; yi < c; ++yi) {
                std::vector<ResidueElem> w(ycols.size(), zero);
                bool nonzero = false;
                for (size_t j = 0; j < ycols.size(); ++j) {
                    if (ycols[j].e[yi] == 0 || v[j].is_zero()) continue;
                    Monomial tgt(ycols[j]);
                    tgt.e[yi] -= 1;
                    ResidueElem scaled =
                        v[j] * F->from_scalar(RationalFunction::constant(
                                   F->ctx().tring(), Rational(ycols[j].e[yi])));
                    size_t ti = col_index[tgt];
                    w[ti] = w[ti] + scaled;
                    nonzero = true;
                }
                if (nonzero) extended.push_back(std::move(w));
            }
        }
        auto closed = echelonize_rows(extended, zero);
        if (closed.size() > basis.size()) {
            basis = std::move(closed);
            grew = true;
        }
    }
    int m = static_cast<int>(basis.size());

    // J = annihilator of the closed space inside the <y>^m shell
    auto shell = monomials_up_to_degree(c, m - 1);
    DenseMatrix<ResidueElem> pairing(basis.size(), shell.size(), zero);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < shell.size(); ++j) {
            auto it = col_index.find(shell[j]);
            if (it == col_index.end() || basis[i][it->second].is_zero()) continue;
            pairing.at(i, j) = basis[i][it->second] * factorial_scalar(F, shell[j]);
        }
    auto wvecs = exact_kernel(std::move(pairing), zero, F->one());
    std::vector<FPoly> jgens;
    for (const auto& w : wvecs) {
        FPoly f = FPoly::zero(ctx.yring);
        for (size_t j = 0; j < shell.size(); ++j) f.add_term(shell[j], w[j]);
        if (!f.is_zero()) jgens.push_back(std::move(f));
    }
    for (const auto& mm : monomials_of_degree(c, m))
        jgens.push_back(FPoly::term(ctx.yring, mm, F->one()));
    std::vector<FPoly> gbJ = buchberger(jgens, MonomialOrder::grevlex());
    if (colength(gbJ, c) != m)
        fail(Error::Code::NoStabilization, "annihilator colength disagrees with the closed span");

    // pull back degree by degree: f with gamma(f) = 0 mod J, certified by
    // the forward map reproducing (J, m)
    int cap = opts.inverse_degree_cap > 0 ? opts.inverse_degree_cap : m + 2;
    if (opts.inverse_degree_cap <= 0)
        for (const auto& g : P.generators()) cap = std::max(cap, m + g.total_degree() + 2);

    std::map<Monomial, FPoly, GrevlexLess> gamma_nf_cache;
    auto gamma_nf = [&](const Monomial& mu) -> const FPoly& {
        auto it = gamma_nf_cache.find(mu);
        if (it == gamma_nf_cache.end()) {
            FPoly g = gamma_embed(QPoly::term(P.ring(), mu, Rational(1)), ctx);
            it = gamma_nf_cache.emplace(mu, normal_form(g, gbJ, MonomialOrder::grevlex())).first;
        }
        return it->second;
    };

    for (int D = 1; D <= cap; ++D) {
        std::vector<Monomial> cols = monomials_up_to_degree(arity, D);
        // slot = (y-monomial, x_dep-monomial); each slot clears its own
        // rational-function denominators, then splits into QQ-rows per
        // t-monomial
        struct SlotData {
            QPoly lcm;
            std::vector<std::pair<size_t, RationalFunction>> entries;
        };
        std::map<std::vector<int>, SlotData> slots;
        for (size_t j = 0; j < cols.size(); ++j) {
            const FPoly& nf = gamma_nf(cols[j]);
            for (const auto& [ym, relem] : nf.terms()) {
                for (const auto& [xm, rf] : relem.nf().terms()) {
                    std::vector<int> key = ym.e;
                    key.insert(key.end(), xm.e.begin(), xm.e.end());
                    auto it = slots.find(key);
                    if (it == slots.end()) {
                        SlotData sd;
                        sd.lcm = QPoly::constant(F->ctx().tring(), Rational(1));
                        it = slots.emplace(std::move(key), std::move(sd)).first;
                    }
                    it->second.lcm = multivariate_lcm(it->second.lcm, rf.den());
                    it->second.entries.emplace_back(j, rf);
                }
            }
        }
        std::map<std::vector<int>, std::map<size_t, Rational>> qrows;
        for (auto& [key, sd] : slots) {
            for (auto& [j, rf] : sd.entries) {
                QPoly cleared = rf.num() * *exact_divide(sd.lcm, rf.den());
                for (const auto& [tm, tc] : cleared.terms()) {
                    std::vector<int> rkey = key;
                    rkey.insert(rkey.end(), tm.e.begin(), tm.e.end());
                    auto& cell = qrows[rkey][j];
                    cell = cell + tc;
                }
            }
        }
        Rational qzero(0);
        DenseMatrix<Rational> sys(qrows.size(), cols.size(), qzero);
        size_t ri = 0;
        for (const auto& [key, entries] : qrows) {
            for (const auto& [j, v] : entries) sys.at(ri, j) = v;
            ++ri;
        }
        auto lambda = exact_kernel(std::move(sys), qzero, Rational(1));
        if (lambda.empty()) continue;

        std::vector<QPoly> cands;
        for (const auto& lv : lambda) {
            QPoly f = QPoly::zero(P.ring());
            for (size_t j = 0; j < cols.size(); ++j) f.add_term(cols[j], lv[j]);
            if (!f.is_zero()) cands.push_back(std::move(f));
        }
        if (cands.empty()) continue;
        std::vector<QPoly> gb = buchberger(cands, MonomialOrder::grevlex());
        Ideal candidate(P.ring(), gb);

        try {
            HilbPoint check = map_to_punctual_hilbert_ctx(candidate, ctx, opts);
            if (check.multiplicity != m) continue;
            bool equal = true;
            for (const auto& g : check.idealJ)
                if (!normal_form(g, gbJ, MonomialOrder::grevlex()).is_zero()) {
                    equal = false;
                    break;
                }
            if (equal)
                for (const auto& g : gbJ)
                    if (!normal_form(g, check.idealJ, MonomialOrder::grevlex()).is_zero()) {
                        equal = false;
                        break;
                    }
            if (equal) return candidate;
        } catch (const Error&) {
            // candidate not primary yet; keep growing the degree
        }
    }
    fail(Error::Code::CapExceeded, "inverse reconstruction not certified by degree " +
                                       std::to_string(cap) + "; raise the degree cap");
}

bool operator_spans_equal_mod_prime(const std::vector<DiffOp>& A, const std::vector<DiffOp>& B,
                                    const Ideal& P) {
    GammaContext ctx = make_gamma_context(P);
    ResidueFieldPtr F = ctx.field;
    std::set<Monomial, GrevlexLess> support;
    for (const auto* list : {&A, &B})
        for (const auto& op : *list)
            for (const auto& [m, c] : op.terms()) support.insert(m);
    std::vector<Monomial> cols(support.begin(), support.end());
    ResidueElem zero = F->zero();
    auto to_vecs = [&](const std::vector<DiffOp>& list) {
        std::vector<std::vector<ResidueElem>> vecs;
        for (const auto& op : list) {
            std::vector<ResidueElem> v(cols.size(), zero);
            for (size_t j = 0; j < cols.size(); ++j)
                if (const QPoly* coeff = op.coeff(cols[j])) v[j] = F->from_qpoly(*coeff);
            vecs.push_back(std::move(v));
        }
        return vecs;
    };
    return spans_equal(to_vecs(A), to_vecs(B), zero);
}

bool certificate_annihilates(const NoetherianCertificate& cert, const Ideal& Q) {
    for (const auto& op : cert.operators)
        for (const auto& g : Q.generators())
            if (!normal_form(op.apply(g), cert.prime).is_zero()) return false;
    return true;
}

void verify_primary_inputs(const Ideal& Q, const Ideal& P, int power_cap) {
    for (const auto& g : Q.generators())
        if (!ideal_contains(P, g))
            fail(Error::Code::BadInput, "input check failed: Q is not contained in P");
    for (const auto& p : P.generators()) {
        QPoly power = p;
        bool found = false;
        for (int k = 1; k <= power_cap; ++k) {
            if (ideal_contains(Q, power)) { found = true; break; }
            power = power * p;
        }
        if (!found)
            fail(Error::Code::BadInput,
                 "input check failed: a generator of P has no small power inside Q");
    }
}

} // namespace noethops
