#include "noethops/numerical.hpp"

#include <map>

namespace noethops {

namespace {

// pivot of a specialized operator: the grevlex-smallest monomial whose
// coefficient is within a factor of the numerically largest one
Monomial pivot_monomial(const ConstDiffOp<Complex>& op) {
    double maxc = 0;
    for (const auto& [m, c] : op.terms()) maxc = std::max(maxc, std::abs(c));
    for (const auto& [m, c] : op.terms())
        if (std::abs(c) >= 1e-3 * maxc) return m;
    fail(Error::Code::BadInput, "cannot normalize a zero operator");
}

struct SpecializedBatch {
    // one entry per operator, keyed by pivot monomial
    std::map<Monomial, ConstDiffOp<Complex>, GrevlexLess> ops;
};

} // namespace

std::vector<InterpolatedDiffOp> numerical_noetherian_operators(const Ideal& I,
                                                               const std::vector<int>& dependent,
                                                               const NumericalOptions& opts) {
    if (dependent.empty()) fail(Error::Code::BadInput, "the dependent set must be specified");
    const RingPtr& ring = I.ring();
    RingPtr cring = complex_ring_like(ring);

    std::vector<int> independent;
    for (size_t v = 0; v < ring->arity(); ++v)
        if (std::find(dependent.begin(), dependent.end(), static_cast<int>(v)) == dependent.end())
            independent.push_back(static_cast<int>(v));
    std::vector<std::string> tnames;
    for (int v : independent) tnames.push_back(ring->var_name(v));
    RingPtr tring = Ring::make(std::move(tnames), CoeffField::Rational);

    auto augmented = [&](const std::vector<Complex>& p) {
        std::vector<CPoly> gens = complex_generators(I, cring);
        for (int v : independent) {
            CPoly slice = CPoly::variable(cring, static_cast<size_t>(v));
            slice.add_term(Monomial(cring->arity()), -p[static_cast<size_t>(v)]);
            gens.push_back(std::move(slice));
        }
        return gens;
    };
    auto tcoords = [&](const std::vector<Complex>& p) {
        std::vector<Complex> t;
        for (int v : independent) t.push_back(p[static_cast<size_t>(v)]);
        return t;
    };

    int want = opts.initial_points;
    std::vector<std::vector<Complex>> points = sample_points(I, want, opts.sampler);

    // establish support and pivots at the first general point
    auto first_ops = [&](const std::vector<Complex>& p) {
        DualSpace<Complex> D = zero_dimensional_dual(p, augmented(p), opts.dual);
        SpecializedBatch batch;
        for (const auto& op : D.basis) {
            Monomial piv = pivot_monomial(op);
            batch.ops.emplace(piv, op.scaled(FieldTraits<Complex>::inverse(*op.coeff(piv))));
        }
        return batch;
    };

    SpecializedBatch reference = first_ops(points.front());
    std::vector<Monomial> support;
    {
        std::set<Monomial, GrevlexLess> s;
        for (const auto& [piv, op] : reference.ops)
            for (const auto& [m, c] : op.terms()) s.insert(m);
        support.assign(s.begin(), s.end());
    }
    int support_degree = 0;
    for (const auto& m : support) support_degree = std::max(support_degree, m.degree());

    // subsequent points solve only the supported columns
    auto restricted_ops = [&](const std::vector<Complex>& p) -> std::optional<SpecializedBatch> {
        auto gens = augmented(p);
        detail::verify_point(gens, p, opts.dual);
        detail::DualEngine<Complex> eng(cring, gens, p, opts.dual);
        eng.set_column_support(support);
        auto basis = eng.basis_at(support_degree);
        if (basis.size() != reference.ops.size()) return std::nullopt;
        SpecializedBatch batch;
        for (const auto& op : basis) {
            Monomial piv = pivot_monomial(op);
            if (!reference.ops.count(piv)) return std::nullopt;
            batch.ops.emplace(piv, op.scaled(FieldTraits<Complex>::inverse(*op.coeff(piv))));
        }
        return batch.ops.size() == reference.ops.size() ? std::make_optional(batch) : std::nullopt;
    };

    std::vector<SpecializedBatch> batches{reference};
    std::vector<size_t> batch_points{0};
    size_t next = 1;
    int mismatches = 0;
    auto take_more = [&](size_t target) {
        while (batches.size() < target) {
            if (next >= points.size()) {
                want = std::max(want * 2, static_cast<int>(points.size()) + 4);
                if (want > opts.max_points)
                    fail(Error::Code::CapExceeded, "interpolation needs more samples than allowed");
                points = sample_points(I, want, opts.sampler);
            }
            auto batch = restricted_ops(points[next]);
            size_t used = next;
            ++next;
            if (!batch) {
                if (++mismatches > opts.support_retries * opts.initial_points)
                    fail(Error::Code::BadInput,
                         "operator support mismatch persists across sampled points");
                continue;
            }
            batches.push_back(std::move(*batch));
            batch_points.push_back(used);
        }
    };
    take_more(static_cast<size_t>(opts.initial_points));

    // interpolate each non-pivot coefficient as a rational function of the
    // independent coordinates
    std::vector<InterpolatedDiffOp> out;
    for (const auto& [piv, ref_op] : reference.ops) {
        InterpolatedDiffOp op(cring);
        op.add_term(piv, RationalFunction::one(tring));
        for (const auto& m : support) {
            if (m == piv) continue;
            InterpolationState state;
            state.tring = tring;
            auto rebuild = [&] {
                state.sample_coords.clear();
                state.sample_values.clear();
                for (size_t k = 0; k < batches.size(); ++k) {
                    auto it = batches[k].ops.find(piv);
                    const Complex* c = it->second.coeff(m);
                    state.sample_coords.push_back(tcoords(points[batch_points[k]]));
                    state.sample_values.push_back(c ? *c : Complex(0, 0));
                }
            };
            rebuild();
            bool zero_everywhere = true;
            for (const auto& v : state.sample_values)
                if (std::abs(v) > opts.dual.tolerance) { zero_everywhere = false; break; }
            if (zero_everywhere) continue;
            for (;;) {
                try {
                    RationalFunction fit = interpolate_rational(state);
                    op.add_term(m, fit);
                    break;
                } catch (const NeedMoreSamples& need) {
                    take_more(need.needed);
                    rebuild();
                }
            }
        }
        out.push_back(std::move(op));
    }
    return out;
}

} // namespace noethops
