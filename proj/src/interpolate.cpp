#include "noethops/numerical.hpp"

namespace noethops {

namespace {

Complex eval_ratfunc(const RationalFunction& f, const std::vector<Complex>& t) {
    auto conv = [](const Rational& c) { return Complex(c.to_double(), 0); };
    Complex num = f.num().evaluate_with<Complex>(std::span<const Complex>(t), conv);
    Complex den = f.den().evaluate_with<Complex>(std::span<const Complex>(t), conv);
    return num / den;
}

Complex eval_monomial(const Monomial& m, const std::vector<Complex>& t) {
    Complex v(1, 0);
    for (size_t i = 0; i < m.arity(); ++i)
        for (int k = 0; k < m.e[i]; ++k) v *= t[i];
    return v;
}

// the (num, den) degree schedule: (0,0),(1,0),(0,1),(1,1),(2,1),(1,2),(2,2),...
std::vector<std::pair<int, int>> degree_schedule(int cap) {
    std::vector<std::pair<int, int>> out{{0, 0}, {1, 0}, {0, 1}};
    for (int a = 1; a + a <= cap; ++a) {
        out.emplace_back(a, a);
        if (a + 1 + a <= cap) out.emplace_back(a + 1, a);
        if (a + a + 1 <= cap) out.emplace_back(a, a + 1);
    }
    return out;
}

} // namespace

RationalFunction interpolate_rational(InterpolationState& state) {
    if (!state.tring) fail(Error::Code::BadInput, "interpolation state has no variable ring");
    size_t arity = state.tring->arity();
    for (const auto& t : state.sample_coords)
        if (t.size() != arity)
            fail(Error::Code::ArityMismatch, "sample coordinate arity mismatch");

    for (auto [dnum, dden] : degree_schedule(state.max_total_degree)) {
        auto num_monos = monomials_up_to_degree(arity, dnum);
        auto den_monos = monomials_up_to_degree(arity, dden);
        size_t validation = std::max(state.validation_count, size_t(2)) +
                            static_cast<size_t>((dnum + dden) / 2);
        size_t need = num_monos.size() + den_monos.size() + validation;
        if (state.sample_values.size() < need) throw NeedMoreSamples{need};

        state.numerator_degree = dnum;
        state.denominator_degree = dden;
        size_t fit_count = state.sample_values.size() - validation;

        // homogeneous system value * den(t) - num(t) = 0
        CMatrix sys(fit_count, num_monos.size() + den_monos.size());
        for (size_t i = 0; i < fit_count; ++i) {
            const auto& t = state.sample_coords[i];
            for (size_t j = 0; j < num_monos.size(); ++j)
                sys.at(i, j) = -eval_monomial(num_monos[j], t);
            for (size_t j = 0; j < den_monos.size(); ++j)
                sys.at(i, num_monos.size() + j) =
                    state.sample_values[i] * eval_monomial(den_monos[j], t);
        }
        auto kernel = numeric_kernel(sys, state.fit_tol);
        if (kernel.empty()) continue; // no fit at this degree pair

        // designated unit coefficient: the largest denominator entry,
        // ties resolved toward the grevlex-smallest monomial
        const std::vector<Complex>& w = kernel.front();
        size_t pivot = num_monos.size();
        double best = 0;
        for (size_t j = 0; j < den_monos.size(); ++j) {
            double v = std::abs(w[num_monos.size() + j]);
            if (v > best * (1 + 1e-12)) {
                best = v;
                pivot = num_monos.size() + j;
            }
        }
        if (best == 0) continue;
        Complex scale = w[pivot];

        double wmax = 0;
        for (const auto& z : w) wmax = std::max(wmax, std::abs(z) / std::abs(scale));
        auto coeff_of = [&](size_t j) -> std::optional<Rational> {
            Complex z = w[j] / scale;
            if (std::abs(z) <= 1e-9 * std::max(1.0, wmax)) return Rational(0);
            if (std::abs(z.imag()) > 1e-6 * (1 + std::abs(z))) return std::nullopt;
            return rationalize(z.real());
        };

        QPoly num = QPoly::zero(state.tring), den = QPoly::zero(state.tring);
        bool ok = true;
        for (size_t j = 0; j < num_monos.size() && ok; ++j) {
            auto c = coeff_of(j);
            if (!c) ok = false;
            else num.add_term(num_monos[j], *c);
        }
        for (size_t j = 0; j < den_monos.size() && ok; ++j) {
            auto c = coeff_of(num_monos.size() + j);
            if (!c) ok = false;
            else den.add_term(den_monos[j], *c);
        }
        if (!ok || den.is_zero()) continue;
        RationalFunction fit(num, den);

        // accept only if every held-out sample matches
        bool valid = true;
        for (size_t i = fit_count; i < state.sample_values.size(); ++i) {
            const auto& t = state.sample_coords[i];
            Complex denv = fit.den().evaluate_with<Complex>(
                std::span<const Complex>(t),
                [](const Rational& c) { return Complex(c.to_double(), 0); });
            if (std::abs(denv) < 1e-10) { valid = false; break; }
            Complex predicted = eval_ratfunc(fit, t);
            double err = std::abs(predicted - state.sample_values[i]);
            if (err > state.validation_tol * (1 + std::abs(state.sample_values[i]))) {
                valid = false;
                break;
            }
        }
        if (valid) return fit;
    }
    fail(Error::Code::CapExceeded, "coefficient not rational of low degree");
}

} // namespace noethops
