#include <random>

#include "noethops/numerical.hpp"
#include "noethops/split.hpp"

namespace noethops {

namespace {

Complex eval_c(const CPoly& f, const std::vector<Complex>& p) {
    return f.evaluate_with<Complex>(std::span<const Complex>(p),
                                    [](const Complex& c) { return c; });
}

// Gauss-Newton on the squared-up system; returns the refined point.  Stalls
// are fine: acceptance is decided by the residual check afterwards.
std::vector<Complex> newton_polish(const std::vector<CPoly>& system, std::vector<Complex> p,
                                   const SamplerConfig& cfg) {
    size_t n = p.size();
    std::vector<std::vector<CPoly>> jac;
    for (const auto& f : system) {
        std::vector<CPoly> row;
        for (size_t v = 0; v < n; ++v) row.push_back(f.differentiate(v));
        jac.push_back(std::move(row));
    }
    for (int it = 0; it < cfg.max_newton_iters; ++it) {
        CMatrix J(system.size(), n);
        std::vector<Complex> rhs(system.size());
        double fnorm = 0;
        for (size_t i = 0; i < system.size(); ++i) {
            rhs[i] = -eval_c(system[i], p);
            fnorm = std::max(fnorm, std::abs(rhs[i]));
            for (size_t v = 0; v < n; ++v) J.at(i, v) = eval_c(jac[i][v], p);
        }
        if (fnorm <= cfg.newton_tolerance) break;
        std::vector<Complex> delta = least_squares_solve(J, rhs);
        double dnorm = 0;
        for (size_t v = 0; v < n; ++v) {
            p[v] += delta[v];
            dnorm = std::max(dnorm, std::abs(delta[v]));
        }
        if (dnorm <= cfg.newton_tolerance * 0.01) break;
    }
    return p;
}

bool residuals_ok(const Ideal& I, const std::vector<Complex>& p, const RingPtr& cring,
                  double tol) {
    for (const auto& g : I.generators()) {
        if (g.is_zero()) continue;
        Complex v = to_complex_poly(g, cring).evaluate_with<Complex>(
            std::span<const Complex>(p), [](const Complex& c) { return c; });
        if (std::abs(v) > tol) return false;
    }
    return true;
}

} // namespace

std::vector<std::vector<Complex>> sample_points(const Ideal& I, int n, const SamplerConfig& cfg) {
    if (n < 1) fail(Error::Code::BadInput, "sample count must be positive");
    RingPtr ring = I.ring();
    RingPtr cring = complex_ring_like(ring);
    size_t arity = ring->arity();

    if (cfg.mode == SamplerConfig::Mode::UserPoints) {
        std::vector<std::vector<Complex>> out;
        for (const auto& p : cfg.user_points) {
            if (p.size() != arity)
                fail(Error::Code::ArityMismatch, "user point arity does not match the ring");
            // the supplied point must already sit near the variety; Newton
            // only polishes the last digits
            double pnorm = 0;
            for (const auto& z : p) pnorm = std::max(pnorm, std::abs(z));
            for (const auto& g : I.generators()) {
                if (g.is_zero()) continue;
                Complex v = to_complex_poly(g, cring).evaluate_with<Complex>(
                    std::span<const Complex>(p), [](const Complex& c) { return c; });
                if (std::abs(v) > 1e-4 * (1.0 + std::pow(std::max(pnorm, 1.0), g.total_degree())))
                    fail(Error::Code::NotOnVariety, "user-supplied point not on variety");
            }
            std::vector<CPoly> system = complex_generators(I, cring);
            std::vector<Complex> refined = newton_polish(system, p, cfg);
            if (!residuals_ok(I, refined, cring, cfg.residual_tol))
                fail(Error::Code::NotOnVariety, "user-supplied point not on variety");
            out.push_back(std::move(refined));
            if (static_cast<int>(out.size()) == n) return out;
        }
        fail(Error::Code::BadInput, "point file supplies fewer points than requested");
    }

    VariableSplit split = independent_sets(I);
    int dim = static_cast<int>(split.independent.size());
    std::mt19937_64 rng(cfg.rng_seed);
    std::uniform_int_distribution<long> coeff(-9, 9);

    std::vector<std::vector<Complex>> points;
    int rounds = 0, failures = 0;
    while (static_cast<int>(points.size()) < n) {
        if (++rounds > n * cfg.max_slice_retries + cfg.max_slice_retries) break;

        // random affine-linear slices cutting the variety down to points
        std::vector<QPoly> slice_gens = I.generators();
        std::vector<QPoly> slices;
        bool degenerate = false;
        for (int k = 0; k < dim; ++k) {
            QPoly L = QPoly::constant(ring, Rational(coeff(rng)));
            bool has_var = false;
            for (size_t v = 0; v < arity; ++v) {
                long cv = coeff(rng);
                if (cv != 0) has_var = true;
                L = L + QPoly::variable(ring, v).scaled(Rational(cv));
            }
            if (!has_var) degenerate = true;
            slices.push_back(L);
            slice_gens.push_back(std::move(L));
        }
        if (degenerate) continue;

        Ideal sliced(ring, slice_gens);
        const auto& gb = sliced.groebner_basis(MonomialOrder::grevlex());
        if (gb.size() == 1 && gb[0].is_constant()) { ++failures; continue; }
        std::vector<Monomial> leads;
        for (const auto& g : gb) leads.push_back(g.lead_term(MonomialOrder::grevlex()).first);
        bool finite = false;
        auto basis = standard_monomials(leads, arity, &finite);
        if (!finite || basis.empty() || basis.size() > 120) { ++failures; continue; }

        std::map<Monomial, size_t, GrevlexLess> index;
        for (size_t j = 0; j < basis.size(); ++j) index[basis[j]] = j;
        size_t dimq = basis.size();

        auto nf_coords = [&](const QPoly& f) {
            std::vector<Complex> v(dimq, Complex(0, 0));
            QPoly nf = normal_form(f, gb, MonomialOrder::grevlex());
            for (const auto& [m, cc] : nf.terms()) v[index.at(m)] = Complex(cc.to_double(), 0);
            return v;
        };

        // multiplication matrix of a random separating linear form
        QPoly g = QPoly::zero(ring);
        for (size_t v = 0; v < arity; ++v)
            g = g + QPoly::variable(ring, v).scaled(Rational(1 + std::abs(coeff(rng))));
        CMatrix Mg(dimq, dimq);
        for (size_t j = 0; j < dimq; ++j) {
            auto col = nf_coords(g * QPoly::term(ring, basis[j], Rational(1)));
            for (size_t i = 0; i < dimq; ++i) Mg.at(i, j) = col[i];
        }
        std::vector<std::vector<Complex>> var_coords;
        for (size_t v = 0; v < arity; ++v) var_coords.push_back(nf_coords(QPoly::variable(ring, v)));
        size_t one_index = index.at(Monomial(arity));

        // left eigenvectors approximate evaluation functionals at the roots
        EigenSystem eig = transpose_eigensystem(Mg);
        std::vector<CPoly> system = complex_generators(I, cring);
        for (const auto& L : slices) system.push_back(to_complex_poly(L, cring));

        std::vector<std::vector<Complex>> batch;
        for (size_t k = 0; k < eig.values.size(); ++k) {
            const auto& w = eig.vectors[k];
            double wnorm = 0;
            for (const auto& z : w) wnorm = std::max(wnorm, std::abs(z));
            if (std::abs(w[one_index]) < 1e-8 * wnorm) continue;
            std::vector<Complex> p(arity);
            for (size_t v = 0; v < arity; ++v) {
                Complex acc(0, 0);
                for (size_t j = 0; j < dimq; ++j) acc += var_coords[v][j] * w[j];
                p[v] = acc / w[one_index];
            }
            p = newton_polish(system, std::move(p), cfg);
            if (!residuals_ok(I, p, cring, cfg.residual_tol)) continue;
            bool dup = false;
            for (const auto& q : batch) {
                double dist = 0;
                for (size_t v = 0; v < arity; ++v) dist = std::max(dist, std::abs(q[v] - p[v]));
                if (dist < 1e-6) { dup = true; break; }
            }
            if (!dup) batch.push_back(std::move(p));
        }
        if (batch.empty()) { ++failures; continue; }
        std::sort(batch.begin(), batch.end(), [](const auto& a, const auto& b) {
            for (size_t v = 0; v < a.size(); ++v) {
                if (a[v].real() != b[v].real()) return a[v].real() < b[v].real();
                if (a[v].imag() != b[v].imag()) return a[v].imag() < b[v].imag();
            }
            return false;
        });
        for (auto& p : batch) {
            points.push_back(std::move(p));
            if (static_cast<int>(points.size()) == n) break;
        }
    }
    if (static_cast<int>(points.size()) < n)
        fail(Error::Code::BadInput, "sampler found no solutions of the sliced system");
    return points;
}

} // namespace noethops
