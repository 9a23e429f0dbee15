#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "noethops/noetherian.hpp"
#include "noethops/numerical.hpp"
#include "support/helpers.hpp"

using namespace noethops;
using namespace noethops::testing;

namespace {

RingPtr ring3() { return Ring::make({"x1", "x2", "x3"}); }

double residual(const QPoly& g, const std::vector<Complex>& p) {
    RingPtr cring = complex_ring_like(g.ring());
    return std::abs(to_complex_poly(g, cring).evaluate_with<Complex>(
        std::span<const Complex>(p), [](const Complex& c) { return c; }));
}

} // namespace

TEST_CASE("sampling a coordinate subspace") {
    auto r = ring3();
    Ideal I(r, {QPoly::variable(r, 0), QPoly::variable(r, 1)});
    SamplerConfig cfg;
    cfg.rng_seed = 7;
    auto pts = sample_points(I, 3, cfg);
    REQUIRE(pts.size() == 3);
    for (const auto& p : pts) {
        CHECK(std::abs(p[0]) < 1e-8);
        CHECK(std::abs(p[1]) < 1e-8);
    }
}

TEST_CASE("sampler residuals on a circle") {
    auto r = Ring::make({"x1", "x2"});
    QPoly x1 = var(r, 0), x2 = var(r, 1);
    Ideal I(r, {x1 * x1 + x2 * x2 - cst(r, 1)});
    SamplerConfig cfg;
    cfg.rng_seed = 11;
    auto pts = sample_points(I, 5, cfg);
    REQUIRE(pts.size() == 5);
    for (const auto& p : pts)
        for (const auto& g : I.generators()) CHECK(residual(g, p) <= 1e-8);
}

TEST_CASE("sampler determinism under a fixed seed") {
    auto r = ring3();
    QPoly x1 = var(r, 0), x2 = var(r, 1), x3 = var(r, 2);
    Ideal Q(r, {x1 * x1, x2 * x2, x1 - x2 * x3});
    SamplerConfig cfg;
    cfg.rng_seed = 99;
    auto a = sample_points(Q, 4, cfg);
    auto b = sample_points(Q, 4, cfg);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t v = 0; v < a[i].size(); ++v) CHECK(a[i][v] == b[i][v]);

    // residual bound also holds on the non-reduced ideal
    for (const auto& p : a)
        for (const auto& g : Q.generators()) CHECK(residual(g, p) <= 1e-8);
}

TEST_CASE("user-supplied points are polished and validated") {
    auto r = Ring::make({"x1", "x2"});
    QPoly x1 = var(r, 0), x2 = var(r, 1);
    Ideal I(r, {x1 * x1 + x2 * x2 - cst(r, 1)});
    SamplerConfig cfg;
    cfg.mode = SamplerConfig::Mode::UserPoints;
    cfg.user_points = {{Complex(0.6, 0), Complex(0.8, 0)},
                       {Complex(1.0001, 0), Complex(0.0001, 0)}};
    auto pts = sample_points(I, 2, cfg);
    for (const auto& p : pts)
        for (const auto& g : I.generators()) CHECK(residual(g, p) <= 1e-8);

    cfg.user_points = {{Complex(5, 0), Complex(5, 0)}};
    CHECK_THROWS_AS(sample_points(I, 1, cfg), Error);
}

TEST_CASE("interpolation of simple data") {
    auto tring = Ring::make({"t"});

    // constant samples
    InterpolationState s1;
    s1.tring = tring;
    for (int k = 1; k <= 6; ++k) {
        s1.sample_coords.push_back({Complex(k, 0)});
        s1.sample_values.push_back(Complex(2, 0));
    }
    RationalFunction c = interpolate_rational(s1);
    CHECK(c == RationalFunction::constant(tring, Rational(2)));

    // identity function t -> t on {1..5} plus validation points
    InterpolationState s2;
    s2.tring = tring;
    for (int k = 1; k <= 7; ++k) {
        s2.sample_coords.push_back({Complex(k, 0)});
        s2.sample_values.push_back(Complex(k, 0));
    }
    RationalFunction t = interpolate_rational(s2);
    CHECK(t == RationalFunction(QPoly::variable(tring, 0)));
    CHECK(s2.numerator_degree == 1);
    CHECK(s2.denominator_degree == 0);
}

TEST_CASE("interpolation recovers x1/(2 x0) from samples") {
    auto tring = Ring::make({"x0", "x1"});
    InterpolationState s;
    s.tring = tring;
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ud(0.5, 2.5);
    for (int k = 0; k < 14; ++k) {
        Complex a(ud(rng), 0), b(ud(rng), 0);
        s.sample_coords.push_back({a, b});
        s.sample_values.push_back(b / (2.0 * a));
    }
    RationalFunction f = interpolate_rational(s);
    QPoly expect_num = QPoly::variable(tring, 1);
    QPoly expect_den = QPoly::variable(tring, 0).scaled(Rational(2));
    CHECK(f == RationalFunction(expect_num, expect_den));
}

TEST_CASE("interpolation requests more samples, then rejects non-rational data") {
    auto tring = Ring::make({"t"});
    InterpolationState s;
    s.tring = tring;
    s.max_total_degree = 3;
    s.sample_coords.push_back({Complex(1, 0)});
    s.sample_values.push_back(Complex(1, 0));
    CHECK_THROWS_AS(interpolate_rational(s), NeedMoreSamples);

    // exp is not a low-degree rational function
    for (int k = 2; k <= 24; ++k) {
        s.sample_coords.push_back({Complex(0.3 * k, 0)});
        s.sample_values.push_back(Complex(std::exp(0.3 * k), 0));
    }
    CHECK_THROWS_WITH_AS(interpolate_rational(s), "coefficient not rational of low degree", Error);
}

TEST_CASE("numerical Noetherian operators recover the exact coefficient") {
    auto r = ring3();
    QPoly x1 = var(r, 0), x2 = var(r, 1), x3 = var(r, 2);
    Ideal Q(r, {x1 * x1, x2 * x2, x1 - x2 * x3});
    NumericalOptions opts;
    opts.sampler.rng_seed = 42;

    auto ops = numerical_noetherian_operators(Q, {0, 1}, opts);
    REQUIRE(ops.size() == 2);

    // first operator is the evaluation functional
    CHECK(ops[0].to_string() == "1");

    // second operator: pivot dx2 with coefficient 1, dx1 carries exactly x3
    const auto& terms = ops[1].terms();
    REQUIRE(terms.size() == 2);
    auto it = terms.begin();
    CHECK(it->first == Monomial({0, 1, 0}));
    CHECK(it->second == RationalFunction::one(Ring::make({"x3"})));
    ++it;
    CHECK(it->first == Monomial({1, 0, 0}));
    QPoly t = QPoly::variable(it->second.ring(), 0);
    CHECK(it->second == RationalFunction(t));
}

TEST_CASE("numerical operators on a prime are trivial") {
    auto r = ring3();
    Ideal P(r, {var(r, 0), var(r, 1)});
    NumericalOptions opts;
    opts.sampler.rng_seed = 5;
    auto ops = numerical_noetherian_operators(P, {0, 1}, opts);
    REQUIRE(ops.size() == 1);
    CHECK(ops[0].terms().begin()->first == Monomial({0, 0, 0}));
}

TEST_CASE("interpolated coefficients match held-out specializations") {
    auto r = ring3();
    QPoly x1 = var(r, 0), x2 = var(r, 1), x3 = var(r, 2);
    Ideal Q(r, {x1 * x1, x2 * x2, x1 - x2 * x3});
    NumericalOptions opts;
    opts.sampler.rng_seed = 314;
    auto ops = numerical_noetherian_operators(Q, {0, 1}, opts);
    REQUIRE(ops.size() == 2);

    // fresh points, never seen by the fit
    SamplerConfig fresh;
    fresh.rng_seed = 2718;
    auto pts = sample_points(Q, 3, fresh);
    for (const auto& p : pts) {
        auto spec = specialized_noetherian_operators(Q, Point::complex_point(p), {0, 1});
        REQUIRE(spec.size() == 2);
        // evaluate the interpolated operator at the independent coordinate
        for (const auto& [m, rf] : ops[1].terms()) {
            std::vector<Complex> t{p[2]};
            Complex num = rf.num().evaluate_with<Complex>(
                std::span<const Complex>(t), [](const Rational& c) { return Complex(c.to_double(), 0); });
            Complex den = rf.den().evaluate_with<Complex>(
                std::span<const Complex>(t), [](const Rational& c) { return Complex(c.to_double(), 0); });
            Complex predicted = num / den;
            // compare against the specialized operator, normalized the same way
            const ConstDiffOp<Complex>* match = nullptr;
            for (const auto& sop : spec)
                if (sop.coeff(Monomial({0, 1, 0}))) match = &sop;
            REQUIRE(match != nullptr);
            Complex pivot = *match->coeff(Monomial({0, 1, 0}));
            const Complex* actual = match->coeff(m);
            Complex normalized = actual ? *actual / pivot : Complex(0, 0);
            CHECK(std::abs(predicted - normalized) <= 1e-6 * (1.0 + std::abs(normalized)));
        }
    }
}
