#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "noethops/noetherian.hpp"
#include "support/corpus.hpp"
#include "support/helpers.hpp"

using namespace noethops;
using namespace noethops::testing;

namespace {

RingPtr ring3() { return Ring::make({"x1", "x2", "x3"}); }

struct O5 {
    RingPtr r = ring3();
    QPoly x1 = QPoly::variable(r, 0), x2 = QPoly::variable(r, 1), x3 = QPoly::variable(r, 2);
    Ideal Q{r, {x1 * x1, x2 * x2, x1 - x2 * x3}};
    Ideal P{r, {x2, x1}};
    // expected operators {1, x3 dx1 + dx2}
    std::vector<DiffOp> expected_ops() const {
        DiffOp one = DiffOp::identity(r, Rational(1));
        DiffOp A(r);
        A.add_term(Monomial({1, 0, 0}), x3);
        A.add_term(Monomial({0, 1, 0}), QPoly::constant(r, Rational(1)));
        return {one, A};
    }
};

std::vector<DiffOp> o22_operators(const RingPtr& r) {
    auto cst1 = QPoly::constant(r, Rational(1));
    auto cstm1 = QPoly::constant(r, Rational(-1));
    std::vector<DiffOp> ops;
    ops.push_back(DiffOp::identity(r, Rational(1)));
    for (int v = 2; v >= 0; --v) {
        DiffOp d(r);
        d.add_term(Monomial::unit(3, static_cast<size_t>(v)), cst1);
        ops.push_back(std::move(d));
    }
    DiffOp a(r); // -dx1 dx2 + dx2 dx3
    a.add_term(Monomial({1, 1, 0}), cstm1);
    a.add_term(Monomial({0, 1, 1}), cst1);
    ops.push_back(std::move(a));
    DiffOp b(r); // -dx1 dx2 + dx1 dx3
    b.add_term(Monomial({1, 1, 0}), cstm1);
    b.add_term(Monomial({1, 0, 1}), cst1);
    ops.push_back(std::move(b));
    return ops;
}

} // namespace

TEST_CASE("gamma embedding") {
    O5 ex;
    GammaContext ctx = make_gamma_context(ex.P);
    REQUIRE(ctx.split.dependent == std::vector<int>({0, 1}));
    CHECK(ctx.yring->var_names() == std::vector<std::string>({"hx1", "hx2"}));

    // independent variable maps to its residue class
    FPoly g3 = gamma_embed(ex.x3, ctx);
    REQUIRE(g3.is_constant());
    CHECK(g3.constant_value().to_string() == "x3");

    // x1 lies in P, so gamma(x1) = y1
    FPoly g1 = gamma_embed(ex.x1, ctx);
    REQUIRE(g1.term_count() == 1);
    CHECK(g1.terms().begin()->first == Monomial({1, 0}));

    // gamma(x1 - x2 x3) = y1 - x3 y2, the o4 generator
    FPoly g = gamma_embed(ex.x1 - ex.x2 * ex.x3, ctx);
    CHECK(g.to_string() == "hx1 - x3*hx2");
}

TEST_CASE("map to punctual Hilbert scheme") {
    O5 ex;
    NoetherianOptions opts;
    HilbPoint hp = map_to_punctual_hilbert(ex.Q, ex.P, opts);
    CHECK(hp.multiplicity == 2);

    // J = (hx1 - x3 hx2, hx2^2)
    GammaContext ctx{hp.field, hp.yring, hp.split};
    FPoly e1 = gamma_embed(ex.x1 - ex.x2 * ex.x3, ctx);
    FPoly e2 = gamma_embed(ex.x2, ctx) * gamma_embed(ex.x2, ctx);
    CHECK(normal_form(e1, hp.idealJ, MonomialOrder::grevlex()).is_zero());
    CHECK(normal_form(e2, hp.idealJ, MonomialOrder::grevlex()).is_zero());
    // and conversely the basis lies in (e1, e2)
    auto other = buchberger(std::vector<FPoly>{e1, e2}, MonomialOrder::grevlex());
    for (const auto& g : hp.idealJ)
        CHECK(normal_form(g, other, MonomialOrder::grevlex()).is_zero());
}

TEST_CASE("punctual Hilbert map trivia") {
    O5 ex;
    // Q = P gives J = (y1, y2), m = 1
    HilbPoint hp = map_to_punctual_hilbert(ex.P, ex.P);
    CHECK(hp.multiplicity == 1);
    REQUIRE(hp.idealJ.size() == 2);

    // square of a maximal ideal in n variables: m = n + 1
    auto r = ring3();
    std::vector<QPoly> sq;
    for (const auto& m : monomials_of_degree(3, 2)) sq.push_back(QPoly::term(r, m, Rational(1)));
    Ideal Q2(r, sq);
    Ideal P2(r, {QPoly::variable(r, 0), QPoly::variable(r, 1), QPoly::variable(r, 2)});
    CHECK(map_to_punctual_hilbert(Q2, P2).multiplicity == 4);
}

TEST_CASE("punctual strategy reproduces the paper operators") {
    O5 ex;
    NoetherianCertificate cert = noetherian_operators_punctual(ex.Q, ex.P);
    CHECK(cert.multiplicity == 2);
    REQUIRE(cert.operators.size() == 2);
    CHECK(cert.operators[0].to_string() == "1");
    CHECK(cert.operators[1].to_string() == "dx2 + x3*dx1");
    CHECK(operator_spans_equal_mod_prime(cert.operators, ex.expected_ops(), ex.P));
    CHECK(certificate_annihilates(cert, ex.Q));
}

TEST_CASE("punctual strategy on a maximal ideal") {
    auto r = ring3();
    Ideal P(r, {QPoly::variable(r, 0), QPoly::variable(r, 1), QPoly::variable(r, 2)});
    NoetherianCertificate cert = noetherian_operators_punctual(P, P);
    REQUIRE(cert.operators.size() == 1);
    CHECK(cert.operators[0].to_string() == "1");
}

TEST_CASE("six operators at the origin") {
    auto r = ring3();
    QPoly x1 = QPoly::variable(r, 0), x2 = QPoly::variable(r, 1), x3 = QPoly::variable(r, 2);
    Ideal Q(r, {x1 * x1, x2 * x2, x3 * x3, x1 * x2 + x1 * x3 + x2 * x3});
    Ideal P(r, {x1, x2, x3});
    NoetherianCertificate cert = noetherian_operators_punctual(Q, P);
    CHECK(cert.multiplicity == 6);
    REQUIRE(cert.operators.size() == 6);
    CHECK(operator_spans_equal_mod_prime(cert.operators, o22_operators(r), P));
    CHECK(certificate_annihilates(cert, Q));
}

TEST_CASE("macaulay strategy agrees with the punctual strategy") {
    O5 ex;
    NoetherianCertificate cert = noetherian_operators_macaulay(ex.Q, ex.P);
    CHECK(cert.multiplicity == 2);
    CHECK(operator_spans_equal_mod_prime(cert.operators, ex.expected_ops(), ex.P));

    // prime input yields the identity alone
    NoetherianCertificate triv = noetherian_operators_macaulay(ex.P, ex.P);
    REQUIRE(triv.operators.size() == 1);
    CHECK(triv.operators[0].to_string() == "1");
}

TEST_CASE("macaulay strategy isolates a primary component") {
    // J = Q cap P2^2 for a second prime P2; the certificate at P2 describes
    // only the P2-primary component, here P2^2 itself
    auto r = ring3();
    QPoly x1 = QPoly::variable(r, 0), x2 = QPoly::variable(r, 1), x3 = QPoly::variable(r, 2);
    Ideal Q(r, {x1 * x1, x2 * x2, x1 - x2 * x3});
    QPoly lin = x1 + x2;
    Ideal P2(r, {lin});
    Ideal J = intersect_ideals(Q, Ideal(r, {lin * lin}));

    NoetherianCertificate cert = noetherian_operators_macaulay(J, P2);
    CHECK(cert.multiplicity == 2);
    // operators {1, dx1} describe (x1+x2)^2 at its prime
    DiffOp one = DiffOp::identity(r, Rational(1));
    DiffOp d1(r);
    d1.add_term(Monomial({1, 0, 0}), QPoly::constant(r, Rational(1)));
    CHECK(operator_spans_equal_mod_prime(cert.operators, {one, d1}, P2));
    // membership semantics: every generator of J lands in P2
    CHECK(certificate_annihilates(cert, J));
}

TEST_CASE("specialized operators at an explicit point") {
    O5 ex;
    Point p = Point::complex_point({Complex(0, 0), Complex(0, 0), Complex(5, 0)});
    auto ops = specialized_noetherian_operators(ex.Q, p, {0, 1});
    REQUIRE(ops.size() == 2);
    CHECK(ops[0].to_string() == "1");
    // second operator spans 5 dx1 + dx2
    const Complex* c1 = ops[1].coeff(Monomial({1, 0, 0}));
    const Complex* c2 = ops[1].coeff(Monomial({0, 1, 0}));
    REQUIRE(c1 != nullptr);
    REQUIRE(c2 != nullptr);
    CHECK(std::abs(*c1 / *c2 - Complex(5, 0)) < 1e-6);

    // smooth point of a reduced component: identity only
    Ideal red(ex.r, {ex.x1, ex.x2});
    auto triv = specialized_noetherian_operators(red, p, {0, 1});
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].to_string() == "1");

    CHECK_THROWS_AS(specialized_noetherian_operators(ex.Q, p, {}), Error);
    Point off = Point::complex_point({Complex(3, 0), Complex(1, 0), Complex(5, 0)});
    CHECK_THROWS_AS(specialized_noetherian_operators(ex.Q, off, {0, 1}), Error);
}

TEST_CASE("hybrid strategy matches the punctual span") {
    O5 ex;
    NoetherianOptions opts;
    opts.sampler.rng_seed = 2024;
    NoetherianCertificate cert = noetherian_operators_hybrid(ex.Q, ex.P, opts);
    CHECK(cert.multiplicity == 2);
    CHECK(operator_spans_equal_mod_prime(cert.operators, ex.expected_ops(), ex.P));

    auto r = ring3();
    Ideal P(r, {QPoly::variable(r, 0), QPoly::variable(r, 1), QPoly::variable(r, 2)});
    NoetherianCertificate triv = noetherian_operators_hybrid(P, P, opts);
    REQUIRE(triv.operators.size() == 1);
    CHECK(triv.operators[0].to_string() == "1");
}

TEST_CASE("ideal reconstruction from operators") {
    O5 ex;

    // multiplicity one: {1} recovers the prime itself
    Ideal back = ideal_from_noetherian_operators({DiffOp::identity(ex.r, Rational(1))}, ex.P);
    CHECK(ideal_equal(back, ex.P));

    // round trip of the curve example
    Ideal rt = ideal_from_noetherian_operators(ex.expected_ops(), ex.P);
    CHECK(ideal_equal(rt, ex.Q));
}

TEST_CASE("round trip of the six-operator example") {
    auto r = ring3();
    QPoly x1 = QPoly::variable(r, 0), x2 = QPoly::variable(r, 1), x3 = QPoly::variable(r, 2);
    Ideal Q(r, {x1 * x1, x2 * x2, x3 * x3, x1 * x2 + x1 * x3 + x2 * x3});
    Ideal P(r, {x1, x2, x3});
    Ideal rt = ideal_from_noetherian_operators(o22_operators(r), P);
    CHECK(ideal_equal(rt, Q));
}

TEST_CASE("operators differentiating independent variables are rejected") {
    O5 ex;
    DiffOp bad(ex.r);
    bad.add_term(Monomial({0, 0, 1}), QPoly::constant(ex.r, Rational(1)));
    CHECK_THROWS_AS(ideal_from_noetherian_operators({bad}, ex.P), Error);
}

TEST_CASE("corpus: all strategies agree, annihilate, and round trip") {
    for (const auto& pair : primary_corpus()) {
        CAPTURE(pair.label);
        VariableSplit split = independent_sets(pair.P);
        CHECK(multiplicity_over_prime(pair.Q, pair.P, split) == pair.multiplicity);

        NoetherianCertificate punc = noetherian_operators_punctual(pair.Q, pair.P);
        CHECK(punc.multiplicity == pair.multiplicity);
        CHECK(static_cast<int>(punc.operators.size()) == pair.multiplicity);
        CHECK(certificate_annihilates(punc, pair.Q));

        NoetherianCertificate mac = noetherian_operators_macaulay(pair.Q, pair.P);
        CHECK(operator_spans_equal_mod_prime(punc.operators, mac.operators, pair.P));

        // identity operator lies in every certificate span
        auto with_one = punc.operators;
        with_one.push_back(DiffOp::identity(pair.Q.ring(), Rational(1)));
        CHECK(operator_spans_equal_mod_prime(punc.operators, with_one, pair.P));

        Ideal rt = ideal_from_noetherian_operators(punc.operators, pair.P);
        CHECK(ideal_equal(rt, pair.Q));
    }
}

TEST_CASE("input verification spot checks") {
    O5 ex;
    CHECK_NOTHROW(verify_primary_inputs(ex.Q, ex.P));
    // Q not inside P
    Ideal bad1(ex.r, {ex.x1 + QPoly::constant(ex.r, Rational(1))});
    CHECK_THROWS_AS(verify_primary_inputs(bad1, ex.P), Error);
    // a generator of P with no power in Q
    Ideal bad2(ex.r, {ex.x1 * ex.x1});
    CHECK_THROWS_AS(verify_primary_inputs(bad2, ex.P), Error);
}
