#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "noethops/dual_space.hpp"
#include "support/helpers.hpp"

using namespace noethops;
using namespace noethops::testing;

namespace {

RingPtr cring2() { return Ring::make({"x1", "x2"}, CoeffField::ComplexDouble); }

CPoly cvar(const RingPtr& r, size_t i) { return CPoly::variable(r, i); }
CPoly ccst(const RingPtr& r, double c) { return CPoly::constant(r, Complex(c, 0)); }

// numeric pairing (A . g)(p)
Complex apply_at(const ConstDiffOp<Complex>& A, const CPoly& g, const std::vector<Complex>& p) {
    Complex acc(0, 0);
    for (const auto& [alpha, c] : A.terms())
        acc += c * dop_pairing(g, alpha, std::span<const Complex>(p));
    return acc;
}

std::vector<std::vector<Complex>> op_vectors(const std::vector<ConstDiffOp<Complex>>& ops,
                                             const std::vector<Monomial>& cols) {
    std::vector<std::vector<Complex>> vecs;
    for (const auto& op : ops) {
        std::vector<Complex> v(cols.size(), Complex(0, 0));
        for (size_t j = 0; j < cols.size(); ++j)
            if (const Complex* c = op.coeff(cols[j])) v[j] = *c;
        vecs.push_back(std::move(v));
    }
    return vecs;
}

} // namespace

TEST_CASE("numeric kernel basics") {
    CMatrix zero(3, 3);
    CHECK(numeric_kernel(zero, 1e-6).size() == 3);

    CMatrix m(2, 2);
    m.at(0, 0) = Complex(1, 0);
    m.at(1, 1) = Complex(1e-12, 0);
    CHECK(numeric_kernel(m, 1e-6).size() == 1);
}

TEST_CASE("numeric kernel detects rank of noisy products") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ud(-1, 1);
    size_t mrows = 8, n = 6, r = 3;
    CMatrix a(mrows, r), b(r, n);
    for (auto& z : a.a) z = Complex(ud(rng), ud(rng));
    for (auto& z : b.a) z = Complex(ud(rng), ud(rng));
    CMatrix prod(mrows, n);
    for (size_t i = 0; i < mrows; ++i)
        for (size_t j = 0; j < n; ++j) {
            Complex s(0, 0);
            for (size_t k = 0; k < r; ++k) s += a.at(i, k) * b.at(k, j);
            prod.at(i, j) = s + Complex(1e-10 * ud(rng), 1e-10 * ud(rng));
        }
    CHECK(numeric_kernel(prod, 1e-6).size() == n - r);
}

TEST_CASE("macaulay serial and openmp fills agree") {
    auto r = cring2();
    std::vector<CPoly> rows;
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> ud(-2, 2);
    for (int i = 0; i < 40; ++i) {
        CPoly f = CPoly::zero(r);
        for (const auto& m : monomials_up_to_degree(2, 4))
            f.add_term(m, Complex(ud(rng), ud(rng)));
        rows.push_back(std::move(f));
    }
    auto cols = monomials_up_to_degree(2, 3);
    std::vector<Complex> p{Complex(0.3, -0.1), Complex(1.2, 0.4)};
    CMatrix a = macaulay_fill_serial(rows, cols, p);
    CMatrix b = macaulay_fill_openmp(rows, cols, p);
    REQUIRE(a.a.size() == b.a.size());
    for (size_t i = 0; i < a.a.size(); ++i) CHECK(a.a[i] == b.a[i]);
}

TEST_CASE("truncated dual of a hyperplane through the origin") {
    auto r = cring2();
    std::vector<CPoly> gens{cvar(r, 0)};
    std::vector<Complex> origin{Complex(0, 0), Complex(0, 0)};

    auto D0 = truncated_dual(origin, gens, 0);
    REQUIRE(D0.dimension() == 1);
    CHECK(D0.basis[0].to_string() == "1");

    auto D1 = truncated_dual(origin, gens, 1);
    REQUIRE(D1.dimension() == 2);
    CHECK(D1.basis[0].to_string() == "1");
    CHECK(D1.basis[1].to_string() == "dx2");
}

TEST_CASE("truncated dual examples") {
    auto r = cring2();
    std::vector<Complex> origin{Complex(0, 0), Complex(0, 0)};

    // maximal ideal: dual is always {1}
    std::vector<CPoly> mx{cvar(r, 0), cvar(r, 1)};
    for (int d : {0, 2, 5}) {
        auto D = truncated_dual(origin, mx, d);
        REQUIRE(D.dimension() == 1);
        CHECK(D.basis[0].to_string() == "1");
    }

    // (x1^2, x2): dual {1, dx1} at any truncation >= 1
    std::vector<CPoly> I{cvar(r, 0) * cvar(r, 0), cvar(r, 1)};
    auto D3 = truncated_dual(origin, I, 3);
    REQUIRE(D3.dimension() == 2);
    CHECK(D3.basis[1].to_string() == "dx1");
    auto D0 = truncated_dual(origin, I, 0);
    CHECK(D0.dimension() == 1);
}

TEST_CASE("zero dimensional dual at an approximate point") {
    auto r = cring2();
    CPoly g1 = cvar(r, 0) * cvar(r, 0) + cvar(r, 1) * cvar(r, 1) - ccst(r, 4);
    CPoly g2 = (cvar(r, 0) - ccst(r, 1)) * (cvar(r, 0) - ccst(r, 1));
    std::vector<CPoly> gens{g1, g2};
    std::vector<Complex> p{Complex(1.0, 0), Complex(1.7320508, 0)};

    auto D = zero_dimensional_dual(p, gens);
    REQUIRE(D.dimension() == 2);
    CHECK(D.truncation == kCompleteDual);
    CHECK(D.basis[0].to_string() == "1");

    // second element proportional to -1.7320508 d1 + d2
    const ConstDiffOp<Complex>& A = D.basis[1];
    const Complex* c1 = A.coeff(Monomial({1, 0}));
    const Complex* c2 = A.coeff(Monomial({0, 1}));
    REQUIRE(c1 != nullptr);
    REQUIRE(c2 != nullptr);
    Complex ratio = *c1 / *c2;
    CHECK(std::abs(ratio - Complex(-1.7320508, 0)) < 1e-5);

    // hilbert function 1, 1, 0 (o29)
    CHECK(dual_hilbert_function(0, D) == 1);
    CHECK(dual_hilbert_function(1, D) == 1);
    CHECK(dual_hilbert_function(2, D) == 0);
}

TEST_CASE("zero dimensional dual rejects off-variety points") {
    auto r = cring2();
    std::vector<CPoly> gens{cvar(r, 0) * cvar(r, 0) + cvar(r, 1) * cvar(r, 1) - ccst(r, 4)};
    std::vector<Complex> bad{Complex(5, 0), Complex(5, 0)};
    CHECK_THROWS_WITH_AS(zero_dimensional_dual(bad, gens), "point not on variety", Error);
}

TEST_CASE("univariate dual of x^3 has dimension 3") {
    auto r = Ring::make({"x1"}, CoeffField::ComplexDouble);
    std::vector<CPoly> gens{cvar(r, 0) * cvar(r, 0) * cvar(r, 0)};
    std::vector<Complex> origin{Complex(0, 0)};
    auto D = zero_dimensional_dual(origin, gens);
    REQUIRE(D.dimension() == 3);
    CHECK(D.basis[0].to_string() == "1");
    CHECK(D.basis[1].to_string() == "dx1");
    CHECK(D.basis[2].to_string() == "dx1^2");
    CHECK(dual_hilbert_function(0, D) == 1);
    CHECK(dual_hilbert_function(1, D) == 1);
    CHECK(dual_hilbert_function(2, D) == 1);
    CHECK(dual_hilbert_function(3, D) == 0);
}

TEST_CASE("non-isolated point fails to stabilize") {
    auto r = cring2();
    std::vector<CPoly> gens{cvar(r, 0)};
    std::vector<Complex> origin{Complex(0, 0), Complex(0, 0)};
    DualOptions opts;
    opts.degree_cap = 6;
    CHECK_THROWS_WITH_AS(zero_dimensional_dual(origin, gens, opts), "point may not be isolated",
                         Error);
}

TEST_CASE("eliminating dual") {
    auto r = cring2();
    std::vector<Complex> origin{Complex(0, 0), Complex(0, 0)};

    // infinite case must error: E^0 of (x1) with V = {x1}
    std::vector<CPoly> I1{cvar(r, 0)};
    DualOptions small;
    small.degree_cap = 8;
    CHECK_THROWS_WITH_AS(eliminating_dual(origin, I1, {0}, 0, small),
                         "eliminating dual not finite at this truncation", Error);

    // E^0 of (x2, x1^2) with V = {x2} is {1, dx1}
    std::vector<CPoly> I2{cvar(r, 1), cvar(r, 0) * cvar(r, 0)};
    auto E = eliminating_dual(origin, I2, {1}, 0);
    REQUIRE(E.dimension() == 2);
    CHECK(E.basis[0].to_string() == "1");
    CHECK(E.basis[1].to_string() == "dx1");
    REQUIRE(E.elimination.has_value());
    CHECK(E.elimination->second == 0);
}

TEST_CASE("eliminating dual monotonicity on random monomial ideals") {
    auto r = cring2();
    std::vector<Complex> origin{Complex(0, 0), Complex(0, 0)};
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> ed(0, 3);
    DualOptions fixed;
    fixed.total_degree_limit = 5;
    int tested = 0;
    while (tested < 25) {
        // random artinian monomial ideal: x1^a, x2^b, and one mixed monomial
        int a = 1 + ed(rng), b = 1 + ed(rng);
        std::vector<CPoly> gens{cvar(r, 0).pow(a), cvar(r, 1).pow(b)};
        Monomial mixed({ed(rng), ed(rng)});
        if (mixed.degree() > 0) gens.push_back(CPoly::term(r, mixed, Complex(1, 0)));
        auto E0 = eliminating_dual(origin, gens, {0}, 0, fixed);
        auto E1 = eliminating_dual(origin, gens, {0}, 1, fixed);
        // E^1 contains E^0 as a span
        auto cols = monomials_up_to_degree(2, 5);
        auto v0 = op_vectors(E0.basis, cols);
        auto v1 = op_vectors(E1.basis, cols);
        auto joint = v1;
        joint.insert(joint.end(), v0.begin(), v0.end());
        CMatrix m1(v1.size(), cols.size()), mj(joint.size(), cols.size());
        for (size_t i = 0; i < v1.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) m1.at(i, j) = v1[i][j];
        for (size_t i = 0; i < joint.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) mj.at(i, j) = joint[i][j];
        CHECK(numeric_rank(m1, 1e-8) == numeric_rank(mj, 1e-8));
        ++tested;
    }
}

TEST_CASE("colon duals") {
    // univariate: E^0[(x^2):x, {x}] = dual of (x)
    auto r1 = Ring::make({"x1"}, CoeffField::ComplexDouble);
    std::vector<CPoly> I{cvar(r1, 0) * cvar(r1, 0)};
    std::vector<Complex> origin1{Complex(0, 0)};
    auto C = colon_dual(origin1, I, 0, 0);
    REQUIRE(C.dimension() == 1);
    CHECK(C.basis[0].to_string() == "1");

    // x acting on the dual of the maximal ideal gives the zero space
    auto r = cring2();
    std::vector<CPoly> mx{cvar(r, 0), cvar(r, 1)};
    std::vector<Complex> origin{Complex(0, 0), Complex(0, 0)};
    auto C2 = colon_dual(origin, mx, 0, 0);
    CHECK(C2.dimension() == 0);

    // I = (x1 x2): colon dual by x1 equals the eliminating dual of (x2)
    std::vector<CPoly> I3{cvar(r, 0) * cvar(r, 1)};
    auto C3 = colon_dual(origin, I3, 0, 0);
    std::vector<CPoly> X2{cvar(r, 1)};
    DualOptions fixed;
    fixed.total_degree_limit = 4;
    auto E = eliminating_dual(origin, X2, {0}, 0, fixed);
    auto cols = monomials_up_to_degree(2, 5);
    CHECK(numeric_spans_equal(op_vectors(C3.basis, cols), op_vectors(E.basis, cols), 1e-8));
}

TEST_CASE("g-corners of the paper example") {
    auto r = cring2();
    CPoly g1 = cvar(r, 0) * cvar(r, 0) + cvar(r, 1) * cvar(r, 1) - ccst(r, 4);
    CPoly g2 = (cvar(r, 0) - ccst(r, 1)) * (cvar(r, 0) - ccst(r, 1));
    std::vector<Complex> p{Complex(1.0, 0), Complex(1.7320508, 0)};
    auto res = g_corners<Complex>(p, {g1, g2}, false);
    REQUIRE(res.complete);
    REQUIRE(res.corners.size() == 2);
    CHECK(res.corners[0] == Monomial({0, 1})); // x2
    CHECK(res.corners[1] == Monomial({2, 0})); // x1^2
}

TEST_CASE("g-corners trivia") {
    auto r = cring2();
    std::vector<Complex> origin{Complex(0, 0), Complex(0, 0)};
    auto res = g_corners<Complex>(origin, {cvar(r, 0), cvar(r, 1)}, false);
    REQUIRE(res.complete);
    CHECK(res.corners.size() == 2);

    // local ring at 0 kills the (x-1) factor of x^2 (x-1)
    auto r1 = Ring::make({"x1"}, CoeffField::ComplexDouble);
    CPoly f = cvar(r1, 0) * cvar(r1, 0) * (cvar(r1, 0) - ccst(r1, 1));
    auto res1 = g_corners<Complex>({Complex(0, 0)}, {f}, false);
    REQUIRE(res1.complete);
    REQUIRE(res1.corners.size() == 1);
    CHECK(res1.corners[0] == Monomial(std::vector<int>{2}));
}

TEST_CASE("g-corners with standard basis") {
    // I = (x1^2 (x1-1)) at 0: standard basis element is x1^2 locally
    auto r1 = Ring::make({"x1"}, CoeffField::ComplexDouble);
    CPoly f = cvar(r1, 0) * cvar(r1, 0) * (cvar(r1, 0) - ccst(r1, 1));
    auto res = g_corners<Complex>({Complex(0, 0)}, {f}, true);
    REQUIRE(res.complete);
    REQUIRE(res.standard_basis.size() == 1);
    const CPoly& sb = res.standard_basis[0];
    // lead x1^2, and any lower-order terms are numerically negligible
    const Complex* lead = sb.coeff(Monomial(std::vector<int>{2}));
    REQUIRE(lead != nullptr);
    for (const auto& [m, c] : sb.terms())
        if (m.degree() < 2) CHECK(std::abs(c) < 1e-8);
}

TEST_CASE("exhaustive staircase oracle for monomial ideals in two variables") {
    // all antichain-generated monomial ideals with generators of degree <= 4
    auto pool = monomials_up_to_degree(2, 4);
    pool.erase(pool.begin()); // drop 1: the unit ideal has no corners
    auto rq = Ring::make({"x", "y"});
    std::vector<Rational> origin{Rational(0), Rational(0)};
    DualOptions opts;
    opts.degree_cap = 10;
    opts.require_complete = false;

    size_t n = pool.size();
    int tested = 0;
    // subsets of size up to 3 that form divisibility antichains
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            for (size_t k = j; k < n; ++k) {
                std::vector<Monomial> gens{pool[i]};
                if (j != i) gens.push_back(pool[j]);
                if (k != j && k != i) gens.push_back(pool[k]);
                bool antichain = true;
                for (size_t a = 0; a < gens.size() && antichain; ++a)
                    for (size_t b = 0; b < gens.size() && antichain; ++b)
                        if (a != b && gens[a].divides(gens[b])) antichain = false;
                if (!antichain) continue;

                std::vector<QPoly> qgens;
                for (const auto& m : gens) qgens.push_back(QPoly::term(rq, m, Rational(1)));
                auto res = g_corners<Rational>(origin, qgens, false, opts);
                // oracle: corners of a monomial ideal are its minimal generators
                std::vector<Monomial> expected = gens;
                std::sort(expected.begin(), expected.end(), GrevlexLess{});
                std::vector<Monomial> got = res.corners;
                std::sort(got.begin(), got.end(), GrevlexLess{});
                CHECK(got == expected);
                ++tested;
            }
        }
    }
    CHECK(tested > 100);
}

TEST_CASE("kill property and derivative closure, randomized") {
    auto r = cring2();
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> ud(-1.5, 1.5);
    int tested = 0;
    while (tested < 100) {
        // random point, random ideal vanishing at it to second order in a direction
        std::vector<Complex> p{Complex(ud(rng), 0), Complex(ud(rng), 0)};
        CPoly l1 = cvar(r, 0) - ccst(r, 0) * ccst(r, 0) - CPoly::constant(r, p[0]);
        CPoly l2 = cvar(r, 1) - CPoly::constant(r, p[1]);
        std::vector<CPoly> gens{l1 * l1, l2 + l1 * ccst(r, ud(rng))};
        auto D = zero_dimensional_dual(p, gens);
        REQUIRE(D.dimension() == 2);
        // kill property
        for (const auto& A : D.basis)
            for (const auto& g : gens) {
                double norm = 0;
                for (const auto& [m, c] : g.terms()) norm += std::abs(c) * std::abs(c);
                CHECK(std::abs(apply_at(A, g, p)) <= 1e-6 * (1 + std::sqrt(norm)));
            }
        // derivative closure: contraction by each variable stays in the span
        auto cols = monomials_up_to_degree(2, 4);
        auto base = op_vectors(D.basis, cols);
        CMatrix mb(base.size(), cols.size());
        for (size_t i = 0; i < base.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) mb.at(i, j) = base[i][j];
        size_t rank0 = numeric_rank(mb, 1e-8);
        for (size_t v = 0; v < 2; ++v) {
            std::vector<ConstDiffOp<Complex>> all = D.basis;
            for (const auto& A : D.basis) {
                auto c = A.contract(v);
                if (!c.is_zero()) all.push_back(c);
            }
            auto vecs = op_vectors(all, cols);
            CMatrix m(vecs.size(), cols.size());
            for (size_t i = 0; i < vecs.size(); ++i)
                for (size_t j = 0; j < cols.size(); ++j) m.at(i, j) = vecs[i][j];
            CHECK(numeric_rank(m, 1e-8) == rank0);
        }
        ++tested;
    }
}

TEST_CASE("dual dimension monotone and stabilizing on (x^a, y^b)") {
    auto r = cring2();
    std::vector<Complex> origin{Complex(0, 0), Complex(0, 0)};
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            std::vector<CPoly> gens{cvar(r, 0).pow(a), cvar(r, 1).pow(b)};
            size_t prev = 0;
            for (int d = 0; d <= a + b; ++d) {
                auto D = truncated_dual(origin, gens, d);
                CHECK(D.dimension() >= prev);
                prev = D.dimension();
            }
            auto Z = zero_dimensional_dual(origin, gens);
            CHECK(Z.dimension() == static_cast<size_t>(a * b));
            int total = 0;
            for (int i = 0; i <= a + b; ++i) total += dual_hilbert_function(i, Z);
            CHECK(total == a * b);
        }
    }
}

TEST_CASE("hilbert function beyond a truncation errors") {
    auto r = cring2();
    std::vector<Complex> origin{Complex(0, 0), Complex(0, 0)};
    auto D = truncated_dual(origin, std::vector<CPoly>{cvar(r, 0)}, 2);
    CHECK(dual_hilbert_function(2, D) >= 0);
    CHECK_THROWS_AS(dual_hilbert_function(3, D), Error);
}
