#include <galmodel/factor.hh>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace galmodel;

namespace {

const std::vector<std::string> X{"x"};

MultiPoly x() { return MultiPoly::variable(X, "x"); }
MultiPoly cst(const Rat& c) { return MultiPoly::constant(X, c); }

MultiPoly expand(const Factorization& f) {
    MultiPoly p = cst(f.unit);
    for (auto& [g, m] : f.factors)
        for (int i = 0; i < m; ++i) p *= g;
    return p;
}

} // namespace

TEST_CASE("factor_univariate_q worked examples") {
    SECTION("x^2 - 2 is irreducible") {
        auto f = factor_univariate_q(x().pow(2) - cst(2));
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].first == x().pow(2) - cst(2));
        CHECK(f.factors[0].second == 1);
        CHECK(f.unit == Rat(1));
    }
    SECTION("x^4 - 4 = (x^2 - 2)(x^2 + 2)") {
        auto f = factor_univariate_q(x().pow(4) - cst(4));
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].first == x().pow(2) - cst(2));
        CHECK(f.factors[1].first == x().pow(2) + cst(2));
        CHECK(expand(f) == x().pow(4) - cst(4));
    }
    SECTION("x^2 = (x)^2") {
        auto f = factor_univariate_q(x().pow(2));
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].first == x());
        CHECK(f.factors[0].second == 2);
    }
}

TEST_CASE("content, units and non-monic inputs") {
    SECTION("6x^2 - 12") {
        auto f = factor_univariate_q(cst(6) * x().pow(2) - cst(12));
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].first == x().pow(2) - cst(2));
        CHECK(f.unit == Rat(6));
    }
    SECTION("(2x - 1)(3x + 2) x^2") {
        MultiPoly input = (cst(2) * x() - cst(1)) * (cst(3) * x() + cst(2)) * x().pow(2);
        auto f = factor_univariate_q(input);
        CHECK(f.unit == Rat(6));
        REQUIRE(f.factors.size() == 3);
        CHECK(expand(f) == input);
        // all factors are monic
        for (auto& [g, m] : f.factors) {
            auto d = to_dense(g);
            CHECK(d.back() == Rat(1));
        }
    }
    SECTION("rational coefficients") {
        MultiPoly input = x().pow(2) * Rat(1, 2) - cst(1);
        auto f = factor_univariate_q(input);
        CHECK(f.unit == Rat(1, 2));
        CHECK(expand(f) == input);
    }
}

TEST_CASE("recombination: irreducible polynomials that split modulo every prime") {
    SECTION("x^4 + 1") {
        auto f = factor_univariate_q(x().pow(4) + cst(1));
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].first == x().pow(4) + cst(1));
    }
    SECTION("x^4 - 10x^2 + 1") {
        MultiPoly input = x().pow(4) - cst(10) * x().pow(2) + cst(1);
        auto f = factor_univariate_q(input);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].first == input);
    }
}

TEST_CASE("inputs from the construction pipeline") {
    SECTION("x^3 - 2 is irreducible") {
        auto f = factor_univariate_q(x().pow(3) - cst(2));
        REQUIRE(f.factors.size() == 1);
    }
    SECTION("the fifth cyclotomic polynomial is irreducible") {
        MultiPoly phi5 = x().pow(4) + x().pow(3) + x().pow(2) + x() + cst(1);
        auto f = factor_univariate_q(phi5);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].first == phi5);
    }
    SECTION("x^6 - 1 splits into cyclotomics") {
        auto f = factor_univariate_q(x().pow(6) - cst(1));
        REQUIRE(f.factors.size() == 4);
        CHECK(expand(f) == x().pow(6) - cst(1));
        int total = 0;
        for (auto& [g, m] : f.factors) total += g.degree() * m;
        CHECK(total == 6);
    }
}

TEST_CASE("degree cap raises a diagnostic") {
    MultiPoly f = x().pow(25) - cst(1);
    CHECK_THROWS_AS(factor_univariate_q(f, 24), BudgetError);
    CHECK_NOTHROW(factor_univariate_q(f, 30));
}

TEST_CASE("re-expansion reproduces seeded random products bit-exactly") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> cd(-6, 6);
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly p = cst(1);
        int nf = 1 + int(rng() % 3);
        for (int i = 0; i < nf; ++i) {
            int d = 1 + int(rng() % 3);
            MultiPoly g = x().pow(d);
            for (int k = 0; k < d; ++k) g += x().pow(k) * Rat(cd(rng));
            p *= g;
        }
        auto f = factor_univariate_q(p);
        REQUIRE(expand(f) == p);
        int degsum = 0;
        for (auto& [g, m] : f.factors) degsum += g.degree() * m;
        CHECK(degsum == p.degree());
    }
}

TEST_CASE("rational roots") {
    MultiPoly f = (x() - cst(2)) * (x() + cst(Rat(3, 2))) * (x().pow(2) + cst(1));
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rat(-3, 2));
    CHECK(roots[1] == Rat(2));
}
