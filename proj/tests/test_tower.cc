#include <galmodel/roots.hh>
#include <galmodel/univariate.hh>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace galmodel;

namespace {

// Q(sqrt 2): a^2 = 2
FieldTower sqrt2_tower() {
    FieldTower q = FieldTower::rationals({});
    return certify_and_extend(q, "a", {q.from_rat(-2), q.from_rat(0), q.one()}, {});
}

// K = Q(t), L = K(s) with s^2 = t^3 - t
FieldTower elliptic_tower() {
    FieldTower k = FieldTower::rationals({"t"});
    FieldElement t = k.t_var(0);
    return certify_and_extend(k, "s", {-(t.pow(3) - t), k.from_rat(0), k.one()}, {});
}

// splitting field of x^3 - 2: c^3 = 2, w^2 + w + 1 = 0
FieldTower s3_tower() {
    FieldTower q = FieldTower::rationals({});
    FieldTower qc = certify_and_extend(q, "c", {q.from_rat(-2), q.from_rat(0), q.from_rat(0), q.one()}, {});
    return certify_and_extend(qc, "w", {qc.one(), qc.one(), qc.one()}, {});
}

FieldElement random_element(std::mt19937& rng, const FieldTower& T) {
    std::uniform_int_distribution<long> cd(-5, 5);
    std::vector<RatFunc> coords;
    for (size_t i = 0; i < T.dim_over_rationals(); ++i) {
        MultiPoly num = MultiPoly::zero(T.tvars());
        for (size_t v = 0; v < T.r(); ++v) {
            Monomial m(T.r(), 0);
            m[v] = int(rng() % 2);
            num.add_term(m, Rat(cd(rng)));
        }
        if (T.r() == 0) num = MultiPoly::constant(T.tvars(), Rat(cd(rng)));
        coords.push_back(RatFunc::from_poly(num));
    }
    return T.unflatten(coords);
}

} // namespace

TEST_CASE("tower construction") {
    SECTION("Q(sqrt 2) has degree 2") {
        FieldTower T = sqrt2_tower();
        CHECK(T.dim_over_rationals() == 2);
        CHECK(T.degree_over_base() == 2);
    }
    SECTION("elliptic function field: [L:K] = 2 over K = Q(t)") {
        FieldTower T = elliptic_tower();
        CHECK(T.r() == 1);
        CHECK(T.degree_over_base() == 2);
    }
    SECTION("reducible minimal polynomial is rejected with a witness") {
        FieldTower q = FieldTower::rationals({});
        try {
            certify_and_extend(q, "a", {q.from_rat(-1), q.from_rat(0), q.one()}, {});
            FAIL("expected InputError");
        } catch (const InputError& e) {
            std::string msg = e.what();
            CHECK(msg.find("reducible-minimal-polynomial") != std::string::npos);
            CHECK(msg.find("x - 1") != std::string::npos); // witness factor
        }
    }
    SECTION("non-monic minimal polynomial is rejected") {
        FieldTower q = FieldTower::rationals({});
        CHECK_THROWS_AS(certify_and_extend(q, "a", {q.from_rat(-2), q.from_rat(0), q.from_rat(2)}, {}),
                        InputError);
    }
    SECTION("duplicate symbol is rejected") {
        FieldTower T = sqrt2_tower();
        CHECK_THROWS_AS(T.extend("a", {T.from_rat(-3), T.zero(), T.one()}), InputError);
    }
}

TEST_CASE("normal forms in Q(sqrt 2)") {
    FieldTower T = sqrt2_tower();
    FieldElement a = T.gen(0);
    SECTION("a * a reduces to 2") { CHECK(a * a == T.from_rat(2)); }
    SECTION("(1 + a)(1 - a) = -1") {
        CHECK((T.one() + a) * (T.one() - a) == T.from_rat(-1));
    }
    SECTION("rendering") {
        CHECK((T.one() + a * T.from_rat(2)).to_string() == "1 + 2*a");
        CHECK(a.pow(3).to_string() == "2*a");
    }
}

TEST_CASE("normal forms in the elliptic tower") {
    FieldTower T = elliptic_tower();
    FieldElement t = T.t_var(0);
    FieldElement s = T.gen(0);
    SECTION("s^2 / (t^3 - t) = 1") {
        CHECK(s * s / (t.pow(3) - t) == T.one());
    }
    SECTION("inverse of t") {
        CHECK(t.inv() * t == T.one());
        CHECK(t.inv().to_string() == "1/t");
    }
    SECTION("inverse of s") {
        CHECK(s.inv() * s == T.one());
    }
}

TEST_CASE("inverses") {
    FieldTower T = sqrt2_tower();
    FieldElement a = T.gen(0);
    SECTION("inv(a) = a/2") { CHECK(a.inv() == a * T.from_rat(Rat(1, 2))); }
    SECTION("inv(1) = 1") { CHECK(T.one().inv() == T.one()); }
    SECTION("inverse of zero is rejected") { CHECK_THROWS_AS(T.zero().inv(), std::domain_error); }
}

TEST_CASE("field axioms on seeded random elements") {
    std::mt19937 rng(17);
    std::vector<FieldTower> towers{sqrt2_tower(), elliptic_tower(), s3_tower()};
    for (const auto& T : towers) {
        for (int i = 0; i < 333; ++i) {
            FieldElement x = random_element(rng, T);
            FieldElement y = random_element(rng, T);
            FieldElement z = random_element(rng, T);
            REQUIRE((x + y) + z == x + (y + z));
            REQUIRE((x * y) * z == x * (y * z));
            REQUIRE(x * (y + z) == x * y + x * z);
            REQUIRE(x * y == y * x);
            if (!x.is_zero()) REQUIRE(x * x.inv() == T.one());
        }
    }
}

TEST_CASE("minimal polynomials over K") {
    SECTION("generator of Q(sqrt 2): x^2 - 2") {
        FieldTower T = sqrt2_tower();
        auto m = min_poly_over(T.gen(0), T.base_mark());
        MultiPoly f = min_poly_as_multipoly(m, "x");
        std::vector<std::string> X{"x"};
        MultiPoly x = MultiPoly::variable(X, "x");
        CHECK(f == x.pow(2) - MultiPoly::constant(X, 2));
    }
    SECTION("1 + a: x^2 - 2x - 1") {
        FieldTower T = sqrt2_tower();
        auto m = min_poly_over(T.one() + T.gen(0), T.base_mark());
        MultiPoly f = min_poly_as_multipoly(m, "x");
        std::vector<std::string> X{"x"};
        MultiPoly x = MultiPoly::variable(X, "x");
        CHECK(f == x.pow(2) - MultiPoly::constant(X, 2) * x - MultiPoly::constant(X, 1));
    }
    SECTION("a rational element: x - 5") {
        FieldTower T = sqrt2_tower();
        auto m = min_poly_over(T.from_rat(5), T.base_mark());
        REQUIRE(m.size() == 2);
        CHECK(m[0] == T.from_rat(-5));
    }
    SECTION("degree divides [L:K]") {
        FieldTower T = s3_tower();
        std::mt19937 rng(23);
        for (int i = 0; i < 10; ++i) {
            FieldElement x = random_element(rng, T);
            auto m = min_poly_over(x, T.base_mark());
            CHECK(T.degree_over_base() % (m.size() - 1) == 0);
        }
    }
    SECTION("the minimal polynomial divides the characteristic polynomial of multiplication") {
        FieldTower T = s3_tower();
        FieldElement x = T.gen(0) + T.gen(1); // c + w
        auto m = min_poly_over(x, 0);
        // oracle: characteristic polynomial by Newton's identities from the traces of powers
        const size_t n = T.dim_over_rationals();
        std::vector<Rat> traces(n + 1, Rat(0));
        for (size_t k = 1; k <= n; ++k) {
            FieldElement xk = x.pow(long(k));
            // trace of multiplication-by-xk on the rational basis
            Rat tr(0);
            for (size_t b = 0; b < n; ++b) {
                std::vector<RatFunc> col = (xk * T.basis_element(b)).flatten();
                tr += col[b].rational_value();
            }
            traces[k] = tr;
        }
        std::vector<Rat> cp(n + 1, Rat(0)); // coefficients, cp[n] = 1
        cp[n] = 1;
        for (size_t k = 1; k <= n; ++k) {
            Rat acc(0);
            for (size_t i = 1; i <= k; ++i) acc += cp[n - k + i] * traces[i];
            cp[n - k] = -acc / Rat(long(k));
        }
        std::vector<std::string> X{"x"};
        MultiPoly charpoly = MultiPoly::zero(X);
        for (size_t i = 0; i <= n; ++i) charpoly.add_term(Monomial{int(i)}, cp[i]);
        MultiPoly mp = min_poly_as_multipoly(m, "x");
        auto [q, r] = poly_divmod(charpoly, mp);
        CHECK(r.is_zero());
    }
}

TEST_CASE("dimension equals the product of generator degrees") {
    FieldTower T = s3_tower();
    // enumerate the basis and check linear independence over Q
    const size_t n = T.dim_over_rationals();
    CHECK(n == 6);
    Mat<RatField> M(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        auto coords = T.basis_element(i).flatten();
        for (size_t j = 0; j < n; ++j) M[j][i] = coords[j].rational_value();
    }
    CHECK(rank(RatField{}, M) == n);
}

TEST_CASE("flatten and unflatten round-trip") {
    std::mt19937 rng(71);
    FieldTower T = elliptic_tower();
    for (int i = 0; i < 50; ++i) {
        FieldElement x = random_element(rng, T);
        CHECK(T.unflatten(x.flatten()) == x);
    }
}

TEST_CASE("substitute_gens is a ring map") {
    FieldTower T = sqrt2_tower();
    FieldElement a = T.gen(0);
    std::vector<FieldElement> images{-a};
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        FieldElement x = random_element(rng, T);
        FieldElement y = random_element(rng, T);
        CHECK(substitute_gens(x + y, images) ==
              substitute_gens(x, images) + substitute_gens(y, images));
        CHECK(substitute_gens(x * y, images) ==
              substitute_gens(x, images) * substitute_gens(y, images));
    }
    CHECK(substitute_gens(T.one() + a, images) == T.one() - a);
}
