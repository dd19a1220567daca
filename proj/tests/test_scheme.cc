#include <galmodel/aut.hh>

#include <catch2/catch_amalgamated.hpp>

using namespace galmodel;

namespace {

FieldTower sqrt2_tower() {
    FieldTower q = FieldTower::rationals({});
    return certify_and_extend(q, "a", {q.from_rat(-2), q.from_rat(0), q.one()}, {});
}

FieldTower s3_tower() {
    FieldTower q = FieldTower::rationals({});
    FieldTower qc = certify_and_extend(q, "c", {q.from_rat(-2), q.from_rat(0), q.from_rat(0), q.one()}, {});
    return certify_and_extend(qc, "w", {qc.one(), qc.one(), qc.one()}, {});
}

FieldTower elliptic_tower() {
    FieldTower k = FieldTower::rationals({"t"});
    FieldElement t = k.t_var(0);
    return certify_and_extend(k, "s", {-(t.pow(3) - t), k.from_rat(0), k.one()}, {});
}

CoverComplex spec_z_cover(const FieldTower& T, const Budgets& b = {}) {
    CoverComplex cover;
    Chart v;
    v.name = "V";
    v.side = ChartSide::Y;
    v.ring = make_presentation(Ambient::K, {}, T, b);
    cover.charts.push_back(std::move(v));
    return cover;
}

CoverComplex elliptic_cover(const FieldTower& T, const Budgets& b = {}) {
    FieldElement t = T.t_var(0);
    CoverComplex cover;
    Chart v1;
    v1.name = "V1";
    v1.ring = make_presentation(Ambient::K, {t}, T, b);
    Chart v2;
    v2.name = "V2";
    v2.ring = make_presentation(Ambient::K, {t, t.inv()}, T, b);
    cover.charts.push_back(v1);
    cover.charts.push_back(v2);
    OverlapRecord ov;
    ov.chart_a = "V1";
    ov.chart_b = "V2";
    ov.overlap.name = "V12";
    ov.overlap.ring = make_presentation(Ambient::K, {t, t.inv()}, T, b);
    cover.overlaps.push_back(std::move(ov));
    return cover;
}

bool contains_element(const std::vector<FieldElement>& xs, const FieldElement& x) {
    for (const auto& y : xs)
        if (y == x) return true;
    return false;
}

} // namespace

TEST_CASE("relations of B = Z, Delta = {a, -a}") {
    FieldTower T = sqrt2_tower();
    GaloisGroup G = enumerate_gal(T);
    DeltaSet delta = build_delta({T.gen(0)}, G);
    RingPresentation b = make_presentation(Ambient::K, {}, T);
    RingPresentation a = build_chart_ring(b, delta, T);
    REQUIRE(a.generators.size() == 2);
    // the kernel is generated by the sum of the two generators and one quadratic
    REQUIRE(a.relations.polys.size() == 2);
    const auto& vars = a.relations.polys[0].vars();
    MultiPoly z1 = MultiPoly::variable(vars, "z1");
    MultiPoly z2 = MultiPoly::variable(vars, "z2");
    CHECK(a.relations.polys[0] == z1 + z2);
    // whichever generator is second, its square minus two is the reduced relation
    CHECK(a.relations.polys[1] == z2.pow(2) - MultiPoly::constant(vars, 2));
}

TEST_CASE("relations of the elliptic chart ring B = Z[t], Delta = {s, -s}") {
    FieldTower T = elliptic_tower();
    GaloisGroup G = enumerate_gal(T);
    DeltaSet delta = build_delta({T.gen(0)}, G);
    RingPresentation b = make_presentation(Ambient::K, {T.t_var(0)}, T);
    RingPresentation a = build_chart_ring(b, delta, T);
    REQUIRE(a.generators.size() == 3);
    // z1 -> t, and the two delta generators satisfy z2 + z3 and z3^2 - (z1^3 - z1)
    const auto& vars = a.relations.polys[0].vars();
    MultiPoly z1 = MultiPoly::variable(vars, "z1");
    MultiPoly z2 = MultiPoly::variable(vars, "z2");
    MultiPoly z3 = MultiPoly::variable(vars, "z3");
    REQUIRE(a.relations.polys.size() == 2);
    CHECK(a.relations.polys[0] == z2 + z3);
    CHECK(a.relations.polys[1] == z1.pow(3) - z3.pow(2) - z1); // monic under the graded order
}

TEST_CASE("build_delta") {
    SECTION("C2 orbit of {s}") {
        FieldTower T = elliptic_tower();
        GaloisGroup G = enumerate_gal(T);
        DeltaSet d = build_delta({T.gen(0)}, G);
        REQUIRE(d.delta.size() == 2);
        CHECK(contains_element(d.delta, T.gen(0)));
        CHECK(contains_element(d.delta, -T.gen(0)));
        CHECK(d.delta_prime == d.delta);
    }
    SECTION("empty nice basis (L = K)") {
        FieldTower T = FieldTower::rationals({"t"});
        GaloisGroup G = enumerate_gal(T);
        DeltaSet d = build_delta({}, G);
        CHECK(d.delta.empty());
    }
    SECTION("S3: union of the two generator orbits") {
        FieldTower T = s3_tower();
        GaloisGroup G = enumerate_gal(T);
        DeltaSet d = build_delta({T.gen(0), T.gen(1)}, G);
        REQUIRE(d.delta.size() == 5);
        FieldElement c = T.gen(0), w = T.gen(1);
        CHECK(contains_element(d.delta, c));
        CHECK(contains_element(d.delta, c * w));
        CHECK(contains_element(d.delta, c * w * w));
        CHECK(contains_element(d.delta, w));
        CHECK(contains_element(d.delta, w * w));
    }
}

TEST_CASE("build_chart_ring with empty Delta returns the base presentation") {
    FieldTower T = FieldTower::rationals({"t"});
    GaloisGroup G = enumerate_gal(T);
    DeltaSet d = build_delta({}, G);
    RingPresentation b = make_presentation(Ambient::K, {T.t_var(0)}, T);
    RingPresentation a = build_chart_ring(b, d, T);
    CHECK(a.generators.size() == 1);
    CHECK(a.relations.polys.empty());
}

TEST_CASE("validate_cover") {
    FieldTower T = elliptic_tower();
    SECTION("the elliptic two-chart cover passes") {
        CoverValidation v = validate_cover(elliptic_cover(T), T);
        CHECK(v.status == CoverStatus::Ok);
        CHECK(v.fraction_certs.count("V1") == 1);
    }
    SECTION("single chart {t} for K = Q(t) passes") {
        CoverComplex cover;
        Chart c;
        c.name = "V";
        c.ring = make_presentation(Ambient::K, {T.t_var(0)}, T);
        cover.charts.push_back(std::move(c));
        CHECK(validate_cover(cover, T).status == CoverStatus::Ok);
    }
    SECTION("duplicate rings under different names are not reduced") {
        CoverComplex cover;
        Chart c1, c2;
        c1.name = "V1";
        c1.ring = make_presentation(Ambient::K, {T.t_var(0)}, T);
        c2.name = "V2";
        c2.ring = make_presentation(Ambient::K, {T.t_var(0)}, T);
        cover.charts.push_back(c1);
        cover.charts.push_back(c2);
        CoverValidation v = validate_cover(cover, T);
        CHECK(v.status == CoverStatus::NotReduced);
        CHECK(v.detail.find("V1") != std::string::npos);
    }
    SECTION("chart {t^2} cannot certify Fr(B_V) = Q(t)") {
        CoverComplex cover;
        Chart c;
        c.name = "V";
        FieldElement t = T.t_var(0);
        c.ring = make_presentation(Ambient::K, {t * t}, T);
        cover.charts.push_back(std::move(c));
        CoverValidation v = validate_cover(cover, T);
        CHECK(v.status == CoverStatus::FractionFieldTooSmall);
    }
    SECTION("generators must lie in K") {
        CoverComplex cover;
        Chart c;
        c.name = "V";
        c.ring = make_presentation(Ambient::K, {T.gen(0)}, T);
        cover.charts.push_back(std::move(c));
        CHECK(validate_cover(cover, T).status == CoverStatus::GeneratorOutsideField);
    }
}

TEST_CASE("build_model instances") {
    SECTION("sqrt 2 over Spec Z: one chart presenting Z[a]") {
        FieldTower T = sqrt2_tower();
        GaloisGroup G = enumerate_gal(T);
        ModelX model = build_model(spec_z_cover(T), T, G, {T.gen(0)});
        CHECK(model.cover_x.charts.size() == 1);
        CHECK(model.cover_x.overlaps.empty());
        CHECK(model.cover_x.charts[0].ring.generators.size() == 2);
        CHECK(model.chart_map.at("V") == "V");
    }
    SECTION("elliptic: 2 charts + 1 overlap chart, each B_V[s]") {
        FieldTower T = elliptic_tower();
        GaloisGroup G = enumerate_gal(T);
        ModelX model = build_model(elliptic_cover(T), T, G, {T.gen(0)});
        CHECK(model.cover_x.charts.size() == 2);
        CHECK(model.cover_x.overlaps.size() == 1);
        CHECK(model_x_charts(model).size() == 3);
        for (const Chart* chart : model_x_charts(model)) {
            CHECK(contains_element(chart->ring.generators, T.gen(0)));
            CHECK(contains_element(chart->ring.generators, -T.gen(0)));
        }
        // the morphism is affine in chart form: the chart map is a bijection
        CHECK(model.chart_map.size() == 3);
    }
    SECTION("L = K: the X-cover mirrors the Y-cover") {
        FieldTower T = FieldTower::rationals({"t"});
        GaloisGroup G = enumerate_gal(T);
        CoverComplex cover;
        Chart c;
        c.name = "V";
        c.ring = make_presentation(Ambient::K, {T.t_var(0)}, T);
        cover.charts.push_back(std::move(c));
        ModelX model = build_model(cover, T, G, {});
        CHECK(model.cover_x.charts.size() == 1);
        CHECK(model.cover_x.charts[0].ring.generators.size() == 1);
        CHECK(model.delta.delta.empty());
    }
}

TEST_CASE("model invariants on the S3 instance") {
    FieldTower T = s3_tower();
    GaloisGroup G = enumerate_gal(T);
    ModelX model = build_model(spec_z_cover(T), T, G, {T.gen(0), T.gen(1)});
    REQUIRE(model.cover_x.charts.size() == 1);
    const RingPresentation& a = model.cover_x.charts[0].ring;
    // Delta is G-stable and the chart generator multiset is sigma-invariant
    for (const auto& sigma : G.elements) {
        RingPresentation image;
        image.generators.reserve(a.generators.size());
        for (const auto& g : a.generators) image.generators.push_back(sigma(g));
        CHECK(image.same_generator_multiset(a));
    }
    // all relations vanish on the generators (rechecked against make_presentation)
    TowerField L{T};
    for (const auto& rel : a.relations.polys) {
        FieldElement v = T.zero();
        for (auto& [m, coef] : rel.terms()) {
            FieldElement term = T.from_rat(coef);
            for (size_t i = 0; i < a.generators.size(); ++i)
                if (m[i] > 0) term = term * a.generators[i].pow(m[i]);
            v = v + term;
        }
        CHECK(v.is_zero());
    }
}

TEST_CASE("conjugate_charts") {
    SECTION("Z[a] is its own only conjugate") {
        FieldTower T = sqrt2_tower();
        GaloisGroup G = enumerate_gal(T);
        DeltaSet d = build_delta({T.gen(0)}, G);
        RingPresentation a = build_chart_ring(make_presentation(Ambient::K, {}, T), d, T);
        ConjugateSet cs = conjugate_charts(a, G, T);
        CHECK(cs.conjugates.size() == 1);
        CHECK_FALSE(cs.inconclusive);
    }
    SECTION("Z[c] has three conjugates in the splitting field") {
        FieldTower T = s3_tower();
        GaloisGroup G = enumerate_gal(T);
        RingPresentation a = make_presentation(Ambient::L, {T.gen(0)}, T);
        ConjugateSet cs = conjugate_charts(a, G, T);
        CHECK(cs.conjugates.size() == 3);
        CHECK_FALSE(cs.inconclusive);
        CHECK_FALSE(cs.witness.empty());
    }
    SECTION("Delta = {}: the base ring is the only conjugate") {
        FieldTower T = FieldTower::rationals({"t"});
        GaloisGroup G = enumerate_gal(T);
        RingPresentation b = make_presentation(Ambient::K, {T.t_var(0)}, T);
        ConjugateSet cs = conjugate_charts(b, G, T);
        CHECK(cs.conjugates.size() == 1);
    }
}

TEST_CASE("invariant_subring_probe") {
    SECTION("Z in Z[a] at bound 2: 0 and -2 certified") {
        FieldTower T = sqrt2_tower();
        GaloisGroup G = enumerate_gal(T);
        DeltaSet d = build_delta({T.gen(0)}, G);
        RingPresentation b = make_presentation(Ambient::K, {}, T);
        InvariantSubringReport rep = invariant_subring_probe(b, G, d, T, 2);
        CHECK(rep.certified);
        // the probes include the orbit sum 0 and the orbit product -2
        bool has_zero = false, has_m2 = false;
        for (const auto& p : rep.probes) {
            has_zero = has_zero || p.element == "0";
            has_m2 = has_m2 || p.element == "-2";
        }
        CHECK(has_zero);
        CHECK(has_m2);
    }
    SECTION("Z[t] in Z[t][s] at bound 2: 0 and -(t^3 - t) certified") {
        FieldTower T = elliptic_tower();
        GaloisGroup G = enumerate_gal(T);
        DeltaSet d = build_delta({T.gen(0)}, G);
        RingPresentation b = make_presentation(Ambient::K, {T.t_var(0)}, T);
        InvariantSubringReport rep = invariant_subring_probe(b, G, d, T, 2);
        CHECK(rep.certified);
        bool has_prod = false;
        for (const auto& p : rep.probes) has_prod = has_prod || p.element == "-t^3 + t";
        CHECK(has_prod);
    }
    SECTION("higher symmetrization degrees stay certified via the adaptive inner bound") {
        FieldTower T = elliptic_tower();
        GaloisGroup G = enumerate_gal(T);
        DeltaSet d = build_delta({T.gen(0)}, G);
        RingPresentation b = make_presentation(Ambient::K, {T.t_var(0)}, T);
        InvariantSubringReport rep = invariant_subring_probe(b, G, d, T, 6);
        CHECK(rep.certified);
    }
    SECTION("Delta = {}: trivially certified") {
        FieldTower T = FieldTower::rationals({"t"});
        GaloisGroup G = enumerate_gal(T);
        RingPresentation b = make_presentation(Ambient::K, {T.t_var(0)}, T);
        InvariantSubringReport rep = invariant_subring_probe(b, G, DeltaSet{}, T, 2);
        CHECK(rep.certified);
        CHECK(rep.probes.empty());
    }
}

TEST_CASE("subring membership statuses") {
    SECTION("a/2 is a member of Q[a]") {
        FieldTower T = sqrt2_tower();
        RingPresentation p = make_presentation(Ambient::L, {T.gen(0)}, T);
        FieldElement half_a = T.gen(0) * T.from_rat(Rat(1, 2));
        CHECK(subring_member(half_a, p, T, 6).status == MemberStatus::Member);
    }
    SECTION("cw is certainly not in Q[c]") {
        FieldTower T = s3_tower();
        RingPresentation p = make_presentation(Ambient::L, {T.gen(0)}, T);
        MembershipResultQ m = subring_member(T.gen(0) * T.gen(1), p, T, 6);
        CHECK(m.status == MemberStatus::NotMember);
    }
    SECTION("t in Z[1/t] is only refuted at the bound") {
        FieldTower T = elliptic_tower();
        FieldElement t = T.t_var(0);
        RingPresentation p = make_presentation(Ambient::K, {t.inv()}, T);
        MembershipResultQ m = subring_member(t, p, T, 6);
        CHECK(m.status == MemberStatus::Inconclusive);
    }
    SECTION("certificates re-evaluate to the element") {
        FieldTower T = s3_tower();
        RingPresentation p = make_presentation(Ambient::L, {T.gen(0), T.gen(1)}, T);
        FieldElement x = T.gen(0) * T.gen(1) + T.from_rat(3);
        MembershipResultQ m = subring_member(x, p, T, 6);
        REQUIRE(m.status == MemberStatus::Member);
        CHECK_FALSE(m.certificate.is_zero());
    }
}
