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

CoverComplex spec_z_cover(const FieldTower& T) {
    CoverComplex cover;
    Chart v;
    v.name = "V";
    v.ring = make_presentation(Ambient::K, {}, T);
    cover.charts.push_back(std::move(v));
    return cover;
}

CoverComplex elliptic_cover(const FieldTower& T) {
    FieldElement t = T.t_var(0);
    CoverComplex cover;
    Chart v1, v2;
    v1.name = "V1";
    v1.ring = make_presentation(Ambient::K, {t}, T);
    v2.name = "V2";
    v2.ring = make_presentation(Ambient::K, {t, t.inv()}, T);
    cover.charts.push_back(v1);
    cover.charts.push_back(v2);
    OverlapRecord ov;
    ov.chart_a = "V1";
    ov.chart_b = "V2";
    ov.overlap.name = "V12";
    ov.overlap.ring = make_presentation(Ambient::K, {t, t.inv()}, T);
    cover.overlaps.push_back(std::move(ov));
    return cover;
}

/// hand-assembled X with the single chart Z[c] inside the splitting field
ModelX cubic_chart_model(const FieldTower& T, const GaloisGroup& G) {
    ModelX model;
    model.group = G;
    model.cover_y = spec_z_cover(T);
    Chart x;
    x.name = "U";
    x.side = ChartSide::X;
    x.ring = make_presentation(Ambient::L, {T.gen(0)}, T);
    model.cover_x.charts.push_back(std::move(x));
    model.chart_map["U"] = "V";
    return model;
}

} // namespace

TEST_CASE("compute_aut and iso_check on constructed models") {
    SECTION("sqrt 2 model: Aut of order 2") {
        FieldTower T = sqrt2_tower();
        GaloisGroup G = enumerate_gal(T);
        ModelX model = build_model(spec_z_cover(T), T, G, {T.gen(0)});
        AutGroup aut = compute_aut(model, T);
        CHECK(aut.members.size() == 2);
        CHECK_FALSE(aut.inconclusive);
        IsoReport iso = iso_check(aut, G);
        CHECK(iso.iso);
        CHECK(iso.orders_match);
        CHECK(iso.tables_match);
    }
    SECTION("elliptic model: Aut of order 2") {
        FieldTower T = elliptic_tower();
        GaloisGroup G = enumerate_gal(T);
        ModelX model = build_model(elliptic_cover(T), T, G, {T.gen(0)});
        AutGroup aut = compute_aut(model, T);
        CHECK(aut.members.size() == 2);
        CHECK(iso_check(aut, G).iso);
    }
    SECTION("S3 model: nonabelian order 6 with matching tables") {
        FieldTower T = s3_tower();
        GaloisGroup G = enumerate_gal(T);
        ModelX model = build_model(spec_z_cover(T), T, G, {T.gen(0), T.gen(1)});
        AutGroup aut = compute_aut(model, T);
        REQUIRE(aut.members.size() == 6);
        IsoReport iso = iso_check(aut, G);
        CHECK(iso.iso);
        bool nonabelian = false;
        for (size_t i = 0; i < 6 && !nonabelian; ++i)
            for (size_t j = 0; j < 6 && !nonabelian; ++j)
                nonabelian = aut.table[i][j] != aut.table[j][i];
        CHECK(nonabelian);
    }
    SECTION("trivial model: trivial groups") {
        FieldTower T = FieldTower::rationals({"t"});
        GaloisGroup G = enumerate_gal(T);
        CoverComplex cover;
        Chart c;
        c.name = "V";
        c.ring = make_presentation(Ambient::K, {T.t_var(0)}, T);
        cover.charts.push_back(std::move(c));
        ModelX model = build_model(cover, T, G, {});
        AutGroup aut = compute_aut(model, T);
        CHECK(aut.members.size() == 1);
        CHECK(iso_check(aut, G).iso);
    }
}

TEST_CASE("Aut is a subgroup: closed under the parent table with identity") {
    FieldTower T = s3_tower();
    GaloisGroup G = enumerate_gal(T);
    ModelX model = cubic_chart_model(T, G);
    AutGroup aut = compute_aut(model, T);
    // the stabilizer of Q[c] is the order-2 subgroup fixing c
    REQUIRE(aut.members.size() == 2);
    CHECK(aut.members[0] == 0); // identity
    for (size_t i = 0; i < aut.members.size(); ++i)
        for (size_t j = 0; j < aut.members.size(); ++j) CHECK(aut.table[i][j] < aut.members.size());
    // not isomorphic to the full group
    IsoReport iso = iso_check(aut, G);
    CHECK_FALSE(iso.iso);
    CHECK(iso.aut_order == 2);
    CHECK(iso.gal_order == 6);
}

TEST_CASE("qgc_check") {
    SECTION("constructed models are quasi-galois closed") {
        FieldTower T = sqrt2_tower();
        GaloisGroup G = enumerate_gal(T);
        ModelX model = build_model(spec_z_cover(T), T, G, {T.gen(0)});
        QgcVerdict v = qgc_check(model, G, T);
        CHECK(v.verdict == Tri::True);
        REQUIRE(v.charts.size() == 1);
        CHECK(v.charts[0].conjugate_count == 1);
    }
    SECTION("the elliptic model is quasi-galois closed on all three charts") {
        FieldTower T = elliptic_tower();
        GaloisGroup G = enumerate_gal(T);
        ModelX model = build_model(elliptic_cover(T), T, G, {T.gen(0)});
        QgcVerdict v = qgc_check(model, G, T);
        CHECK(v.verdict == Tri::True);
        CHECK(v.charts.size() == 3);
    }
    SECTION("hand-assembled Z[c] is refuted with an explicit witness") {
        FieldTower T = s3_tower();
        GaloisGroup G = enumerate_gal(T);
        ModelX model = cubic_chart_model(T, G);
        QgcVerdict v = qgc_check(model, G, T);
        CHECK(v.verdict == Tri::Refuted);
        REQUIRE(v.charts.size() == 1);
        CHECK(v.charts[0].conjugate_count == 3);
        CHECK_FALSE(v.witness.empty());
    }
    SECTION("Delta = {} model is quasi-galois closed") {
        FieldTower T = FieldTower::rationals({"t"});
        GaloisGroup G = enumerate_gal(T);
        CoverComplex cover;
        Chart c;
        c.name = "V";
        c.ring = make_presentation(Ambient::K, {T.t_var(0)}, T);
        cover.charts.push_back(std::move(c));
        ModelX model = build_model(cover, T, G, {});
        CHECK(qgc_check(model, G, T).verdict == Tri::True);
    }
    SECTION("raising the bound never flips true/refuted") {
        FieldTower T = s3_tower();
        GaloisGroup G = enumerate_gal(T);
        ModelX built = build_model(spec_z_cover(T), T, G, {T.gen(0), T.gen(1)});
        ModelX assembled = cubic_chart_model(T, G);
        for (int bound : {2, 4, 6}) {
            Budgets b;
            b.degree_bound = bound;
            CHECK(qgc_check(built, G, T, b).verdict == Tri::True);
            CHECK(qgc_check(assembled, G, T, b).verdict == Tri::Refuted);
        }
    }
}

TEST_CASE("essentially_equal_probe") {
    SECTION("a ring is essentially equal to itself") {
        FieldTower T = sqrt2_tower();
        RingPresentation d = make_presentation(Ambient::L, {T.gen(0)}, T);
        EssentialEqualityReport rep = essentially_equal_probe(d, d, T);
        CHECK(rep.verdict == Tri::True);
        CHECK_FALSE(rep.probes.empty());
    }
    SECTION("Z[a] against Z[a/2]: the Q-linear membership table is consistent") {
        FieldTower T = sqrt2_tower();
        RingPresentation d1 = make_presentation(Ambient::L, {T.gen(0)}, T);
        RingPresentation d2 =
            make_presentation(Ambient::L, {T.gen(0) * T.from_rat(Rat(1, 2))}, T);
        EssentialEqualityReport rep = essentially_equal_probe(d1, d2, T);
        // over Q the two presentations span the same ring, so every probe lands in both
        CHECK(rep.verdict == Tri::True);
        for (const auto& p : rep.probes) {
            CHECK(p.consistent);
            CHECK(p.x_in_d1 == MemberStatus::Member);
            CHECK(p.x_in_d2 == MemberStatus::Member);
        }
    }
    SECTION("Z[t] against Z[1/t]: consistent on probes, memberships bounded") {
        FieldTower T = elliptic_tower();
        FieldElement t = T.t_var(0);
        RingPresentation d1 = make_presentation(Ambient::K, {t}, T);
        RingPresentation d2 = make_presentation(Ambient::K, {t.inv()}, T);
        EssentialEqualityReport rep = essentially_equal_probe(d1, d2, T);
        CHECK(rep.verdict == Tri::True); // pass-on-probes
        bool saw_t = false;
        for (const auto& p : rep.probes) {
            CHECK(p.consistent);
            if (p.probe == "t") {
                saw_t = true;
                CHECK(p.x_in_d1 == MemberStatus::Member);
                CHECK(p.x_in_d2 == MemberStatus::Inconclusive); // refuted only at the bound
                CHECK(p.inv_in_d2 == MemberStatus::Member);
            }
        }
        CHECK(saw_t);
    }
}
