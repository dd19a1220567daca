/**
 * @file aut.hh
 * @brief Aut(X/Y) as the stabilizer of the chart rings inside Gal(L/K), the
 *        isomorphism report, the quasi-galois-closed verdict through the
 *        single-conjugate criterion, and the essential-equality probe.
 */
#ifndef GALMODEL_AUT_HH
#define GALMODEL_AUT_HH

#include <galmodel/scheme.hh>

namespace galmodel {

struct AutGroup {
    std::vector<size_t> members;             // indices into the parent group, identity first
    std::vector<std::vector<size_t>> table;  // induced table, indices into `members`
    bool inconclusive = false;               // some sigma could not be decided within the bound
    std::vector<size_t> undecided;           // those sigma indices
};

/**
 * sigma lies in Aut(X/Y) iff it stabilizes every X-chart ring; decided by
 * generator-multiset permutation with a bounded mutual-membership fallback.
 * B_V is fixed pointwise automatically since its generators lie in K.
 */
inline AutGroup compute_aut(const ModelX& model, const FieldTower& T, const Budgets& budget = {}) {
    const GaloisGroup& G = model.group;
    AutGroup out;
    std::vector<const Chart*> charts = model_x_charts(model);
    for (size_t si = 0; si < G.order(); ++si) {
        const FieldAutomorphism& sigma = G.elements[si];
        bool stabilizes = true;
        bool uncertain = false;
        for (const Chart* chart : charts) {
            RingPresentation image;
            image.generators.reserve(chart->ring.generators.size());
            for (const auto& g : chart->ring.generators) image.generators.push_back(sigma(g));
            if (image.same_generator_multiset(chart->ring)) continue;
            // fallback: sigma(A) = A iff both inclusions hold
            bool maybe = true;
            for (const auto& g : image.generators) {
                MembershipResultQ m = subring_member(g, chart->ring, T, budget.degree_bound);
                if (m.status == MemberStatus::NotMember) { maybe = false; break; }
                if (m.status == MemberStatus::Inconclusive) uncertain = true;
            }
            if (maybe)
                for (const auto& g : chart->ring.generators) {
                    MembershipResultQ m =
                        subring_member(g, image.generators, default_varnames(image.generators.size()),
                                       T, budget.degree_bound);
                    if (m.status == MemberStatus::NotMember) { maybe = false; break; }
                    if (m.status == MemberStatus::Inconclusive) uncertain = true;
                }
            if (!maybe) { stabilizes = false; uncertain = false; break; }
            if (uncertain) break; // cannot decide this sigma
        }
        if (uncertain) {
            out.inconclusive = true;
            out.undecided.push_back(si);
        } else if (stabilizes) {
            out.members.push_back(si);
        }
    }
    // induced table; the stabilizer is closed under composition
    const size_t n = out.members.size();
    out.table.assign(n, std::vector<size_t>(n, n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t composed = G.table[out.members[i]][out.members[j]];
            size_t found = n;
            for (size_t k = 0; k < n && found == n; ++k)
                if (out.members[k] == composed) found = k;
            if (found == n) {
                if (out.inconclusive) { // closure broken only by undecided elements
                    out.table[i][j] = n;
                    continue;
                }
                throw InternalError("compute_aut: stabilizer not closed under composition");
            }
            out.table[i][j] = found;
        }
    return out;
}

struct IsoReport {
    bool iso = false;
    bool orders_match = false;
    bool tables_match = false;
    size_t aut_order = 0;
    size_t gal_order = 0;
    std::vector<size_t> bijection; // aut index -> gal index (the inclusion map)
};

/// Aut(X/Y) -> Gal(L/K): the inclusion must be onto and a homomorphism
inline IsoReport iso_check(const AutGroup& aut, const GaloisGroup& gal) {
    IsoReport rep;
    rep.aut_order = aut.members.size();
    rep.gal_order = gal.order();
    rep.bijection = aut.members;
    rep.orders_match = rep.aut_order == rep.gal_order;
    rep.tables_match = true;
    const size_t n = aut.members.size();
    for (size_t i = 0; i < n && rep.tables_match; ++i)
        for (size_t j = 0; j < n && rep.tables_match; ++j) {
            if (aut.table[i][j] >= n) { rep.tables_match = false; break; }
            rep.tables_match =
                gal.table[aut.members[i]][aut.members[j]] == aut.members[aut.table[i][j]];
        }
    rep.iso = rep.orders_match && rep.tables_match;
    return rep;
}

enum class Tri { True, Refuted, Inconclusive };

inline const char* tri_name(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::Refuted: return "refuted";
        default: return "inconclusive";
    }
}

struct QgcVerdict {
    Tri verdict = Tri::Inconclusive;
    struct PerChart {
        std::string chart;
        size_t conjugate_count = 0;
        bool inconclusive = false;
        std::string witness;
    };
    std::vector<PerChart> charts;
    std::string witness; // first refuting conjugate, when any
};

/**
 * The single-conjugate criterion chart by chart: X is quasi-galois closed
 * over Y when every chart ring is its own only conjugate under the group.
 */
inline QgcVerdict qgc_check(const ModelX& model, const GaloisGroup& gal, const FieldTower& T,
                            const Budgets& budget = {}) {
    QgcVerdict out;
    bool any_inconclusive = false;
    bool any_refuted = false;
    for (const Chart* chart : model_x_charts(model)) {
        ConjugateSet cs = conjugate_charts(chart->ring, gal, T, budget);
        QgcVerdict::PerChart pc;
        pc.chart = chart->name;
        pc.conjugate_count = cs.conjugates.size();
        pc.inconclusive = cs.inconclusive;
        if (cs.conjugates.size() > 1) {
            if (cs.inconclusive) {
                any_inconclusive = true;
            } else {
                any_refuted = true;
                pc.witness = cs.witness;
                if (out.witness.empty()) out.witness = cs.witness;
            }
        } else if (cs.inconclusive) {
            any_inconclusive = true;
        }
        out.charts.push_back(std::move(pc));
    }
    out.verdict = any_refuted ? Tri::Refuted : (any_inconclusive ? Tri::Inconclusive : Tri::True);
    return out;
}

struct EssentialEqualityProbe {
    std::string probe; // rendering of x
    MemberStatus x_in_d1, x_in_d2, inv_in_d1, inv_in_d2;
    bool consistent = true;
    bool bounded = false; // some membership was only refuted-at-bound
};

struct EssentialEqualityReport {
    Tri verdict = Tri::Inconclusive; // pass-on-probes / refuted / inconclusive
    std::vector<EssentialEqualityProbe> probes;
    std::string witness;
};

/**
 * Probe-level semidecision of essential equality: for each probe x, either
 * x lies in both rings or (x in D1\D2 iff x^{-1} in D2\D1). The default
 * probe set is the generators of both rings, their pairwise products, and
 * the inverses of all nonzero collected values.
 */
inline EssentialEqualityReport essentially_equal_probe(const RingPresentation& d1,
                                                       const RingPresentation& d2,
                                                       const FieldTower& T,
                                                       const Budgets& budget = {}) {
    EssentialEqualityReport rep;
    std::vector<FieldElement> base;
    auto push_unique = [&](const FieldElement& v) {
        if (v.is_zero()) return;
        for (const auto& known : base)
            if (known == v) return;
        base.push_back(v);
    };
    for (const auto& g : d1.generators) push_unique(g);
    for (const auto& g : d2.generators) push_unique(g);
    const size_t ngens = base.size();
    for (size_t i = 0; i < ngens; ++i)
        for (size_t j = i; j < ngens; ++j) push_unique(base[i] * base[j]);
    const size_t nprods = base.size();
    for (size_t i = 0; i < nprods; ++i) push_unique(base[i].inv());

    bool any_violation_certain = false;
    bool any_violation_bounded = false;
    for (const auto& x : base) {
        EssentialEqualityProbe probe;
        probe.probe = x.to_string();
        FieldElement xinv = x.inv();
        probe.x_in_d1 = subring_member(x, d1, T, budget.degree_bound).status;
        probe.x_in_d2 = subring_member(x, d2, T, budget.degree_bound).status;
        probe.inv_in_d1 = subring_member(xinv, d1, T, budget.degree_bound).status;
        probe.inv_in_d2 = subring_member(xinv, d2, T, budget.degree_bound).status;
        auto in = [](MemberStatus s) { return s == MemberStatus::Member; };
        auto uncertain = [](MemberStatus s) { return s == MemberStatus::Inconclusive; };
        bool both = in(probe.x_in_d1) && in(probe.x_in_d2);
        bool left = in(probe.x_in_d1) && !in(probe.x_in_d2);   // x in D1 \ D2
        bool right = in(probe.inv_in_d2) && !in(probe.inv_in_d1); // x^-1 in D2 \ D1
        probe.consistent = both || (left == right);
        probe.bounded = uncertain(probe.x_in_d1) || uncertain(probe.x_in_d2) ||
                        uncertain(probe.inv_in_d1) || uncertain(probe.inv_in_d2);
        if (!probe.consistent) {
            if (probe.bounded) {
                any_violation_bounded = true;
            } else {
                any_violation_certain = true;
                if (rep.witness.empty()) rep.witness = probe.probe;
            }
        }
        rep.probes.push_back(std::move(probe));
    }
    rep.verdict = any_violation_certain ? Tri::Refuted
                                        : (any_violation_bounded ? Tri::Inconclusive : Tri::True);
    return rep;
}

} // namespace galmodel

#endif
