/**
 * @file scheme.hh
 * @brief Chart covers of Y and X and the construction pipeline: validate the
 *        Y-cover, build the orbit set, adjoin it to every chart ring, and
 *        assemble the model X with its chart-wise affine morphism to Y.
 */
#ifndef GALMODEL_SCHEME_HH
#define GALMODEL_SCHEME_HH

#include <galmodel/galois.hh>
#include <galmodel/presentation.hh>

namespace galmodel {

enum class ChartSide { Y, X };

struct Chart {
    std::string name;
    ChartSide side = ChartSide::Y;
    RingPresentation ring;
};

struct InclusionCertificate {
    std::string chart;                    // the included chart
    std::vector<MultiPoly> expressions;   // one per chart generator, over the overlap's varnames
};

struct OverlapRecord {
    std::string chart_a, chart_b;
    Chart overlap;
    InclusionCertificate cert_a, cert_b; // overlap ring contains both chart rings
};

struct CoverComplex {
    std::vector<Chart> charts;
    std::vector<OverlapRecord> overlaps;
};

enum class CoverStatus { Ok, NotReduced, GeneratorOutsideField, FractionFieldTooSmall, MembershipInconclusive };

struct CoverValidation {
    CoverStatus status = CoverStatus::Ok;
    std::string detail;
    // per chart, per K generator: the fraction certificates behind Fr(B_V) = K
    std::map<std::string, std::vector<FractionCertificate>> fraction_certs;
};

namespace scheme_detail {

inline std::vector<FieldElement> field_generators(const FieldTower& T, bool base_only) {
    std::vector<FieldElement> gens;
    for (size_t j = 0; j < T.r(); ++j) gens.push_back(T.t_var(j));
    size_t top = base_only ? T.base_mark() : T.gen_count();
    for (size_t i = 0; i < top; ++i) gens.push_back(T.gen(i));
    return gens;
}

inline std::string render_generators(const RingPresentation& P) {
    std::string s = "[";
    for (size_t i = 0; i < P.generators.size(); ++i) {
        if (i) s += ", ";
        s += P.generators[i].to_string();
    }
    return s + "]";
}

} // namespace scheme_detail

/**
 * Reducedness, ambient-field membership, Fr(B_V) = K via fraction
 * certificates for every K-level field generator, and overlap containment.
 */
inline CoverValidation validate_cover(const CoverComplex& cover_y, const FieldTower& T,
                                      const Budgets& budget = {}) {
    CoverValidation out;
    // reduced: distinct names and distinct generator sets
    for (size_t i = 0; i < cover_y.charts.size(); ++i) {
        for (size_t j = i + 1; j < cover_y.charts.size(); ++j) {
            if (cover_y.charts[i].name == cover_y.charts[j].name ||
                cover_y.charts[i].ring.same_generator_multiset(cover_y.charts[j].ring)) {
                out.status = CoverStatus::NotReduced;
                out.detail = "charts '" + cover_y.charts[i].name + "' and '" + cover_y.charts[j].name +
                             "' present the same ring";
                return out;
            }
        }
    }
    // generators lie in K
    for (const auto& chart : cover_y.charts) {
        for (const auto& g : chart.ring.generators) {
            if (!g.in_base_field()) {
                out.status = CoverStatus::GeneratorOutsideField;
                out.detail = "chart '" + chart.name + "': generator " + g.to_string() +
                             " does not lie in the base field";
                return out;
            }
        }
    }
    // Fr(B_V) = K certificates
    const std::vector<FieldElement> kgens = scheme_detail::field_generators(T, true);
    for (const auto& chart : cover_y.charts) {
        std::vector<FractionCertificate> certs;
        for (const auto& kg : kgens) {
            FractionCertificate c = fraction_certificate(kg, chart.ring.generators,
                                                         chart.ring.varnames, T, budget.degree_bound);
            if (!c.found) {
                out.status = CoverStatus::FractionFieldTooSmall;
                out.detail = "chart '" + chart.name + "': no certificate that " + kg.to_string() +
                             " lies in Fr(B_V) within degree " + std::to_string(budget.degree_bound);
                return out;
            }
            certs.push_back(std::move(c));
        }
        out.fraction_certs[chart.name] = std::move(certs);
    }
    // overlap rings contain both adjacent chart rings
    for (const auto& ov : cover_y.overlaps) {
        for (const auto& side : {std::make_pair(&ov.cert_a, ov.chart_a), std::make_pair(&ov.cert_b, ov.chart_b)}) {
            const Chart* chart = nullptr;
            for (const auto& c : cover_y.charts)
                if (c.name == side.second) chart = &c;
            if (!chart) {
                out.status = CoverStatus::NotReduced;
                out.detail = "overlap references unknown chart '" + side.second + "'";
                return out;
            }
            for (const auto& g : chart->ring.generators) {
                MembershipResultQ m = subring_member(g, ov.overlap.ring, T, budget.degree_bound);
                if (m.status == MemberStatus::NotMember) {
                    out.status = CoverStatus::NotReduced;
                    out.detail = "overlap '" + ov.overlap.name + "' does not contain chart '" +
                                 side.second + "'";
                    return out;
                }
                if (m.status == MemberStatus::Inconclusive) {
                    out.status = CoverStatus::MembershipInconclusive;
                    out.detail = "overlap '" + ov.overlap.name + "': containment of chart '" +
                                 side.second + "' unresolved within degree " +
                                 std::to_string(budget.degree_bound);
                    return out;
                }
            }
        }
    }
    return out;
}

struct DeltaSet {
    std::vector<FieldElement> delta;
    std::vector<FieldElement> delta_prime; // delta minus the transcendental part (equal here)
};

/// the orbit of the nice basis under the group; independent of the chart
inline DeltaSet build_delta(const std::vector<FieldElement>& nice_basis, const GaloisGroup& G) {
    DeltaSet d;
    d.delta = orbit(G, nice_basis);
    d.delta_prime = d.delta; // the supported scope keeps the transcendental part empty
    return d;
}

/// A_V = B_V[Delta]: generators appended (deduplicated), kernel recomputed
inline RingPresentation build_chart_ring(const RingPresentation& b, const DeltaSet& delta,
                                         const FieldTower& T, const Budgets& budget = {}) {
    std::vector<FieldElement> gens = b.generators;
    for (const auto& d : delta.delta) {
        bool seen = false;
        for (const auto& g : gens) seen = seen || g == d;
        if (!seen) gens.push_back(d);
    }
    return make_presentation(Ambient::L, gens, T, budget);
}

struct ModelX {
    CoverComplex cover_y;
    CoverComplex cover_x;
    std::map<std::string, std::string> chart_map; // X-chart name -> Y-chart name (the morphism f)
    DeltaSet delta;
    GaloisGroup group;
    // Fr(A_V) = L certificates per X-chart and field generator
    std::map<std::string, std::vector<FractionCertificate>> fraction_certs;
};

/**
 * Steps 3-6 in chart form: one X-chart per Y-chart and per Y-overlap chart,
 * overlaps inherited, the morphism recorded as the chart map. Verifies that
 * the X-cover is reduced, that every X-chart ring contains its Y-chart ring,
 * that Fr(A_V) = L holds by certificate, and that the generator multiset of
 * every chart is stable under the group.
 */
inline ModelX build_model(const CoverComplex& cover_y, const FieldTower& T, const GaloisGroup& G,
                          const std::vector<FieldElement>& nice_basis, const Budgets& budget = {}) {
    ModelX model;
    model.cover_y = cover_y;
    model.group = G;
    model.delta = build_delta(nice_basis, G);

    const std::vector<FieldElement> lgens = scheme_detail::field_generators(T, false);

    auto build_x_chart = [&](const Chart& ychart) {
        Chart x;
        x.name = ychart.name;
        x.side = ChartSide::X;
        x.ring = build_chart_ring(ychart.ring, model.delta, T, budget);
        // containment of the Y-chart ring is positional: B's generators lead A's list
        for (size_t i = 0; i < ychart.ring.generators.size(); ++i)
            if (x.ring.generators[i] != ychart.ring.generators[i])
                throw InternalError("build_model: Y generators are not a prefix of the X generators");
        // Fr(A_V) = L certificates
        std::vector<FractionCertificate> certs;
        for (const auto& lg : lgens) {
            FractionCertificate c =
                fraction_certificate(lg, x.ring.generators, x.ring.varnames, T, budget.degree_bound);
            if (!c.found)
                throw BudgetError("build_model: no certificate that " + lg.to_string() +
                                      " lies in Fr(A_V) within degree " +
                                      std::to_string(budget.degree_bound),
                                  budget.degree_bound);
            certs.push_back(std::move(c));
        }
        model.fraction_certs[x.name] = std::move(certs);
        return x;
    };

    for (const auto& ychart : cover_y.charts) {
        Chart x = build_x_chart(ychart);
        model.chart_map[x.name] = ychart.name;
        model.cover_x.charts.push_back(std::move(x));
    }
    for (const auto& ov : cover_y.overlaps) {
        OverlapRecord xov;
        xov.chart_a = ov.chart_a;
        xov.chart_b = ov.chart_b;
        xov.overlap = build_x_chart(ov.overlap);
        model.chart_map[xov.overlap.name] = ov.overlap.name;
        // inclusion certificates at the X level
        for (const auto& side : {std::make_pair(&xov.cert_a, ov.chart_a), std::make_pair(&xov.cert_b, ov.chart_b)}) {
            InclusionCertificate cert;
            cert.chart = side.second;
            const Chart* xchart = nullptr;
            for (const auto& c : model.cover_x.charts)
                if (c.name == side.second) xchart = &c;
            if (!xchart) throw InputError("overlap references unknown chart '" + side.second + "'");
            for (const auto& g : xchart->ring.generators) {
                MembershipResultQ m = subring_member(g, xov.overlap.ring, T, budget.degree_bound);
                if (m.status != MemberStatus::Member)
                    throw BudgetError("build_model: X-overlap containment unresolved within degree " +
                                          std::to_string(budget.degree_bound),
                                      budget.degree_bound);
                cert.expressions.push_back(m.certificate);
            }
            *side.first = std::move(cert);
        }
        model.cover_x.overlaps.push_back(std::move(xov));
    }

    // the X-cover must be reduced (overlap charts may coincide with a member
    // chart: the intersection of nested opens is one of them)
    for (size_t i = 0; i < model.cover_x.charts.size(); ++i)
        for (size_t j = i + 1; j < model.cover_x.charts.size(); ++j)
            if (model.cover_x.charts[i].ring.same_generator_multiset(model.cover_x.charts[j].ring))
                throw InternalError("build_model: X-cover is not reduced");

    // Step 2 stability: every sigma permutes each chart's generator multiset
    for (const auto* chart : model_x_charts(model)) {
        for (const auto& sigma : G.elements) {
            RingPresentation image;
            image.generators.reserve(chart->ring.generators.size());
            for (const auto& g : chart->ring.generators) image.generators.push_back(sigma(g));
            if (!image.same_generator_multiset(chart->ring))
                throw InternalError("build_model: chart generators not stable under the group");
        }
    }
    return model;
}

/// every X-chart of the model, overlap charts included
inline std::vector<const Chart*> model_x_charts(const ModelX& model) {
    std::vector<const Chart*> cs;
    for (const auto& c : model.cover_x.charts) cs.push_back(&c);
    for (const auto& ov : model.cover_x.overlaps) cs.push_back(&ov.overlap);
    return cs;
}

struct ConjugateSet {
    std::vector<RingPresentation> conjugates; // deduplicated
    bool inconclusive = false;                // a membership bound was hit while deduplicating
    std::string witness;                      // rendering of a second conjugate when present
};

/**
 * {sigma(A) : sigma in G}, deduplicated by generator-multiset equality with a
 * bounded mutual-membership fallback. Relations are shared: a field map
 * fixing Q sends the kernel of the evaluation onto itself.
 */
inline ConjugateSet conjugate_charts(const RingPresentation& a, const GaloisGroup& G,
                                     const FieldTower& T, const Budgets& budget = {}) {
    ConjugateSet out;
    for (const auto& sigma : G.elements) {
        RingPresentation image;
        image.ambient = a.ambient;
        image.varnames = a.varnames;
        image.relations = a.relations;
        image.generators.reserve(a.generators.size());
        for (const auto& g : a.generators) image.generators.push_back(sigma(g));

        bool duplicate = false;
        for (const auto& known : out.conjugates) {
            if (known.same_generator_multiset(image)) {
                duplicate = true;
                break;
            }
            // mutual membership fallback
            bool maybe_equal = true;
            bool uncertain = false;
            for (const auto& g : image.generators) {
                MembershipResultQ m = subring_member(g, known, T, budget.degree_bound);
                if (m.status == MemberStatus::NotMember) { maybe_equal = false; break; }
                if (m.status == MemberStatus::Inconclusive) uncertain = true;
            }
            if (maybe_equal)
                for (const auto& g : known.generators) {
                    MembershipResultQ m = subring_member(g, image, T, budget.degree_bound);
                    if (m.status == MemberStatus::NotMember) { maybe_equal = false; break; }
                    if (m.status == MemberStatus::Inconclusive) uncertain = true;
                }
            if (maybe_equal && !uncertain) {
                duplicate = true;
                break;
            }
            if (maybe_equal && uncertain) out.inconclusive = true;
        }
        if (!duplicate) out.conjugates.push_back(std::move(image));
    }
    if (out.conjugates.size() > 1) out.witness = scheme_detail::render_generators(out.conjugates[1]);
    return out;
}

struct InvariantProbe {
    std::string element;      // rendering of the symmetrized value
    bool fixed_by_group = true;
    MemberStatus in_base_ring = MemberStatus::Inconclusive;
};

struct InvariantSubringReport {
    bool certified = false;   // every probe certified in B_V
    int degree = 0;
    std::vector<InvariantProbe> probes;
    std::string witness;      // first uncertified probe, when any
};

/**
 * Symmetrize the monomials in Delta up to the degree bound (orbit sums and
 * orbit products) and certify each value inside B_V. The inner membership
 * bound grows with the probe's own coordinate degree so that high-degree
 * orbit products are still certifiable.
 */
inline InvariantSubringReport invariant_subring_probe(const RingPresentation& b, const GaloisGroup& G,
                                                      const DeltaSet& delta, const FieldTower& T,
                                                      int degree_bound, const Budgets& budget = {}) {
    InvariantSubringReport rep;
    rep.degree = degree_bound;
    rep.certified = true;
    const size_t nd = delta.delta.size();
    if (nd == 0) return rep; // trivially certified

    std::vector<FieldElement> probe_values;
    auto push_unique = [&](const FieldElement& v) {
        for (const auto& known : probe_values)
            if (known == v) return;
        probe_values.push_back(v);
    };

    // enumerate monomials in the Delta elements of total degree 1..bound
    std::vector<std::pair<Monomial, FieldElement>> layer{{Monomial(nd, 0), T.one()}};
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<std::pair<Monomial, FieldElement>> next;
        for (const auto& [e, v] : layer) {
            for (size_t i = 0; i < nd; ++i) {
                Monomial e2 = e;
                e2[i] += 1;
                bool seen = false;
                for (const auto& [known, kv] : next) seen = seen || known == e2;
                if (seen) continue;
                next.emplace_back(e2, v * delta.delta[i]);
            }
        }
        for (const auto& [e, v] : next) {
            std::vector<FieldElement> orb = orbit(G, {v});
            FieldElement sum = T.zero(), prod = T.one();
            for (const auto& x : orb) {
                sum = sum + x;
                prod = prod * x;
            }
            push_unique(sum);
            push_unique(prod);
        }
        layer = std::move(next);
    }

    for (const auto& v : probe_values) {
        InvariantProbe probe;
        probe.element = v.to_string();
        for (const auto& sigma : G.elements)
            probe.fixed_by_group = probe.fixed_by_group && sigma(v) == v;
        if (!probe.fixed_by_group)
            throw InternalError("invariant_subring_probe: symmetrized value not fixed by the group");
        // membership bound adapted to the probe's own coordinate degree
        int inner_bound = degree_bound;
        for (const auto& rf : v.flatten()) {
            if (rf.is_zero()) continue;
            inner_bound = std::max(inner_bound, rf.num().degree());
            inner_bound = std::max(inner_bound, rf.den().degree());
        }
        MembershipResultQ m = subring_member(v, b, T, inner_bound);
        probe.in_base_ring = m.status;
        if (m.status != MemberStatus::Member) {
            rep.certified = false;
            if (rep.witness.empty()) rep.witness = probe.element;
        }
        rep.probes.push_back(std::move(probe));
    }
    return rep;
}

} // namespace galmodel

#endif
