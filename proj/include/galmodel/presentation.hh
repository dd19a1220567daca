/**
 * @file presentation.hh
 * @brief Finitely generated subrings of K or L: kernel presentations by
 *        elimination, bounded subring membership with span stabilization,
 *        and fraction-field certificates.
 *
 * Chart rings are presented over Q with denominator-cleared generators
 * standing in for presentations over Z; membership searches are Q-linear.
 */
#ifndef GALMODEL_PRESENTATION_HH
#define GALMODEL_PRESENTATION_HH

#include <galmodel/config.hh>
#include <galmodel/groebner.hh>
#include <galmodel/tower.hh>

namespace galmodel {

enum class Ambient { K, L };

struct RingPresentation {
    Ambient ambient = Ambient::L;
    std::vector<FieldElement> generators;
    std::vector<std::string> varnames; // z1..zm, parallel to generators
    GroebnerBasis relations;           // kernel of z_i -> generator_i, graded order

    bool same_generator_multiset(const RingPresentation& o) const {
        if (generators.size() != o.generators.size()) return false;
        std::vector<const FieldElement*> a, b;
        for (const auto& g : generators) a.push_back(&g);
        for (const auto& g : o.generators) b.push_back(&g);
        auto lt = [](const FieldElement* x, const FieldElement* y) { return x->cmp(*y) < 0; };
        std::sort(a.begin(), a.end(), lt);
        std::sort(b.begin(), b.end(), lt);
        for (size_t i = 0; i < a.size(); ++i)
            if (*a[i] != *b[i]) return false;
        return true;
    }
};

namespace presentation_detail {

/// numerator polynomial over [gen names..., tvars...] and denominator over the same list
struct ClearedElement {
    MultiPoly num;
    MultiPoly den; // uses only the t-variables
};

inline std::vector<std::string> ambient_vars(const FieldTower& T) {
    std::vector<std::string> vars;
    for (size_t i = 0; i < T.gen_count(); ++i) vars.push_back(T.gen_info(i).name);
    for (const auto& t : T.tvars()) vars.push_back(t);
    return vars;
}

inline ClearedElement clear_element(const FieldTower& T, const FieldElement& x,
                                    const std::vector<std::string>& vars) {
    std::vector<RatFunc> coords = x.flatten();
    MultiPoly den = MultiPoly::constant(T.tvars(), 1);
    for (const auto& rf : coords)
        if (!rf.is_zero()) den = poly_lcm(den, rf.den());
    MultiPoly num = MultiPoly::zero(vars);
    for (size_t idx = 0; idx < coords.size(); ++idx) {
        if (coords[idx].is_zero()) continue;
        std::vector<int> e = T.basis_exponents(idx);
        Monomial mono(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) mono[i] = e[i];
        MultiPoly scaled = coords[idx].num() * exact_divide(den, coords[idx].den());
        num += scaled.embed(vars) * MultiPoly::monomial(vars, mono, 1);
    }
    return {num, den.embed(vars)};
}

} // namespace presentation_detail

/**
 * Kernel of Q[z_1..z_m] -> ambient, z_i -> generators[i], as a Groebner basis
 * over the z-variables (graded order). Computed by eliminating the tower
 * generators, the transcendentals and the inverted common denominator.
 */
inline GroebnerBasis compute_relations(const std::vector<FieldElement>& generators,
                                       const std::vector<std::string>& varnames, const FieldTower& T,
                                       const Budgets& budget = {}) {
    using presentation_detail::clear_element;
    const std::vector<std::string> avars = presentation_detail::ambient_vars(T);

    // full variable list: [u, tower gens, tvars | z...]
    std::vector<std::string> vars{"u#"};
    for (const auto& v : avars) vars.push_back(v);
    for (const auto& z : varnames) vars.push_back(z);
    const size_t elim_count = 1 + avars.size();

    std::vector<MultiPoly> ideal;
    MultiPoly denom_product = MultiPoly::constant(vars, 1);

    // tower relations, denominators cleared
    for (size_t i = 0; i < T.gen_count(); ++i) {
        const TowerGen& g = T.gen_info(i);
        MultiPoly den_i = MultiPoly::constant(T.tvars(), 1);
        std::vector<presentation_detail::ClearedElement> tail;
        for (const auto& cnode : g.tail) {
            FieldElement c(T, towernode::lift(T.data(), i, T.gen_count(), cnode));
            tail.push_back(clear_element(T, c, avars));
        }
        for (const auto& ce : tail) den_i = poly_lcm(den_i, ce.den.restrict_vars(T.tvars()));
        MultiPoly den_iv = den_i.embed(vars);
        MultiPoly rel = den_iv * MultiPoly::variable(vars, g.name).pow(g.deg);
        for (int j = 0; j < g.deg; ++j) {
            if (tail[size_t(j)].num.is_zero()) continue;
            MultiPoly scale = exact_divide(den_iv, tail[size_t(j)].den.embed(vars));
            rel += tail[size_t(j)].num.embed(vars) * scale *
                   MultiPoly::variable(vars, g.name).pow(j);
        }
        ideal.push_back(rel);
        if (!den_iv.is_constant()) denom_product *= den_iv;
    }

    // generator bindings: den_i * z_i - num_i
    for (size_t i = 0; i < generators.size(); ++i) {
        auto ce = clear_element(T, generators[i], avars);
        MultiPoly num = ce.num.embed(vars);
        MultiPoly den = ce.den.embed(vars);
        ideal.push_back(den * MultiPoly::variable(vars, varnames[i]) - num);
        if (!den.is_constant()) denom_product *= den;
    }

    // invert the denominators when any are nontrivial
    if (!denom_product.is_constant())
        ideal.push_back(denom_product * MultiPoly::variable(vars, "u#") - MultiPoly::constant(vars, 1));

    std::vector<MultiPoly> kept = eliminate_vars(ideal, elim_count, budget.gb_pair_budget);
    std::vector<MultiPoly> zpolys;
    for (const auto& p : kept) zpolys.push_back(p.restrict_vars(varnames));
    return gb_compute(zpolys, MonomialOrder::grevlex(varnames.size()), budget.gb_pair_budget);
}

inline std::vector<std::string> default_varnames(size_t count) {
    std::vector<std::string> names;
    for (size_t i = 1; i <= count; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

inline RingPresentation make_presentation(Ambient ambient, const std::vector<FieldElement>& gens,
                                          const FieldTower& T, const Budgets& budget = {}) {
    RingPresentation P;
    P.ambient = ambient;
    P.generators = gens;
    P.varnames = default_varnames(gens.size());
    P.relations = compute_relations(gens, P.varnames, T, budget);
    // every relation must vanish under generator substitution
    TowerField L{T};
    for (const auto& rel : P.relations.polys) {
        FieldElement v = T.zero();
        for (auto& [m, c] : rel.terms()) {
            FieldElement term = T.from_rat(c);
            for (size_t i = 0; i < gens.size(); ++i)
                if (m[i] > 0) term = term * gens[i].pow(m[i]);
            v = v + term;
        }
        if (!v.is_zero()) throw InternalError("make_presentation: relation does not vanish");
    }
    return P;
}

// ---------- bounded membership with span stabilization ----------

enum class MemberStatus {
    Member,       // certificate found and re-verified
    NotMember,    // certain: the generated algebra was exhausted below the bound
    Inconclusive, // not found within the bound, span still growing
};

struct MembershipResultQ {
    MemberStatus status = MemberStatus::Inconclusive;
    MultiPoly certificate; // over the presentation's varnames, valid when Member
    int degree_used = 0;
};

/**
 * Is x a Q-coefficient polynomial in the generators, searched up to the given
 * total degree? The span is grown degree by degree; if it stabilizes before
 * the bound the negative answer is certain.
 */
inline MembershipResultQ subring_member(const FieldElement& x, const std::vector<FieldElement>& gens,
                                        const std::vector<std::string>& varnames, const FieldTower& T,
                                        int degree_bound) {
    MembershipResultQ out;
    struct Mono {
        Monomial exps;
        FieldElement value;
    };
    std::vector<Mono> monos{{Monomial(gens.size(), 0), T.one()}};
    std::vector<Mono> layer = monos;

    auto try_solve = [&](int degree) -> bool {
        // common denominator across coordinates of all monomial values and x
        MultiPoly den = MultiPoly::constant(T.tvars(), 1);
        auto scan = [&](const FieldElement& v) {
            for (const auto& rf : v.flatten())
                if (!rf.is_zero()) den = poly_lcm(den, rf.den());
        };
        for (const auto& m : monos) scan(m.value);
        scan(x);
        // row space: (basis index, t-monomial) pairs
        std::map<std::pair<size_t, Monomial>, size_t> rowof;
        auto vectorize = [&](const FieldElement& v, bool grow) {
            std::vector<std::pair<size_t, Rat>> entries;
            std::vector<RatFunc> coords = v.flatten();
            for (size_t idx = 0; idx < coords.size(); ++idx) {
                if (coords[idx].is_zero()) continue;
                MultiPoly scaled = coords[idx].num() * exact_divide(den, coords[idx].den());
                for (auto& [mono, c] : scaled.terms()) {
                    auto key = std::make_pair(idx, mono);
                    auto it = rowof.find(key);
                    if (it == rowof.end()) {
                        if (!grow) continue;
                        it = rowof.emplace(key, rowof.size()).first;
                    }
                    entries.emplace_back(it->second, c);
                }
            }
            return entries;
        };
        std::vector<std::vector<std::pair<size_t, Rat>>> cols;
        for (const auto& m : monos) cols.push_back(vectorize(m.value, true));
        auto xcol = vectorize(x, true);
        const size_t rows = rowof.size();
        Mat<RatField> A(rows, std::vector<Rat>(cols.size(), Rat(0)));
        for (size_t c = 0; c < cols.size(); ++c)
            for (auto& [r, v] : cols[c]) A[r][c] = v;
        std::vector<Rat> b(rows, Rat(0));
        for (auto& [r, v] : xcol) b[r] = v;
        auto sol = solve(RatField{}, A, b);
        if (!sol) return false;
        MultiPoly cert = MultiPoly::zero(varnames);
        for (size_t c = 0; c < monos.size(); ++c)
            if ((*sol)[c] != 0) cert.add_term(monos[c].exps, (*sol)[c]);
        // re-verify by evaluation
        FieldElement check = T.zero();
        for (auto& [m, coef] : cert.terms()) {
            FieldElement term = T.from_rat(coef);
            for (size_t i = 0; i < gens.size(); ++i)
                if (m[i] > 0) term = term * gens[i].pow(m[i]);
            check = check + term;
        }
        if (check != x) throw InternalError("subring_member: certificate failed re-evaluation");
        out.status = MemberStatus::Member;
        out.certificate = cert;
        out.degree_used = degree;
        return true;
    };

    auto span_rank = [&]() -> size_t {
        MultiPoly den = MultiPoly::constant(T.tvars(), 1);
        for (const auto& m : monos)
            for (const auto& rf : m.value.flatten())
                if (!rf.is_zero()) den = poly_lcm(den, rf.den());
        std::map<std::pair<size_t, Monomial>, size_t> rowof;
        std::vector<std::vector<std::pair<size_t, Rat>>> cols;
        for (const auto& m : monos) {
            std::vector<std::pair<size_t, Rat>> entries;
            std::vector<RatFunc> coords = m.value.flatten();
            for (size_t idx = 0; idx < coords.size(); ++idx) {
                if (coords[idx].is_zero()) continue;
                MultiPoly scaled = coords[idx].num() * exact_divide(den, coords[idx].den());
                for (auto& [mono, c] : scaled.terms()) {
                    auto key = std::make_pair(idx, mono);
                    auto it = rowof.find(key);
                    if (it == rowof.end()) it = rowof.emplace(key, rowof.size()).first;
                    entries.emplace_back(it->second, c);
                }
            }
            cols.push_back(std::move(entries));
        }
        Mat<RatField> A(rowof.size(), std::vector<Rat>(cols.size(), Rat(0)));
        for (size_t c = 0; c < cols.size(); ++c)
            for (auto& [r, v] : cols[c]) A[r][c] = v;
        return rank(RatField{}, A);
    };

    size_t prev_rank = 1; // the constants
    if (try_solve(0)) return out;
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<Mono> next;
        for (const auto& m : layer) {
            for (size_t i = 0; i < gens.size(); ++i) {
                Monomial e = m.exps;
                e[i] += 1;
                bool seen = false;
                for (const auto& known : monos) seen = seen || known.exps == e;
                for (const auto& fresh : next) seen = seen || fresh.exps == e;
                if (seen) continue;
                next.push_back({e, m.value * gens[i]});
            }
        }
        for (auto& m : next) monos.push_back(m);
        layer = std::move(next);
        size_t r = span_rank();
        if (r == prev_rank) {
            // the span is closed under multiplication by every generator
            out.status = MemberStatus::NotMember;
            out.degree_used = d;
            return out;
        }
        prev_rank = r;
        if (try_solve(d)) return out;
    }
    out.status = MemberStatus::Inconclusive;
    out.degree_used = degree_bound;
    return out;
}

inline MembershipResultQ subring_member(const FieldElement& x, const RingPresentation& P,
                                        const FieldTower& T, int degree_bound) {
    return subring_member(x, P.generators, P.varnames, T, degree_bound);
}

// ---------- fraction-field certificates ----------

struct FractionCertificate {
    bool found = false;
    MultiPoly num, den; // polynomials in the presentation's varnames: x = num(g)/den(g)
};

/**
 * Express x as a fraction of two polynomials in the generators (den nonzero
 * at the generators), searched up to the total degree bound. This is the
 * building block of the Fr(B_V) = K and Fr(A_V) = L certificates.
 */
inline FractionCertificate fraction_certificate(const FieldElement& x,
                                                const std::vector<FieldElement>& gens,
                                                const std::vector<std::string>& varnames,
                                                const FieldTower& T, int degree_bound) {
    FractionCertificate out{false, MultiPoly::zero(varnames), MultiPoly::zero(varnames)};
    // monomial values up to the bound
    std::vector<Monomial> exps{Monomial(gens.size(), 0)};
    std::vector<FieldElement> values{T.one()};
    std::vector<size_t> layer{0};
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<size_t> next;
        for (size_t li : layer) {
            for (size_t i = 0; i < gens.size(); ++i) {
                Monomial e = exps[li];
                e[i] += 1;
                bool seen = false;
                for (const auto& known : exps) seen = seen || known == e;
                if (seen) continue;
                exps.push_back(e);
                values.push_back(values[li] * gens[i]);
                next.push_back(exps.size() - 1);
            }
        }
        layer = std::move(next);
    }
    const size_t m = exps.size();
    // unknowns: p (numerator coefficients), q (denominator): x * Q(g) - P(g) = 0
    MultiPoly den = MultiPoly::constant(T.tvars(), 1);
    auto scan = [&](const FieldElement& v) {
        for (const auto& rf : v.flatten())
            if (!rf.is_zero()) den = poly_lcm(den, rf.den());
    };
    for (const auto& v : values) scan(v);
    for (const auto& v : values) scan(x * v);
    std::map<std::pair<size_t, Monomial>, size_t> rowof;
    auto vectorize = [&](const FieldElement& v) {
        std::vector<std::pair<size_t, Rat>> entries;
        std::vector<RatFunc> coords = v.flatten();
        for (size_t idx = 0; idx < coords.size(); ++idx) {
            if (coords[idx].is_zero()) continue;
            MultiPoly scaled = coords[idx].num() * exact_divide(den, coords[idx].den());
            for (auto& [mono, c] : scaled.terms()) {
                auto key = std::make_pair(idx, mono);
                auto it = rowof.find(key);
                if (it == rowof.end()) it = rowof.emplace(key, rowof.size()).first;
                entries.emplace_back(it->second, c);
            }
        }
        return entries;
    };
    std::vector<std::vector<std::pair<size_t, Rat>>> cols;
    for (const auto& v : values) { // -P part
        auto e = vectorize(v);
        for (auto& [r, c] : e) c = -c;
        cols.push_back(std::move(e));
    }
    for (const auto& v : values) cols.push_back(vectorize(x * v)); // x*Q part
    Mat<RatField> A(rowof.size(), std::vector<Rat>(cols.size(), Rat(0)));
    for (size_t c = 0; c < cols.size(); ++c)
        for (auto& [r, v] : cols[c]) A[r][c] = v;
    Mat<RatField> kernel = kernel_basis(RatField{}, A);
    for (const auto& v : kernel) {
        // denominator evaluation must be nonzero
        FieldElement qval = T.zero();
        for (size_t i = 0; i < m; ++i)
            if (v[m + i] != 0) qval = qval + values[i] * T.from_rat(v[m + i]);
        if (qval.is_zero()) continue;
        MultiPoly P = MultiPoly::zero(varnames), Q = MultiPoly::zero(varnames);
        for (size_t i = 0; i < m; ++i) {
            if (v[i] != 0) P.add_term(exps[i], v[i]);
            if (v[m + i] != 0) Q.add_term(exps[i], v[m + i]);
        }
        // verify: x * Q(g) == P(g)
        FieldElement pval = T.zero();
        for (size_t i = 0; i < m; ++i)
            if (v[i] != 0) pval = pval + values[i] * T.from_rat(v[i]);
        if (x * qval != pval) throw InternalError("fraction_certificate: verification failed");
        out.found = true;
        out.num = P;
        out.den = Q;
        return out;
    }
    return out;
}

} // namespace galmodel

#endif
