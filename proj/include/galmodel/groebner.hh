/**
 * @file groebner.hh
 * @brief Buchberger's algorithm with full autoreduction, ideal membership
 *        with cofactor certificates, and variable elimination.
 *
 * Pair selection is the normal strategy: the pair whose lcm is smallest in
 * the active order, ties broken by generator index, so runs are reproducible.
 */
#ifndef GALMODEL_GROEBNER_HH
#define GALMODEL_GROEBNER_HH

#include <galmodel/errors.hh>
#include <galmodel/multipoly.hh>

#include <set>
#include <vector>

namespace galmodel {

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<MultiPoly> polys; // autoreduced, monic, sorted ascending by leading monomial
};

struct ReductionResult {
    MultiPoly normal_form;
    std::vector<MultiPoly> cofactors; // one per basis element: f = sum cofactor_i * g_i + normal_form
};

/// full normal form of f against `basis` under `order`, with cofactors
inline ReductionResult gb_reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                                 const MonomialOrder& order) {
    ReductionResult res{MultiPoly::zero(f.vars()),
                        std::vector<MultiPoly>(basis.size(), MultiPoly::zero(f.vars()))};
    MultiPoly work = f;
    while (!work.is_zero()) {
        auto [m, c] = work.leading_term(order);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            auto [gm, gc] = basis[i].leading_term(order);
            if (!monomial_divides(gm, m)) continue;
            MultiPoly t = MultiPoly::monomial(f.vars(), monomial_div(m, gm), c / gc);
            work -= t * basis[i];
            res.cofactors[i] += t;
            reduced = true;
            break;
        }
        if (!reduced) {
            MultiPoly t = MultiPoly::monomial(f.vars(), m, c);
            res.normal_form += t;
            work -= t;
        }
    }
    return res;
}

inline MultiPoly gb_normal_form(const MultiPoly& f, const GroebnerBasis& basis) {
    return gb_reduce(f, basis.polys, basis.order).normal_form;
}

namespace detail {

inline MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
    auto [fm, fc] = f.leading_term(order);
    auto [gm, gc] = g.leading_term(order);
    Monomial l = monomial_lcm(fm, gm);
    MultiPoly tf = MultiPoly::monomial(f.vars(), monomial_div(l, fm), Rat(1) / fc);
    MultiPoly tg = MultiPoly::monomial(f.vars(), monomial_div(l, gm), Rat(1) / gc);
    return tf * f - tg * g;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

} // namespace detail

/**
 * Buchberger with deterministic normal pair selection and full autoreduction.
 * Throws BudgetError when more than `pair_budget` S-pairs are processed.
 */
inline GroebnerBasis gb_compute(const std::vector<MultiPoly>& generators, const MonomialOrder& order,
                                long pair_budget = 100000) {
    std::vector<MultiPoly> basis;
    for (const auto& g : generators)
        if (!g.is_zero()) basis.push_back(g);

    struct Pair { size_t i, j; Monomial lcm; };
    std::vector<Pair> pairs;
    auto push_pairs_for = [&](size_t j) {
        auto [jm, jc] = basis[j].leading_term(order);
        for (size_t i = 0; i < j; ++i) {
            auto [im, ic] = basis[i].leading_term(order);
            pairs.push_back({i, j, monomial_lcm(im, jm)});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    long processed = 0;
    while (!pairs.empty()) {
        // smallest lcm in the order; ties by (i, j)
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            int c = order.compare(pairs[k].lcm, pairs[best].lcm);
            if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                                     (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + long(best));

        if (++processed > pair_budget)
            throw BudgetError("gb_compute: S-pair budget exceeded (limit " +
                                  std::to_string(pair_budget) + ")",
                              pair_budget);

        auto [im, ic] = basis[p.i].leading_term(order);
        auto [jm, jc] = basis[p.j].leading_term(order);
        if (detail::coprime(im, jm)) continue; // Buchberger's first criterion

        MultiPoly s = detail::s_poly(basis[p.i], basis[p.j], order);
        MultiPoly nf = gb_reduce(s, basis, order).normal_form;
        if (nf.is_zero()) continue;
        basis.push_back(nf);
        push_pairs_for(basis.size() - 1);
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto [im, ic] = basis[i].leading_term(order);
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            auto [jm, jc] = basis[j].leading_term(order);
            if (monomial_divides(jm, im) && (jm != im || j < i)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // reduce each tail against the others and make monic
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly nf = gb_reduce(minimal[i], others, order).normal_form;
        if (nf.is_zero()) continue;
        auto [m, c] = nf.leading_term(order);
        reduced.push_back(nf * (Rat(1) / c));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        auto [am, ac] = a.leading_term(order);
        auto [bm, bc] = b.leading_term(order);
        int c = order.compare(am, bm);
        if (c != 0) return c < 0;
        return a.cmp(b) < 0;
    });
    return GroebnerBasis{order, reduced};
}

struct MembershipResult {
    bool member = false;
    std::vector<MultiPoly> cofactors; // over the basis polys, valid when member
    MultiPoly normal_form;
};

/// membership of f in the ideal of `basis`, with a re-expanded cofactor certificate
inline MembershipResult ideal_member(const MultiPoly& f, const GroebnerBasis& basis) {
    ReductionResult r = gb_reduce(f, basis.polys, basis.order);
    MembershipResult out{r.normal_form.is_zero(), r.cofactors, r.normal_form};
    if (out.member) {
        MultiPoly check = MultiPoly::zero(f.vars());
        for (size_t i = 0; i < basis.polys.size(); ++i) check += r.cofactors[i] * basis.polys[i];
        if (check != f)
            throw InternalError("ideal_member: cofactor certificate failed re-expansion");
    }
    return out;
}

/**
 * Elimination ideal: computes a lex basis with the first `elim_count` variables
 * of the list ranked highest and returns the members free of those variables.
 */
inline std::vector<MultiPoly> eliminate_vars(const std::vector<MultiPoly>& generators,
                                             size_t elim_count, long pair_budget = 100000) {
    if (generators.empty()) return {};
    size_t n = generators[0].nvars();
    GroebnerBasis gb = gb_compute(generators, MonomialOrder::lex(n), pair_budget);
    std::vector<MultiPoly> kept;
    for (const auto& g : gb.polys) {
        bool uses = false;
        for (size_t v = 0; v < elim_count && !uses; ++v) uses = g.uses_var(v);
        if (!uses) kept.push_back(g);
    }
    return kept;
}

} // namespace galmodel

#endif
