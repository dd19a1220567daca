/**
 * @file polygcd.hh
 * @brief Multivariate polynomial gcd over Q (primitive PRS) and
 *        content/primitive-part utilities.
 */
#ifndef GALMODEL_POLYGCD_HH
#define GALMODEL_POLYGCD_HH

#include <galmodel/multipoly.hh>

namespace galmodel {

/// coefficient list of f viewed as univariate in variable v (coefficients keep the full variable list)
inline std::vector<MultiPoly> coefficients_in(const MultiPoly& f, size_t v) {
    int d = f.degree_in(v);
    std::vector<MultiPoly> cs(size_t(std::max(d, -1) + 1), MultiPoly::zero(f.vars()));
    for (auto& [m, c] : f.terms()) {
        Monomial n = m;
        int e = n[v];
        n[v] = 0;
        cs[size_t(e)].add_term(n, c);
    }
    return cs;
}

inline MultiPoly from_coefficients_in(const std::vector<MultiPoly>& cs, size_t v,
                                      const std::vector<std::string>& vars) {
    MultiPoly f = MultiPoly::zero(vars);
    for (size_t e = 0; e < cs.size(); ++e) {
        if (cs[e].is_zero()) continue;
        Monomial pow(vars.size(), 0);
        pow[v] = int(e);
        f += cs[e] * MultiPoly::monomial(vars, pow, 1);
    }
    return f;
}

/// divide out rational content and make the lex-leading coefficient positive
inline MultiPoly primitive_normalized(const MultiPoly& f) {
    if (f.is_zero()) return f;
    MultiPoly g = f / f.content();
    auto [m, c] = g.leading_term(MonomialOrder::lex(g.nvars()));
    if (c < 0) g = -g;
    return g;
}

namespace detail {

inline MultiPoly leadcoef_in(const MultiPoly& f, size_t v) {
    auto cs = coefficients_in(f, v);
    return cs.back();
}

// pseudo-remainder of f by g w.r.t. variable v (g nonzero, deg_v g >= 1)
inline MultiPoly pseudo_rem(const MultiPoly& f, const MultiPoly& g, size_t v) {
    MultiPoly r = f;
    const MultiPoly lg = leadcoef_in(g, v);
    const int dg = g.degree_in(v);
    while (!r.is_zero() && r.degree_in(v) >= dg) {
        MultiPoly lr = leadcoef_in(r, v);
        Monomial shift(r.vars().size(), 0);
        shift[v] = r.degree_in(v) - dg;
        r = r * lg - g * lr * MultiPoly::monomial(r.vars(), shift, 1);
    }
    return r;
}

} // namespace detail

inline MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

/// gcd of the v-coefficients of f
inline MultiPoly poly_content_in(const MultiPoly& f, size_t v) {
    auto cs = coefficients_in(f, v);
    MultiPoly c = MultiPoly::zero(f.vars());
    for (auto& ci : cs) {
        if (ci.is_zero()) continue;
        c = c.is_zero() ? primitive_normalized(ci) : poly_gcd(c, ci);
        if (c.is_constant()) break;
    }
    return c;
}

inline MultiPoly poly_primitive_part_in(const MultiPoly& f, size_t v) {
    if (f.is_zero()) return f;
    MultiPoly c = poly_content_in(f, v);
    return exact_divide(f, c);
}

/// primitive normalized gcd over Q[x_1..x_n]; gcd(0,0) = 0
inline MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero()) return primitive_normalized(g);
    if (g.is_zero()) return primitive_normalized(f);
    if (f.is_constant() || g.is_constant()) return MultiPoly::constant(f.vars(), 1);

    // main variable: the highest index used by either operand
    size_t v = 0;
    for (size_t i = f.nvars(); i-- > 0;) {
        if (f.uses_var(i) || g.uses_var(i)) { v = i; break; }
    }
    if (!f.uses_var(v)) return poly_gcd(g, f);
    if (!g.uses_var(v)) {
        // g is free of the main variable: gcd(f, g) = gcd(cont_v(f), g)
        return poly_gcd(poly_content_in(f, v), g);
    }

    MultiPoly cf = poly_content_in(f, v);
    MultiPoly cg = poly_content_in(g, v);
    MultiPoly c = poly_gcd(cf, cg);

    MultiPoly a = exact_divide(f, cf);
    MultiPoly b = exact_divide(g, cg);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);

    // primitive PRS
    while (true) {
        MultiPoly r = detail::pseudo_rem(a, b, v);
        if (r.is_zero()) return primitive_normalized(c * b);
        if (r.degree_in(v) == 0) return primitive_normalized(c);
        a = std::move(b);
        b = poly_primitive_part_in(r, v);
    }
}

inline MultiPoly poly_lcm(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) return MultiPoly::zero(f.vars());
    return primitive_normalized(exact_divide(f * g, poly_gcd(f, g)));
}

} // namespace galmodel

#endif
