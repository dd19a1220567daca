/**
 * @file univariate.hh
 * @brief Bridges between univariate MultiPoly values and dense coefficient
 *        vectors, and exact univariate division with quotient/remainder.
 */
#ifndef GALMODEL_UNIVARIATE_HH
#define GALMODEL_UNIVARIATE_HH

#include <galmodel/multipoly.hh>
#include <galmodel/upoly.hh>

namespace galmodel {

/// the single variable a univariate MultiPoly actually uses (constants: variable 0)
inline size_t univariate_var(const MultiPoly& f) {
    size_t var = 0;
    bool found = false;
    for (size_t v = 0; v < f.nvars(); ++v) {
        if (!f.uses_var(v)) continue;
        if (found) throw std::invalid_argument("expected a univariate polynomial: " + f.to_string());
        var = v;
        found = true;
    }
    return var;
}

inline UPoly<RatField> to_dense(const MultiPoly& f, size_t var) {
    UPoly<RatField> c(size_t(std::max(f.degree_in(var), -1) + 1), Rat(0));
    for (auto& [m, k] : f.terms()) c[size_t(m[var])] = k;
    return c;
}

inline UPoly<RatField> to_dense(const MultiPoly& f) { return to_dense(f, univariate_var(f)); }

inline MultiPoly from_dense(const UPoly<RatField>& c, const std::vector<std::string>& vars, size_t var) {
    MultiPoly f = MultiPoly::zero(vars);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Monomial m(vars.size(), 0);
        m[var] = int(i);
        f.add_term(m, c[i]);
    }
    return f;
}

/**
 * Exact univariate division: f = q*g + r with deg r < deg g.
 * Both polynomials must be univariate in the same variable; g nonzero.
 */
inline std::pair<MultiPoly, MultiPoly> poly_divmod(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    if (f.vars() != g.vars()) throw std::invalid_argument("poly_divmod: mixed variable lists");
    size_t var;
    if (!g.is_constant()) var = univariate_var(g);
    else if (!f.is_constant()) var = univariate_var(f);
    else var = 0;
    if (!f.is_constant() && univariate_var(f) != var)
        throw std::invalid_argument("poly_divmod: operands use different variables");
    RatField K;
    auto [q, r] = upoly_divmod(K, to_dense(f, var), to_dense(g, var));
    return {from_dense(q, f.vars(), var), from_dense(r, f.vars(), var)};
}

} // namespace galmodel

#endif
