/**
 * @file roots.hh
 * @brief Complete root extraction inside a field tower, factorization over
 *        number-field towers, and certified tower construction.
 *
 * Strategy: deflation by known roots first; towers without transcendentals
 * are handled by norm factorization through a primitive element; towers with
 * transcendentals by the ansatz route — unknown coordinates over Q(t), a
 * shape-position lex basis over Q with the transcendentals adjoined last,
 * and rational-function root extraction for the eliminant.
 */
#ifndef GALMODEL_ROOTS_HH
#define GALMODEL_ROOTS_HH

#include <galmodel/config.hh>
#include <galmodel/factor.hh>
#include <galmodel/groebner.hh>
#include <galmodel/tower.hh>

namespace galmodel {

using TowerPoly = std::vector<FieldElement>; // dense univariate over the tower

inline FieldElement tower_poly_eval(const TowerPoly& f, const FieldElement& x) {
    TowerField K{x.tower()};
    return upoly_eval(K, f, x);
}

namespace roots_detail {

// ---------- primitive elements and norms (towers without transcendentals) ----------

struct PrimitiveData {
    FieldElement theta;
    UPoly<RatField> min_poly;          // irreducible over Q, degree N
    Mat<RatField> power_matrix;        // columns are coordinates of theta^i
};

inline Rat ratfunc_to_rat(const RatFunc& rf) {
    if (!rf.is_rational()) throw InternalError("expected a rational coordinate");
    return rf.rational_value();
}

inline PrimitiveData find_primitive_element(const FieldTower& T) {
    const size_t n = T.dim_over_rationals();
    std::vector<FieldElement> candidates;
    for (size_t i = 0; i < T.gen_count(); ++i) candidates.push_back(T.gen(i));
    for (long j = 1; j <= 6; ++j) {
        FieldElement mix = T.zero();
        FieldElement w = T.one();
        for (size_t i = 0; i < T.gen_count(); ++i) {
            mix = mix + w * T.gen(i);
            w = w * T.from_rat(Rat(j));
        }
        candidates.push_back(mix);
    }
    for (const auto& theta : candidates) {
        std::vector<FieldElement> m = min_poly_over(theta, 0);
        if (m.size() != n + 1) continue;
        PrimitiveData pd;
        pd.theta = theta;
        pd.min_poly.reserve(m.size());
        for (const auto& c : m) pd.min_poly.push_back(ratfunc_to_rat(c.ratfunc_value()));
        pd.power_matrix.assign(n, std::vector<Rat>(n, Rat(0)));
        FieldElement p = T.one();
        for (size_t col = 0; col < n; ++col) {
            std::vector<RatFunc> coords = p.flatten();
            for (size_t row = 0; row < n; ++row) pd.power_matrix[row][col] = ratfunc_to_rat(coords[row]);
            p = p * theta;
        }
        return pd;
    }
    throw InternalError("find_primitive_element: no primitive element found (tower not a field?)");
}

/// rewrite an element as a polynomial in theta (rational coefficients)
inline UPoly<RatField> in_theta_basis(const PrimitiveData& pd, const FieldElement& x) {
    std::vector<RatFunc> coords = x.flatten();
    std::vector<Rat> b(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) b[i] = ratfunc_to_rat(coords[i]);
    auto sol = solve(RatField{}, pd.power_matrix, b);
    if (!sol) throw InternalError("in_theta_basis: power basis solve failed");
    UPoly<RatField> r = *sol;
    upoly_trim(RatField{}, r);
    return r;
}

} // namespace roots_detail

/**
 * Factor a nonzero squarefree monic polynomial over a tower without
 * transcendentals into monic irreducible factors (Trager norm route).
 */
inline std::vector<TowerPoly> factor_over_number_tower(const TowerPoly& f_in, const FieldTower& T,
                                                       const Budgets& budget) {
    using namespace roots_detail;
    if (T.r() != 0) throw std::invalid_argument("factor_over_number_tower: tower has transcendentals");
    TowerField L{T};
    TowerPoly f = f_in;
    upoly_trim(L, f);
    if (upoly_deg(f) <= 0) throw std::invalid_argument("factor_over_number_tower: constant input");
    f = upoly_make_monic(L, f);
    if (upoly_deg(f) == 1) return {f};

    const size_t n_field = T.dim_over_rationals();
    if (n_field == 1) {
        // coefficients are rational: factor over Q directly
        std::vector<std::string> xv{"x"};
        MultiPoly fq = MultiPoly::zero(xv);
        for (size_t i = 0; i < f.size(); ++i) fq.add_term(Monomial{int(i)}, f[i].rational_value());
        std::vector<TowerPoly> out;
        for (auto& [g, m] : factor_univariate_q(fq, budget.factor_degree_cap).factors) {
            TowerPoly gf;
            auto dense = to_dense(g, 0);
            for (auto& c : dense) gf.push_back(T.from_rat(c));
            for (int k = 0; k < m; ++k) out.push_back(gf); // squarefree input: m is 1
        }
        return out;
    }

    PrimitiveData pd = find_primitive_element(T);
    // coefficients of f as polynomials in theta
    std::vector<UPoly<RatField>> ftheta;
    for (const auto& c : f) ftheta.push_back(in_theta_basis(pd, c));

    const std::vector<std::string> xv{"x"};
    const MultiPoly xp = MultiPoly::variable(xv, 0);
    const RatField Q;

    for (long s_try = 0; s_try < 40; ++s_try) {
        long s = (s_try % 2 == 0) ? s_try / 2 : -(s_try / 2 + 1); // 0, -1, 1, -2, 2, ...
        // B(y) = sum_j ftheta_j(y) * (x - s y)^j as a y-vector of polynomials in x
        std::vector<MultiPoly> B; // index = power of y
        for (size_t j = f.size(); j-- > 0;) {
            // B := B * (x - s y) + ftheta_j(y)
            std::vector<MultiPoly> next(B.size() + 1, MultiPoly::zero(xv));
            for (size_t k = 0; k < B.size(); ++k) {
                next[k] += B[k] * xp;
                next[k + 1] += B[k] * Rat(-s);
            }
            for (size_t i = 0; i < ftheta[j].size(); ++i) {
                if (next.size() <= i) next.resize(i + 1, MultiPoly::zero(xv));
                next[i] += MultiPoly::constant(xv, ftheta[j][i]);
            }
            while (!next.empty() && next.back().is_zero()) next.pop_back();
            B = std::move(next);
        }
        if (B.empty()) throw InternalError("norm construction produced the zero polynomial");

        // norm(x) = Res_y(mtheta, B) by evaluation and Lagrange interpolation,
        // skipping points where the y-degree of B drops
        const int norm_deg = int(n_field) * upoly_deg(f);
        std::vector<Rat> xs, ys;
        for (long pt = 0; int(xs.size()) < norm_deg + 1; ++pt) {
            Rat x0 = (pt % 2 == 0) ? Rat(pt / 2) : Rat(-(pt / 2 + 1));
            if (B.back().eval({x0}) == 0) continue;
            UPoly<RatField> b0(B.size());
            for (size_t k = 0; k < B.size(); ++k) b0[k] = B[k].eval({x0});
            ys.push_back(upoly_resultant(Q, pd.min_poly, b0));
            xs.push_back(x0);
        }
        // Newton-form interpolation
        std::vector<Rat> divided = ys;
        for (size_t lvl = 1; lvl < divided.size(); ++lvl)
            for (size_t i = divided.size(); i-- > lvl;)
                divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - lvl]);
        UPoly<RatField> norm_dense;
        for (size_t i = divided.size(); i-- > 0;) {
            // norm_dense := norm_dense * (x - xs[i]) + divided[i]
            UPoly<RatField> shifted(norm_dense.size() + 1, Rat(0));
            for (size_t k = 0; k < norm_dense.size(); ++k) {
                shifted[k + 1] += norm_dense[k];
                shifted[k] -= norm_dense[k] * xs[i];
            }
            norm_dense = std::move(shifted);
            if (norm_dense.empty()) norm_dense.push_back(divided[i]);
            else norm_dense[0] += divided[i];
            upoly_trim(Q, norm_dense);
        }
        MultiPoly norm = from_dense(norm_dense, xv, 0);
        if (norm.is_constant()) continue;
        // need the norm squarefree for the factor correspondence
        size_t xv = 0;
        MultiPoly der = norm.derivative(xv);
        if (!poly_gcd(norm, der).is_constant()) continue;

        Factorization nf = factor_univariate_q(norm, budget.factor_degree_cap);
        FieldElement stheta = T.from_rat(Rat(s)) * pd.theta;
        std::vector<TowerPoly> out;
        for (auto& [G, mult] : nf.factors) {
            // G(x + s*theta) over the tower, then gcd with f
            auto Gd = to_dense(G, 0);
            TowerPoly shiftL{stheta, T.one()};
            TowerPoly GL;
            for (size_t j = Gd.size(); j-- > 0;) {
                GL = upoly_mul(L, GL, shiftL);
                GL = upoly_add(L, GL, upoly_const(L, T.from_rat(Gd[j])));
            }
            TowerPoly g = upoly_gcd(L, f, GL);
            if (upoly_deg(g) >= 1) out.push_back(g);
        }
        // the factors must multiply back to f
        TowerPoly check = upoly_const(L, T.one());
        for (const auto& g : out) check = upoly_mul(L, check, g);
        if (upoly_deg(check) != upoly_deg(f)) continue; // shift not separating, try next s
        bool same = true;
        for (size_t i = 0; i < check.size() && same; ++i) same = (check[i] == f[i]);
        if (!same) throw InternalError("factor_over_number_tower: product of factors differs from input");
        return out;
    }
    throw InternalError("factor_over_number_tower: no separating shift found");
}

// ---------- rational-function roots of an eliminant over Q[t_1..t_r] ----------

namespace roots_detail {

/// monic divisors (as polynomials over the t-variables) of a nonzero polynomial
inline std::vector<MultiPoly> monic_divisors(const MultiPoly& p, const Budgets& budget) {
    const auto& vars = p.vars();
    std::vector<MultiPoly> out;
    if (p.is_constant()) {
        out.push_back(MultiPoly::constant(vars, 1));
        return out;
    }
    size_t used = 0, count = 0;
    for (size_t v = 0; v < p.nvars(); ++v)
        if (p.uses_var(v)) { used = v; ++count; }
    if (count == 1) {
        // univariate over Q: enumerate products of irreducible factors
        Factorization f = factor_univariate_q(p, budget.factor_degree_cap);
        std::vector<std::pair<MultiPoly, int>> irr = f.factors;
        std::vector<int> take(irr.size(), 0);
        while (true) {
            MultiPoly d = MultiPoly::constant(vars, 1);
            for (size_t i = 0; i < irr.size(); ++i)
                for (int k = 0; k < take[i]; ++k) d *= irr[i].first;
            out.push_back(d);
            size_t i = 0;
            for (; i < irr.size(); ++i) {
                if (take[i] < irr[i].second) { ++take[i]; break; }
                take[i] = 0;
            }
            if (i == irr.size()) break;
        }
        return out;
    }
    // several transcendentals: complete only for monomials
    if (p.term_count() == 1) {
        Monomial m = p.terms().begin()->first;
        std::vector<int> take(m.size(), 0);
        while (true) {
            Monomial d(m.size(), 0);
            for (size_t i = 0; i < m.size(); ++i) d[i] = take[i];
            out.push_back(MultiPoly::monomial(vars, d, 1));
            size_t i = 0;
            for (; i < m.size(); ++i) {
                if (take[i] < m[i]) { ++take[i]; break; }
                take[i] = 0;
            }
            if (i == m.size()) break;
        }
        return out;
    }
    throw BudgetError("rational-function root extraction over several transcendentals needs a "
                      "multivariate factorization that is out of scope; result would be incomplete",
                      0);
}

/// all roots in Q(t_1..t_r) of a nonzero polynomial given by dense coefficients over Q[t]
inline std::vector<RatFunc> ratfunc_roots(std::vector<MultiPoly> h, const Budgets& budget) {
    std::vector<RatFunc> roots;
    // trim and normalize to a primitive polynomial
    while (!h.empty() && h.back().is_zero()) h.pop_back();
    if (h.empty()) throw std::invalid_argument("ratfunc_roots: zero polynomial");
    const auto& tvars = h[0].vars();
    if (h.size() == 1) return roots;

    // z = 0 roots
    if (h[0].is_zero()) {
        roots.push_back(RatFunc::zero(tvars));
        size_t first = 0;
        while (h[first].is_zero()) ++first;
        h.erase(h.begin(), h.begin() + long(first));
        if (h.size() == 1) return roots;
    }

    if (tvars.empty()) {
        // plain rational roots
        std::vector<std::string> zv{"z"};
        MultiPoly hz = MultiPoly::zero(zv);
        for (size_t i = 0; i < h.size(); ++i) hz.add_term(Monomial{int(i)}, h[i].constant_value());
        for (const Rat& q : rational_roots(hz, budget.factor_degree_cap))
            roots.push_back(RatFunc::from_rat(tvars, q));
        return roots;
    }

    MultiPoly cont = MultiPoly::zero(tvars);
    for (const auto& c : h) {
        if (c.is_zero()) continue;
        cont = cont.is_zero() ? primitive_normalized(c) : poly_gcd(cont, c);
        if (cont.is_constant()) break;
    }
    if (!cont.is_constant())
        for (auto& c : h) c = c.is_zero() ? c : exact_divide(c, cont);

    std::vector<MultiPoly> vs = monic_divisors(primitive_normalized(h.back()), budget);
    std::vector<MultiPoly> us = monic_divisors(primitive_normalized(h.front()), budget);
    const size_t n = h.size() - 1;
    std::vector<std::string> qt{"q"};
    for (const auto& t : tvars) qt.push_back(t);
    for (const auto& v : vs) {
        for (const auto& u : us) {
            // candidate root q * u / v: collect sum_j h_j q^j u^j v^(n-j) = 0 as a polynomial in q
            MultiPoly cond = MultiPoly::zero(qt);
            MultiPoly qv = MultiPoly::variable(qt, "q");
            for (size_t j = 0; j < h.size(); ++j) {
                if (h[j].is_zero()) continue;
                MultiPoly term = h[j].embed(qt) * u.embed(qt).pow(int(j)) *
                                 v.embed(qt).pow(int(n - j)) * qv.pow(int(j));
                cond += term;
            }
            if (cond.is_zero()) continue;
            // regroup: for each t-monomial a univariate condition in q;
            // the first one constrains q, candidates are then verified fully
            std::map<Monomial, MultiPoly> conds;
            std::vector<std::string> qonly{"q"};
            for (auto& [mono, coef] : cond.terms()) {
                Monomial tpart(mono.begin() + 1, mono.end());
                auto it = conds.find(tpart);
                if (it == conds.end())
                    it = conds.emplace(tpart, MultiPoly::zero(qonly)).first;
                it->second.add_term(Monomial{mono[0]}, coef);
            }
            std::vector<Rat> candidates;
            for (auto& [tm, cq] : conds) {
                if (cq.is_zero()) continue;
                if (cq.is_constant()) { candidates.clear(); break; } // inconsistent: no q works
                candidates = rational_roots(cq, budget.factor_degree_cap);
                break;
            }
            for (const Rat& q : candidates) {
                if (q == 0) continue; // zero roots were handled above
                RatFunc cand = RatFunc(u * q, v);
                RatFunc val = RatFunc::zero(tvars);
                for (size_t j = h.size(); j-- > 0;) val = val * cand + RatFunc::from_poly(h[j]);
                if (val.is_zero()) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RatFunc& a, const RatFunc& b) { return a.cmp(b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// ---------- the ansatz route: unknown coordinates over Q(t), lex elimination ----------

struct AnsatzRing {
    std::vector<std::string> vars; // c_1..c_N, t_1..t_r
    size_t ncoords;
    size_t r;
    std::vector<std::vector<std::vector<MultiPoly>>> structure; // b_i b_j = (1/den) sum_k S[i][j][k] b_k
    MultiPoly den;                                              // common structure denominator, in Q[t]
};

inline AnsatzRing build_ansatz_ring(const FieldTower& T) {
    AnsatzRing R;
    const size_t n = T.dim_over_rationals();
    R.ncoords = n;
    R.r = T.r();
    for (size_t i = 1; i <= n; ++i) R.vars.push_back("c" + std::to_string(i));
    for (const auto& t : T.tvars()) R.vars.push_back(t);

    // raw structure constants as rational functions of t
    std::vector<std::vector<std::vector<RatFunc>>> raw(n);
    MultiPoly den = MultiPoly::constant(T.tvars(), 1);
    for (size_t i = 0; i < n; ++i) {
        raw[i].resize(n);
        for (size_t j = 0; j < n; ++j) {
            raw[i][j] = (T.basis_element(i) * T.basis_element(j)).flatten();
            for (const auto& rf : raw[i][j])
                if (!rf.is_zero()) den = poly_lcm(den, rf.den());
        }
    }
    R.den = den.embed(R.vars);
    R.structure.assign(n, {});
    for (size_t i = 0; i < n; ++i) {
        R.structure[i].assign(n, {});
        for (size_t j = 0; j < n; ++j) {
            R.structure[i][j].assign(n, MultiPoly::zero(R.vars));
            for (size_t k = 0; k < n; ++k) {
                const RatFunc& rf = raw[i][j][k];
                if (rf.is_zero()) continue;
                MultiPoly scaled = rf.num() * exact_divide(den, rf.den());
                R.structure[i][j][k] = scaled.embed(R.vars);
            }
        }
    }
    return R;
}

struct AnsatzElem {
    std::vector<MultiPoly> coords; // over R.vars
    MultiPoly den;                 // nonzero polynomial in the t-part of R.vars
};

inline AnsatzElem ansatz_mul(const AnsatzRing& R, const AnsatzElem& a, const AnsatzElem& b) {
    AnsatzElem out;
    out.coords.assign(R.ncoords, MultiPoly::zero(R.vars));
    for (size_t i = 0; i < R.ncoords; ++i) {
        if (a.coords[i].is_zero()) continue;
        for (size_t j = 0; j < R.ncoords; ++j) {
            if (b.coords[j].is_zero()) continue;
            MultiPoly prod = a.coords[i] * b.coords[j];
            for (size_t k = 0; k < R.ncoords; ++k) {
                if (R.structure[i][j][k].is_zero()) continue;
                out.coords[k] += prod * R.structure[i][j][k];
            }
        }
    }
    out.den = a.den * b.den * R.den;
    return out;
}

inline AnsatzElem ansatz_add(const AnsatzRing& R, const AnsatzElem& a, const AnsatzElem& b) {
    AnsatzElem out;
    out.coords.assign(R.ncoords, MultiPoly::zero(R.vars));
    for (size_t k = 0; k < R.ncoords; ++k)
        out.coords[k] = a.coords[k] * b.den + b.coords[k] * a.den;
    out.den = a.den * b.den;
    return out;
}

inline std::vector<FieldElement> roots_by_ansatz(const TowerPoly& f, const FieldTower& T,
                                                 const Budgets& budget) {
    const size_t n = T.dim_over_rationals();
    AnsatzRing R = build_ansatz_ring(T);

    // generic element X = sum c_i b_i
    AnsatzElem X;
    X.coords.reserve(n);
    for (size_t i = 0; i < n; ++i) X.coords.push_back(MultiPoly::variable(R.vars, i));
    X.den = MultiPoly::constant(R.vars, 1);

    // f's coefficients with cleared t-denominators
    std::vector<AnsatzElem> coeffs;
    for (const auto& c : f) {
        std::vector<RatFunc> fl = c.flatten();
        MultiPoly den = MultiPoly::constant(T.tvars(), 1);
        for (const auto& rf : fl)
            if (!rf.is_zero()) den = poly_lcm(den, rf.den());
        AnsatzElem e;
        e.coords.assign(n, MultiPoly::zero(R.vars));
        for (size_t k = 0; k < n; ++k) {
            if (fl[k].is_zero()) continue;
            e.coords[k] = (fl[k].num() * exact_divide(den, fl[k].den())).embed(R.vars);
        }
        e.den = den.embed(R.vars);
        coeffs.push_back(std::move(e));
    }

    // Horner: E = f(X); the coordinates of E are the equations
    AnsatzElem E = coeffs.back();
    for (size_t j = coeffs.size() - 1; j-- > 0;) E = ansatz_add(R, ansatz_mul(R, E, X), coeffs[j]);

    std::vector<MultiPoly> system;
    for (const auto& p : E.coords)
        if (!p.is_zero()) system.push_back(p);
    if (system.empty()) throw InternalError("roots_by_ansatz: empty system for a nonzero input");

    // per-coordinate elimination: candidates for c_e are the Q(t)-roots of the
    // minimal polynomial of the e-th coordinate ideal J cap Q(t)[c_e]
    std::vector<std::vector<RatFunc>> candidates(n);
    for (size_t e = 0; e < n; ++e) {
        std::vector<int> priority;
        for (size_t v = 0; v < n; ++v)
            if (v != e) priority.push_back(int(v));
        priority.push_back(int(e));
        for (size_t v = 0; v < R.r; ++v) priority.push_back(int(n + v));
        GroebnerBasis gb =
            gb_compute(system, MonomialOrder::lex(priority), budget.gb_pair_budget);
        if (gb.polys.size() == 1 && gb.polys[0].is_constant()) return {}; // no roots at all

        const MultiPoly* elim = nullptr;
        for (const auto& g : gb.polys) {
            bool only_ce = true;
            for (size_t v = 0; v < n && only_ce; ++v)
                if (v != e) only_ce = !g.uses_var(v);
            if (!only_ce) continue;
            if (!elim || g.degree_in(e) < elim->degree_in(e)) elim = &g;
        }
        if (!elim)
            throw InternalError("roots_by_ansatz: coordinate system is not zero-dimensional");
        // dense coefficients of the eliminant in c_e over Q[t]
        std::vector<MultiPoly> he(size_t(elim->degree_in(e)) + 1, MultiPoly::zero(T.tvars()));
        for (auto& [m, c] : elim->terms()) {
            Monomial tm(m.begin() + long(n), m.end());
            he[size_t(m[e])].add_term(tm, c);
        }
        candidates[e] = ratfunc_roots(he, budget);
        if (candidates[e].empty()) return {}; // some coordinate has no rational value
    }

    // verify the (small) Cartesian set of candidate coordinate vectors
    std::vector<FieldElement> out;
    std::vector<size_t> pick(n, 0);
    while (true) {
        std::vector<RatFunc> coords(n, RatFunc::zero(T.tvars()));
        for (size_t e = 0; e < n; ++e) coords[e] = candidates[e][pick[e]];
        FieldElement cand = T.unflatten(coords);
        if (tower_poly_eval(f, cand).is_zero()) out.push_back(cand);
        size_t e = 0;
        for (; e < n; ++e) {
            if (pick[e] + 1 < candidates[e].size()) { ++pick[e]; break; }
            pick[e] = 0;
        }
        if (e == n) break;
    }
    return out;
}

} // namespace roots_detail

/**
 * The set of roots of a nonzero polynomial inside the tower's top field,
 * each verified by substitution; deterministic order, no duplicates.
 */
inline std::vector<FieldElement> roots_in_tower(const TowerPoly& f_in, const FieldTower& T,
                                                const Budgets& budget = {}) {
    TowerField L{T};
    TowerPoly f = f_in;
    upoly_trim(L, f);
    if (f.empty()) throw std::invalid_argument("roots_in_tower: zero polynomial");
    std::vector<FieldElement> roots;
    const int deg0 = upoly_deg(f);
    if (deg0 == 0) return roots;

    f = upoly_make_monic(L, upoly_squarefree_part(L, f));

    // deflation by known roots: generators and anything already found
    std::vector<FieldElement> candidates;
    for (size_t i = 0; i < T.gen_count(); ++i) {
        candidates.push_back(T.gen(i));
        candidates.push_back(-T.gen(i));
    }
    bool progress = true;
    while (progress && upoly_deg(f) >= 1) {
        progress = false;
        for (const auto& c : candidates) {
            if (upoly_deg(f) < 1) break;
            if (!upoly_eval(L, f, c).is_zero()) continue;
            bool seen = false;
            for (const auto& r : roots) seen = seen || r == c;
            if (!seen) roots.push_back(c);
            f = upoly_divmod(L, f, TowerPoly{-c, T.one()}).first;
            progress = true;
        }
    }

    if (upoly_deg(f) == 1) {
        roots.push_back(-f[0]);
    } else if (upoly_deg(f) >= 2) {
        std::vector<FieldElement> rest;
        if (T.r() == 0) {
            for (const auto& g : factor_over_number_tower(f, T, budget))
                if (upoly_deg(g) == 1) rest.push_back(-g[0]);
        } else {
            rest = roots_detail::roots_by_ansatz(f, T, budget);
        }
        for (auto& x : rest) roots.push_back(std::move(x));
    }

    for (const auto& x : roots)
        if (!tower_poly_eval(f_in, x).is_zero())
            throw InternalError("roots_in_tower: a returned value failed the substitution check");
    std::sort(roots.begin(), roots.end(), [](const FieldElement& a, const FieldElement& b) {
        return a.cmp(b) < 0;
    });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (roots.size() > size_t(deg0))
        throw InternalError("roots_in_tower: more roots than the degree");
    return roots;
}

// ---------- certified tower construction ----------

/**
 * Irreducibility of a monic polynomial over the (already certified) tower T.
 * Returns an irreducible-failure witness factor rendered as text, or nothing.
 */
inline std::optional<std::string> reducibility_witness(const TowerPoly& m, const FieldTower& T,
                                                       const Budgets& budget) {
    TowerField K{T};
    const int d = upoly_deg(m);
    if (d <= 1) return std::nullopt;
    if (T.r() == 0 && T.gen_count() == 0) {
        // plain Q: full factorization
        std::vector<std::string> xv{"x"};
        MultiPoly fq = MultiPoly::zero(xv);
        for (size_t i = 0; i < m.size(); ++i) fq.add_term(Monomial{int(i)}, m[i].rational_value());
        Factorization f = factor_univariate_q(fq, budget.factor_degree_cap);
        if (f.factors.size() == 1 && f.factors[0].second == 1) return std::nullopt;
        return f.factors[0].first.to_string();
    }
    if (T.r() == 0) {
        auto factors = factor_over_number_tower(m, T, budget);
        if (factors.size() == 1) return std::nullopt;
        std::string w;
        for (size_t i = factors[0].size(); i-- > 0;) {
            if (factors[0][i].is_zero()) continue;
            if (!w.empty()) w += " + ";
            w += "(" + factors[0][i].to_string() + ")" + (i ? "*x^" + std::to_string(i) : "");
        }
        return w;
    }
    // transcendental base: degree 2 and 3 reduce iff they have a root
    if (d <= 3) {
        std::vector<FieldElement> rs = roots_in_tower(m, T, budget);
        if (rs.empty()) return std::nullopt;
        return "x - (" + rs[0].to_string() + ")";
    }
    throw BudgetError("irreducibility certification above degree 3 over a transcendental base is "
                      "not supported at this scale",
                      3);
}

/**
 * Validate and append one algebraic generator: the minimal polynomial must be
 * monic and irreducible over the current tower (witness reported otherwise).
 */
inline FieldTower certify_and_extend(const FieldTower& T, const std::string& name,
                                     const TowerPoly& min_poly, const Budgets& budget) {
    TowerField K{T};
    TowerPoly m = min_poly;
    upoly_trim(K, m);
    if (upoly_deg(m) < 1) throw InputError("minimal polynomial for '" + name + "' must be nonconstant");
    if (!m.back().is_one())
        throw InputError("minimal polynomial for '" + name + "' must be monic");
    if (auto witness = reducibility_witness(m, T, budget))
        throw InputError("reducible-minimal-polynomial for '" + name + "': factor " + *witness);
    std::vector<FieldElement> tail(m.begin(), m.end() - 1);
    return T.extend(name, tail);
}

} // namespace galmodel

#endif
