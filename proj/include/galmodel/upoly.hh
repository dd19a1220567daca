/**
 * @file upoly.hh
 * @brief Dense univariate polynomial algorithms over an abstract exact field.
 *
 * A field context F provides: typename F::Elem, zero(), one(), add, sub, neg,
 * mul, inv, is_zero, eq. Polynomials are coefficient vectors (index = degree),
 * the zero polynomial is the empty vector.
 */
#ifndef GALMODEL_UPOLY_HH
#define GALMODEL_UPOLY_HH

#include <galmodel/rational.hh>

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace galmodel {

struct RatField {
    using Elem = Rat;
    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat sub(const Rat& a, const Rat& b) const { return a - b; }
    Rat neg(const Rat& a) const { return -a; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat inv(const Rat& a) const {
        if (a == 0) throw std::domain_error("RatField: inverse of zero");
        return Rat(1) / a;
    }
    bool is_zero(const Rat& a) const { return a == 0; }
    bool eq(const Rat& a, const Rat& b) const { return a == b; }
};

template <class F>
using UPoly = std::vector<typename F::Elem>;

template <class F>
void upoly_trim(const F& K, UPoly<F>& f) {
    while (!f.empty() && K.is_zero(f.back())) f.pop_back();
}

template <class Elem>
int upoly_deg(const std::vector<Elem>& f) { return int(f.size()) - 1; } // -1 for zero

template <class Elem>
bool upoly_is_zero(const std::vector<Elem>& f) { return f.empty(); }

template <class F>
UPoly<F> upoly_const(const F& K, const typename F::Elem& c) {
    UPoly<F> f;
    if (!K.is_zero(c)) f.push_back(c);
    return f;
}

template <class F>
UPoly<F> upoly_x(const F& K) { return {K.zero(), K.one()}; }

template <class F>
UPoly<F> upoly_add(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    UPoly<F> r(std::max(a.size(), b.size()), K.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
    upoly_trim(K, r);
    return r;
}

template <class F>
UPoly<F> upoly_neg(const F& K, const UPoly<F>& a) {
    UPoly<F> r = a;
    for (auto& c : r) c = K.neg(c);
    return r;
}

template <class F>
UPoly<F> upoly_sub(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    return upoly_add(K, a, upoly_neg(K, b));
}

template <class F>
UPoly<F> upoly_mul(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    if (a.empty() || b.empty()) return {};
    UPoly<F> r(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    upoly_trim(K, r);
    return r;
}

template <class F>
UPoly<F> upoly_scale(const F& K, const UPoly<F>& a, const typename F::Elem& c) {
    if (K.is_zero(c)) return {};
    UPoly<F> r = a;
    for (auto& x : r) x = K.mul(x, c);
    upoly_trim(K, r);
    return r;
}

/// quotient and remainder with deg r < deg g; exact field division, g nonzero
template <class F>
std::pair<UPoly<F>, UPoly<F>> upoly_divmod(const F& K, const UPoly<F>& f, const UPoly<F>& g) {
    if (g.empty()) throw std::domain_error("upoly_divmod: division by zero polynomial");
    UPoly<F> r = f;
    upoly_trim(K, r);
    if (r.size() < g.size()) return {{}, r};
    UPoly<F> q(r.size() - g.size() + 1, K.zero());
    const typename F::Elem glc_inv = K.inv(g.back());
    for (size_t k = r.size(); k-- > 0;) {
        if (k + 1 < g.size()) break;
        if (K.is_zero(r[k])) continue;
        typename F::Elem c = K.mul(r[k], glc_inv);
        q[k - g.size() + 1] = c;
        for (size_t j = 0; j < g.size(); ++j)
            r[k - g.size() + 1 + j] = K.sub(r[k - g.size() + 1 + j], K.mul(c, g[j]));
    }
    r.resize(g.size() - 1);
    upoly_trim(K, r);
    upoly_trim(K, q);
    return {q, r};
}

template <class F>
UPoly<F> upoly_mod(const F& K, const UPoly<F>& f, const UPoly<F>& g) {
    return upoly_divmod(K, f, g).second;
}

template <class F>
UPoly<F> upoly_make_monic(const F& K, const UPoly<F>& f) {
    if (f.empty()) return f;
    return upoly_scale(K, f, K.inv(f.back()));
}

/// monic gcd by the Euclidean algorithm
template <class F>
UPoly<F> upoly_gcd(const F& K, UPoly<F> a, UPoly<F> b) {
    upoly_trim(K, a);
    upoly_trim(K, b);
    while (!b.empty()) {
        UPoly<F> r = upoly_mod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_make_monic(K, a);
}

/// extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero)
template <class F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> upoly_ext_gcd(const F& K, UPoly<F> a, UPoly<F> b) {
    upoly_trim(K, a);
    upoly_trim(K, b);
    UPoly<F> r0 = a, r1 = b;
    UPoly<F> s0 = upoly_const(K, K.one()), s1 = {};
    UPoly<F> t0 = {}, t1 = upoly_const(K, K.one());
    while (!r1.empty()) {
        auto [q, r] = upoly_divmod(K, r0, r1);
        UPoly<F> s2 = upoly_sub(K, s0, upoly_mul(K, q, s1));
        UPoly<F> t2 = upoly_sub(K, t0, upoly_mul(K, q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.empty()) {
        typename F::Elem lcinv = K.inv(r0.back());
        r0 = upoly_scale(K, r0, lcinv);
        s0 = upoly_scale(K, s0, lcinv);
        t0 = upoly_scale(K, t0, lcinv);
    }
    return {r0, s0, t0};
}

template <class F>
typename F::Elem upoly_eval(const F& K, const UPoly<F>& f, const typename F::Elem& x) {
    typename F::Elem r = K.zero();
    for (size_t i = f.size(); i-- > 0;) r = K.add(K.mul(r, x), f[i]);
    return r;
}

template <class F>
UPoly<F> upoly_derivative(const F& K, const UPoly<F>& f) {
    if (f.size() <= 1) return {};
    UPoly<F> r(f.size() - 1, K.zero());
    for (size_t i = 1; i < f.size(); ++i) {
        typename F::Elem n = K.zero();
        for (size_t k = 0; k < i; ++k) n = K.add(n, K.one());
        r[i - 1] = K.mul(f[i], n);
    }
    upoly_trim(K, r);
    return r;
}

/// f / gcd(f, f'): same roots, all simple
template <class F>
UPoly<F> upoly_squarefree_part(const F& K, const UPoly<F>& f) {
    if (upoly_deg(f) <= 1) return f;
    UPoly<F> g = upoly_gcd(K, f, upoly_derivative(K, f));
    if (upoly_deg(g) <= 0) return f;
    return upoly_divmod(K, f, g).first;
}

/// substitute g for the variable of f
template <class F>
UPoly<F> upoly_compose(const F& K, const UPoly<F>& f, const UPoly<F>& g) {
    UPoly<F> r;
    for (size_t i = f.size(); i-- > 0;) {
        r = upoly_mul(K, r, g);
        r = upoly_add(K, r, upoly_const(K, f[i]));
    }
    return r;
}

/// resultant via the subresultant-free Euclidean recursion (exact field)
template <class F>
typename F::Elem upoly_resultant(const F& K, UPoly<F> a, UPoly<F> b) {
    upoly_trim(K, a);
    upoly_trim(K, b);
    if (a.empty() || b.empty()) return K.zero();
    typename F::Elem acc = K.one();
    bool negate = false;
    while (true) {
        if (upoly_deg(b) == 0) {
            // res(a, b0) = b0^deg(a)
            typename F::Elem p = K.one();
            for (int i = 0; i < upoly_deg(a); ++i) p = K.mul(p, b[0]);
            acc = K.mul(acc, p);
            break;
        }
        UPoly<F> r = upoly_mod(K, a, b);
        if (r.empty()) return K.zero();
        // res(a,b) = (-1)^{deg a * deg b} * lc(b)^{deg a - deg r} * res(b, r)
        if ((upoly_deg(a) % 2) && (upoly_deg(b) % 2)) negate = !negate;
        typename F::Elem lc_pow = K.one();
        for (int i = 0; i < upoly_deg(a) - upoly_deg(r); ++i) lc_pow = K.mul(lc_pow, b.back());
        acc = K.mul(acc, lc_pow);
        a = std::move(b);
        b = std::move(r);
    }
    return negate ? K.neg(acc) : acc;
}

} // namespace galmodel

#endif
