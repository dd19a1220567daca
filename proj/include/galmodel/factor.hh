/**
 * @file factor.hh
 * @brief Univariate factorization over Q: Yun squarefree decomposition,
 *        deterministic Berlekamp modulo a small prime, quadratic Hensel
 *        lifting and Zassenhaus subset recombination.
 *
 * Primes are drawn from a fixed ascending sequence so runs are reproducible.
 */
#ifndef GALMODEL_FACTOR_HH
#define GALMODEL_FACTOR_HH

#include <galmodel/errors.hh>
#include <galmodel/univariate.hh>

#include <algorithm>
#include <vector>

namespace galmodel {

namespace zq {

// ---------- dense integer polynomials (index = degree) ----------

using ZPoly = std::vector<Int>;

template <class T>
inline void trim(std::vector<T>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
template <class T>
inline int deg(const std::vector<T>& f) { return int(f.size()) - 1; }

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Int content(const ZPoly& f) {
    Int c = 0;
    for (auto& x : f) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    return c;
}

inline ZPoly divide_exact(const ZPoly& f, const Int& c) {
    ZPoly r = f;
    for (auto& x : r) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw InternalError("zq::divide_exact: inexact scalar division");
        x = q;
    }
    return r;
}

/// f / g when g | f exactly over Z, nullopt otherwise
inline std::optional<ZPoly> try_divide(const ZPoly& f, const ZPoly& g) {
    if (g.empty()) throw std::domain_error("zq::try_divide: zero divisor");
    ZPoly r = f;
    trim(r);
    if (r.empty()) return ZPoly{};
    if (r.size() < g.size()) return std::nullopt;
    ZPoly q(r.size() - g.size() + 1, Int(0));
    for (size_t k = r.size(); k-- > 0;) {
        if (k + 1 < g.size()) break;
        if (r[k] == 0) continue;
        Int c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r[k].get_mpz_t(), g.back().get_mpz_t());
        if (rem != 0) return std::nullopt;
        q[k - g.size() + 1] = c;
        for (size_t j = 0; j < g.size(); ++j) r[k - g.size() + 1 + j] -= c * g[j];
    }
    trim(r);
    if (!r.empty()) return std::nullopt;
    trim(q);
    return q;
}

// ---------- dense polynomials modulo a small prime ----------

using PPoly = std::vector<long>;

inline void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long pinv(long a, long p) { // p prime, a != 0 mod p
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
}

inline PPoly pmod_of(const ZPoly& f, long p) {
    PPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        r[i] = long(mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p)));
    }
    ptrim(r);
    return r;
}

inline PPoly pmul(const PPoly& a, const PPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

inline PPoly psub(PPoly a, const PPoly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    ptrim(a);
    return a;
}

inline std::pair<PPoly, PPoly> pdivmod(const PPoly& f, const PPoly& g, long p) {
    PPoly r = f;
    ptrim(r);
    if (g.empty()) throw std::domain_error("pdivmod: zero divisor");
    if (r.size() < g.size()) return {{}, r};
    PPoly q(r.size() - g.size() + 1, 0);
    long glc = pinv(g.back(), p);
    for (size_t k = r.size(); k-- > 0;) {
        if (k + 1 < g.size()) break;
        if (r[k] == 0) continue;
        long c = (r[k] * glc) % p;
        q[k - g.size() + 1] = c;
        for (size_t j = 0; j < g.size(); ++j)
            r[k - g.size() + 1 + j] = ((r[k - g.size() + 1 + j] - c * g[j]) % p + p) % p;
    }
    ptrim(r);
    ptrim(q);
    return {q, r};
}

inline PPoly pgcd(PPoly a, PPoly b, long p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pdivmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = pinv(a.back(), p);
        for (auto& c : a) c = (c * inv) % p;
    }
    return a;
}

inline PPoly pderiv(const PPoly& f, long p) {
    if (f.size() <= 1) return {};
    PPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = (long(i) % p) * f[i] % p;
    ptrim(r);
    return r;
}

inline PPoly ppowmod_x(long e, const PPoly& f, long p) { // x^e mod f
    PPoly base = pdivmod(PPoly{0, 1}, f, p).second;
    PPoly result{1};
    while (e > 0) {
        if (e & 1) result = pdivmod(pmul(result, base, p), f, p).second;
        base = pdivmod(pmul(base, base, p), f, p).second;
        e >>= 1;
    }
    return result;
}

/// deterministic Berlekamp: factors of a monic squarefree f over F_p
inline std::vector<PPoly> berlekamp(const PPoly& f, long p) {
    const size_t n = size_t(deg(f));
    if (n <= 1) return {f};
    // rows of the Frobenius matrix: x^{p i} mod f
    std::vector<PPoly> rows(n);
    PPoly xq = ppowmod_x(p, f, p);
    rows[0] = PPoly{1};
    for (size_t i = 1; i < n; ++i) rows[i] = pdivmod(pmul(rows[i - 1], xq, p), f, p).second;
    // kernel of (Frobenius - I), vectors act on the left
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) m[j][i] = rows[i][j]; // transpose
        m[i][i] = ((m[i][i] - 1) % p + p) % p;
    }
    // Gaussian elimination mod p
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < n && r < n; ++c) {
        size_t sel = n;
        for (size_t i = r; i < n; ++i)
            if (m[i][c] != 0) { sel = i; break; }
        if (sel == n) continue;
        std::swap(m[r], m[sel]);
        long inv = pinv(m[r][c], p);
        for (size_t j = 0; j < n; ++j) m[r][j] = (m[r][j] * inv) % p;
        for (size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long fct = m[i][c];
            for (size_t j = 0; j < n; ++j) m[i][j] = ((m[i][j] - fct * m[r][j]) % p + p) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<PPoly> kernel;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        PPoly v(n, 0);
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - m[i][c]) % p;
        ptrim(v);
        kernel.push_back(std::move(v));
    }
    const size_t k = kernel.size(); // number of irreducible factors
    std::vector<PPoly> factors{f};
    if (k == 1) return factors;
    for (const auto& v : kernel) {
        if (factors.size() == k) break;
        if (deg(v) < 1) continue; // constants split nothing
        for (long s = 0; s < p && factors.size() < k; ++s) {
            PPoly vs = v;
            vs.resize(std::max<size_t>(vs.size(), 1), 0);
            vs[0] = ((vs[0] - s) % p + p) % p;
            ptrim(vs);
            for (size_t i = 0; i < factors.size(); ++i) {
                if (deg(factors[i]) <= 1) continue;
                PPoly g = pgcd(factors[i], vs, p);
                if (deg(g) >= 1 && deg(g) < deg(factors[i])) {
                    PPoly rest = pdivmod(factors[i], g, p).first;
                    factors[i] = g;
                    factors.push_back(rest);
                }
            }
        }
    }
    return factors;
}

// ---------- Hensel lifting ----------

inline ZPoly zmod(const ZPoly& f, const Int& m) {
    ZPoly r = f;
    for (auto& c : r) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    trim(r);
    return r;
}

inline ZPoly zmod_symmetric(const ZPoly& f, const Int& m) {
    ZPoly r = zmod(f, m);
    Int half = m / 2;
    for (auto& c : r)
        if (c > half) c -= m;
    trim(r);
    return r;
}

inline ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

/// division by a monic divisor with coefficients reduced mod m
inline std::pair<ZPoly, ZPoly> zdivmod_monic_mod(const ZPoly& f, const ZPoly& g, const Int& m) {
    ZPoly r = zmod(f, m);
    if (g.empty() || g.back() != 1) throw InternalError("zdivmod_monic_mod: non-monic divisor");
    if (r.size() < g.size()) return {{}, r};
    ZPoly q(r.size() - g.size() + 1, Int(0));
    for (size_t k = r.size(); k-- > 0;) {
        if (k + 1 < g.size()) break;
        if (r[k] == 0) continue;
        Int c = r[k];
        q[k - g.size() + 1] = c;
        for (size_t j = 0; j < g.size(); ++j) {
            r[k - g.size() + 1 + j] -= c * g[j];
            mpz_fdiv_r(r[k - g.size() + 1 + j].get_mpz_t(), r[k - g.size() + 1 + j].get_mpz_t(),
                       m.get_mpz_t());
        }
        r[k] = 0;
    }
    trim(r);
    q = zmod(q, m);
    return {q, zmod(r, m)};
}

struct HenselPair {
    ZPoly g, h, s, t;
};

/// one quadratic lifting step: from modulus m to m^2
inline HenselPair hensel_step(const Int& m, const ZPoly& f, const HenselPair& in) {
    Int m2 = m * m;
    const ZPoly& g = in.g;
    const ZPoly& h = in.h;
    const ZPoly& s = in.s;
    const ZPoly& t = in.t;
    ZPoly e = zmod(zsub(f, mul(g, h)), m2);
    auto [q, r] = zdivmod_monic_mod(mul(s, e), h, m2);
    ZPoly g1 = zmod(zadd(zadd(g, mul(t, e)), mul(q, g)), m2);
    ZPoly h1 = zmod(zadd(h, r), m2);
    ZPoly b = zmod(zsub(zadd(mul(s, g1), mul(t, h1)), ZPoly{Int(1)}), m2);
    auto [c, d] = zdivmod_monic_mod(mul(s, b), h1, m2);
    ZPoly s1 = zmod(zsub(s, d), m2);
    ZPoly t1 = zmod(zsub(zsub(t, mul(t, b)), mul(c, g1)), m2);
    return {g1, h1, s1, t1};
}

inline PPoly to_ppoly(const ZPoly& f, long p) { return pmod_of(f, p); }

inline ZPoly to_zpoly(const PPoly& f) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    return r;
}

/// extended gcd mod p for the initial Bezout pair
inline std::pair<PPoly, PPoly> pext_gcd_bezout(const PPoly& a, const PPoly& b, long p) {
    PPoly r0 = a, r1 = b;
    PPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = pdivmod(r0, r1, p);
        PPoly s2 = psub(s0, pmul(q, s1, p), p);
        PPoly t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw InternalError("pext_gcd_bezout: operands not coprime");
    long inv = pinv(r0[0], p);
    for (auto& c : s0) c = (c * inv) % p;
    for (auto& c : t0) c = (c * inv) % p;
    return {s0, t0};
}

/// lift f = lc(f) * prod(monic factors) from mod p to mod target; returns monic factors mod target
inline std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<PPoly>& factors, long p,
                                           const Int& target) {
    if (factors.size() == 1) {
        // monicize f modulo target: lc(f) is invertible mod p hence mod p^k
        Int lc = f.back();
        Int lcinv;
        if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t()) == 0)
            throw InternalError("hensel_lift_tree: leading coefficient not invertible");
        ZPoly r = f;
        for (auto& c : r) {
            c *= lcinv;
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), target.get_mpz_t());
        }
        trim(r);
        return {r};
    }
    size_t k = factors.size() / 2;
    long lcp = long(mpz_fdiv_ui(f.back().get_mpz_t(), static_cast<unsigned long>(p)));
    PPoly g0{lcp % p};
    for (size_t i = 0; i < k; ++i) g0 = pmul(g0, factors[i], p);
    PPoly h0{1};
    for (size_t i = k; i < factors.size(); ++i) h0 = pmul(h0, factors[i], p);
    auto [s0, t0] = pext_gcd_bezout(g0, h0, p);
    HenselPair cur{to_zpoly(g0), to_zpoly(h0), to_zpoly(s0), to_zpoly(t0)};
    Int m = p;
    while (m < target) {
        cur = hensel_step(m, zmod(f, m * m), cur);
        m = m * m;
    }
    // reduce to the final modulus m (>= target); recurse on both halves
    std::vector<PPoly> left(factors.begin(), factors.begin() + long(k));
    std::vector<PPoly> right(factors.begin() + long(k), factors.end());
    std::vector<ZPoly> out = hensel_lift_tree(cur.g, left, p, target);
    std::vector<ZPoly> rhs = hensel_lift_tree(cur.h, right, p, target);
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
}

} // namespace zq

struct Factorization {
    Rat unit;                                   // rational content (and leading-coefficient) factor
    std::vector<std::pair<MultiPoly, int>> factors; // monic irreducible, with multiplicities
};

namespace detail_factor {

inline const std::vector<long>& prime_sequence() {
    static const std::vector<long> primes = [] {
        std::vector<long> ps;
        std::vector<bool> sieve(20000, true);
        for (long i = 2; i < long(sieve.size()); ++i) {
            if (!sieve[size_t(i)]) continue;
            if (i >= 3) ps.push_back(i);
            for (long j = i * i; j < long(sieve.size()); j += i) sieve[size_t(j)] = false;
        }
        return ps;
    }();
    return primes;
}

/// Zassenhaus on a primitive squarefree integer polynomial with positive leading coefficient
inline std::vector<zq::ZPoly> factor_squarefree_z(const zq::ZPoly& f) {
    using namespace zq;
    const int n = deg(f);
    if (n <= 1) return {f};

    // choose up to five usable primes, keep the one with fewest modular factors
    std::vector<PPoly> best_factors;
    long best_p = 0;
    int tried = 0;
    for (long p : prime_sequence()) {
        if (mpz_fdiv_ui(f.back().get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
        PPoly fp = pmod_of(f, p);
        if (deg(fp) != n) continue;
        PPoly d = pderiv(fp, p);
        if (d.empty() || deg(pgcd(fp, d, p)) != 0) continue; // not squarefree mod p
        long lcinv = pinv(fp.back(), p);
        PPoly monic = fp;
        for (auto& c : monic) c = (c * lcinv) % p;
        std::vector<PPoly> fac = berlekamp(monic, p);
        if (best_p == 0 || fac.size() < best_factors.size()) {
            best_factors = fac;
            best_p = p;
        }
        if (++tried >= 5 || best_factors.size() == 1) break;
    }
    if (best_p == 0) throw InternalError("factor_squarefree_z: no usable prime found");
    if (best_factors.size() == 1) return {f}; // irreducible mod best_p, hence over Q

    // deterministic ordering of the modular factors
    std::sort(best_factors.begin(), best_factors.end(),
              [](const PPoly& a, const PPoly& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });

    // coefficient bound: |lc| * 2^n * (n+1) * maxnorm(f)
    Int maxc = 0;
    for (auto& c : f) {
        Int a = abs(c);
        if (a > maxc) maxc = a;
    }
    Int bound = abs(f.back()) * maxc * (n + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    Int target = best_p;
    while (target <= 2 * bound) target = target * target;

    std::vector<ZPoly> lifted = hensel_lift_tree(f, best_factors, best_p, target);
    for (auto& g : lifted) g = zmod(g, target);

    // subset recombination
    std::vector<ZPoly> result;
    ZPoly remaining = f;
    std::vector<size_t> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;

    size_t subset_size = 1;
    while (2 * subset_size <= alive.size()) {
        bool found = false;
        std::vector<size_t> idx(subset_size);
        for (size_t i = 0; i < subset_size; ++i) idx[i] = i;
        while (true) {
            ZPoly prod{remaining.back()};
            for (size_t i : idx) prod = zmod(mul(prod, lifted[alive[i]]), target);
            ZPoly cand = zmod_symmetric(prod, target);
            Int c = content(cand);
            if (c != 0) cand = divide_exact(cand, c);
            if (!cand.empty() && cand.back() < 0)
                for (auto& x : cand) x = -x;
            auto quot = try_divide(remaining, cand);
            if (quot && deg(cand) >= 1) {
                result.push_back(cand);
                remaining = *quot;
                std::vector<size_t> next_alive;
                for (size_t i = 0, j = 0; i < alive.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) { ++j; continue; }
                    next_alive.push_back(alive[i]);
                }
                alive = std::move(next_alive);
                found = true;
                break;
            }
            // next combination
            size_t i = subset_size;
            while (i-- > 0) {
                if (idx[i] + (subset_size - i) < alive.size()) {
                    ++idx[i];
                    for (size_t j = i + 1; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) { i = SIZE_MAX; break; }
            }
            if (i == SIZE_MAX) break;
        }
        if (!found) ++subset_size;
    }
    if (deg(remaining) >= 1) result.push_back(remaining);
    return result;
}

} // namespace detail_factor

/**
 * Factor a nonzero univariate polynomial over Q into monic irreducible
 * factors with multiplicities; unit * prod(factor^mult) reproduces the input.
 * Throws BudgetError above `degree_cap`.
 */
inline Factorization factor_univariate_q(const MultiPoly& f, int degree_cap = 24) {
    if (f.is_zero()) throw std::invalid_argument("factor_univariate_q: zero polynomial");
    Factorization out{Rat(1), {}};
    if (f.is_constant()) {
        out.unit = f.constant_value();
        return out;
    }
    size_t var = univariate_var(f);
    if (f.degree_in(var) > degree_cap)
        throw BudgetError("factor_univariate_q: degree " + std::to_string(f.degree_in(var)) +
                              " above cap " + std::to_string(degree_cap),
                          degree_cap);

    // rational content out; primitive integer polynomial with positive lc
    Rat cont = f.content();
    MultiPoly pp = f / cont;
    auto dense = to_dense(pp, var);
    zq::ZPoly zf(dense.size());
    for (size_t i = 0; i < dense.size(); ++i) {
        if (!is_integer(dense[i])) throw InternalError("factor_univariate_q: content extraction failed");
        zf[i] = dense[i].get_num();
    }
    if (zf.back() < 0) {
        for (auto& c : zf) c = -c;
        cont = -cont;
    }
    out.unit = cont;

    // trailing x^v
    size_t v0 = 0;
    while (v0 < zf.size() && zf[v0] == 0) ++v0;
    if (v0 > 0) {
        zf.erase(zf.begin(), zf.begin() + long(v0));
        out.factors.emplace_back(MultiPoly::variable(f.vars(), var), int(v0));
    }

    // Yun squarefree decomposition over Q
    RatField K;
    UPoly<RatField> w(zf.size());
    for (size_t i = 0; i < zf.size(); ++i) w[i] = Rat(zf[i]);
    std::vector<std::pair<UPoly<RatField>, int>> squarefree;
    {
        UPoly<RatField> fp = upoly_derivative(K, w);
        UPoly<RatField> g = upoly_gcd(K, w, fp);
        UPoly<RatField> wi = upoly_divmod(K, w, g).first;
        UPoly<RatField> y = upoly_divmod(K, fp, g).first;
        UPoly<RatField> z = upoly_sub(K, y, upoly_derivative(K, wi));
        int i = 1;
        while (upoly_deg(wi) > 0) {
            UPoly<RatField> gi = upoly_gcd(K, wi, z);
            if (upoly_deg(gi) > 0) squarefree.emplace_back(gi, i);
            wi = upoly_divmod(K, wi, gi).first;
            y = upoly_divmod(K, z, gi).first;
            z = upoly_sub(K, y, upoly_derivative(K, wi));
            ++i;
        }
    }

    Rat lc_product(1);
    std::vector<std::pair<MultiPoly, int>> irreducibles;
    for (auto& [sq, mult] : squarefree) {
        // to a primitive integer polynomial
        Int den = 1;
        for (auto& c : sq) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        zq::ZPoly zsq(sq.size());
        for (size_t i = 0; i < sq.size(); ++i) {
            Rat scaled = sq[i] * Rat(den);
            zsq[i] = scaled.get_num();
        }
        Int c = zq::content(zsq);
        if (c != 0) zsq = zq::divide_exact(zsq, c);
        if (zsq.back() < 0)
            for (auto& x : zsq) x = -x;

        for (auto& zfac : detail_factor::factor_squarefree_z(zsq)) {
            UPoly<RatField> qc(zfac.size());
            for (size_t i = 0; i < zfac.size(); ++i) qc[i] = Rat(zfac[i]);
            Rat lc = qc.back();
            for (auto& x : qc) x /= lc;
            for (int k = 0; k < mult; ++k) lc_product *= lc;
            irreducibles.emplace_back(from_dense(qc, f.vars(), var), mult);
        }
    }
    out.unit *= lc_product;
    // Yun's parts are monic after gcds; any rational leading scale is in lc_product.
    // deterministic factor order: by degree, then canonical comparison
    std::sort(irreducibles.begin(), irreducibles.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        int c = a.first.cmp(b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    for (auto& fc : irreducibles) out.factors.push_back(std::move(fc));

    // self-check: re-expansion must reproduce the input exactly
    MultiPoly check = MultiPoly::constant(f.vars(), out.unit);
    for (auto& [g, m] : out.factors)
        for (int i = 0; i < m; ++i) check *= g;
    if (check != f) throw InternalError("factor_univariate_q: factor re-expansion mismatch");
    return out;
}

/// all rational roots of a nonzero univariate polynomial over Q
inline std::vector<Rat> rational_roots(const MultiPoly& f, int degree_cap = 24) {
    std::vector<Rat> roots;
    if (f.is_constant()) return roots;
    size_t var = univariate_var(f);
    for (auto& [g, m] : factor_univariate_q(f, degree_cap).factors) {
        if (g.degree_in(var) != 1) continue;
        auto d = to_dense(g, var);
        roots.push_back(-d[0] / d[1]);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace galmodel

#endif
