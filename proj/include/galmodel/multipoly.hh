/**
 * @file multipoly.hh
 * @brief Exact multivariate polynomials over Q with canonical term maps,
 *        lex / graded-reverse-lex monomial orders and exact division.
 */
#ifndef GALMODEL_MULTIPOLY_HH
#define GALMODEL_MULTIPOLY_HH

#include <galmodel/rational.hh>

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace galmodel {

// exponent vector; length == variable count of the owning polynomial
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        assert(r[i] >= 0);
    }
    return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

enum class OrderKind { Lex, GrevLex };

/// Monomial order tag: kind plus a variable priority list (highest priority first).
struct MonomialOrder {
    OrderKind kind = OrderKind::Lex;
    std::vector<int> priority; // priority[k] = variable index ranked k-th

    static MonomialOrder lex(size_t nvars) {
        MonomialOrder o;
        o.kind = OrderKind::Lex;
        o.priority.resize(nvars);
        for (size_t i = 0; i < nvars; ++i) o.priority[i] = int(i);
        return o;
    }
    static MonomialOrder grevlex(size_t nvars) {
        MonomialOrder o = lex(nvars);
        o.kind = OrderKind::GrevLex;
        return o;
    }
    static MonomialOrder lex(std::vector<int> prio) {
        MonomialOrder o;
        o.kind = OrderKind::Lex;
        o.priority = std::move(prio);
        return o;
    }
    static MonomialOrder grevlex(std::vector<int> prio) {
        MonomialOrder o = lex(std::move(prio));
        o.kind = OrderKind::GrevLex;
        return o;
    }

    // -1 if a < b, 0 if equal, +1 if a > b
    int compare(const Monomial& a, const Monomial& b) const {
        assert(a.size() == priority.size() && b.size() == priority.size());
        if (kind == OrderKind::Lex) {
            for (int v : priority) {
                if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
            }
            return 0;
        }
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db ? -1 : 1;
        // ties: the last (lowest-priority) differing variable, smaller exponent wins
        for (size_t k = priority.size(); k-- > 0;) {
            int v = priority[k];
            if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

/**
 * Multivariate polynomial with exact rational coefficients.
 *
 * Canonical form: no zero coefficients are stored; equality over the same
 * variable list is term-map equality.
 */
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(std::vector<std::string> vars) { return MultiPoly(std::move(vars)); }

    static MultiPoly constant(std::vector<std::string> vars, const Rat& c) {
        MultiPoly p(std::move(vars));
        if (c != 0) p.terms_[Monomial(p.vars_.size(), 0)] = c;
        return p;
    }

    static MultiPoly variable(std::vector<std::string> vars, size_t index) {
        MultiPoly p(std::move(vars));
        assert(index < p.vars_.size());
        Monomial m(p.vars_.size(), 0);
        m[index] = 1;
        p.terms_[m] = 1;
        return p;
    }

    static MultiPoly variable(std::vector<std::string> vars, const std::string& name) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw std::invalid_argument("MultiPoly::variable: unknown symbol " + name);
        return variable(vars, size_t(it - vars.begin()));
    }

    static MultiPoly monomial(std::vector<std::string> vars, Monomial m, const Rat& c) {
        MultiPoly p(std::move(vars));
        assert(m.size() == p.vars_.size());
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    size_t nvars() const { return vars_.size(); }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        assert(is_constant());
        return terms_.begin()->second;
    }

    int degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d; // -1 for the zero polynomial
    }
    int degree_in(size_t var) const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        check_same_vars(o);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_same_vars(o);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_vars(b);
        MultiPoly r(a.vars_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly operator*(const Rat& c) const {
        MultiPoly r(vars_);
        if (c == 0) return r;
        for (auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }
    MultiPoly& operator*=(const Rat& c) { return *this = *this * c; }
    MultiPoly operator/(const Rat& c) const {
        if (c == 0) throw std::invalid_argument("MultiPoly: division by zero scalar");
        return *this * (Rat(1) / c);
    }

    MultiPoly pow(int e) const {
        assert(e >= 0);
        MultiPoly r = constant(vars_, 1);
        MultiPoly b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // deterministic total order, used only for canonical sorting of outputs
    int cmp(const MultiPoly& o) const {
        if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
            int c = rat_cmp(it->second, jt->second);
            if (c != 0) return c;
        }
        return 0;
    }

    std::pair<Monomial, Rat> leading_term(const MonomialOrder& order) const {
        assert(!terms_.empty());
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.compare(it->first, best->first) > 0) best = it;
        return {best->first, best->second};
    }

    /// substitute polynomials for every variable (images over the target ring's variables)
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        assert(images.size() == vars_.size() || vars_.empty());
        if (terms_.empty()) {
            return images.empty() ? MultiPoly(std::vector<std::string>{})
                                  : MultiPoly::zero(images[0].vars());
        }
        std::vector<std::string> tvars = images.empty() ? std::vector<std::string>{} : images[0].vars();
        MultiPoly r = MultiPoly::zero(tvars);
        for (auto& [m, c] : terms_) {
            MultiPoly t = MultiPoly::constant(tvars, c);
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) t *= images[i].pow(m[i]);
            r += t;
        }
        return r;
    }

    Rat eval(const std::vector<Rat>& point) const {
        assert(point.size() == vars_.size());
        Rat r(0);
        for (auto& [m, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < m.size(); ++i)
                for (int k = 0; k < m[i]; ++k) t *= point[i];
            r += t;
        }
        return r;
    }

    MultiPoly derivative(size_t var) const {
        MultiPoly r(vars_);
        for (auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial n = m;
            n[var] -= 1;
            r.add_term(n, c * m[var]);
        }
        return r;
    }

    /// embed into a superset variable list (every current variable must appear there)
    MultiPoly embed(const std::vector<std::string>& newvars) const {
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(newvars.begin(), newvars.end(), vars_[i]);
            if (it == newvars.end())
                throw std::invalid_argument("MultiPoly::embed: variable " + vars_[i] + " missing");
            pos[i] = size_t(it - newvars.begin());
        }
        MultiPoly r{newvars};
        for (auto& [m, c] : terms_) {
            Monomial n(newvars.size(), 0);
            for (size_t i = 0; i < m.size(); ++i) n[pos[i]] = m[i];
            r.terms_[n] = c;
        }
        return r;
    }

    /// restrict to a variable sublist; fails if the polynomial uses a dropped variable
    MultiPoly restrict_vars(const std::vector<std::string>& newvars) const {
        std::vector<int> pos(vars_.size(), -1);
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(newvars.begin(), newvars.end(), vars_[i]);
            if (it != newvars.end()) pos[i] = int(it - newvars.begin());
        }
        MultiPoly r{newvars};
        for (auto& [m, c] : terms_) {
            Monomial n(newvars.size(), 0);
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (pos[i] < 0)
                    throw std::invalid_argument("MultiPoly::restrict_vars: uses dropped variable " + vars_[i]);
                n[pos[i]] = m[i];
            }
            r.terms_[n] = c;
        }
        return r;
    }

    bool uses_var(size_t var) const {
        for (auto& [m, c] : terms_)
            if (m[var] > 0) return true;
        return false;
    }

    /// gcd of coefficient numerators over lcm of denominators; content(0) = 0
    Rat content() const {
        if (terms_.empty()) return Rat(0);
        Int num = 0, den = 1;
        for (auto& [m, c] : terms_) {
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rat r(num, den);
        r.canonicalize();
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        // render descending under grevlex for readability
        MonomialOrder ord = MonomialOrder::grevlex(vars_.size());
        std::vector<const std::pair<const Monomial, Rat>*> ts;
        for (auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(),
                  [&](auto* a, auto* b) { return ord.compare(a->first, b->first) > 0; });
        std::ostringstream os;
        bool first = true;
        for (auto* t : ts) {
            Rat c = t->second;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            std::string mono = monomial_string(t->first);
            if (mono.empty()) {
                os << galmodel::to_string(c);
            } else {
                if (c != 1) os << galmodel::to_string(c) << "*";
                os << mono;
            }
        }
        return os.str();
    }

private:
    std::string monomial_string(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << vars_[i];
            if (m[i] > 1) os << "^" << m[i];
        }
        return os.str();
    }

    void check_same_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: mixed variable lists");
    }

    std::vector<std::string> vars_;
    std::map<Monomial, Rat> terms_;
};

/// exact quotient if divisor divides exactly, nullopt otherwise
inline std::optional<MultiPoly> try_exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("try_exact_divide: zero divisor");
    MonomialOrder ord = MonomialOrder::lex(f.nvars());
    MultiPoly q = MultiPoly::zero(f.vars());
    MultiPoly r = f;
    auto [gm, gc] = g.leading_term(ord);
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term(ord);
        if (!monomial_divides(gm, rm)) return std::nullopt;
        Monomial qm = monomial_div(rm, gm);
        Rat qc = rc / gc;
        MultiPoly t = MultiPoly::monomial(f.vars(), qm, qc);
        q += t;
        r -= t * g;
    }
    return q;
}

inline MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    auto q = try_exact_divide(f, g);
    if (!q) throw std::invalid_argument("exact_divide: not divisible");
    return *q;
}

} // namespace galmodel

#endif
