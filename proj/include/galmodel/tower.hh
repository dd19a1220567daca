/**
 * @file tower.hh
 * @brief Field towers Q(t_1..t_r)(a_1)(a_2)... with exact element arithmetic.
 *
 * Elements are stored in nested dense form: an element of level k is a
 * coefficient vector of length deg(m_k) over level k-1, level 0 being a
 * rational function in the transcendentals. Inverses run extended Euclid
 * against the minimal polynomials level by level. All values are immutable.
 */
#ifndef GALMODEL_TOWER_HH
#define GALMODEL_TOWER_HH

#include <galmodel/errors.hh>
#include <galmodel/linalg.hh>
#include <galmodel/ratfunc.hh>

#include <memory>

namespace galmodel {

struct ElemNode {
    RatFunc base;                 // payload at level 0
    std::vector<ElemNode> coeffs; // payload above level 0, dense of the generator degree
};

struct TowerGen {
    std::string name;
    int deg = 0;
    std::vector<ElemNode> tail; // minimal polynomial a^deg + sum tail[j]*a^j, tail at the level below
};

struct TowerData {
    std::vector<std::string> tvars;
    std::vector<TowerGen> gens;
    size_t base_mark = 0; // gens[0..base_mark) belong to K, the rest define L over K
};

namespace towernode {

inline bool struct_eq(const ElemNode& a, const ElemNode& b) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    if (a.coeffs.empty()) return a.base == b.base;
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        if (!struct_eq(a.coeffs[i], b.coeffs[i])) return false;
    return true;
}

inline ElemNode zero(const TowerData& T, size_t level) {
    if (level == 0) return ElemNode{RatFunc::zero(T.tvars), {}};
    ElemNode n;
    n.coeffs.assign(size_t(T.gens[level - 1].deg), zero(T, level - 1));
    return n;
}

inline ElemNode from_ratfunc(const TowerData& T, size_t level, const RatFunc& rf) {
    if (level == 0) return ElemNode{rf, {}};
    ElemNode n = zero(T, level);
    n.coeffs[0] = from_ratfunc(T, level - 1, rf);
    return n;
}

inline ElemNode lift(const TowerData& T, size_t from, size_t to, const ElemNode& v) {
    ElemNode n = v;
    for (size_t lvl = from + 1; lvl <= to; ++lvl) {
        ElemNode up = zero(T, lvl);
        up.coeffs[0] = std::move(n);
        n = std::move(up);
    }
    return n;
}

inline bool is_zero(const ElemNode& v) {
    if (v.coeffs.empty()) return v.base.is_zero();
    for (const auto& c : v.coeffs)
        if (!is_zero(c)) return false;
    return true;
}

/// true when all coefficients above `target` vanish except the constant one
inline bool in_level(const ElemNode& v, size_t level, size_t target) {
    if (level <= target) return true;
    for (size_t i = 1; i < v.coeffs.size(); ++i)
        if (!is_zero(v.coeffs[i])) return false;
    return in_level(v.coeffs[0], level - 1, target);
}

inline const ElemNode& restrict_to(const ElemNode& v, size_t level, size_t target) {
    if (level == target) return v;
    return restrict_to(v.coeffs[0], level - 1, target);
}

inline ElemNode add(const ElemNode& a, const ElemNode& b) {
    if (a.coeffs.empty()) return ElemNode{a.base + b.base, {}};
    ElemNode n;
    n.coeffs.reserve(a.coeffs.size());
    for (size_t i = 0; i < a.coeffs.size(); ++i) n.coeffs.push_back(add(a.coeffs[i], b.coeffs[i]));
    return n;
}

inline ElemNode neg(const ElemNode& a) {
    if (a.coeffs.empty()) return ElemNode{-a.base, {}};
    ElemNode n;
    n.coeffs.reserve(a.coeffs.size());
    for (const auto& c : a.coeffs) n.coeffs.push_back(neg(c));
    return n;
}

inline ElemNode sub(const ElemNode& a, const ElemNode& b) { return add(a, neg(b)); }

inline ElemNode mul(const TowerData& T, size_t level, const ElemNode& a, const ElemNode& b) {
    if (level == 0) return ElemNode{a.base * b.base, {}};
    const size_t d = size_t(T.gens[level - 1].deg);
    std::vector<ElemNode> prod(2 * d - 1, zero(T, level - 1));
    for (size_t i = 0; i < d; ++i) {
        if (is_zero(a.coeffs[i])) continue;
        for (size_t j = 0; j < d; ++j) {
            if (is_zero(b.coeffs[j])) continue;
            prod[i + j] = add(prod[i + j], mul(T, level - 1, a.coeffs[i], b.coeffs[j]));
        }
    }
    // reduce modulo the minimal polynomial: a^d = -tail
    const auto& tail = T.gens[level - 1].tail;
    for (size_t i = prod.size(); i-- > d;) {
        if (is_zero(prod[i])) continue;
        for (size_t j = 0; j < d; ++j)
            prod[i - d + j] = sub(prod[i - d + j], mul(T, level - 1, prod[i], tail[j]));
        prod[i] = zero(T, level - 1);
    }
    prod.resize(d);
    ElemNode n;
    n.coeffs = std::move(prod);
    return n;
}

struct LevelField; // arithmetic context over a fixed tower level, defined below

inline ElemNode inv(const TowerData& T, size_t level, const ElemNode& a);

struct LevelField {
    const TowerData* T;
    size_t level;
    using Elem = ElemNode;
    ElemNode zero() const { return towernode::zero(*T, level); }
    ElemNode one() const { return towernode::from_ratfunc(*T, level, RatFunc::one(T->tvars)); }
    ElemNode add(const ElemNode& a, const ElemNode& b) const { return towernode::add(a, b); }
    ElemNode sub(const ElemNode& a, const ElemNode& b) const { return towernode::sub(a, b); }
    ElemNode neg(const ElemNode& a) const { return towernode::neg(a); }
    ElemNode mul(const ElemNode& a, const ElemNode& b) const { return towernode::mul(*T, level, a, b); }
    ElemNode inv(const ElemNode& a) const { return towernode::inv(*T, level, a); }
    bool is_zero(const ElemNode& a) const { return towernode::is_zero(a); }
    bool eq(const ElemNode& a, const ElemNode& b) const { return struct_eq(a, b); }
};

inline ElemNode inv(const TowerData& T, size_t level, const ElemNode& a) {
    if (is_zero(a)) throw std::domain_error("tower element: inverse of zero");
    if (level == 0) return ElemNode{a.base.inv(), {}};
    // extended Euclid of a (as a polynomial in the top generator) against the minimal polynomial
    LevelField K{&T, level - 1};
    UPoly<LevelField> va = a.coeffs;
    upoly_trim(K, va);
    const auto& gen = T.gens[level - 1];
    UPoly<LevelField> m = gen.tail;
    m.push_back(K.one());
    auto [g, u, v] = upoly_ext_gcd(K, va, m);
    if (upoly_deg(g) != 0)
        throw InternalError("tower inverse: minimal polynomial not coprime with element (reducible tower?)");
    // u * a == 1 (mod m) after scaling by g^{-1}; ext gcd already returns g monic = 1
    UPoly<LevelField> res = upoly_mod(K, u, m);
    ElemNode n = zero(T, level);
    for (size_t i = 0; i < res.size(); ++i) n.coeffs[i] = res[i];
    return n;
}

inline void flatten(const TowerData& T, size_t level, const ElemNode& v, std::vector<RatFunc>& out) {
    if (level == 0) {
        out.push_back(v.base);
        return;
    }
    for (const auto& c : v.coeffs) flatten(T, level - 1, c, out);
}

inline ElemNode unflatten(const TowerData& T, size_t level, const std::vector<RatFunc>& in, size_t& pos) {
    if (level == 0) return ElemNode{in[pos++], {}};
    ElemNode n;
    n.coeffs.reserve(size_t(T.gens[level - 1].deg));
    for (int i = 0; i < T.gens[level - 1].deg; ++i) n.coeffs.push_back(unflatten(T, level - 1, in, pos));
    return n;
}

} // namespace towernode

class FieldElement;

/**
 * Immutable tower description shared by its elements.
 * The K-level is gens[0..base_mark); the full tower defines L.
 */
class FieldTower {
public:
    FieldTower() = default;

    static FieldTower rationals(std::vector<std::string> tvars, size_t base_mark = 0) {
        auto d = std::make_shared<TowerData>();
        d->tvars = std::move(tvars);
        d->base_mark = base_mark;
        return FieldTower(std::move(d));
    }

    /// append an algebraic generator; `tail` holds the non-leading minimal
    /// polynomial coefficients as elements of the current tower
    FieldTower extend(const std::string& name, const std::vector<FieldElement>& tail) const;

    FieldTower with_base_mark(size_t mark) const {
        auto d = std::make_shared<TowerData>(*data_);
        if (mark > d->gens.size()) throw std::invalid_argument("with_base_mark: mark out of range");
        d->base_mark = mark;
        return FieldTower(std::move(d));
    }

    const TowerData& data() const { return *data_; }
    const std::shared_ptr<const TowerData>& ptr() const { return data_; }
    const std::vector<std::string>& tvars() const { return data_->tvars; }
    size_t gen_count() const { return data_->gens.size(); }
    size_t base_mark() const { return data_->base_mark; }
    size_t r() const { return data_->tvars.size(); }
    const TowerGen& gen_info(size_t i) const { return data_->gens[i]; }

    bool compatible(const FieldTower& o) const {
        if (data_ == o.data_) return true;
        if (data_->tvars != o.data_->tvars || data_->gens.size() != o.data_->gens.size()) return false;
        for (size_t i = 0; i < data_->gens.size(); ++i) {
            const auto& a = data_->gens[i];
            const auto& b = o.data_->gens[i];
            if (a.name != b.name || a.deg != b.deg || a.tail.size() != b.tail.size()) return false;
            for (size_t j = 0; j < a.tail.size(); ++j)
                if (!towernode::struct_eq(a.tail[j], b.tail[j])) return false;
        }
        return true;
    }

    /// true when `o` is a prefix of this tower (same transcendentals, leading generators)
    bool extends(const FieldTower& o) const {
        if (data_->tvars != o.data_->tvars || o.data_->gens.size() > data_->gens.size()) return false;
        for (size_t i = 0; i < o.data_->gens.size(); ++i) {
            const auto& a = data_->gens[i];
            const auto& b = o.data_->gens[i];
            if (a.name != b.name || a.deg != b.deg || a.tail.size() != b.tail.size()) return false;
            for (size_t j = 0; j < a.tail.size(); ++j)
                if (!towernode::struct_eq(a.tail[j], b.tail[j])) return false;
        }
        return true;
    }

    size_t dim_over_rationals() const {
        size_t n = 1;
        for (const auto& g : data_->gens) n *= size_t(g.deg);
        return n;
    }
    size_t degree_over_base() const { // [L : K]
        size_t n = 1;
        for (size_t i = data_->base_mark; i < data_->gens.size(); ++i) n *= size_t(data_->gens[i].deg);
        return n;
    }
    size_t dim_base_over_rationals() const {
        size_t n = 1;
        for (size_t i = 0; i < data_->base_mark; ++i) n *= size_t(data_->gens[i].deg);
        return n;
    }
    bool trivial_extension() const { return data_->base_mark == data_->gens.size(); }

    // element factories are defined after FieldElement
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rat(const Rat& q) const;
    FieldElement from_ratfunc(const RatFunc& rf) const;
    FieldElement t_var(size_t j) const;
    FieldElement gen(size_t i) const;
    FieldElement adopt(const FieldElement& x) const;
    FieldElement unflatten(const std::vector<RatFunc>& coords) const;
    FieldElement basis_element(size_t flat_index) const;

    /// exponent tuple of the flat basis monomial with the given index
    std::vector<int> basis_exponents(size_t flat_index) const {
        std::vector<int> e(gen_count(), 0);
        for (size_t i = 0; i < gen_count(); ++i) {
            e[i] = int(flat_index % size_t(data_->gens[i].deg));
            flat_index /= size_t(data_->gens[i].deg);
        }
        return e;
    }

    /// minimal polynomial of generator i, coefficients lifted to the full tower
    std::vector<FieldElement> gen_min_poly(size_t i) const;

private:
    explicit FieldTower(std::shared_ptr<const TowerData> d) : data_(std::move(d)) {}
    std::shared_ptr<const TowerData> data_;

    friend class FieldElement;
};

/**
 * An element of the top field of a tower; fully reduced nested coordinates,
 * equality is coordinate equality.
 */
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldTower T, ElemNode v) : T_(std::move(T)), v_(std::move(v)) {}

    const FieldTower& tower() const { return T_; }
    const ElemNode& node() const { return v_; }

    bool is_zero() const { return towernode::is_zero(v_); }
    bool is_one() const {
        return towernode::struct_eq(
            v_, towernode::from_ratfunc(T_.data(), T_.gen_count(), RatFunc::one(T_.tvars())));
    }
    bool in_level(size_t target) const { return towernode::in_level(v_, T_.gen_count(), target); }
    bool in_base_field() const { return in_level(T_.base_mark()); }
    bool is_ratfunc() const { return in_level(0); }
    RatFunc ratfunc_value() const {
        assert(is_ratfunc());
        return towernode::restrict_to(v_, T_.gen_count(), 0).base;
    }
    bool is_rational() const { return is_ratfunc() && ratfunc_value().is_rational(); }
    Rat rational_value() const { return ratfunc_value().rational_value(); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return FieldElement(a.T_, towernode::add(a.v_, b.v_));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return FieldElement(a.T_, towernode::sub(a.v_, b.v_));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return FieldElement(a.T_, towernode::mul(a.T_.data(), a.T_.gen_count(), a.v_, b.v_));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }
    FieldElement operator-() const { return FieldElement(T_, towernode::neg(v_)); }

    FieldElement inv() const {
        return FieldElement(T_, towernode::inv(T_.data(), T_.gen_count(), v_));
    }

    FieldElement pow(long e) const {
        if (e < 0) return inv().pow(-e);
        FieldElement r = T_.one();
        FieldElement b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    bool operator==(const FieldElement& o) const {
        if (!T_.compatible(o.T_)) return false;
        return towernode::struct_eq(v_, o.v_);
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// flat coordinates over Q(t_1..t_r); index = sum e_i * prod_{j<i} deg_j
    std::vector<RatFunc> flatten() const {
        std::vector<RatFunc> out;
        out.reserve(T_.dim_over_rationals());
        towernode::flatten(T_.data(), T_.gen_count(), v_, out);
        return out;
    }

    /// coordinates over the subfield at `level`, entries lifted back to full elements
    std::vector<FieldElement> flatten_over(size_t level) const {
        std::vector<FieldElement> out;
        collect_over(v_, T_.gen_count(), level, out);
        return out;
    }

    int cmp(const FieldElement& o) const {
        std::vector<RatFunc> a = flatten(), b = o.flatten();
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = 0; i < a.size(); ++i) {
            int c = a[i].cmp(b[i]);
            if (c != 0) return c;
        }
        return 0;
    }

    std::string to_string() const {
        std::vector<RatFunc> coords = flatten();
        std::string out;
        for (size_t idx = 0; idx < coords.size(); ++idx) {
            if (coords[idx].is_zero()) continue;
            std::string mono;
            std::vector<int> e = T_.basis_exponents(idx);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += T_.gen_info(i).name;
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string cs = coords[idx].to_string();
            bool atomic = cs.find_first_of("+-/") == std::string::npos ||
                          (cs.size() > 1 && cs[0] == '-' &&
                           cs.find_first_of("+-/", 1) == std::string::npos);
            std::string term;
            if (mono.empty()) {
                term = cs;
            } else if (cs == "1") {
                term = mono;
            } else if (cs == "-1") {
                term = "-" + mono;
            } else {
                term = (atomic ? cs : "(" + cs + ")") + "*" + mono;
            }
            if (out.empty()) {
                out = term;
            } else if (!term.empty() && term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void check(const FieldElement& o) const {
        if (!T_.compatible(o.T_))
            throw std::invalid_argument("FieldElement: elements of different towers");
    }

    void collect_over(const ElemNode& v, size_t level, size_t target,
                      std::vector<FieldElement>& out) const {
        if (level == target) {
            out.emplace_back(T_, towernode::lift(T_.data(), level, T_.gen_count(), v));
            return;
        }
        for (const auto& c : v.coeffs) collect_over(c, level - 1, target, out);
    }

    FieldTower T_;
    ElemNode v_;
};

// ---- FieldTower factories ----

inline FieldElement FieldTower::zero() const {
    return FieldElement(*this, towernode::zero(*data_, gen_count()));
}
inline FieldElement FieldTower::one() const { return from_rat(Rat(1)); }
inline FieldElement FieldTower::from_rat(const Rat& q) const {
    return from_ratfunc(RatFunc::from_rat(data_->tvars, q));
}
inline FieldElement FieldTower::from_ratfunc(const RatFunc& rf) const {
    return FieldElement(*this, towernode::from_ratfunc(*data_, gen_count(), rf));
}
inline FieldElement FieldTower::t_var(size_t j) const {
    return from_ratfunc(RatFunc::var(data_->tvars, j));
}
inline FieldElement FieldTower::gen(size_t i) const {
    ElemNode at_level = towernode::zero(*data_, i + 1);
    at_level.coeffs[1] = towernode::from_ratfunc(*data_, i, RatFunc::one(data_->tvars));
    return FieldElement(*this, towernode::lift(*data_, i + 1, gen_count(), at_level));
}
inline FieldElement FieldTower::adopt(const FieldElement& x) const {
    if (!extends(x.tower()))
        throw std::invalid_argument("FieldTower::adopt: element tower is not a prefix");
    return FieldElement(*this,
                        towernode::lift(*data_, x.tower().gen_count(), gen_count(), x.node()));
}
inline FieldElement FieldTower::unflatten(const std::vector<RatFunc>& coords) const {
    if (coords.size() != dim_over_rationals())
        throw std::invalid_argument("FieldTower::unflatten: wrong coordinate count");
    size_t pos = 0;
    return FieldElement(*this, towernode::unflatten(*data_, gen_count(), coords, pos));
}
inline FieldElement FieldTower::basis_element(size_t flat_index) const {
    std::vector<RatFunc> coords(dim_over_rationals(), RatFunc::zero(data_->tvars));
    coords[flat_index] = RatFunc::one(data_->tvars);
    return unflatten(coords);
}
inline std::vector<FieldElement> FieldTower::gen_min_poly(size_t i) const {
    const TowerGen& g = data_->gens[i];
    std::vector<FieldElement> m;
    m.reserve(size_t(g.deg) + 1);
    for (const auto& c : g.tail)
        m.emplace_back(*this, towernode::lift(*data_, i, gen_count(), c));
    m.push_back(one());
    return m;
}

inline FieldTower FieldTower::extend(const std::string& name,
                                     const std::vector<FieldElement>& tail) const {
    if (tail.empty()) throw std::invalid_argument("FieldTower::extend: degree must be at least 1");
    for (const auto& n : data_->tvars)
        if (n == name) throw InputError("duplicate symbol '" + name + "' in tower");
    for (const auto& g : data_->gens)
        if (g.name == name) throw InputError("duplicate symbol '" + name + "' in tower");
    auto d = std::make_shared<TowerData>(*data_);
    TowerGen g;
    g.name = name;
    g.deg = int(tail.size());
    for (const auto& c : tail) {
        if (!c.tower().compatible(*this))
            throw std::invalid_argument("FieldTower::extend: tail from a different tower");
        g.tail.push_back(c.node());
    }
    d->gens.push_back(std::move(g));
    return FieldTower(std::move(d));
}

/// field context over the full tower, for the generic polynomial and matrix code
struct TowerField {
    FieldTower T;
    using Elem = FieldElement;
    FieldElement zero() const { return T.zero(); }
    FieldElement one() const { return T.one(); }
    FieldElement add(const FieldElement& a, const FieldElement& b) const { return a + b; }
    FieldElement sub(const FieldElement& a, const FieldElement& b) const { return a - b; }
    FieldElement neg(const FieldElement& a) const { return -a; }
    FieldElement mul(const FieldElement& a, const FieldElement& b) const { return a * b; }
    FieldElement inv(const FieldElement& a) const { return a.inv(); }
    bool is_zero(const FieldElement& a) const { return a.is_zero(); }
    bool eq(const FieldElement& a, const FieldElement& b) const { return a == b; }
};

/// substitute images for every algebraic generator (the t-part is fixed)
inline FieldElement substitute_gens(const FieldElement& x, const std::vector<FieldElement>& images) {
    const FieldTower& T = x.tower();
    if (images.size() != T.gen_count())
        throw std::invalid_argument("substitute_gens: one image per generator required");
    // evaluate the nested representation by Horner at full level
    auto rec = [&](auto&& self, const ElemNode& v, size_t level) -> FieldElement {
        if (level == 0) return T.from_ratfunc(v.base);
        FieldElement acc = T.zero();
        const FieldElement& img = images[level - 1];
        for (size_t i = v.coeffs.size(); i-- > 0;)
            acc = acc * img + self(self, v.coeffs[i], level - 1);
        return acc;
    };
    return rec(rec, x.node(), T.gen_count());
}

/**
 * Monic minimal polynomial of x over the subfield at `level` (level =
 * base_mark gives the minimal polynomial over K); computed from the first
 * linear dependence among the powers of x in the subfield basis.
 */
inline std::vector<FieldElement> min_poly_over(const FieldElement& x, size_t level) {
    const FieldTower& T = x.tower();
    size_t n = 1;
    for (size_t i = level; i < T.gen_count(); ++i) n *= size_t(T.gen_info(i).deg);
    TowerField K{T};
    std::vector<std::vector<FieldElement>> powers; // flattened coordinates over level
    FieldElement p = T.one();
    powers.push_back(p.flatten_over(level));
    for (size_t j = 1; j <= n; ++j) {
        p = p * x;
        powers.push_back(p.flatten_over(level));
        // solve: x^j = sum c_i x^i for i < j
        Mat<TowerField> A(n, std::vector<FieldElement>(j, T.zero()));
        for (size_t col = 0; col < j; ++col)
            for (size_t row = 0; row < n; ++row) A[row][col] = powers[col][row];
        auto sol = solve(K, A, powers[j]);
        if (sol) {
            std::vector<FieldElement> m;
            m.reserve(j + 1);
            for (size_t i = 0; i < j; ++i) m.push_back(-(*sol)[i]);
            m.push_back(T.one());
            return m;
        }
    }
    throw InternalError("min_poly_over: no dependence found within the field dimension");
}

/// minimal polynomial over K rendered as a univariate MultiPoly when its
/// coefficients are rational (they always are when K = Q)
inline MultiPoly min_poly_as_multipoly(const std::vector<FieldElement>& m, const std::string& varname) {
    std::vector<std::string> vars{varname};
    MultiPoly f = MultiPoly::zero(vars);
    for (size_t i = 0; i < m.size(); ++i) {
        if (!m[i].is_rational())
            throw std::invalid_argument("min_poly_as_multipoly: non-rational coefficient");
        Monomial mono{int(i)};
        f.add_term(mono, m[i].rational_value());
    }
    return f;
}

} // namespace galmodel

#endif
