/**
 * @file ratfunc.hh
 * @brief Rational functions in the transcendentals t_1..t_r over Q,
 *        kept in lowest terms with monic (grevlex) denominators.
 */
#ifndef GALMODEL_RATFUNC_HH
#define GALMODEL_RATFUNC_HH

#include <galmodel/polygcd.hh>

namespace galmodel {

class RatFunc {
public:
    RatFunc() : num_(MultiPoly::zero({})), den_(MultiPoly::constant({}, 1)) {}

    RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.vars() != den_.vars()) throw std::invalid_argument("RatFunc: mixed variable lists");
        normalize();
    }

    static RatFunc zero(const std::vector<std::string>& vars) {
        return RatFunc(MultiPoly::zero(vars), MultiPoly::constant(vars, 1));
    }
    static RatFunc one(const std::vector<std::string>& vars) {
        return RatFunc(MultiPoly::constant(vars, 1), MultiPoly::constant(vars, 1));
    }
    static RatFunc from_poly(const MultiPoly& p) {
        return RatFunc(p, MultiPoly::constant(p.vars(), 1));
    }
    static RatFunc from_rat(const std::vector<std::string>& vars, const Rat& q) {
        return RatFunc(MultiPoly::constant(vars, q), MultiPoly::constant(vars, 1));
    }
    static RatFunc var(const std::vector<std::string>& vars, size_t i) {
        return from_poly(MultiPoly::variable(vars, i));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rat rational_value() const {
        assert(is_rational());
        if (num_.is_zero()) return Rat(0);
        return num_.constant_value() / den_.constant_value();
    }

    RatFunc operator-() const { return raw(-num_, den_); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    int cmp(const RatFunc& o) const {
        int c = den_.cmp(o.den_);
        if (c != 0) return c;
        return num_.cmp(o.num_);
    }

    std::string to_string() const {
        if (is_polynomial()) {
            Rat d = den_.constant_value();
            return (num_ / d).to_string();
        }
        std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
        std::string d = den_.term_count() > 1 ? "(" + den_.to_string() + ")" : den_.to_string();
        return n + "/" + d;
    }

private:
    static RatFunc raw(MultiPoly n, MultiPoly d) {
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r; // already canonical by construction
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(num_.vars(), 1);
            return;
        }
        if (!den_.is_constant()) {
            MultiPoly g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = exact_divide(num_, g);
                den_ = exact_divide(den_, g);
            }
        }
        // monic denominator under grevlex
        auto [m, c] = den_.leading_term(MonomialOrder::grevlex(den_.nvars()));
        if (c != 1) {
            num_ = num_ / c;
            den_ = den_ / c;
        }
    }

    MultiPoly num_, den_;
};

struct RatFuncField {
    std::vector<std::string> tvars;
    using Elem = RatFunc;
    RatFunc zero() const { return RatFunc::zero(tvars); }
    RatFunc one() const { return RatFunc::one(tvars); }
    RatFunc add(const RatFunc& a, const RatFunc& b) const { return a + b; }
    RatFunc sub(const RatFunc& a, const RatFunc& b) const { return a - b; }
    RatFunc neg(const RatFunc& a) const { return -a; }
    RatFunc mul(const RatFunc& a, const RatFunc& b) const { return a * b; }
    RatFunc inv(const RatFunc& a) const { return a.inv(); }
    bool is_zero(const RatFunc& a) const { return a.is_zero(); }
    bool eq(const RatFunc& a, const RatFunc& b) const { return a == b; }
};

} // namespace galmodel

#endif
