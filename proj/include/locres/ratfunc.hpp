#pragma once

#include "locres/io.hpp"
#include "locres/polygcd.hpp"

namespace locres {

// Rational function in the problem parameters, kept canonical: numerator and
// denominator coprime, denominator monic in the parameter-ring order, zero is
// 0/1. Inverting (or dividing by) a value whose numerator is a nonconstant
// parameter polynomial records that polynomial in the parameter ring's
// genericity log: the computation is valid wherever none of the logged
// polynomials vanish.
class RatFunc {
  public:
    using P = Polynomial<Rational>;

    RatFunc() : num_(), den_(P::constant(nullptr, Rational(1))) {}
    RatFunc(long n) : num_(P::constant(nullptr, Rational(n))), den_(P::constant(nullptr, Rational(1))) {}
    explicit RatFunc(const Rational& r)
        : num_(P::constant(nullptr, r)), den_(P::constant(nullptr, Rational(1))) {}
    explicit RatFunc(P n) : num_(std::move(n)), den_(P::constant(num_.ring(), Rational(1))) {}
    RatFunc(P n, P d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw DivisionByZero();
        normalize();
    }

    const P& num() const { return num_; }
    const P& den() const { return den_; }
    RingPtr ring() const { return num_.ring() ? num_.ring() : den_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const { return den_.nterms() == 1 && den_.lc().is_one() && den_.lm().is_zero(); }
    bool is_constant() const {
        return den_is_one() && (num_.is_zero() || (num_.nterms() == 1 && num_.lm().is_zero()));
    }
    // only valid when is_constant()
    Rational rational_value() const { return num_.constant_term(); }

    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero();
        log_if_assuming();
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize();
        return r;
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        RatFunc r;
        if (a.den_is_one() && b.den_is_one()) {
            r.num_ = a.num_ + b.num_;
            r.den_ = P::constant(r.num_.ring(), Rational(1));
            return r;
        }
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        RatFunc r;
        r.num_ = a.num_ * b.num_;
        if (a.den_is_one() && b.den_is_one()) {
            r.den_ = P::constant(r.num_.ring(), Rational(1));
            if (r.num_.is_zero()) r.num_ = P(r.num_.ring());
            return r;
        }
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        // canonical forms, but a bare constant may live in a null ring
        if (a.is_constant() || b.is_constant())
            return a.is_constant() && b.is_constant() &&
                   a.num_.constant_term() == b.num_.constant_term();
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const {
        if (den_is_one()) return format_poly(num_);
        return "(" + format_poly(num_) + ")/(" + format_poly(den_) + ")";
    }

  private:
    void log_if_assuming() const {
        bool nonconst = num_.nterms() > 1 || (num_.nterms() == 1 && !num_.lm().is_zero());
        if (nonconst && num_.ring())
            num_.ring()->glog.record(format_poly(primitive_scaled(num_)));
    }

    void normalize() {
        if (num_.is_zero()) {
            num_ = P(ring());
            den_ = P::constant(ring(), Rational(1));
            return;
        }
        P g = poly_gcd(num_, den_);
        bool g_trivial = g.nterms() == 1 && g.lm().is_zero() && g.lc().is_one();
        if (!g_trivial) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        Rational lc = den_.lc();
        if (!lc.is_one()) {
            Rational i = lc.inv();
            num_ = num_.scaled(i);
            den_ = den_.scaled(i);
        }
        // num and den share a ring once either side has one
        num_ = lift_constant(std::move(num_), den_.ring());
        den_ = lift_constant(std::move(den_), num_.ring());
    }

    P num_, den_;
};

template <>
struct FieldTraits<RatFunc> {
    static constexpr bool parametric = true;
    static RatFunc from_rational(const Rational& r) { return RatFunc(r); }
    static RatFunc parameter(const RingPtr& param_ring, int idx) {
        return RatFunc(Polynomial<Rational>::variable(param_ring, idx));
    }
    static std::string to_string(const RatFunc& k) { return k.str(); }
};

// Integer-primitive representative: clears coefficient denominators, strips
// the common parameter-polynomial content and the rational content, and makes
// the leading coefficient's leading rational positive. Pure rescaling by a
// nonzero rational function; never touches the genericity log.
inline Polynomial<RatFunc> primitive_scaled(const Polynomial<RatFunc>& p) {
    using PP = Polynomial<Rational>;
    if (p.is_zero()) return p;
    RingPtr pring = nullptr;
    for (const auto& t : p.terms())
        if (t.c.ring()) pring = t.c.ring();
    PP dlcm = PP::constant(pring, Rational(1));
    for (const auto& t : p.terms()) dlcm = poly_lcm(dlcm, t.c.den());
    std::vector<Term<RatFunc>> ts;
    PP content(pring);
    for (const auto& t : p.terms()) {
        PP n = t.c.num() * exact_divide(dlcm, t.c.den());
        content = poly_gcd(content, n);
        ts.push_back({t.m, RatFunc(std::move(n))});
    }
    bool content_trivial =
        content.nterms() == 1 && content.lm().is_zero() && content.lc().is_one();
    mpz_class L = 1, G = 0;
    for (auto& t : ts) {
        PP n = content_trivial ? t.c.num() : exact_divide(t.c.num(), content);
        for (const auto& u : n.terms()) {
            L = lcm(L, u.c.den());
            G = gcd(G, u.c.num());
        }
        t.c = RatFunc(std::move(n));
    }
    Rational scale(L, G == 0 ? mpz_class(1) : G);
    for (auto& t : ts) t.c = RatFunc(t.c.num().scaled(scale));
    Polynomial<RatFunc> out = Polynomial<RatFunc>::from_terms(p.ring(), std::move(ts));
    if (out.lc().num().lc().sign() < 0) out = out.scaled(RatFunc(-1));
    return out;
}

}  // namespace locres
