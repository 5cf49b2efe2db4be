#pragma once

#include "locres/polynomial.hpp"

namespace locres {

// Unique integer-primitive representative with positive leading coefficient:
// all coefficients integral with gcd 1.
inline Polynomial<Rational> primitive_scaled(const Polynomial<Rational>& p) {
    if (p.is_zero()) return p;
    mpz_class L = 1;
    for (const auto& t : p.terms()) L = lcm(L, t.c.den());
    mpz_class G = 0;
    for (const auto& t : p.terms()) {
        mpz_class n = t.c.num() * (L / t.c.den());
        G = gcd(G, n);
    }
    Rational scale(L, G);
    if (p.lc().sign() < 0) scale = -scale;
    return p.scaled(scale);
}

namespace detail {

inline Polynomial<Rational> v_lead_coeff(const Polynomial<Rational>& p, int v, int dv) {
    std::vector<Term<Rational>> ts;
    for (const auto& t : p.terms()) {
        if (t.m[v] != dv) continue;
        Term<Rational> u = t;
        u.m[v] = 0;
        ts.push_back(std::move(u));
    }
    return Polynomial<Rational>::from_terms(p.ring(), std::move(ts));
}

// pseudo-remainder in variable v; associate of the true remainder over the
// fraction field in the other variables
inline Polynomial<Rational> pseudo_rem(Polynomial<Rational> a, const Polynomial<Rational>& b, int v) {
    int db = b.deg_in(v);
    Polynomial<Rational> lb = v_lead_coeff(b, v, db);
    while (!a.is_zero() && a.deg_in(v) >= db) {
        int da = a.deg_in(v);
        Polynomial<Rational> la = v_lead_coeff(a, v, da);
        ExpVec shift = ExpVec::zero(a.nvars());
        shift[v] = da - db;
        a = a * lb - b * la.shifted(shift, Rational(1));
    }
    return a;
}

}  // namespace detail

// gcd in Q[vars], up to rational factors; returns the integer-primitive
// positive-lead representative (so gcd of nonzero constants is 1).
inline Polynomial<Rational> poly_gcd(Polynomial<Rational> a, Polynomial<Rational> b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return primitive_scaled(b);
    if (b.is_zero()) return primitive_scaled(a);
    a = lift_constant(std::move(a), b.ring());
    b = lift_constant(std::move(b), a.ring());
    a = primitive_scaled(a);
    b = primitive_scaled(b);
    const RingPtr& ring = a.ring() ? a.ring() : b.ring();
    auto one = Polynomial<Rational>::constant(ring, Rational(1));
    int n = std::max(a.nvars(), b.nvars());
    int v = -1;
    for (int i = 0; i < n && v < 0; ++i)
        if (a.deg_in(i) > 0 || b.deg_in(i) > 0) v = i;
    if (v < 0) return one;  // both constant

    // polynomial content w.r.t. v: gcd of the dense v-coefficients
    auto content_v = [&](const Polynomial<Rational>& p) {
        Polynomial<Rational> c(p.ring());
        for (int k = 0; k <= p.deg_in(v); ++k) {
            std::vector<Term<Rational>> ts;
            for (const auto& t : p.terms())
                if (t.m[v] == k) {
                    Term<Rational> u = t;
                    u.m[v] = 0;
                    ts.push_back(std::move(u));
                }
            if (ts.empty()) continue;
            c = poly_gcd(c, Polynomial<Rational>::from_terms(p.ring(), std::move(ts)));
            if (c == one) break;
        }
        return c;
    };

    Polynomial<Rational> ca = content_v(a), cb = content_v(b);
    Polynomial<Rational> r0 = primitive_scaled(exact_divide(a, ca));
    Polynomial<Rational> r1 = primitive_scaled(exact_divide(b, cb));
    if (r0.deg_in(v) < r1.deg_in(v)) std::swap(r0, r1);
    while (!r1.is_zero() && r1.deg_in(v) > 0) {
        Polynomial<Rational> r2 = detail::pseudo_rem(r0, r1, v);
        if (!r2.is_zero()) {
            Polynomial<Rational> c2 = content_v(r2);
            r2 = primitive_scaled(exact_divide(r2, c2));
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    Polynomial<Rational> gpp = r1.is_zero() ? r0 : one;  // v-degree 0 remainder kills the v-part
    if (gpp.deg_in(v) == 0) gpp = one;
    return primitive_scaled(poly_gcd(ca, cb) * gpp);
}

inline Polynomial<Rational> poly_lcm(const Polynomial<Rational>& a, const Polynomial<Rational>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<Rational>(a.ring() ? a.ring() : b.ring());
    return primitive_scaled(exact_divide(a * b, poly_gcd(a, b)));
}

}  // namespace locres
