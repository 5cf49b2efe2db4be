#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <string_view>

#include "locres/errors.hpp"

namespace locres {

// Exact rational number. Always canonical: lowest terms, denominator > 0.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw DivisionByZero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DivisionByZero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p" or "p/q" with optional leading '-', arbitrary precision.
    static Rational parse(std::string_view s);

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero();
        mpq_class r = 1 / v_;
        return Rational(r);
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && t[0] == '-') t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string text(s);
    auto slash = text.find('/');
    std::string sn = text.substr(0, slash);
    std::string sd = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_int(sn) || !is_int(sd)) throw ParseError("bad rational literal '" + text + "'", 0);
    mpz_class n(sn), d(sd);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'", 0);
    return Rational(n, d);
}

template <class K>
K field_pow(const K& base, unsigned long e) {
    K acc(1);
    K b = base;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

// Per-field glue used by parsing, printing and JSON code. Specialized for
// every coefficient field.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool parametric = false;
    static Rational from_rational(const Rational& r) { return r; }
    static std::string to_string(const Rational& k) { return k.str(); }
};

}  // namespace locres
