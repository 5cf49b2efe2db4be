#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "locres/rational.hpp"
#include "locres/ring.hpp"

namespace locres {

template <class K>
struct Term {
    ExpVec m;
    K c;
};

// Sparse multivariate polynomial over the field K. Terms are kept strictly
// descending in the ring's monomial order, with nonzero coefficients.
// A null ring is allowed and means "polynomial in zero variables": used for
// bare constants before they meet a real ring.
template <class K>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr r) : ring_(std::move(r)) {}

    static Polynomial zero(RingPtr r) { return Polynomial(std::move(r)); }
    static Polynomial constant(RingPtr r, K c) {
        Polynomial p(std::move(r));
        if (!(c == K(0))) p.t_.push_back({ExpVec::zero(p.nvars()), std::move(c)});
        return p;
    }
    static Polynomial monomial(RingPtr r, ExpVec m, K c) {
        Polynomial p(std::move(r));
        p.check_arity(m);
        if (!(c == K(0))) p.t_.push_back({std::move(m), std::move(c)});
        return p;
    }
    static Polynomial variable(RingPtr r, int i) {
        int n = r->nvars();
        return monomial(std::move(r), ExpVec::unit(n, i), K(1));
    }
    static Polynomial from_terms(RingPtr r, std::vector<Term<K>> ts) {
        Polynomial p(std::move(r));
        for (auto& t : ts) p.check_arity(t.m);
        p.t_ = std::move(ts);
        p.normalize();
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    int nvars() const { return ring_ ? ring_->nvars() : 0; }
    bool is_zero() const { return t_.empty(); }
    int nterms() const { return (int)t_.size(); }
    const std::vector<Term<K>>& terms() const { return t_; }

    const ExpVec& lm() const { return lt().m; }
    const K& lc() const { return lt().c; }
    const Term<K>& lt() const {
        if (t_.empty()) throw Error("leading term of zero polynomial");
        return t_.front();
    }

    K coeff(const ExpVec& m) const {
        for (const auto& t : t_)
            if (t.m == m) return t.c;
        return K(0);
    }
    K constant_term() const {
        if (t_.empty()) return K(0);
        const Term<K>& last = t_.back();
        return last.m.is_zero() ? last.c : K(0);
    }

    long total_degree() const {
        long d = 0;
        for (const auto& t : t_) d = std::max(d, t.m.total_degree());
        return d;
    }
    int deg_in(int i) const {
        int d = -1;
        for (const auto& t : t_) d = std::max(d, (int)t.m[i]);
        return d;  // -1 for the zero polynomial
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.t_) t.c = -t.c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.require_same(b);
        Polynomial r(a.ring_ ? a.ring_ : b.ring_);
        r.t_ = merge(a, b, false);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.require_same(b);
        Polynomial r(a.ring_ ? a.ring_ : b.ring_);
        r.t_ = merge(a, b, true);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same(b);
        Polynomial r(a.ring_ ? a.ring_ : b.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        // a null-ring operand is a bare constant; keep the arity of the other side
        if (!a.ring_ && r.ring_) return b.scaled(a.t_[0].c);
        if (!b.ring_ && r.ring_) return a.scaled(b.t_[0].c);
        auto cmp = [&r](const ExpVec& x, const ExpVec& y) {
            return r.ring_ ? r.ring_->order.greater(x, y) : false;
        };
        std::map<ExpVec, K, decltype(cmp)> acc(cmp);
        for (const auto& ta : a.t_) {
            for (const auto& tb : b.t_) {
                ExpVec m = ta.m + tb.m;
                K c = ta.c * tb.c;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else {
                    it->second += c;
                    if (it->second == K(0)) acc.erase(it);
                }
            }
        }
        r.t_.reserve(acc.size());
        for (auto& [m, c] : acc) r.t_.push_back({m, c});
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const K& c) const {
        Polynomial r(ring_);
        if (c == K(0)) return r;
        r.t_ = t_;
        for (auto& t : r.t_) t.c = t.c * c;
        return r;
    }
    // multiply by the single term c * z^m
    Polynomial shifted(const ExpVec& m, const K& c) const {
        Polynomial r(ring_);
        if (c == K(0)) return r;
        r.t_ = t_;
        for (auto& t : r.t_) {
            t.m = t.m + m;
            t.c = t.c * c;
        }
        return r;
    }

    Polynomial pow(unsigned long e) const {
        Polynomial acc = constant(ring_, K(1));
        Polynomial b = *this;
        while (e) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    Polynomial derivative(int i) const {
        Polynomial r(ring_);
        for (const auto& t : t_) {
            if (t.m[i] == 0) continue;
            ExpVec m = t.m;
            K c = t.c * K(m[i]);
            m[i] -= 1;
            r.t_.push_back({std::move(m), std::move(c)});
        }
        return r;  // order is translation-invariant, so terms stay sorted
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t i = 0; i < a.t_.size(); ++i)
            if (!(a.t_[i].m == b.t_[i].m) || !(a.t_[i].c == b.t_[i].c)) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    void check_arity(const ExpVec& m) const {
        if (m.size() != nvars()) throw Error("exponent arity does not match ring");
    }
    void require_same(const Polynomial& o) const {
        if (ring_ == o.ring_) return;
        if (!ring_ || !o.ring_) {
            // a null-ring operand must be a bare constant
            const Polynomial& nullside = ring_ ? o : *this;
            if (nullside.t_.empty() || (nullside.t_.size() == 1 && nullside.t_[0].m.is_zero())) return;
            throw Error("polynomial ring mismatch");
        }
        if (!same_ring(ring_, o.ring_)) throw Error("polynomial ring mismatch");
    }

    // merge assuming compatible rings; handles null-ring constants
    static std::vector<Term<K>> merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        const RingPtr& r = a.ring_ ? a.ring_ : b.ring_;
        auto lift = [&](const Polynomial& p) {
            std::vector<Term<K>> ts = p.t_;
            if (!p.ring_ && r)
                for (auto& t : ts) t.m = ExpVec::zero(r->nvars());
            return ts;
        };
        std::vector<Term<K>> ta = lift(a), tb = lift(b);
        std::vector<Term<K>> out;
        out.reserve(ta.size() + tb.size());
        std::size_t i = 0, j = 0;
        auto cmp = [&](const ExpVec& x, const ExpVec& y) { return r ? r->order.compare(x, y) : 0; };
        while (i < ta.size() || j < tb.size()) {
            int c = i == ta.size() ? -1 : j == tb.size() ? 1 : cmp(ta[i].m, tb[j].m);
            if (c > 0) {
                out.push_back(std::move(ta[i++]));
            } else if (c < 0) {
                Term<K> t = std::move(tb[j++]);
                if (subtract) t.c = -t.c;
                out.push_back(std::move(t));
            } else {
                K v = subtract ? K(ta[i].c - tb[j].c) : K(ta[i].c + tb[j].c);
                if (!(v == K(0))) out.push_back({ta[i].m, std::move(v)});
                ++i, ++j;
            }
        }
        return out;
    }

    void normalize() {
        for (auto& t : t_) check_arity(t.m);
        auto gt = [this](const Term<K>& x, const Term<K>& y) {
            return ring_ ? ring_->order.greater(x.m, y.m) : false;
        };
        std::stable_sort(t_.begin(), t_.end(), gt);
        std::vector<Term<K>> out;
        for (auto& t : t_) {
            if (!out.empty() && out.back().m == t.m)
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
            if (!out.empty() && out.back().c == K(0)) out.pop_back();
        }
        t_ = std::move(out);
    }

    RingPtr ring_;
    std::vector<Term<K>> t_;
};

// A null-ring bare constant rebuilt over r; anything else passes through.
template <class K>
Polynomial<K> lift_constant(Polynomial<K> p, const RingPtr& r) {
    if (p.ring() || !r) return p;
    return Polynomial<K>::constant(r, p.constant_term());
}

// d must divide p exactly (single-divisor long division; remainder 0).
template <class K>
Polynomial<K> exact_divide(Polynomial<K> p, Polynomial<K> d) {
    if (d.is_zero()) throw DivisionByZero();
    p = lift_constant(std::move(p), d.ring());
    d = lift_constant(std::move(d), p.ring());
    Polynomial<K> rem = std::move(p);
    Polynomial<K> quot(rem.ring());
    K dlci = d.lc().inv();
    while (!rem.is_zero()) {
        if (!d.lm().divides(rem.lm())) throw Error("inexact polynomial division");
        ExpVec m = rem.lm() - d.lm();
        K c = rem.lc() * dlci;
        quot += Polynomial<K>::monomial(rem.ring(), m, c);
        rem -= d.shifted(m, c);
    }
    return quot;
}

// Truncated power series supported on the box [0, bound): the only part of a
// numerator that residues can see.
template <class K>
struct BoxSeries {
    RingPtr ring;
    ExpVec bound;
    std::map<ExpVec, K, ExpVec::LexLess> coeff;

    bool in_box(const ExpVec& g) const {
        for (int i = 0; i < g.size(); ++i)
            if (g[i] >= bound[i]) return false;
        return true;
    }
    K get(const ExpVec& g) const {
        if (!in_box(g))
            throw MathError("series numerator truncated below the required order");
        auto it = coeff.find(g);
        return it == coeff.end() ? K(0) : it->second;
    }
};

}  // namespace locres
