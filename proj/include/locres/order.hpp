#pragma once

#include <memory>
#include <span>
#include <vector>

#include "locres/exponent.hpp"

namespace locres {

inline long weighted_degree(std::span<const long> w, const ExpVec& m) {
    if ((int)w.size() != m.size()) throw Error("weight/exponent size mismatch");
    long d = 0;
    for (int i = 0; i < m.size(); ++i) d += w[i] * m[i];
    return d;
}

// Total order on monomials. Three kinds:
//  - WDegLex: weighted degree, ties by lex (earlier variable wins).
//  - Lex: pure lexicographic.
//  - Elim: block order; first `block` variables compared by (total degree,
//    lex), ties decided by the tail order on the remaining variables. Greater
//    in the block part means greater overall, so the leading block is
//    eliminated.
class MonomialOrder {
  public:
    enum class Kind { WDegLex, Lex, Elim };

    static MonomialOrder wdeglex(std::vector<long> weights) {
        MonomialOrder o;
        o.kind_ = Kind::WDegLex;
        o.nvars_ = (int)weights.size();
        for (long w : weights)
            if (w <= 0) throw InputError("weights must be positive");
        o.weights_ = std::move(weights);
        return o;
    }
    static MonomialOrder lex(int nvars) {
        MonomialOrder o;
        o.kind_ = Kind::Lex;
        o.nvars_ = nvars;
        return o;
    }
    static MonomialOrder elim_block(int block, MonomialOrder tail) {
        MonomialOrder o;
        o.kind_ = Kind::Elim;
        o.block_ = block;
        o.nvars_ = block + tail.nvars_;
        o.tail_ = std::make_shared<MonomialOrder>(std::move(tail));
        return o;
    }

    Kind kind() const { return kind_; }
    int nvars() const { return nvars_; }
    const std::vector<long>& weights() const { return weights_; }

    // weighted degree functional that the order refines; only meaningful for
    // degree-compatible orders
    bool degree_compatible() const { return kind_ == Kind::WDegLex; }
    long degree(const ExpVec& m) const {
        if (!degree_compatible()) throw MathError("order is not degree-compatible");
        return weighted_degree(weights_, m);
    }

    // -1, 0, +1
    int compare(const ExpVec& a, const ExpVec& b) const {
        if (a.size() != nvars_ || b.size() != nvars_) throw Error("exponent arity mismatch");
        return cmp(a.e.data(), b.e.data());
    }
    bool less(const ExpVec& a, const ExpVec& b) const { return compare(a, b) < 0; }
    bool greater(const ExpVec& a, const ExpVec& b) const { return compare(a, b) > 0; }

    // All gamma strictly below alpha. Finite because the order is
    // degree-compatible. Ascending.
    std::vector<ExpVec> monomials_below(const ExpVec& alpha) const;

    friend bool operator==(const MonomialOrder& x, const MonomialOrder& y) {
        if (x.kind_ != y.kind_ || x.nvars_ != y.nvars_) return false;
        switch (x.kind_) {
            case Kind::WDegLex: return x.weights_ == y.weights_;
            case Kind::Lex: return true;
            case Kind::Elim: return x.block_ == y.block_ && *x.tail_ == *y.tail_;
        }
        return false;
    }

  private:
    MonomialOrder() = default;

    static int lex_cmp(const int32_t* a, const int32_t* b, int n) {
        for (int i = 0; i < n; ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }

    int cmp(const int32_t* a, const int32_t* b) const {
        switch (kind_) {
            case Kind::Lex:
                return lex_cmp(a, b, nvars_);
            case Kind::WDegLex: {
                long da = 0, db = 0;
                for (int i = 0; i < nvars_; ++i) {
                    da += weights_[i] * a[i];
                    db += weights_[i] * b[i];
                }
                if (da != db) return da > db ? 1 : -1;
                return lex_cmp(a, b, nvars_);
            }
            case Kind::Elim: {
                long da = 0, db = 0;
                for (int i = 0; i < block_; ++i) {
                    da += a[i];
                    db += b[i];
                }
                if (da != db) return da > db ? 1 : -1;
                if (int c = lex_cmp(a, b, block_)) return c;
                return tail_->cmp(a + block_, b + block_);
            }
        }
        return 0;
    }

    Kind kind_ = Kind::Lex;
    int nvars_ = 0;
    std::vector<long> weights_;
    int block_ = 0;
    std::shared_ptr<const MonomialOrder> tail_;
};

inline std::vector<ExpVec> MonomialOrder::monomials_below(const ExpVec& alpha) const {
    long bound = degree(alpha);
    std::vector<ExpVec> out;
    ExpVec cur = ExpVec::zero(nvars_);
    // enumerate the weighted simplex {wdeg <= bound}
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == nvars_) {
            if (less(cur, alpha)) out.push_back(cur);
            return;
        }
        for (long k = 0; k * weights_[i] <= left; ++k) {
            cur[i] = (int32_t)k;
            rec(i + 1, left - k * weights_[i]);
        }
        cur[i] = 0;
    };
    rec(0, bound);
    std::sort(out.begin(), out.end(), [&](const ExpVec& a, const ExpVec& b) { return less(a, b); });
    return out;
}

}  // namespace locres
