#pragma once

#include <optional>
#include <tuple>

#include "locres/local_cohomology.hpp"
#include "locres/polynomial.hpp"

namespace locres {

// ---------------------------------------------------------------------------
// reduction

template <class K>
struct ReduceResult {
    Polynomial<K> nf;
    std::vector<Polynomial<K>> cof;  // p = nf + sum cof[i] * basis[i]
};

// Full reduction; the divisor is always the first basis element, in stored
// order, whose head divides the current leading term.
template <class K>
ReduceResult<K> reduce_with_cofactors(const Polynomial<K>& p,
                                      const std::vector<Polynomial<K>>& basis) {
    RingPtr ring = p.ring();
    std::vector<std::vector<Term<K>>> cof(basis.size());
    std::vector<Term<K>> nf;
    Polynomial<K> work = p;
    while (!work.is_zero()) {
        Term<K> t = work.lt();
        int hit = -1;
        for (int i = 0; i < (int)basis.size(); ++i) {
            if (!basis[i].is_zero() && basis[i].lm().divides(t.m)) {
                hit = i;
                break;
            }
        }
        if (hit < 0) {
            nf.push_back(t);
            work -= Polynomial<K>::monomial(ring, t.m, t.c);
        } else {
            ExpVec m = t.m - basis[hit].lm();
            K c = t.c * basis[hit].lc().inv();
            work -= basis[hit].shifted(m, c);
            cof[hit].push_back({std::move(m), std::move(c)});
        }
    }
    ReduceResult<K> out;
    out.nf = Polynomial<K>::from_terms(ring, std::move(nf));
    out.cof.reserve(basis.size());
    for (auto& ts : cof) out.cof.push_back(Polynomial<K>::from_terms(ring, std::move(ts)));
    return out;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<Polynomial<K>>& basis) {
    RingPtr ring = p.ring();
    std::vector<Term<K>> nf;
    Polynomial<K> work = p;
    while (!work.is_zero()) {
        Term<K> t = work.lt();
        int hit = -1;
        for (int i = 0; i < (int)basis.size(); ++i) {
            if (!basis[i].is_zero() && basis[i].lm().divides(t.m)) {
                hit = i;
                break;
            }
        }
        if (hit < 0) {
            nf.push_back(t);
            work -= Polynomial<K>::monomial(ring, t.m, t.c);
        } else {
            work -= basis[hit].shifted(t.m - basis[hit].lm(), t.c * basis[hit].lc().inv());
        }
    }
    return Polynomial<K>::from_terms(ring, std::move(nf));
}

// pre: G is a Groebner basis for the ideal it generates
template <class K>
bool ideal_membership(const Polynomial<K>& p, const std::vector<Polynomial<K>>& G) {
    return normal_form(p, G).is_zero();
}

// ---------------------------------------------------------------------------
// Buchberger with cofactor tracking

namespace detail {

template <class K>
struct TrackedElem {
    Polynomial<K> g;
    std::vector<Polynomial<K>> r;  // g = sum r[i] * F[i]
};

template <class K>
std::vector<Polynomial<K>> vec_minus_scaled(std::vector<Polynomial<K>> a,
                                            const std::vector<Polynomial<K>>& b,
                                            const Polynomial<K>& s) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= s * b[i];
    return a;
}

// Buchberger loop over monic tracked elements; returns the interreduced
// basis, ascending by head.
template <class K>
std::vector<TrackedElem<K>> tracked_buchberger(const std::vector<Polynomial<K>>& F,
                                               const RingPtr& ring) {
    const MonomialOrder& ord = ring->order;
    std::vector<TrackedElem<K>> W;
    for (int i = 0; i < (int)F.size(); ++i) {
        if (F[i].is_zero()) continue;
        std::vector<Polynomial<K>> r(F.size(), Polynomial<K>(ring));
        K c = F[i].lc().inv();
        r[i] = Polynomial<K>::constant(ring, c);
        W.push_back({F[i].scaled(c), std::move(r)});
    }

    struct Pair {
        int i, j;
        ExpVec lcm;
    };
    std::vector<Pair> pairs;
    auto add_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i)
            pairs.push_back({i, j, ExpVec::lcm(W[i].g.lm(), W[j].g.lm())});
    };
    for (int j = 0; j < (int)W.size(); ++j) add_pairs_for(j);

    auto basis_view = [&]() {
        std::vector<Polynomial<K>> b;
        b.reserve(W.size());
        for (auto& w : W) b.push_back(w.g);
        return b;
    };

    while (!pairs.empty()) {
        // normal strategy: smallest lcm first
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            int c = ord.compare(pairs[k].lcm, pairs[best].lcm);
            if (c < 0 || (c == 0 && std::tie(pairs[k].i, pairs[k].j) <
                                        std::tie(pairs[best].i, pairs[best].j)))
                best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);
        // product criterion
        if (pr.lcm == W[pr.i].g.lm() + W[pr.j].g.lm()) continue;

        ExpVec mi = pr.lcm - W[pr.i].g.lm();
        ExpVec mj = pr.lcm - W[pr.j].g.lm();
        Polynomial<K> s = W[pr.i].g.shifted(mi, K(1)) - W[pr.j].g.shifted(mj, K(1));
        std::vector<Polynomial<K>> rs(W[pr.i].r.size(), Polynomial<K>(ring));
        for (std::size_t t = 0; t < rs.size(); ++t)
            rs[t] = W[pr.i].r[t].shifted(mi, K(1)) - W[pr.j].r[t].shifted(mj, K(1));

        ReduceResult<K> red = reduce_with_cofactors(s, basis_view());
        if (red.nf.is_zero()) continue;
        for (std::size_t k = 0; k < W.size(); ++k)
            if (!red.cof[k].is_zero()) rs = vec_minus_scaled(std::move(rs), W[k].r, red.cof[k]);
        K c = red.nf.lc().inv();
        TrackedElem<K> fresh{red.nf.scaled(c), {}};
        fresh.r.reserve(rs.size());
        for (auto& rp : rs) fresh.r.push_back(rp.scaled(c));
        W.push_back(std::move(fresh));
        add_pairs_for((int)W.size() - 1);
    }

    // minimalize: drop elements whose head another surviving head divides
    std::vector<bool> dead(W.size(), false);
    for (std::size_t i = 0; i < W.size(); ++i) {
        for (std::size_t j = 0; j < W.size(); ++j) {
            if (i == j || dead[j]) continue;
            const ExpVec &mi = W[i].g.lm(), &mj = W[j].g.lm();
            if (mj.divides(mi) && (!(mi == mj) || j < i)) {
                dead[i] = true;
                break;
            }
        }
    }
    std::vector<TrackedElem<K>> M;
    for (std::size_t i = 0; i < W.size(); ++i)
        if (!dead[i]) M.push_back(std::move(W[i]));

    std::sort(M.begin(), M.end(), [&](const TrackedElem<K>& a, const TrackedElem<K>& b) {
        return ord.less(a.g.lm(), b.g.lm());
    });

    // tail interreduction to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < M.size(); ++i) {
            std::vector<Polynomial<K>> others;
            std::vector<std::size_t> omap;
            for (std::size_t j = 0; j < M.size(); ++j)
                if (j != i) {
                    others.push_back(M[j].g);
                    omap.push_back(j);
                }
            ReduceResult<K> red = reduce_with_cofactors(M[i].g, others);
            if (red.nf == M[i].g) continue;
            changed = true;
            for (std::size_t k = 0; k < others.size(); ++k)
                if (!red.cof[k].is_zero())
                    M[i].r = vec_minus_scaled(std::move(M[i].r), M[omap[k]].r, red.cof[k]);
            M[i].g = std::move(red.nf);
        }
    }
    return M;
}

}  // namespace detail

// Reduced Groebner basis (monic, ascending heads).
template <class K>
std::vector<Polynomial<K>> groebner_basis(const std::vector<Polynomial<K>>& F) {
    if (F.empty()) return {};
    RingPtr ring = F[0].ring();
    for (const auto& f : F)
        if (!same_ring(f.ring(), ring)) throw Error("generators live in different rings");
    auto W = detail::tracked_buchberger(F, ring);
    std::vector<Polynomial<K>> G;
    G.reserve(W.size());
    for (auto& w : W) G.push_back(std::move(w.g));
    return G;
}

// ---------------------------------------------------------------------------
// module Groebner bases (term-over-position, e_1 > e_2 > ...)

template <class K>
using PolyVec = std::vector<Polynomial<K>>;

namespace detail {

template <class K>
std::optional<std::pair<int, Term<K>>> module_lead(const PolyVec<K>& v, const MonomialOrder& ord) {
    int best = -1;
    for (int i = 0; i < (int)v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (best < 0 || ord.greater(v[i].lm(), v[best].lm())) best = i;
    }
    if (best < 0) return std::nullopt;
    return std::make_pair(best, v[best].lt());
}

template <class K>
PolyVec<K> module_sub_scaled(PolyVec<K> a, const PolyVec<K>& b, const ExpVec& m, const K& c) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i].shifted(m, c);
    return a;
}

template <class K>
bool module_is_zero(const PolyVec<K>& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

// scale so the first nonzero component is monic
template <class K>
PolyVec<K> module_normalized(PolyVec<K> v) {
    for (auto& p : v) {
        if (p.is_zero()) continue;
        K c = p.lc().inv();
        if (!(c == K(1)))
            for (auto& q : v) q = q.scaled(c);
        break;
    }
    return v;
}

}  // namespace detail

// Full module normal form: repeatedly cancels the largest reducible term
// (term-over-position order) against the first reducer in stored order.
template <class K>
PolyVec<K> module_normal_form(PolyVec<K> v, const std::vector<PolyVec<K>>& basis,
                              const MonomialOrder& ord) {
    struct Lead {
        int pos;
        ExpVec m;
        K c;
    };
    std::vector<Lead> leads;
    for (const auto& b : basis) {
        auto l = detail::module_lead(b, ord);
        if (!l) throw Error("zero vector in module basis");
        leads.push_back({l->first, l->second.m, l->second.c});
    }
    bool changed = true;
    while (changed) {
        changed = false;
        // largest reducible term across all components
        int bpos = -1, bidx = -1;
        ExpVec bm;
        K bc(0);
        for (int pos = 0; pos < (int)v.size() && !changed; ++pos) {
            for (const auto& t : v[pos].terms()) {
                for (int k = 0; k < (int)basis.size(); ++k) {
                    if (leads[k].pos != pos || !leads[k].m.divides(t.m)) continue;
                    bool better = bidx < 0;
                    if (!better) {
                        int c = ord.compare(t.m, bm);
                        better = c > 0 || (c == 0 && pos < bpos);
                    }
                    if (better) {
                        bpos = pos;
                        bm = t.m;
                        bc = t.c;
                        bidx = k;
                    }
                    break;
                }
            }
        }
        if (bidx >= 0) {
            v = detail::module_sub_scaled(std::move(v), basis[bidx], bm - leads[bidx].m,
                                          bc * leads[bidx].c.inv());
            changed = true;
        }
    }
    return v;
}

// Reduced module Groebner basis under term-over-position.
template <class K>
std::vector<PolyVec<K>> module_groebner(const std::vector<PolyVec<K>>& gens,
                                        const RingPtr& ring) {
    const MonomialOrder& ord = ring->order;
    std::vector<PolyVec<K>> W;
    for (const auto& g : gens)
        if (!detail::module_is_zero(g)) W.push_back(detail::module_normalized(g));

    struct Pair {
        int i, j, pos;
        ExpVec lcm;
    };
    auto lead = [&](const PolyVec<K>& v) { return *detail::module_lead(v, ord); };
    std::vector<Pair> pairs;
    auto add_pairs_for = [&](int j) {
        auto [pj, tj] = lead(W[j]);
        for (int i = 0; i < j; ++i) {
            auto [pi, ti] = lead(W[i]);
            if (pi != pj) continue;
            pairs.push_back({i, j, pi, ExpVec::lcm(ti.m, tj.m)});
        }
    };
    for (int j = 0; j < (int)W.size(); ++j) add_pairs_for(j);

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            int c = ord.compare(pairs[k].lcm, pairs[best].lcm);
            if (c < 0 || (c == 0 && std::tie(pairs[k].pos, pairs[k].i, pairs[k].j) <
                                        std::tie(pairs[best].pos, pairs[best].i, pairs[best].j)))
                best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);
        auto [pi, ti] = lead(W[pr.i]);
        auto [pj, tj] = lead(W[pr.j]);
        PolyVec<K> s(W[pr.i].size(), Polynomial<K>(ring));
        s = detail::module_sub_scaled(std::move(s), W[pr.i], pr.lcm - ti.m, -ti.c.inv());
        s = detail::module_sub_scaled(std::move(s), W[pr.j], pr.lcm - tj.m, tj.c.inv());
        s = module_normal_form(std::move(s), W, ord);
        if (detail::module_is_zero(s)) continue;
        W.push_back(detail::module_normalized(std::move(s)));
        add_pairs_for((int)W.size() - 1);
    }

    // minimalize
    std::vector<bool> dead(W.size(), false);
    for (std::size_t i = 0; i < W.size(); ++i) {
        auto [pi, ti] = lead(W[i]);
        for (std::size_t j = 0; j < W.size(); ++j) {
            if (i == j || dead[j]) continue;
            auto [pj, tj] = lead(W[j]);
            if (pi != pj || !tj.m.divides(ti.m)) continue;
            if (!(ti.m == tj.m) || j < i) {
                dead[i] = true;
                break;
            }
        }
    }
    std::vector<PolyVec<K>> M;
    for (std::size_t i = 0; i < W.size(); ++i)
        if (!dead[i]) M.push_back(std::move(W[i]));
    std::sort(M.begin(), M.end(), [&](const PolyVec<K>& a, const PolyVec<K>& b) {
        auto [pa, ta] = lead(a);
        auto [pb, tb] = lead(b);
        int c = ord.compare(ta.m, tb.m);
        if (c != 0) return c < 0;
        return pa < pb;
    });

    // tail interreduction
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < M.size(); ++i) {
            std::vector<PolyVec<K>> others;
            for (std::size_t j = 0; j < M.size(); ++j)
                if (j != i) others.push_back(M[j]);
            if (others.empty()) break;
            PolyVec<K> nf =
                detail::module_normalized(module_normal_form(M[i], others, ord));
            if (!(nf == M[i])) {
                M[i] = std::move(nf);
                changed = true;
            }
        }
    }
    return M;
}

// ---------------------------------------------------------------------------
// extended data: reduced basis, cofactors, syzygies

template <class K>
struct ExtendedBasis {
    std::vector<Polynomial<K>> F;                // the input generators
    std::vector<Polynomial<K>> G;                // reduced Groebner basis
    std::vector<std::vector<Polynomial<K>>> R;   // G[j] = sum_i R[j][i] * F[i]
    std::vector<PolyVec<K>> S;                   // module GB of Syz(F)
};

// Reduced basis with an expression of every element over F, plus a Groebner
// basis of the syzygy module of F. Syzygies of G come from reducing every
// S-pair to zero; they are pulled back along R and completed by the columns
// of I - R*Q, where Q expresses F over G.
template <class K>
ExtendedBasis<K> groebner_extended(const std::vector<Polynomial<K>>& F) {
    if (F.empty()) return {};
    RingPtr ring = F[0].ring();
    for (const auto& f : F)
        if (!same_ring(f.ring(), ring)) throw Error("generators live in different rings");
    const MonomialOrder& ord = ring->order;
    const int n = (int)F.size();

    auto W = detail::tracked_buchberger(F, ring);
    ExtendedBasis<K> out;
    out.F = F;
    for (auto& w : W) {
        out.G.push_back(w.g);
        out.R.push_back(w.r);
    }
    const int nu = (int)out.G.size();

    // Q: F over G
    std::vector<std::vector<Polynomial<K>>> Q(nu, std::vector<Polynomial<K>>());
    for (int k = 0; k < nu; ++k) Q[k].assign(n, Polynomial<K>(ring));
    for (int i = 0; i < n; ++i) {
        ReduceResult<K> red = reduce_with_cofactors(F[i], out.G);
        if (!red.nf.is_zero()) throw Error("generator fails to reduce over its own basis");
        for (int k = 0; k < nu; ++k) Q[k][i] = red.cof[k];
    }

    // syzygies of G from all S-pair reductions
    std::vector<PolyVec<K>> syzF;
    for (int i = 0; i < nu; ++i) {
        for (int j = i + 1; j < nu; ++j) {
            ExpVec l = ExpVec::lcm(out.G[i].lm(), out.G[j].lm());
            ExpVec mi = l - out.G[i].lm();
            ExpVec mj = l - out.G[j].lm();
            Polynomial<K> s = out.G[i].shifted(mi, K(1)) - out.G[j].shifted(mj, K(1));
            ReduceResult<K> red = reduce_with_cofactors(s, out.G);
            if (!red.nf.is_zero()) throw Error("S-pair fails to reduce over the basis");
            // sigma over G: e_i m_i - e_j m_j - cof
            PolyVec<K> sigma(nu, Polynomial<K>(ring));
            sigma[i] += Polynomial<K>::monomial(ring, mi, K(1));
            sigma[j] -= Polynomial<K>::monomial(ring, mj, K(1));
            for (int k = 0; k < nu; ++k) sigma[k] -= red.cof[k];
            // pull back along R
            PolyVec<K> v(n, Polynomial<K>(ring));
            for (int k = 0; k < nu; ++k)
                for (int t = 0; t < n; ++t) v[t] += sigma[k] * out.R[k][t];
            if (!detail::module_is_zero(v)) syzF.push_back(std::move(v));
        }
    }
    // columns of I - R*Q
    for (int i = 0; i < n; ++i) {
        PolyVec<K> v(n, Polynomial<K>(ring));
        v[i] = Polynomial<K>::constant(ring, K(1));
        for (int t = 0; t < n; ++t)
            for (int k = 0; k < nu; ++k) v[t] -= out.R[k][t] * Q[k][i];
        if (!detail::module_is_zero(v)) syzF.push_back(std::move(v));
    }
    out.S = module_groebner(syzF, ring);
    return out;
}

// ---------------------------------------------------------------------------
// elimination, intersection, quotient

template <class K>
struct ElimResult {
    std::vector<Polynomial<K>> full;        // reduced GB under the block order
    std::vector<Polynomial<K>> eliminated;  // the part free of the dropped vars
};

namespace detail {

inline MonomialOrder restricted_order(const MonomialOrder& ord, const std::vector<int>& keep) {
    switch (ord.kind()) {
        case MonomialOrder::Kind::Lex:
            return MonomialOrder::lex((int)keep.size());
        case MonomialOrder::Kind::WDegLex: {
            std::vector<long> w;
            for (int i : keep) w.push_back(ord.weights()[i]);
            return MonomialOrder::wdeglex(std::move(w));
        }
        default:
            throw Error("cannot restrict a block order");
    }
}

template <class K>
Polynomial<K> permuted(const Polynomial<K>& p, const RingPtr& target,
                       const std::vector<int>& where) {
    std::vector<Term<K>> ts;
    for (const auto& t : p.terms()) {
        ExpVec m = ExpVec::zero(target->nvars());
        for (int i = 0; i < t.m.size(); ++i) m[where[i]] = t.m[i];
        ts.push_back({std::move(m), t.c});
    }
    return Polynomial<K>::from_terms(target, std::move(ts));
}

}  // namespace detail

// Reduced GB under a block order putting the dropped variables first; the
// eliminated part generates the intersection with the subring of the kept
// variables. Both parts come back expressed in the original ring.
template <class K>
ElimResult<K> eliminate(const std::vector<Polynomial<K>>& gens, const std::vector<int>& drop) {
    if (gens.empty()) return {};
    RingPtr ring = gens[0].ring();
    const int nv = ring->nvars();
    std::vector<bool> dropped(nv, false);
    for (int d : drop) {
        if (d < 0 || d >= nv) throw Error("bad variable index");
        dropped[d] = true;
    }
    std::vector<int> perm;  // new position -> old index
    for (int d : drop) perm.push_back(d);
    std::vector<int> keep;
    for (int i = 0; i < nv; ++i)
        if (!dropped[i]) {
            perm.push_back(i);
            keep.push_back(i);
        }
    std::vector<int> where(nv);  // old index -> new position
    for (int i = 0; i < nv; ++i) where[perm[i]] = i;

    MonomialOrder bord = MonomialOrder::elim_block((int)drop.size(),
                                                   detail::restricted_order(ring->order, keep));
    std::vector<std::string> bvars;
    for (int i : perm) bvars.push_back(ring->vars[i]);
    RingPtr bring = make_ring(std::move(bvars), std::move(bord), ring->params);

    std::vector<Polynomial<K>> mapped;
    for (const auto& g : gens) mapped.push_back(detail::permuted(g, bring, where));
    std::vector<Polynomial<K>> G = groebner_basis(mapped);

    ElimResult<K> out;
    for (const auto& g : G) {
        out.full.push_back(detail::permuted(g, ring, perm));
        bool free_of_dropped = true;
        for (const auto& t : g.terms())
            for (std::size_t d = 0; d < drop.size() && free_of_dropped; ++d)
                if (t.m[(int)d] != 0) free_of_dropped = false;
        if (free_of_dropped) out.eliminated.push_back(out.full.back());
    }
    return out;
}

namespace detail {

template <class K>
RingPtr aux_extended_ring(const RingPtr& ring, const std::string& aux) {
    std::vector<std::string> vars = ring->vars;
    vars.push_back(aux);
    MonomialOrder ord = [&] {
        switch (ring->order.kind()) {
            case MonomialOrder::Kind::Lex:
                return MonomialOrder::lex(ring->nvars() + 1);
            case MonomialOrder::Kind::WDegLex: {
                std::vector<long> w = ring->order.weights();
                w.push_back(1);
                return MonomialOrder::wdeglex(std::move(w));
            }
            default:
                throw Error("cannot extend a block order");
        }
    }();
    return make_ring(std::move(vars), std::move(ord), ring->params);
}

template <class K>
Polynomial<K> embed(const Polynomial<K>& p, const RingPtr& big) {
    std::vector<Term<K>> ts;
    for (const auto& t : p.terms()) {
        ExpVec m = t.m;
        m.e.resize(big->nvars(), 0);
        ts.push_back({std::move(m), t.c});
    }
    return Polynomial<K>::from_terms(big, std::move(ts));
}

template <class K>
Polynomial<K> project(const Polynomial<K>& p, const RingPtr& small) {
    std::vector<Term<K>> ts;
    for (const auto& t : p.terms()) {
        for (int i = small->nvars(); i < t.m.size(); ++i)
            if (t.m[i] != 0) throw Error("projection drops a live variable");
        ExpVec m = t.m;
        m.e.resize(small->nvars());
        ts.push_back({std::move(m), t.c});
    }
    return Polynomial<K>::from_terms(small, std::move(ts));
}

}  // namespace detail

// Reduced GB of <A> intersect <B>, by eliminating w from w*A + (1-w)*B.
template <class K>
std::vector<Polynomial<K>> ideal_intersect(const std::vector<Polynomial<K>>& A,
                                           const std::vector<Polynomial<K>>& B) {
    if (A.empty() || B.empty()) return {};
    RingPtr ring = A[0].ring();
    RingPtr ext = detail::aux_extended_ring<K>(ring, "@w");
    int wi = ring->nvars();
    Polynomial<K> w = Polynomial<K>::variable(ext, wi);
    Polynomial<K> one_minus_w = Polynomial<K>::constant(ext, K(1)) - w;
    std::vector<Polynomial<K>> gens;
    for (const auto& a : A) gens.push_back(w * detail::embed(a, ext));
    for (const auto& b : B) gens.push_back(one_minus_w * detail::embed(b, ext));
    ElimResult<K> res = eliminate(gens, {wi});
    std::vector<Polynomial<K>> out;
    for (const auto& g : res.eliminated) out.push_back(detail::project(g, ring));
    return out;
}

// Reduced GB of A : <B> = intersection over b of A : <b>.
template <class K>
std::vector<Polynomial<K>> ideal_quotient(const std::vector<Polynomial<K>>& A,
                                          const std::vector<Polynomial<K>>& B) {
    if (A.empty()) throw MathError("quotient of the zero ideal is not supported");
    RingPtr ring = A[0].ring();
    std::vector<Polynomial<K>> A_gb = groebner_basis(A);
    std::optional<std::vector<Polynomial<K>>> cur;
    for (const auto& b : B) {
        if (b.is_zero()) continue;  // A : 0 is the whole ring
        std::vector<Polynomial<K>> colon;
        bool constant = b.nterms() == 1 && b.lm().is_zero();
        if (constant) {
            colon = A_gb;
        } else {
            std::vector<Polynomial<K>> inter = ideal_intersect(A, {b});
            for (const auto& g : inter) colon.push_back(exact_divide(g, b));
            colon = groebner_basis(colon);
        }
        if (!cur)
            cur = std::move(colon);
        else
            cur = ideal_intersect(*cur, colon);
    }
    if (!cur) return {Polynomial<K>::constant(ring, K(1))};
    return *cur;
}

// ---------------------------------------------------------------------------
// annihilator of a dual basis (box linear algebra)

// Reduced GB of the ideal of polynomials annihilating every class of d under
// the contraction action. Box monomials are fed in ascending order to an
// incremental echelon of their action images; a dependency yields a basis
// element with standard-monomial tail.
template <class K>
std::vector<Polynomial<K>> annihilator_ideal(const DualData<K>& d) {
    const RingPtr& ring = d.ring;
    const MonomialOrder& ord = ring->order;
    const int n = ring->nvars();

    std::vector<ExpVec> box;
    ExpVec cur = ExpVec::zero(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            box.push_back(cur);
            return;
        }
        for (int32_t k = 0; k < d.m[i]; ++k) {
            cur[i] = k;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    std::sort(box.begin(), box.end(),
              [&](const ExpVec& a, const ExpVec& b) { return ord.less(a, b); });
    std::map<ExpVec, int, ExpVec::LexLess> box_pos;
    for (int i = 0; i < (int)box.size(); ++i) box_pos[box[i]] = i;

    const int mu = (int)d.psi.size();
    const int dim = mu * (int)box.size();
    Echelon<K> ech(dim);
    std::vector<ExpVec> standard, leads;
    std::vector<Polynomial<K>> gb;

    for (const ExpVec& g : box) {
        bool skip = false;
        for (const auto& l : leads)
            if (l.divides(g)) {
                skip = true;
                break;
            }
        if (skip) continue;
        std::vector<K> image(dim, K(0));
        for (int j = 0; j < mu; ++j)
            for (const auto& t : d.psi[j].terms())
                if (g.divides(t.m)) image[(std::size_t)j * box.size() + box_pos.at(t.m - g)] += t.c;
        auto dep = ech.insert(std::move(image));
        if (!dep) {
            standard.push_back(g);
        } else {
            std::vector<Term<K>> ts;
            ts.push_back({g, K(1)});
            for (std::size_t k = 0; k < dep->size(); ++k)
                if (!((*dep)[k] == K(0))) ts.push_back({standard[k], -(*dep)[k]});
            gb.push_back(Polynomial<K>::from_terms(ring, std::move(ts)));
            leads.push_back(g);
        }
    }
    if ((int)standard.size() != mu)
        throw MathError("dual data is not shift-stable");

    for (int i = 0; i < n; ++i) {
        ExpVec pure = ExpVec::zero(n);
        pure[i] = d.m[i];
        bool covered = false;
        for (const auto& l : leads)
            if (l.divides(pure)) {
                covered = true;
                break;
            }
        if (!covered) gb.push_back(Polynomial<K>::monomial(ring, pure, K(1)));
    }
    std::sort(gb.begin(), gb.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
        return ord.less(a.lm(), b.lm());
    });
    return gb;
}

}  // namespace locres
