#pragma once

#include "locres/groebner.hpp"
#include "locres/ratfunc.hpp"

namespace locres {

inline int coeff_sign(const Rational& c) { return c.sign(); }
inline int coeff_sign(const RatFunc& c) {
    return c.is_zero() ? 0 : c.num().lc().sign();
}

// terms inside the box [0, m): the part visible to residues against z^m
template <class K>
Polynomial<K> truncate_box(const Polynomial<K>& p, const ExpVec& m) {
    std::vector<Term<K>> ts;
    for (const auto& t : p.terms()) {
        bool in = true;
        for (int i = 0; i < m.size() && in; ++i)
            if (t.m[i] >= m[i]) in = false;
        if (in) ts.push_back(t);
    }
    return Polynomial<K>::from_terms(p.ring(), std::move(ts));
}

// Canonical cofactor vector of q*r over the original generators: reduce over
// the basis, pull the cofactors back through R, then take the unique normal
// form modulo the syzygy module of F.
template <class K>
std::vector<Polynomial<K>> local_cofactors(const ExtendedBasis<K>& B, const Polynomial<K>& q,
                                           const Polynomial<K>& r) {
    RingPtr ring = q.ring();
    ReduceResult<K> red = reduce_with_cofactors(q * r, B.G);
    if (!red.nf.is_zero()) throw MathError("q*r does not lie in the ideal of F");
    std::vector<Polynomial<K>> v(B.F.size(), Polynomial<K>(ring));
    for (std::size_t j = 0; j < B.G.size(); ++j) {
        if (red.cof[j].is_zero()) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += red.cof[j] * B.R[j][i];
    }
    return module_normal_form(std::move(v), B.S, ring->order);
}

template <class K>
struct Inverse {
    Polynomial<K> series;  // inverse of q modulo <z^m>, supported in the box
    Polynomial<K> p;       // integer-primitive numerator: c*u + p vanishes mod the ideal
    K c;                   // the u-coefficient, normalized negative; series = p / (-c)
};

// Inverse of a local unit q modulo the monomial ideal <z_i^(m_i)>, through a
// Groebner basis of <1 - q*u, z^m> that eliminates u. The reduced basis holds
// exactly one element involving u, namely u - series; its integer-primitive
// sign-normalized form supplies the denominator bookkeeping.
template <class K>
Inverse<K> invert_mod_monomial(const Polynomial<K>& q, const ExpVec& m) {
    RingPtr ring = q.ring();
    const int n = ring->nvars();
    if (q.constant_term() == K(0)) throw MathError("q vanishes at the origin");

    RingPtr ext = detail::aux_extended_ring<K>(ring, "@u");
    Polynomial<K> u = Polynomial<K>::variable(ext, n);
    std::vector<Polynomial<K>> gens;
    gens.push_back(Polynomial<K>::constant(ext, K(1)) - detail::embed(q, ext) * u);
    for (int i = 0; i < n; ++i) {
        ExpVec pure = ExpVec::zero(n);
        pure[i] = m[i];
        gens.push_back(detail::embed(Polynomial<K>::monomial(ring, pure, K(1)), ext));
    }
    ElimResult<K> res = eliminate(gens, {n});

    Inverse<K> out;
    bool found = false;
    for (const auto& g : res.full) {
        if (g.deg_in(n) == 0) continue;
        if (found || g.deg_in(n) != 1) throw MathError("unexpected shape of the inversion basis");
        found = true;
        std::vector<Term<K>> pu, pz;
        for (const auto& t : g.terms()) {
            ExpVec e = t.m;
            if (e[n] == 1) {
                e[n] = 0;
                pu.push_back({std::move(e), t.c});
            } else {
                pz.push_back({std::move(e), t.c});
            }
        }
        Polynomial<K> cu = Polynomial<K>::from_terms(ext, std::move(pu));
        if (cu.nterms() != 1 || !cu.lm().is_zero())
            throw MathError("inverse has a non-constant u-coefficient");
        Polynomial<K> prim = primitive_scaled(g);
        if (coeff_sign(prim.coeff(ExpVec::unit(n + 1, n))) > 0) prim = prim.scaled(K(-1));
        std::vector<Term<K>> cu2, pz2;
        for (const auto& t : prim.terms()) {
            ExpVec e = t.m;
            if (e[n] == 1) {
                e[n] = 0;
                cu2.push_back({std::move(e), t.c});
            } else {
                pz2.push_back({std::move(e), t.c});
            }
        }
        out.c = Polynomial<K>::from_terms(ext, std::move(cu2)).constant_term();
        out.p = detail::project(Polynomial<K>::from_terms(ext, std::move(pz2)), ring);
        out.series = out.p.scaled((-out.c).inv());
    }
    if (!found) throw MathError("no inverse found modulo the monomial ideal");
    if (!(truncate_box(out.series * q, m) == Polynomial<K>::constant(ring, K(1))))
        throw MathError("inverse fails its defining identity");
    return out;
}

namespace detail {

template <class K>
Polynomial<K> determinant(const std::vector<std::vector<Polynomial<K>>>& M, const RingPtr& ring) {
    const int n = (int)M.size();
    std::function<Polynomial<K>(std::vector<int>, int)> rec =
        [&](std::vector<int> cols, int row) -> Polynomial<K> {
        if ((int)cols.size() == 1) return M[row][cols[0]];
        Polynomial<K> acc(ring);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (M[row][cols[k]].is_zero()) continue;
            std::vector<int> rest;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != k) rest.push_back(cols[j]);
            Polynomial<K> sub = rec(std::move(rest), row + 1);
            Polynomial<K> termp = M[row][cols[k]] * sub;
            acc = (k % 2 == 0) ? acc + termp : acc - termp;
        }
        return acc;
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return rec(std::move(all), 0);
}

}  // namespace detail

template <class K>
struct Transformation {
    Polynomial<K> q;                            // local unit moving z^m into the ideal
    std::vector<std::vector<Polynomial<K>>> P;  // q * z_i^(m_i) = sum_j P[i][j] * F[j]
    Polynomial<K> det;                          // det P
    Polynomial<K> nd;                           // det truncated to the box
    Inverse<K> inv;                             // inverse data of q
    Polynomial<K> nu;                           // inv.p^n truncated to the box
    Polynomial<K> num;                          // nd * nu truncated: numerator of the kernel
};

template <class K>
struct ResidueMap {
    DualData<K> dual;
    std::vector<Polynomial<K>> jf_basis;    // reduced GB of <F>
    std::vector<Polynomial<K>> ann_basis;   // reduced GB of the annihilator of the dual space
    std::vector<Polynomial<K>> quotient;    // reduced GB of <F> : annihilator
    Transformation<K> trans;
    CohomClass<K> tau_num;                  // den * tau
    std::vector<K> coeff;                   // tau_num over the dual basis, aligned with lambda
    K den;                                  // (-c)^n
    std::vector<std::string> genericity;    // nonvanishing assumptions made on parameters
};

struct ResidueMapOptions {
    DualBasisOptions dual;
    Exec exec = Exec::Parallel;
};

// The full residue mapping attached to F at the origin: dual basis, the
// transformation data moving the computation into a monomial ideal, and the
// coefficient table of the kernel class over the dual basis.
template <class K>
ResidueMap<K> residue_map(const std::vector<Polynomial<K>>& F,
                          const ResidueMapOptions& opts = {}) {
    if (F.empty()) throw MathError("empty generator list");
    RingPtr ring = F[0].ring();
    const int n = ring->nvars();
    if ((int)F.size() != n)
        throw MathError("the number of generators must match the number of variables");
    if (ring->params) ring->params->glog.clear();

    ResidueMap<K> out;
    out.dual = dual_basis(F, opts.dual);
    out.ann_basis = annihilator_ideal(out.dual);
    ExtendedBasis<K> B = groebner_extended(F);
    out.jf_basis = B.G;
    out.quotient = ideal_quotient(B.G, out.ann_basis);

    // the unit: smallest head among quotient elements not vanishing at the
    // origin, scaled integer-primitive
    const Polynomial<K>* pick = nullptr;
    for (const auto& g : out.quotient)
        if (!(g.constant_term() == K(0))) {
            pick = &g;
            break;
        }
    if (!pick) throw MathError("the quotient ideal carries no local unit");
    out.trans.q = primitive_scaled(*pick);

    const ExpVec& m = out.dual.m;
    out.trans.inv = invert_mod_monomial(out.trans.q, m);

    out.trans.P.assign(n, std::vector<Polynomial<K>>());
    const bool par = opts.exec == Exec::Parallel;
    std::exception_ptr fail;
#pragma omp parallel for schedule(dynamic) if (par)
    for (int i = 0; i < n; ++i) {
        try {
            ExpVec pure = ExpVec::zero(n);
            pure[i] = m[i];
            out.trans.P[i] =
                local_cofactors(B, out.trans.q, Polynomial<K>::monomial(ring, pure, K(1)));
        } catch (...) {
#pragma omp critical
            if (!fail) fail = std::current_exception();
        }
    }
    if (fail) std::rethrow_exception(fail);

    out.trans.det = detail::determinant(out.trans.P, ring);
    out.trans.nd = truncate_box(out.trans.det, m);
    Polynomial<K> nu = Polynomial<K>::constant(ring, K(1));
    for (int k = 0; k < n; ++k) nu = truncate_box(nu * out.trans.inv.p, m);
    out.trans.nu = nu;
    out.trans.num = truncate_box(out.trans.nd * nu, m);
    out.den = field_pow(-out.trans.inv.c, (unsigned long)n);

    // contract against xi^lambda, lambda = m - 1; every box term survives
    ExpVec lam = m;
    for (int i = 0; i < n; ++i) lam[i] -= 1;
    std::vector<Term<K>> taut;
    for (const auto& t : out.trans.num.terms()) taut.push_back({lam - t.m, t.c});
    out.tau_num = CohomClass<K>::from_terms(ring, std::move(taut));

    out.coeff.reserve(out.dual.mu());
    for (const auto& a : out.dual.lambda) out.coeff.push_back(out.tau_num.coeff(a));

    // the numerator class must decompose exactly over the dual basis and be
    // annihilated by every generator
    CohomClass<K> recon = CohomClass<K>::zero(ring);
    for (int k = 0; k < out.dual.mu(); ++k)
        recon = recon + out.dual.psi[k].scaled(out.coeff[k]);
    if (!(recon == out.tau_num))
        throw MathError("kernel numerator does not lie in the dual space");
    for (const auto& f : F)
        if (!act(f, out.tau_num).is_zero())
            throw MathError("kernel numerator is not annihilated by the generators");

    if (ring->params) out.genericity = ring->params->glog.snapshot();
    return out;
}

// res(h dz / f_1...f_n) at the origin.
template <class K, class H>
K point_residue(const H& h, const ResidueMap<K>& M) {
    K acc(0);
    for (int k = 0; k < M.dual.mu(); ++k)
        acc += residue_pairing(h, M.dual.psi[k]) * M.coeff[k];
    return acc * M.den.inv();
}

}  // namespace locres
