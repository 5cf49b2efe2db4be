#pragma once

#include "locres/residue_core.hpp"

namespace locres {

// Geometric-series inverse of q modulo <z^m>: q = q0(1 - r) with r vanishing
// at the origin, so the inverse is q0^-1 (1 + r + r^2 + ...), which is a
// finite sum inside the box. Deliberately avoids the Groebner-based route.
template <class K>
Polynomial<K> box_series_inverse(const Polynomial<K>& q, const ExpVec& m) {
    RingPtr ring = q.ring();
    K q0 = q.constant_term();
    if (q0 == K(0)) throw MathError("q vanishes at the origin");
    K q0i = q0.inv();
    Polynomial<K> one = Polynomial<K>::constant(ring, K(1));
    Polynomial<K> r = one - q.scaled(q0i);
    Polynomial<K> acc = one, power = one;
    while (true) {
        power = truncate_box(power * r, m);
        if (power.is_zero()) break;
        acc += power;
    }
    return acc.scaled(q0i);
}

// res(h dz / z^(m_1)...z^(m_n)) is the coefficient of z^(m-1).
template <class K>
K monomial_residue(const Polynomial<K>& h, const ExpVec& m) {
    ExpVec top = m;
    for (int i = 0; i < top.size(); ++i) top[i] -= 1;
    return h.coeff(top);
}

// <z^lambda_i, psi_j> must be the identity matrix.
template <class K>
bool verify_duality(const DualData<K>& d) {
    for (int i = 0; i < d.mu(); ++i) {
        Polynomial<K> zi = Polynomial<K>::monomial(d.ring, d.lambda[i], K(1));
        for (int j = 0; j < d.mu(); ++j) {
            K v = residue_pairing(zi, d.psi[j]);
            if (!(v == (i == j ? K(1) : K(0)))) return false;
        }
    }
    return true;
}

// Independent residue computation through the classical transformation law:
// find the smallest k_i with a unit in <F> : z_i^(k_i), take one unit q for
// the whole monomial ideal, write q z_i^(k_i) over F, and read the residue
// off as a single series coefficient. No dual basis, no annihilator, no
// duality pairing.
template <class K>
K residue_by_transformation(const Polynomial<K>& h, const std::vector<Polynomial<K>>& F,
                            int cap = 64) {
    if (F.empty()) throw MathError("empty generator list");
    RingPtr ring = F[0].ring();
    const int n = ring->nvars();
    if ((int)F.size() != n)
        throw MathError("the number of generators must match the number of variables");

    ExtendedBasis<K> B = groebner_extended(F);
    auto has_unit = [](const std::vector<Polynomial<K>>& gb) {
        for (const auto& g : gb)
            if (!(g.constant_term() == K(0))) return true;
        return false;
    };

    ExpVec m = ExpVec::zero(n);
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (int k = 1; k <= cap && !found; ++k) {
            ExpVec e = ExpVec::zero(n);
            e[i] = k;
            Polynomial<K> pure = Polynomial<K>::monomial(ring, e, K(1));
            if (has_unit(ideal_quotient(B.G, {pure}))) {
                m[i] = k;
                found = true;
            }
        }
        if (!found)
            throw MathError("no power of a variable lands in the ideal near the origin");
    }

    std::vector<Polynomial<K>> pures;
    for (int i = 0; i < n; ++i) {
        ExpVec e = ExpVec::zero(n);
        e[i] = m[i];
        pures.push_back(Polynomial<K>::monomial(ring, e, K(1)));
    }
    std::vector<Polynomial<K>> quot = ideal_quotient(B.G, pures);
    const Polynomial<K>* pick = nullptr;
    for (const auto& g : quot)
        if (!(g.constant_term() == K(0))) {
            pick = &g;
            break;
        }
    if (!pick) throw MathError("the quotient ideal carries no local unit");
    Polynomial<K> q = primitive_scaled(*pick);

    // q z_i^(m_i) over F, any representative
    std::vector<std::vector<Polynomial<K>>> P(n);
    for (int i = 0; i < n; ++i) {
        ReduceResult<K> red = reduce_with_cofactors(q * pures[i], B.G);
        if (!red.nf.is_zero()) throw MathError("q*z^m does not lie in the ideal of F");
        std::vector<Polynomial<K>> v(n, Polynomial<K>(ring));
        for (std::size_t j = 0; j < B.G.size(); ++j) {
            if (red.cof[j].is_zero()) continue;
            for (int t = 0; t < n; ++t) v[t] += red.cof[j] * B.R[j][t];
        }
        P[i] = std::move(v);
    }

    Polynomial<K> det = truncate_box(detail::determinant(P, ring), m);
    Polynomial<K> s = box_series_inverse(q, m);
    Polynomial<K> val = truncate_box(h, m);
    val = truncate_box(val * det, m);
    for (int k = 0; k < n; ++k) val = truncate_box(val * s, m);
    return monomial_residue(val, m);
}

// product over i of (d - w_i)/w_i; integer when the data is consistent
inline long quasi_homogeneous_milnor(const std::vector<long>& w, long d) {
    Rational acc(1);
    for (long wi : w) {
        if (wi <= 0) throw InputError("weights must be positive");
        acc *= Rational(d - wi, wi);
    }
    if (!acc.is_integer() || acc.sign() < 0)
        throw MathError("weight data does not belong to an isolated quasi-homogeneous point");
    return (long)acc.num().get_si();
}

}  // namespace locres
