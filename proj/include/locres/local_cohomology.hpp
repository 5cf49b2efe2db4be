#pragma once

#include <map>
#include <queue>
#include <set>

#include "locres/linalg.hpp"
#include "locres/polynomial.hpp"

namespace locres {

// Algebraic local cohomology class supported at the origin, written as a
// polynomial in dual variables: xi^gamma is the functional picking the
// z^gamma Taylor coefficient. Stored like a polynomial; the head is the
// largest exponent in the ring's order.
template <class K>
class CohomClass {
  public:
    CohomClass() = default;
    explicit CohomClass(Polynomial<K> p) : p_(std::move(p)) {}
    static CohomClass zero(RingPtr r) { return CohomClass(Polynomial<K>(std::move(r))); }
    static CohomClass monomial(RingPtr r, ExpVec m, K c) {
        return CohomClass(Polynomial<K>::monomial(std::move(r), std::move(m), std::move(c)));
    }
    static CohomClass from_terms(RingPtr r, std::vector<Term<K>> ts) {
        return CohomClass(Polynomial<K>::from_terms(std::move(r), std::move(ts)));
    }

    const RingPtr& ring() const { return p_.ring(); }
    bool is_zero() const { return p_.is_zero(); }
    const std::vector<Term<K>>& terms() const { return p_.terms(); }
    const ExpVec& head() const { return p_.lm(); }
    const K& head_coeff() const { return p_.lc(); }
    K coeff(const ExpVec& g) const { return p_.coeff(g); }
    // same term data, as a polynomial (printing, JSON)
    const Polynomial<K>& as_polynomial() const { return p_; }

    CohomClass scaled(const K& c) const { return CohomClass(p_.scaled(c)); }
    CohomClass operator-() const { return CohomClass(-p_); }
    friend CohomClass operator+(const CohomClass& a, const CohomClass& b) {
        return CohomClass(a.p_ + b.p_);
    }
    friend CohomClass operator-(const CohomClass& a, const CohomClass& b) {
        return CohomClass(a.p_ - b.p_);
    }
    friend bool operator==(const CohomClass& a, const CohomClass& b) { return a.p_ == b.p_; }
    friend bool operator!=(const CohomClass& a, const CohomClass& b) { return !(a == b); }

  private:
    Polynomial<K> p_;
};

// Contraction action of a polynomial on a class: z^a * xi^b = xi^(b-a) when
// a <= b componentwise, else 0; extended bilinearly.
template <class K>
CohomClass<K> act(const Polynomial<K>& f, const CohomClass<K>& c) {
    if (!same_ring(f.ring(), c.ring())) throw Error("action across different rings");
    std::vector<Term<K>> out;
    for (const auto& tf : f.terms()) {
        for (const auto& tc : c.terms()) {
            if (!tf.m.divides(tc.m)) continue;
            out.push_back({tc.m - tf.m, tf.c * tc.c});
        }
    }
    return CohomClass<K>::from_terms(f.ring(), std::move(out));
}

// <h, c> = sum over gamma of h_gamma * c_gamma.
template <class K>
K residue_pairing(const Polynomial<K>& h, const CohomClass<K>& c) {
    K acc(0);
    for (const auto& t : c.terms()) acc += h.coeff(t.m) * t.c;
    return acc;
}

// Series variant; throws MathError if the class needs coefficients beyond the
// series' truncation box.
template <class K>
K residue_pairing(const BoxSeries<K>& h, const CohomClass<K>& c) {
    K acc(0);
    for (const auto& t : c.terms()) acc += h.get(t.m) * t.c;
    return acc;
}

// The reduced basis of the local cohomology space attached to F, with the
// combinatorial data read off from it. psi[i] has head lambda[i]; tails avoid
// all heads. exps = lambda plus lower, ell[i] is the largest pure power of
// variable i occurring, m = ell + 1 is the working box.
template <class K>
struct DualData {
    RingPtr ring;
    std::vector<CohomClass<K>> psi;
    std::vector<ExpVec> lambda;
    std::vector<ExpVec> lower;
    std::vector<ExpVec> exps;
    ExpVec ell;
    ExpVec m;
    int mu() const { return (int)psi.size(); }
};

struct DualBasisOptions {
    long max_total_degree = 64;
    Exec exec = Exec::Parallel;
};

// Classify a raw reduced basis: derive heads, lower set, pure-power bounds.
template <class K>
DualData<K> head_data(RingPtr ring, std::vector<CohomClass<K>> psi) {
    if (psi.empty()) throw MathError("empty local cohomology basis");
    DualData<K> d;
    d.ring = std::move(ring);
    const MonomialOrder& ord = d.ring->order;
    std::sort(psi.begin(), psi.end(), [&](const CohomClass<K>& a, const CohomClass<K>& b) {
        return ord.less(a.head(), b.head());
    });
    d.psi = std::move(psi);
    std::set<ExpVec, ExpVec::LexLess> heads, tails;
    for (const auto& c : d.psi) {
        if (c.is_zero()) throw MathError("zero class in basis");
        if (!heads.insert(c.head()).second) throw MathError("duplicate heads in basis");
        d.lambda.push_back(c.head());
    }
    for (const auto& c : d.psi)
        for (const auto& t : c.terms())
            if (!(t.m == c.head())) {
                if (heads.count(t.m)) throw MathError("basis is not reduced");
                tails.insert(t.m);
            }
    d.lower.assign(tails.begin(), tails.end());
    auto by_order = [&](const ExpVec& a, const ExpVec& b) { return ord.less(a, b); };
    std::sort(d.lower.begin(), d.lower.end(), by_order);
    d.exps = d.lambda;
    d.exps.insert(d.exps.end(), d.lower.begin(), d.lower.end());
    std::sort(d.exps.begin(), d.exps.end(), by_order);
    int n = d.ring->nvars();
    d.ell = ExpVec::zero(n);
    for (const auto& g : d.exps) {
        int nz = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i)
            if (g[i] != 0) {
                if (nz >= 0) pure = false;
                nz = i;
            }
        if (pure && nz >= 0) d.ell[nz] = std::max(d.ell[nz], g[nz]);
    }
    d.m = d.ell;
    for (int i = 0; i < n; ++i) d.m[i] += 1;
    return d;
}

namespace detail {

// Linear system expressing "f * (xi^alpha + sum_j c_j xi^(U_j)) = 0 for all
// f in F" in the unknowns c_j.
template <class K>
void annihilation_system(const std::vector<Polynomial<K>>& F, const ExpVec& alpha,
                         const std::vector<ExpVec>& U, Matrix<K>& A, std::vector<K>& b) {
    std::map<std::pair<int, ExpVec>, int,
             decltype([](const std::pair<int, ExpVec>& x, const std::pair<int, ExpVec>& y) {
                 if (x.first != y.first) return x.first < y.first;
                 return lex_less(x.second, y.second);
             })>
        row_of;
    auto row = [&](int fi, const ExpVec& d) {
        auto [it, fresh] = row_of.try_emplace({fi, d}, (int)row_of.size());
        (void)fresh;
        return it->second;
    };
    struct Entry {
        int r, c;
        K v;
    };
    std::vector<Entry> entries;
    std::vector<std::pair<int, K>> rhs;  // (row, value)
    for (int fi = 0; fi < (int)F.size(); ++fi) {
        for (const auto& tf : F[fi].terms()) {
            for (int j = 0; j < (int)U.size(); ++j)
                if (tf.m.divides(U[j])) entries.push_back({row(fi, U[j] - tf.m), j, tf.c});
            if (tf.m.divides(alpha)) rhs.push_back({row(fi, alpha - tf.m), -tf.c});
        }
    }
    A = Matrix<K>((int)row_of.size(), (int)U.size());
    b.assign(row_of.size(), K(0));
    for (auto& e : entries) A.at(e.r, e.c) += e.v;
    for (auto& [r, v] : rhs) b[r] += v;
}

}  // namespace detail

// Reduced basis of the space annihilated by F under the contraction action,
// built head by head up the staircase. Heads are tried in ascending order; a
// head joins the staircase iff some class with that head and strictly smaller
// tail annihilates all of F. Tails are then re-solved against the final head
// set, which makes the basis reduced and the duality pairing the identity.
template <class K>
DualData<K> dual_basis(const std::vector<Polynomial<K>>& F, const DualBasisOptions& opts = {}) {
    if (F.empty()) throw MathError("empty generator list");
    RingPtr ring = F[0].ring();
    for (const auto& f : F)
        if (!same_ring(f.ring(), ring)) throw Error("generators live in different rings");
    const MonomialOrder& ord = ring->order;
    if (!ord.degree_compatible())
        throw MathError("local cohomology basis requires a degree-compatible order");
    for (const auto& f : F)
        if (!f.is_zero() && !(f.constant_term() == K(0)))
            throw MathError("origin is not a common zero of F");

    const int n = ring->nvars();
    auto heap_cmp = [&](const ExpVec& a, const ExpVec& b) { return ord.greater(a, b); };
    std::priority_queue<ExpVec, std::vector<ExpVec>, decltype(heap_cmp)> heap(heap_cmp);
    std::set<ExpVec, ExpVec::LexLess> seen, accepted;
    std::vector<ExpVec> lambda;
    heap.push(ExpVec::zero(n));
    seen.insert(ExpVec::zero(n));

    while (!heap.empty()) {
        ExpVec alpha = heap.top();
        heap.pop();
        if (alpha.total_degree() > opts.max_total_degree)
            throw MathError(
                "staircase exceeds the degree bound; the origin may not be an isolated "
                "solution of F");
        std::vector<ExpVec> U = ord.monomials_below(alpha);
        Matrix<K> A;
        std::vector<K> b;
        detail::annihilation_system(F, alpha, U, A, b);
        LinSolve<K> sol = solve_linear(A, b, opts.exec);
        if (!sol.consistent) continue;
        accepted.insert(alpha);
        lambda.push_back(alpha);
        for (int i = 0; i < n; ++i) {
            ExpVec succ = alpha;
            succ[i] += 1;
            if (seen.count(succ)) continue;
            bool ready = true;
            for (int j = 0; j < n && ready; ++j) {
                if (succ[j] == 0) continue;
                ExpVec pred = succ;
                pred[j] -= 1;
                ready = accepted.count(pred) > 0;
            }
            if (ready) {
                heap.push(succ);
                seen.insert(succ);
            }
        }
    }
    if (lambda.empty()) throw MathError("no local cohomology classes found");

    // final tails: unknowns range over monomials below the head and outside
    // the head set, so every class is reduced by construction
    std::vector<CohomClass<K>> psi(lambda.size());
    const bool par = opts.exec == Exec::Parallel;
    std::exception_ptr fail;
#pragma omp parallel for schedule(dynamic) if (par)
    for (int k = 0; k < (int)lambda.size(); ++k) {
        try {
            const ExpVec& alpha = lambda[k];
            std::vector<ExpVec> U;
            for (auto& g : ord.monomials_below(alpha))
                if (!accepted.count(g)) U.push_back(g);
            Matrix<K> A;
            std::vector<K> b;
            detail::annihilation_system(F, alpha, U, A, b);
            LinSolve<K> sol = solve_linear(A, b, Exec::Serial);
            if (!sol.consistent || !sol.unique)
                throw MathError("reduced class is not uniquely determined");
            std::vector<Term<K>> ts;
            ts.push_back({alpha, K(1)});
            for (int j = 0; j < (int)U.size(); ++j)
                if (!(sol.x[j] == K(0))) ts.push_back({U[j], sol.x[j]});
            psi[k] = CohomClass<K>::from_terms(ring, std::move(ts));
        } catch (...) {
#pragma omp critical
            if (!fail) fail = std::current_exception();
        }
    }
    if (fail) std::rethrow_exception(fail);
    return head_data(ring, std::move(psi));
}

// Coefficients of the local normal form of h, aligned with d.lambda.
template <class K, class H>
std::vector<K> local_nf_coeffs(const H& h, const DualData<K>& d) {
    std::vector<K> out;
    out.reserve(d.psi.size());
    for (const auto& c : d.psi) out.push_back(residue_pairing(h, c));
    return out;
}

// NF(h) = sum of <h, psi_a> z^a over the heads: the canonical representative
// of h in the local quotient.
template <class K, class H>
Polynomial<K> local_normal_form(const H& h, const DualData<K>& d) {
    std::vector<K> cs = local_nf_coeffs(h, d);
    std::vector<Term<K>> ts;
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (!(cs[i] == K(0))) ts.push_back({d.lambda[i], cs[i]});
    return Polynomial<K>::from_terms(d.ring, std::move(ts));
}

}  // namespace locres
