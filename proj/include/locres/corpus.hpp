#pragma once

#include <random>
#include <string>

#include "locres/io.hpp"
#include "locres/polynomial.hpp"

namespace locres {

// Deterministic families of inputs for randomized tests. Everything is keyed
// by an explicit seed; draws go through rng() % k so the stream is fixed by
// the engine alone.

struct CorpusCase {
    std::string name;
    RingPtr ring;
    std::vector<Polynomial<Rational>> F;
    int predicted_mu;  // multiplicity forced by the weighted-initial parts
};

namespace detail {

inline int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + (int)(rng() % (uint64_t)(hi - lo + 1));
}

inline Rational small_coeff(std::mt19937_64& rng) {
    Rational c(draw(rng, 1, 3), draw(rng, 1, 3));
    return draw(rng, 0, 1) ? c : -c;
}

// a monomial of weighted degree strictly above `floor`, inside [0,cap]^2
inline ExpVec heavy_monomial(std::mt19937_64& rng, const std::vector<long>& w, long floor,
                             int cap) {
    while (true) {
        ExpVec m{(int32_t)draw(rng, 0, cap), (int32_t)draw(rng, 0, cap)};
        if (weighted_degree(w, m) > floor) return m;
    }
}

}  // namespace detail

// Semi-weighted-homogeneous pairs: heads x^a, y^b plus heavier noise. The
// initial parts stay a regular sequence, so the local multiplicity is a*b.
inline CorpusCase corpus_plane_case(uint64_t seed) {
    std::mt19937_64 rng(seed);
    static const int degs[6] = {2, 2, 3, 3, 4, 5};
    int a = degs[detail::draw(rng, 0, 5)];
    int b = degs[detail::draw(rng, 0, 5)];
    std::vector<long> w{(long)b, (long)a};
    RingPtr ring = make_ring({"x", "y"}, MonomialOrder::wdeglex(w));

    auto member = [&](int head_var, int head_deg) {
        ExpVec h = ExpVec::zero(2);
        h[head_var] = head_deg;
        std::vector<Term<Rational>> ts{{h, Rational(1)}};
        int extra = detail::draw(rng, 0, 2);
        for (int k = 0; k < extra; ++k)
            ts.push_back({detail::heavy_monomial(rng, w, (long)a * b, std::max(a, b) + 2),
                          detail::small_coeff(rng)});
        return Polynomial<Rational>::from_terms(ring, std::move(ts));
    };
    CorpusCase c;
    c.name = "plane_" + std::to_string(seed);
    c.ring = ring;
    c.F = {member(0, a), member(1, b)};
    c.predicted_mu = a * b;
    return c;
}

// Brieskorn triples x^a, y^b, z^c with optional heavier noise; multiplicity
// a*b*c.
inline CorpusCase corpus_space_case(uint64_t seed) {
    std::mt19937_64 rng(seed);
    int a = detail::draw(rng, 2, 3), b = detail::draw(rng, 2, 3), d = detail::draw(rng, 2, 3);
    std::vector<long> w{(long)(b * d), (long)(a * d), (long)(a * b)};
    RingPtr ring = make_ring({"x", "y", "z"}, MonomialOrder::wdeglex(w));
    long floor = (long)a * b * d;

    auto member = [&](int head_var, int head_deg) {
        ExpVec h = ExpVec::zero(3);
        h[head_var] = head_deg;
        std::vector<Term<Rational>> ts{{h, Rational(1)}};
        if (detail::draw(rng, 0, 1)) {
            while (true) {
                ExpVec m{(int32_t)detail::draw(rng, 0, 3), (int32_t)detail::draw(rng, 0, 3),
                         (int32_t)detail::draw(rng, 0, 3)};
                if (weighted_degree(w, m) > floor) {
                    ts.push_back({m, detail::small_coeff(rng)});
                    break;
                }
            }
        }
        return Polynomial<Rational>::from_terms(ring, std::move(ts));
    };
    CorpusCase c;
    c.name = "space_" + std::to_string(seed);
    c.ring = ring;
    c.F = {member(0, a), member(1, b), member(2, d)};
    c.predicted_mu = a * b * d;
    return c;
}

inline std::vector<CorpusCase> corpus_cases(int count, uint64_t seed) {
    std::vector<CorpusCase> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        uint64_t s = seed * 1000003ULL + (uint64_t)i;
        out.push_back(i % 5 == 4 ? corpus_space_case(s) : corpus_plane_case(s));
    }
    return out;
}

// Numerator with a few terms inside the box and a few outside it; the
// outside part must never change a residue.
inline Polynomial<Rational> corpus_numerator(const RingPtr& ring, const ExpVec& box,
                                             uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = ring->nvars();
    std::vector<Term<Rational>> ts;
    int inside = detail::draw(rng, 1, 4);
    for (int k = 0; k < inside; ++k) {
        ExpVec m = ExpVec::zero(n);
        for (int i = 0; i < n; ++i) m[i] = detail::draw(rng, 0, box[i] - 1);
        ts.push_back({std::move(m), detail::small_coeff(rng)});
    }
    int outside = detail::draw(rng, 0, 2);
    for (int k = 0; k < outside; ++k) {
        ExpVec m = ExpVec::zero(n);
        for (int i = 0; i < n; ++i) m[i] = detail::draw(rng, 0, box[i] + 1);
        int j = detail::draw(rng, 0, n - 1);
        m[j] += box[j];  // force this coordinate past the box
        ts.push_back({std::move(m), detail::small_coeff(rng)});
    }
    return Polynomial<Rational>::from_terms(ring, std::move(ts));
}

// Gradient fixtures of quasi-homogeneous points with known multiplicity.
struct MilnorFixture {
    std::string name;
    std::vector<long> weights;
    long degree;
    RingPtr ring;
    std::vector<Polynomial<Rational>> F;
    long expected_mu;
};

inline std::vector<MilnorFixture> milnor_fixtures() {
    std::vector<MilnorFixture> out;
    // x^2 + y^(k+1)
    for (long k = 1; k <= 8; ++k) {
        MilnorFixture f;
        f.name = "A" + std::to_string(k);
        f.weights = {k + 1, 2};
        f.degree = 2 * (k + 1);
        f.ring = make_ring({"x", "y"}, MonomialOrder::wdeglex(f.weights));
        f.F = {parse_poly<Rational>("2*x", f.ring),
               parse_poly<Rational>(std::to_string(k + 1) + "*y^" + std::to_string(k), f.ring)};
        f.expected_mu = k;
        out.push_back(std::move(f));
    }
    // x^2 y + y^(k-1)
    for (long k = 4; k <= 8; ++k) {
        MilnorFixture f;
        f.name = "D" + std::to_string(k);
        f.weights = {k - 2, 2};
        f.degree = 2 * k - 2;
        f.ring = make_ring({"x", "y"}, MonomialOrder::wdeglex(f.weights));
        f.F = {parse_poly<Rational>("2*x*y", f.ring),
               parse_poly<Rational>("x^2 + " + std::to_string(k - 1) + "*y^" + std::to_string(k - 2),
                                    f.ring)};
        f.expected_mu = k;
        out.push_back(std::move(f));
    }
    // x^3 + y^7 + x y^5
    {
        MilnorFixture f;
        f.name = "E12";
        f.weights = {7, 3};
        f.degree = 21;
        f.ring = make_ring({"x", "y"}, MonomialOrder::wdeglex(f.weights));
        f.F = {parse_poly<Rational>("3*x^2 + y^5", f.ring),
               parse_poly<Rational>("5*x*y^4 + 7*y^6", f.ring)};
        f.expected_mu = 12;
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace locres
