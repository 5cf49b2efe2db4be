#include <doctest.h>

#include <random>

#include "locres/corpus.hpp"
#include "locres/oracle.hpp"

using namespace locres;

namespace {

RingPtr e12_ring() { return make_ring({"x", "y"}, MonomialOrder::wdeglex({7, 3})); }

std::vector<Polynomial<Rational>> e12_F(const RingPtr& r) {
    return {parse_poly<Rational>("3*x^2 + y^5", r), parse_poly<Rational>("5*x*y^4 + 7*y^6", r)};
}

Polynomial<Rational> P(const std::string& s, const RingPtr& r) {
    return parse_poly<Rational>(s, r);
}

Polynomial<Rational> random_unit(const RingPtr& r, const ExpVec& box, std::mt19937_64& rng) {
    std::vector<Term<Rational>> ts;
    ts.push_back({ExpVec::zero(r->nvars()), Rational((long)(rng() % 5) + 1)});
    int extra = 1 + (int)(rng() % 3);
    for (int k = 0; k < extra; ++k) {
        ExpVec m = ExpVec::zero(r->nvars());
        for (int i = 0; i < m.size(); ++i) m[i] = (int32_t)(rng() % (box[i] + 2));
        if (m.is_zero()) m[0] = 1;
        ts.push_back({std::move(m), Rational((long)(rng() % 9) - 4)});
    }
    return Polynomial<Rational>::from_terms(r, std::move(ts));
}

}  // namespace

TEST_CASE("series inverses in the box") {
    RingPtr r = e12_ring();
    ExpVec m{4, 8};
    Polynomial<Rational> q = P("25*y + 147", r);
    Polynomial<Rational> s = box_series_inverse(q, m);
    std::vector<Term<Rational>> ts;
    for (int k = 0; k <= 7; ++k)
        ts.push_back({ExpVec{0, (int32_t)k},
                      field_pow(Rational(-25, 147), (unsigned long)k) * Rational(1, 147)});
    CHECK(s == Polynomial<Rational>::from_terms(r, std::move(ts)));
    CHECK(truncate_box(s * q, m) == P("1", r));
    CHECK_THROWS_AS(box_series_inverse(P("x + y", r), m), MathError);

    std::mt19937_64 rng(99);
    for (int it = 0; it < 25; ++it) {
        Polynomial<Rational> u = random_unit(r, ExpVec{3, 4}, rng);
        Polynomial<Rational> inv = box_series_inverse(u, ExpVec{3, 4});
        CHECK(truncate_box(inv * u, ExpVec{3, 4}) == P("1", r));
    }
}

TEST_CASE("series and elimination inverses agree") {
    RingPtr r = make_ring({"x", "y"}, MonomialOrder::wdeglex({2, 1}));
    std::mt19937_64 rng(3511);
    for (int it = 0; it < 12; ++it) {
        ExpVec m{(int32_t)(1 + rng() % 3), (int32_t)(1 + rng() % 4)};
        Polynomial<Rational> u = random_unit(r, m, rng);
        Inverse<Rational> inv = invert_mod_monomial(u, m);
        CHECK(inv.series == box_series_inverse(u, m));
        CHECK(coeff_sign(inv.c) < 0);
        CHECK(inv.series == inv.p.scaled((-inv.c).inv()));
    }
}

TEST_CASE("residues of monomial denominators") {
    RingPtr r = e12_ring();
    CHECK(monomial_residue(P("x^3*y^7", r), ExpVec{4, 8}) == Rational(1));
    CHECK(monomial_residue(P("5*x^3*y^7 + x*y - 2", r), ExpVec{4, 8}) == Rational(5));
    CHECK(monomial_residue(P("x^2*y^7", r), ExpVec{4, 8}) == Rational(0));
}

TEST_CASE("duality verification") {
    DualData<Rational> d = dual_basis(e12_F(e12_ring()));
    CHECK(verify_duality(d));

    DualData<Rational> bad = d;
    bad.psi[0] = bad.psi[0].scaled(Rational(2));
    CHECK(!verify_duality(bad));

    bad = d;
    bad.psi[3] = bad.psi[3] + bad.psi[1];
    CHECK(!verify_duality(bad));
}

TEST_CASE("transformation law on the E12 point") {
    RingPtr r = e12_ring();
    std::vector<Polynomial<Rational>> F = e12_F(r);
    CHECK(residue_by_transformation(P("1", r), F) ==
          Rational::parse("30517578125/218041257467152161"));
    CHECK(residue_by_transformation(P("x*y^5", r), F) == Rational(1, 21));
    CHECK(residue_by_transformation(F[0] * P("x + 3", r), F) == Rational(0));

    ResidueMap<Rational> M = residue_map(F);
    std::mt19937_64 rng(808);
    for (int it = 0; it < 6; ++it) {
        Polynomial<Rational> h = corpus_numerator(r, M.dual.m, rng());
        CHECK(residue_by_transformation(h, F) == point_residue(h, M));
    }
}

TEST_CASE("transformation law across the corpus") {
    for (const auto& cs : corpus_cases(4, 4242)) {
        ResidueMap<Rational> M = residue_map(cs.F);
        for (uint64_t s : {1ULL, 2ULL}) {
            Polynomial<Rational> h = corpus_numerator(cs.ring, M.dual.m, s);
            CHECK(residue_by_transformation(h, cs.F) == point_residue(h, M));
        }
    }
}

TEST_CASE("quasi-homogeneous multiplicities") {
    CHECK(quasi_homogeneous_milnor({7, 3}, 21) == 12);
    CHECK(quasi_homogeneous_milnor({1, 1}, 3) == 4);
    CHECK(quasi_homogeneous_milnor({6, 2}, 14) == 8);
    CHECK(quasi_homogeneous_milnor({1, 1, 1}, 2) == 1);
    CHECK_THROWS_AS(quasi_homogeneous_milnor({2, 3}, 4), MathError);
    CHECK_THROWS_AS(quasi_homogeneous_milnor({0, 1}, 2), InputError);

    for (const auto& fx : milnor_fixtures()) {
        CAPTURE(fx.name);
        long formula = quasi_homogeneous_milnor(fx.weights, fx.degree);
        CHECK(formula == fx.expected_mu);
        DualData<Rational> d = dual_basis(fx.F);
        CHECK(d.mu() == fx.expected_mu);
        CHECK(verify_duality(d));
    }
}
