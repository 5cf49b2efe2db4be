#include <doctest.h>

#include <set>

#include "locres/corpus.hpp"
#include "locres/local_cohomology.hpp"

using namespace locres;

namespace {

RingPtr e12_ring() { return make_ring({"x", "y"}, MonomialOrder::wdeglex({7, 3})); }

std::vector<Polynomial<Rational>> e12_F(const RingPtr& r) {
    return {parse_poly<Rational>("3*x^2 + y^5", r), parse_poly<Rational>("5*x*y^4 + 7*y^6", r)};
}

CohomClass<Rational> C(const std::string& s, const RingPtr& r) {
    return CohomClass<Rational>(parse_poly<Rational>(s, r));
}

// heads ascending under wdeglex(7,3)
const char* const kE12Psi[12] = {
    "1",
    "y",
    "y^2",
    "x",
    "y^3",
    "x*y",
    "y^4",
    "x*y^2",
    "y^5 - 1/3*x^2",
    "x*y^3",
    "x*y^4 - 5/7*y^6 + 5/21*x^2*y",
    "x*y^5 - 5/7*y^7 - 1/3*x^3 + 5/21*x^2*y^2",
};

}  // namespace

TEST_CASE("contraction action") {
    RingPtr r = e12_ring();
    CohomClass<Rational> c = C("y^5 - 1/3*x^2", r);
    CHECK(act(parse_poly<Rational>("3*x^2 + y^5", r), c).is_zero());
    CHECK(act(parse_poly<Rational>("x", r), C("x*y", r)) == C("y", r));
    CHECK(act(parse_poly<Rational>("x*y^2", r), C("x*y", r)).is_zero());
    CHECK(act(parse_poly<Rational>("2", r), c) == c.scaled(Rational(2)));
    CHECK(act(parse_poly<Rational>("y", r), c) == C("y^4", r));
}

TEST_CASE("residue pairing") {
    RingPtr r = e12_ring();
    CohomClass<Rational> c = C("y^5 - 1/3*x^2", r);
    CHECK(residue_pairing(parse_poly<Rational>("x^2", r), c) == Rational(-1, 3));
    CHECK(residue_pairing(parse_poly<Rational>("y^5", r), c) == Rational(1));
    CHECK(residue_pairing(parse_poly<Rational>("x*y", r), c) == Rational(0));
    CHECK(residue_pairing(parse_poly<Rational>("6*x^2 + y^5", r), c) == Rational(-1));
}

TEST_CASE("the dual basis of the E12 point") {
    RingPtr r = e12_ring();
    DualData<Rational> d = dual_basis(e12_F(r));
    REQUIRE(d.mu() == 12);
    for (int i = 0; i < 12; ++i) CHECK(d.psi[i] == C(kE12Psi[i], r));

    std::vector<ExpVec> lambda{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {0, 3}, {1, 1},
                               {0, 4}, {1, 2}, {0, 5}, {1, 3}, {1, 4}, {1, 5}};
    CHECK(d.lambda == lambda);
    std::vector<ExpVec> lower{{2, 0}, {2, 1}, {0, 6}, {2, 2}, {0, 7}, {3, 0}};
    CHECK(d.lower == lower);
    CHECK(d.ell == ExpVec{3, 7});
    CHECK(d.m == ExpVec{4, 8});
    CHECK(d.exps.size() == 18);

    // every class is annihilated by every generator
    for (const auto& f : e12_F(r))
        for (const auto& c : d.psi) CHECK(act(f, c).is_zero());
}

TEST_CASE("dual basis is identical under both execution policies") {
    RingPtr r = e12_ring();
    DualBasisOptions ser{64, Exec::Serial}, par{64, Exec::Parallel};
    DualData<Rational> a = dual_basis(e12_F(r), ser);
    DualData<Rational> b = dual_basis(e12_F(r), par);
    REQUIRE(a.mu() == b.mu());
    for (int i = 0; i < a.mu(); ++i) CHECK(a.psi[i] == b.psi[i]);
}

TEST_CASE("degenerate inputs are rejected") {
    RingPtr r = e12_ring();
    // not a common zero of F
    CHECK_THROWS_AS(dual_basis<Rational>({parse_poly<Rational>("x + 1", r), parse_poly<Rational>("y", r)}),
                    MathError);
    // origin not isolated: everything on the y-axis is a zero
    DualBasisOptions tight;
    tight.max_total_degree = 12;
    CHECK_THROWS_AS(
        dual_basis<Rational>({parse_poly<Rational>("x^2", r), parse_poly<Rational>("x*y", r)}, tight),
        MathError);
    // order without a degree
    RingPtr lexr = make_ring({"x", "y"}, MonomialOrder::lex(2));
    CHECK_THROWS_AS(dual_basis<Rational>({parse_poly<Rational>("x", lexr), parse_poly<Rational>("y", lexr)}),
                    MathError);
}

TEST_CASE("head classification rejects bad bases") {
    RingPtr r = e12_ring();
    CHECK_THROWS_AS(head_data<Rational>(r, {C("1", r), C("1", r)}), MathError);
    // y appears as the head of one class and inside the tail of another
    CHECK_THROWS_AS(head_data<Rational>(r, {C("y", r), C("y^2 + y", r)}), MathError);
}

TEST_CASE("local normal form") {
    RingPtr r = e12_ring();
    DualData<Rational> d = dual_basis(e12_F(r));
    CHECK(local_normal_form(parse_poly<Rational>("x^2", r), d) ==
          parse_poly<Rational>("-1/3*y^5", r));
    CHECK(local_normal_form(parse_poly<Rational>("x*y^5", r), d) ==
          parse_poly<Rational>("x*y^5", r));  // already a head
    // idempotent on representatives
    Polynomial<Rational> h = parse_poly<Rational>("2 + x^2*y - 7*y^6", r);
    Polynomial<Rational> nf = local_normal_form(h, d);
    CHECK(local_normal_form(nf, d) == nf);
}

TEST_CASE("pairing against a truncated numerator") {
    RingPtr r = e12_ring();
    DualData<Rational> d = dual_basis(e12_F(r));
    BoxSeries<Rational> s{r, ExpVec{4, 8}, {}};
    s.coeff[ExpVec{0, 0}] = Rational(1);
    CHECK(residue_pairing(s, d.psi[0]) == Rational(1));
    CHECK(residue_pairing(s, d.psi[11]) == Rational(0));
    BoxSeries<Rational> small{r, ExpVec{1, 1}, {}};
    small.coeff[ExpVec{0, 0}] = Rational(1);
    CHECK_THROWS_AS(residue_pairing(small, d.psi[11]), MathError);
}

TEST_CASE("random staircases stay dual") {
    for (const auto& cs : corpus_cases(8, 401)) {
        DualData<Rational> d = dual_basis(cs.F);
        CHECK(d.mu() == cs.predicted_mu);
        for (const auto& f : cs.F)
            for (const auto& c : d.psi) CHECK(act(f, c).is_zero());
        // heads are a lower set
        std::set<ExpVec, ExpVec::LexLess> heads(d.lambda.begin(), d.lambda.end());
        for (const auto& a : d.lambda)
            for (int i = 0; i < a.size(); ++i)
                if (a[i] > 0) {
                    ExpVec p = a;
                    p[i] -= 1;
                    CHECK(heads.count(p) == 1);
                }
    }
}
