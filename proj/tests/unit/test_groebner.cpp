#include <doctest.h>

#include <random>

#include "locres/corpus.hpp"
#include "locres/groebner.hpp"
#include "locres/polygcd.hpp"

using namespace locres;

namespace {

RingPtr e12_ring() { return make_ring({"x", "y"}, MonomialOrder::wdeglex({7, 3})); }

std::vector<Polynomial<Rational>> e12_F(const RingPtr& r) {
    return {parse_poly<Rational>("3*x^2 + y^5", r), parse_poly<Rational>("5*x*y^4 + 7*y^6", r)};
}

Polynomial<Rational> P(const std::string& s, const RingPtr& r) {
    return parse_poly<Rational>(s, r);
}

void check_extended_identities(const ExtendedBasis<Rational>& B) {
    RingPtr ring = B.F[0].ring();
    for (std::size_t j = 0; j < B.G.size(); ++j) {
        Polynomial<Rational> acc(ring);
        for (std::size_t i = 0; i < B.F.size(); ++i) acc += B.R[j][i] * B.F[i];
        CHECK(acc == B.G[j]);
    }
    for (const auto& s : B.S) {
        Polynomial<Rational> acc(ring);
        for (std::size_t i = 0; i < B.F.size(); ++i) acc += s[i] * B.F[i];
        CHECK(acc.is_zero());
    }
    // heads pairwise indivisible, basis monic, ascending
    for (std::size_t i = 0; i < B.G.size(); ++i) {
        CHECK(B.G[i].lc() == Rational(1));
        if (i) CHECK(ring->order.less(B.G[i - 1].lm(), B.G[i].lm()));
        for (std::size_t j = 0; j < B.G.size(); ++j)
            if (i != j) CHECK(!B.G[j].lm().divides(B.G[i].lm()));
    }
    // Koszul syzygies reduce to zero over the syzygy basis
    for (std::size_t i = 0; i < B.F.size(); ++i) {
        for (std::size_t j = i + 1; j < B.F.size(); ++j) {
            PolyVec<Rational> k(B.F.size(), Polynomial<Rational>(ring));
            k[i] = B.F[j];
            k[j] = -B.F[i];
            PolyVec<Rational> nf = module_normal_form(k, B.S, ring->order);
            for (const auto& comp : nf) CHECK(comp.is_zero());
        }
    }
}

}  // namespace

TEST_CASE("two coordinates in the plane") {
    RingPtr r = make_ring({"x", "y"}, MonomialOrder::lex(2));
    ExtendedBasis<Rational> B = groebner_extended<Rational>({P("x", r), P("y", r)});
    REQUIRE(B.G.size() == 2);
    CHECK(B.G[0] == P("y", r));  // ascending under lex
    CHECK(B.G[1] == P("x", r));
    check_extended_identities(B);
    REQUIRE(B.S.size() == 1);
    CHECK(B.S[0][0] == P("y", r));
    CHECK(B.S[0][1] == P("-x", r));
}

TEST_CASE("reduction with cofactors") {
    RingPtr r = e12_ring();
    std::vector<Polynomial<Rational>> basis = {P("y^5 + 3*x^2", r), P("x*y^4 + 7/5*y^6", r)};
    std::mt19937_64 rng(47);
    for (int it = 0; it < 20; ++it) {
        std::vector<Term<Rational>> ts;
        for (int k = 0; k < 4; ++k)
            ts.push_back({ExpVec{(int32_t)(rng() % 5), (int32_t)(rng() % 8)},
                          Rational((long)(rng() % 9) - 4)});
        Polynomial<Rational> p = Polynomial<Rational>::from_terms(r, std::move(ts));
        ReduceResult<Rational> red = reduce_with_cofactors(p, basis);
        Polynomial<Rational> acc = red.nf;
        for (int i = 0; i < 2; ++i) acc += red.cof[i] * basis[i];
        CHECK(acc == p);
        CHECK(red.nf == normal_form(p, basis));
        for (const auto& t : red.nf.terms())
            for (const auto& b : basis) CHECK(!b.lm().divides(t.m));
    }
}

TEST_CASE("extended basis of the E12 generators") {
    RingPtr r = e12_ring();
    ExtendedBasis<Rational> B = groebner_extended(e12_F(r));
    check_extended_identities(B);
    for (const auto& f : e12_F(r)) CHECK(ideal_membership(f, B.G));
    CHECK(ideal_membership(P("x^2 + 1/3*y^5", r), B.G));
    CHECK(!ideal_membership(P("x^2", r), B.G));
    CHECK(!B.S.empty());
}

TEST_CASE("extended bases of random members") {
    for (const auto& cs : corpus_cases(6, 733)) {
        ExtendedBasis<Rational> B = groebner_extended(cs.F);
        check_extended_identities(B);
        for (const auto& f : cs.F) CHECK(ideal_membership(f, B.G));
    }
}

TEST_CASE("module normal forms") {
    RingPtr r = make_ring({"x", "y"}, MonomialOrder::lex(2));
    std::vector<PolyVec<Rational>> S = {{P("y", r), P("-x", r)}};
    PolyVec<Rational> koszul = {P("x*y", r), P("-x^2", r)};
    PolyVec<Rational> nf = module_normal_form(koszul, S, r->order);
    CHECK(nf[0].is_zero());
    CHECK(nf[1].is_zero());
    // term-over-position with x > y: the lead of (y, -x) sits in the second slot,
    // so (y^2, 0) is already reduced while (0, x^2) folds over to the first
    nf = module_normal_form<Rational>({P("y^2", r), Polynomial<Rational>(r)}, S, r->order);
    CHECK(nf[0] == P("y^2", r));
    CHECK(nf[1].is_zero());
    nf = module_normal_form<Rational>({Polynomial<Rational>(r), P("x^2", r)}, S, r->order);
    CHECK(nf[0] == P("x*y", r));
    CHECK(nf[1].is_zero());
}

TEST_CASE("module bases normalize deterministically") {
    RingPtr r = make_ring({"x", "y"}, MonomialOrder::lex(2));
    // redundant spanning set of the same module
    std::vector<PolyVec<Rational>> gens = {{P("2*y", r), P("-2*x", r)},
                                           {P("x*y", r), P("-x^2", r)},
                                           {Polynomial<Rational>(r), Polynomial<Rational>(r)}};
    std::vector<PolyVec<Rational>> S = module_groebner(gens, r);
    REQUIRE(S.size() == 1);
    CHECK(S[0][0] == P("y", r));
    CHECK(S[0][1] == P("-x", r));
}

TEST_CASE("elimination") {
    RingPtr r = make_ring({"u", "x"}, MonomialOrder::wdeglex({1, 1}));
    ElimResult<Rational> res = eliminate<Rational>({P("1 - u", r), P("x", r)}, {0});
    REQUIRE(res.eliminated.size() == 1);
    CHECK(res.eliminated[0] == P("x", r));
    REQUIRE(res.full.size() == 2);
    CHECK(res.full[0] == P("x", r));
    CHECK(res.full[1] == P("u - 1", r));

    res = eliminate<Rational>({P("u - x^2", r)}, {0});
    CHECK(res.eliminated.empty());
    REQUIRE(res.full.size() == 1);
    CHECK(res.full[0] == P("u - x^2", r));
}

TEST_CASE("intersection and quotient of monomial ideals") {
    RingPtr r = e12_ring();
    std::vector<Polynomial<Rational>> inter = ideal_intersect<Rational>({P("x", r)}, {P("y", r)});
    REQUIRE(inter.size() == 1);
    CHECK(inter[0] == P("x*y", r));

    std::vector<Polynomial<Rational>> quot = ideal_quotient<Rational>({P("x*y", r)}, {P("x", r)});
    REQUIRE(quot.size() == 1);
    CHECK(quot[0] == P("y", r));

    // quotient by a constant leaves the ideal alone
    quot = ideal_quotient<Rational>({P("x*y", r)}, {P("5", r)});
    REQUIRE(quot.size() == 1);
    CHECK(quot[0] == P("x*y", r));
}

TEST_CASE("the colon ideal of the E12 point") {
    RingPtr r = e12_ring();
    ExtendedBasis<Rational> B = groebner_extended(e12_F(r));
    DualData<Rational> d = dual_basis(e12_F(r));
    std::vector<Polynomial<Rational>> ann = annihilator_ideal(d);

    REQUIRE(ann.size() == 4);
    CHECK(ann[0] == P("y^5 + 3*x^2", r));
    CHECK(ann[1] == P("x*y^4 - 21/5*x^2*y", r));
    CHECK(ann[2] == P("x^3 + 7/5*x^2*y^2", r));
    CHECK(ann[3] == P("x^2*y^3", r));
    // bare staircase corners are not members; only full combinations are
    CHECK(!ideal_membership(P("x^2", r), ann));
    CHECK(!ideal_membership(P("y^6", r), ann));
    for (const auto& g : ann)
        for (const auto& c : d.psi) CHECK(act(g, c).is_zero());
    for (const auto& f : e12_F(r)) CHECK(ideal_membership(f, ann));

    std::vector<Polynomial<Rational>> q = ideal_quotient(B.G, ann);
    REQUIRE(q.size() == 2);
    CHECK(primitive_scaled(q[0]) == P("25*y + 147", r));
    CHECK(primitive_scaled(q[1]) == P("3125*x + 151263", r));
}

TEST_CASE("empty and zero generators") {
    RingPtr r = e12_ring();
    CHECK(groebner_basis(std::vector<Polynomial<Rational>>{}).empty());
    CHECK(groebner_basis<Rational>({Polynomial<Rational>(r)}).empty());
    ExtendedBasis<Rational> B = groebner_extended<Rational>({Polynomial<Rational>(r)});
    CHECK(B.G.empty());
    REQUIRE(B.S.size() == 1);
    CHECK(B.S[0][0] == P("1", r));
}
