#include <doctest.h>

#include "locres/json_io.hpp"
#include "locres/problem.hpp"

using namespace locres;

TEST_CASE("problem files parse") {
    const char* text =
        "# gradient of x^3 + y^7 + x*y^5\n"
        "vars: x, y\n"
        "weights: 7, 3\n"
        "\n"
        "F: 3*x^2 + y^5 ; 5*x*y^4 + 7*y^6   # two generators\n"
        "h: 1 + x*y^5\n";
    ProblemFile pf = read_problem(text);
    CHECK(pf.vars == std::vector<std::string>{"x", "y"});
    CHECK(pf.params.empty());
    CHECK(pf.weights == std::vector<long>{7, 3});
    CHECK(pf.order == "wdeglex");
    REQUIRE(pf.f_src.size() == 2);
    CHECK(pf.f_src[0] == "3*x^2 + y^5");
    CHECK(pf.f_src[1] == "5*x*y^4 + 7*y^6");
    REQUIRE(pf.h_src.has_value());
    CHECK(*pf.h_src == "1 + x*y^5");
    CHECK(!pf.hseries_src.has_value());

    pf = read_problem("vars: x\nparams: t\nF: x - t\nhseries: box(2): 0 = 1; 1 = -2\n");
    CHECK(pf.params == std::vector<std::string>{"t"});
    REQUIRE(pf.hseries_src.has_value());
    CHECK(*pf.hseries_src == "box(2): 0 = 1; 1 = -2");
}

TEST_CASE("problem files reject malformed input") {
    CHECK_THROWS_AS(read_problem("vars x, y\n"), InputError);
    CHECK_THROWS_AS(read_problem("vars: x\nvars: y\n"), InputError);
    CHECK_THROWS_AS(read_problem("flavor: sweet\n"), InputError);
    CHECK_THROWS_AS(read_problem("vars: x\nweights: two\n"), InputError);
    CHECK_THROWS_AS(read_problem("vars: x\nweights: 2z\n"), InputError);
    CHECK_THROWS_AS(read_problem("vars: x, 2y\n"), InputError);
    CHECK_THROWS_AS(read_problem("vars: x, x\n"), InputError);
    CHECK_THROWS_AS(read_problem("vars: x\nparams: x\n"), InputError);

    try {
        read_problem("vars: x\n\nF: x\nF: x^2\n");
        FAIL("duplicate key accepted");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }

    CHECK_THROWS_AS(read_problem_file("/no/such/problem/file.txt"), InputError);
}

TEST_CASE("series numerators parse") {
    RingPtr r = make_ring({"x", "y"}, MonomialOrder::wdeglex({7, 3}));
    BoxSeries<Rational> s = parse_box_series<Rational>("box(4,8): 0,0 = 1; 3,7 = 2/3; 1,1 = 0", r);
    CHECK(s.bound == ExpVec{4, 8});
    CHECK(s.get(ExpVec{0, 0}) == Rational(1));
    CHECK(s.get(ExpVec{3, 7}) == Rational(2, 3));
    CHECK(s.get(ExpVec{1, 1}) == Rational(0));
    CHECK(s.coeff.size() == 2);  // explicit zeros are dropped

    CHECK_THROWS_AS(parse_box_series<Rational>("cube(4,8): 0,0 = 1", r), ParseError);
    CHECK_THROWS_AS(parse_box_series<Rational>("box(4,8: 0,0 = 1", r), ParseError);
    CHECK_THROWS_AS(parse_box_series<Rational>("box(4): 0,0 = 1", r), ParseError);
    CHECK_THROWS_AS(parse_box_series<Rational>("box(0,8): 0,0 = 1", r), ParseError);
    CHECK_THROWS_AS(parse_box_series<Rational>("box(4,8) 0,0 = 1", r), ParseError);
    CHECK_THROWS_AS(parse_box_series<Rational>("box(4,8): 0,0", r), ParseError);
    CHECK_THROWS_AS(parse_box_series<Rational>("box(4,8): a,b = 1", r), ParseError);
    CHECK_THROWS_AS(parse_box_series<Rational>("box(4,8): 4,0 = 1", r), InputError);
    CHECK_THROWS_AS(parse_box_series<Rational>("box(4,8): 1,1 = 2; 1,1 = 3", r), InputError);
    CHECK_THROWS_AS(parse_box_series<Rational>("box(4,8): 1,1 = x", r), InputError);
}

TEST_CASE("instances come off problem files") {
    ProblemFile pf;
    pf.vars = {"x", "y"};
    pf.weights = {7, 3};
    pf.f_src = {"3*x^2 + y^5", "5*x*y^4 + 7*y^6"};
    pf.h_src = "x*y^5";
    Instance<Rational> inst = instantiate<Rational>(pf);
    CHECK(inst.ring->vars == pf.vars);
    CHECK(inst.F.size() == 2);
    REQUIRE(inst.h.has_value());
    CHECK(inst.h->lm() == ExpVec{1, 5});
    CHECK(!inst.ring->params);

    ProblemFile bad = pf;
    bad.vars.clear();
    CHECK_THROWS_AS(instantiate<Rational>(bad), InputError);
    bad = pf;
    bad.order = "lex";
    CHECK_THROWS_AS(instantiate<Rational>(bad), InputError);
    bad = pf;
    bad.weights = {7};
    CHECK_THROWS_AS(instantiate<Rational>(bad), InputError);
    bad = pf;
    bad.f_src.clear();
    CHECK_THROWS_AS(instantiate<Rational>(bad), InputError);
    bad = pf;
    bad.hseries_src = "box(4,8): 0,0 = 1";
    CHECK_THROWS_AS(instantiate<Rational>(bad), InputError);
    bad = pf;
    bad.params = {"t"};
    CHECK_THROWS_AS(instantiate<Rational>(bad), InputError);

    ProblemFile par = pf;
    par.params = {"t"};
    par.f_src = {"3*x^2 + t*y^5", "5*t*x*y^4 + 7*y^6"};
    Instance<RatFunc> pinst = instantiate<RatFunc>(par);
    REQUIRE(pinst.ring->params);
    CHECK(pinst.ring->params->vars == std::vector<std::string>{"t"});
    CHECK(pinst.F.size() == 2);
}

TEST_CASE("json emitters") {
    RingPtr r = make_ring({"x", "y"}, MonomialOrder::wdeglex({1, 1}));
    std::vector<Polynomial<Rational>> F = {parse_poly<Rational>("x", r),
                                           parse_poly<Rational>("y", r)};
    ResidueMap<Rational> M = residue_map(F);

    nlohmann::ordered_json jd = json_dual(M.dual, M.genericity);
    CHECK(jd["vars"] == nlohmann::ordered_json({"x", "y"}));
    CHECK(jd["mu"] == 1);
    CHECK(jd["box"] == nlohmann::ordered_json({1, 1}));
    CHECK(jd["lambda"] == nlohmann::ordered_json({"0,0"}));
    CHECK(jd["psi"][0]["head"] == "0,0");
    CHECK(jd["psi"][0]["terms"]["0,0"] == "1");
    CHECK(!jd.contains("genericity"));

    nlohmann::ordered_json jm = json_map(M);
    CHECK(jm["q"] == "1");
    CHECK(jm["coeff"]["0,0"] == "1");
    CHECK(jm["den"] == "1");

    std::string once = dump_json(jm);
    CHECK(once == dump_json(jm));
    CHECK(once.back() == '\n');
    CHECK(once.find("  \"vars\"") != std::string::npos);

    // keys of a class follow the term order, largest first
    RingPtr re = make_ring({"x", "y"}, MonomialOrder::wdeglex({7, 3}));
    DualData<Rational> d = dual_basis<Rational>(
        {parse_poly<Rational>("3*x^2 + y^5", re), parse_poly<Rational>("5*x*y^4 + 7*y^6", re)});
    nlohmann::ordered_json jc = json_class(d.psi[8]);
    CHECK(jc["head"] == "0,5");
    std::vector<std::string> keys;
    for (auto it = jc["terms"].begin(); it != jc["terms"].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"0,5", "2,0"});
    CHECK(jc["terms"]["2,0"] == "-1/3");

    // parametric outputs carry the genericity block
    RingPtr pr = make_param_ring({"t"});
    RingPtr rp = make_ring({"x", "y"}, MonomialOrder::wdeglex({7, 3}), pr);
    std::vector<Polynomial<RatFunc>> Fp = {parse_poly<RatFunc>("3*x^2 + t*y^5", rp),
                                           parse_poly<RatFunc>("5*t*x*y^4 + 7*y^6", rp)};
    ResidueMap<RatFunc> Mp = residue_map(Fp);
    nlohmann::ordered_json jp = json_map(Mp);
    REQUIRE(jp.contains("genericity"));
    CHECK(jp["genericity"].is_array());
}
