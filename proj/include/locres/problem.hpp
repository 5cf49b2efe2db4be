#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locres/io.hpp"
#include "locres/ratfunc.hpp"

namespace locres {

// Raw key/value content of a problem file, before the scalar field is known.
//
//   vars: x, y
//   params: t            (optional; switches the scalar field to Q(t))
//   weights: 7, 3        (optional; all ones when missing)
//   order: wdeglex       (optional; the only kind problem files accept)
//   F: 3*x^2 + y^5 ; 5*x*y^4 + 7*y^6
//   h: 1 + x*y^5         (optional numerator)
//   hseries: box(4,8): 0,0 = 1; 3,7 = 2/3    (optional truncated numerator)
//
// '#' starts a comment; blank lines are skipped.
struct ProblemFile {
    std::vector<std::string> vars;
    std::vector<std::string> params;
    std::vector<long> weights;
    std::string order = "wdeglex";
    std::vector<std::string> f_src;
    std::optional<std::string> h_src;
    std::optional<std::string> hseries_src;
};

ProblemFile read_problem(const std::string& text);
ProblemFile read_problem_file(const std::string& path);

template <class K>
struct Instance {
    RingPtr ring;
    std::vector<Polynomial<K>> F;
    std::optional<Polynomial<K>> h;
    std::optional<BoxSeries<K>> h_series;
};

// "box(4,8): 0,0 = 1; 3,7 = 2/3" -- a numerator known only inside the box.
// Coefficient text goes through the polynomial parser and must be constant.
template <class K>
BoxSeries<K> parse_box_series(const std::string& text, const RingPtr& ring) {
    const int n = ring->nvars();
    auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, 0); };
    std::size_t open = text.find('(');
    if (text.substr(0, open) != "box" || open == std::string::npos)
        throw fail("series numerator must start with box(...)");
    std::size_t close = text.find(')', open);
    if (close == std::string::npos) throw fail("unclosed box(...)");
    auto bound = ExpVec::from_key(text.substr(open + 1, close - open - 1), n);
    if (!bound) throw fail("bad box bounds");
    for (int i = 0; i < n; ++i)
        if ((*bound)[i] <= 0) throw fail("box bounds must be positive");
    std::size_t colon = text.find(':', close);
    if (colon == std::string::npos) throw fail("missing ':' after box(...)");

    BoxSeries<K> s{ring, *bound, {}};
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        std::size_t semi = rest.find(';', pos);
        std::string entry = rest.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        pos = semi == std::string::npos ? rest.size() : semi + 1;
        std::size_t a = entry.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t eq = entry.find('=');
        if (eq == std::string::npos) throw fail("series entry needs 'exponent = coefficient'");
        std::string lhs = entry.substr(0, eq);
        std::size_t b = lhs.find_last_not_of(" \t");
        auto g = ExpVec::from_key(lhs.substr(a, b - a + 1), n);
        if (!g) throw fail("bad exponent tuple in series entry");
        if (!s.in_box(*g)) throw InputError("series entry lies outside its own box");
        Polynomial<K> c = parse_poly<K>(entry.substr(eq + 1), ring);
        if (c.nterms() > 1 || (c.nterms() == 1 && !c.lm().is_zero()))
            throw InputError("series coefficient must be constant");
        if (s.coeff.count(*g)) throw InputError("duplicate series entry");
        if (!c.is_zero()) s.coeff[*g] = c.constant_term();
    }
    return s;
}

template <class K>
Instance<K> instantiate(const ProblemFile& pf) {
    if (pf.vars.empty()) throw InputError("problem file declares no variables");
    if (pf.order != "wdeglex") throw InputError("unsupported order: " + pf.order);
    std::vector<long> w = pf.weights;
    if (w.empty()) w.assign(pf.vars.size(), 1);
    if (w.size() != pf.vars.size()) throw InputError("weights do not match the variables");

    RingPtr params;
    if (!pf.params.empty()) params = make_param_ring(pf.params);
    if constexpr (!FieldTraits<K>::parametric) {
        if (params) throw InputError("parameters declared in a non-parametric context");
    }
    Instance<K> inst;
    inst.ring = make_ring(pf.vars, MonomialOrder::wdeglex(w), params);

    if (pf.f_src.empty()) throw InputError("problem file declares no generators");
    for (const auto& src : pf.f_src) inst.F.push_back(parse_poly<K>(src, inst.ring));
    if (pf.h_src && pf.hseries_src)
        throw InputError("give the numerator as h or as hseries, not both");
    if (pf.h_src) inst.h = parse_poly<K>(*pf.h_src, inst.ring);
    if (pf.hseries_src) inst.h_series = parse_box_series<K>(*pf.hseries_src, inst.ring);
    return inst;
}

}  // namespace locres
