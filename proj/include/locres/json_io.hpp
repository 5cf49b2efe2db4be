#pragma once

#include <json.hpp>

#include "locres/residue_core.hpp"

namespace locres {

inline std::string scalar_str(const Rational& c) { return c.str(); }
inline std::string scalar_str(const RatFunc& c) { return c.str(); }

// one rendered JSON form everywhere: two-space indent, trailing newline
std::string dump_json(const nlohmann::ordered_json& j);

template <class K>
nlohmann::ordered_json json_class(const CohomClass<K>& c) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& t : c.terms()) terms[t.m.key()] = scalar_str(t.c);
    return {{"head", c.head().key()}, {"terms", terms}};
}

template <class K>
nlohmann::ordered_json json_dual(const DualData<K>& d,
                                 const std::vector<std::string>& genericity) {
    nlohmann::ordered_json j;
    j["vars"] = d.ring->vars;
    j["mu"] = d.mu();
    nlohmann::ordered_json box = nlohmann::ordered_json::array();
    for (int i = 0; i < d.m.size(); ++i) box.push_back(d.m[i]);
    j["box"] = box;
    nlohmann::ordered_json lam = nlohmann::ordered_json::array();
    for (const auto& a : d.lambda) lam.push_back(a.key());
    j["lambda"] = lam;
    nlohmann::ordered_json psi = nlohmann::ordered_json::array();
    for (const auto& c : d.psi) psi.push_back(json_class(c));
    j["psi"] = psi;
    if (d.ring->params) j["genericity"] = genericity;
    return j;
}

template <class K>
nlohmann::ordered_json json_map(const ResidueMap<K>& M) {
    nlohmann::ordered_json j = json_dual(M.dual, M.genericity);
    j.erase("genericity");
    j["q"] = format_poly(M.trans.q);
    nlohmann::ordered_json coeff = nlohmann::ordered_json::object();
    for (int k = 0; k < M.dual.mu(); ++k)
        coeff[M.dual.lambda[k].key()] = scalar_str(M.coeff[k]);
    j["coeff"] = coeff;
    j["den"] = scalar_str(M.den);
    if (M.dual.ring->params) j["genericity"] = M.genericity;
    return j;
}

}  // namespace locres
