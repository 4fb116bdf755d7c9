#pragma once

#include "xxz/algebra/multipoly.hpp"

#include <json.hpp>

namespace xxz {

template <class C>
struct ScalarCodec {
    static C parse(const std::string& s) { return QRing<C>::parse(s); }
};

// {vars: [...], terms: [{exp: [...], coeff: "..."}]}, terms in increasing monomial order.
template <class C>
nlohmann::json poly_to_json(const MultiPoly<C>& p) {
    nlohmann::json j;
    j["vars"] = p.roster() ? *p.roster() : Roster{};
    j["terms"] = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> exp(m.e.begin(), m.e.begin() + p.nvars());
        j["terms"].push_back({{"exp", exp}, {"coeff", Ring<C>::str(c)}});
    }
    return j;
}

template <class C>
MultiPoly<C> poly_from_json(const nlohmann::json& j) {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    RosterPtr r = make_roster(vars);
    MultiPoly<C> p(r);
    for (const auto& t : j.at("terms")) {
        auto exp = t.at("exp").get<std::vector<int>>();
        if (exp.size() != vars.size()) throw ParseError("exponent vector length mismatch");
        Monomial m;
        for (std::size_t i = 0; i < exp.size(); ++i) m.e[i] = static_cast<std::int16_t>(exp[i]);
        p.add_term(m, ScalarCodec<C>::parse(t.at("coeff").get<std::string>()));
    }
    return p;
}

}  // namespace xxz
