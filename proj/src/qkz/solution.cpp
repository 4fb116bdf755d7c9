#include "xxz/qkz/solution.hpp"

#include "xxz/algebra/json_io.hpp"

namespace xxz {

int delta_mu(Mu mu) { return mu == Mu::plus ? 1 : 0; }

std::string mu_label(Mu mu) {
    switch (mu) {
        case Mu::e: return "e";
        case Mu::plus: return "+";
        case Mu::minus: return "-";
    }
    return "?";
}

Mu parse_mu(const std::string& s) {
    if (s == "e") return Mu::e;
    if (s == "+" || s == "plus") return Mu::plus;
    if (s == "-" || s == "minus") return Mu::minus;
    throw ParseError("unknown mu '" + s + "'");
}

bool mu_matches(Mu mu, int N) { return (mu == Mu::e) == (N % 2 == 0) && N >= 1; }

void check_parity(Mu mu, int N) {
    if (!mu_matches(mu, N))
        throw AlgebraError("mu=" + mu_label(mu) + " does not match N=" + std::to_string(N));
}

int mu_ups(Mu mu, int N) { return N / 2 + delta_mu(mu); }

RosterPtr z_roster(int N) { return make_roster(numbered("z", 1, N)); }

template <class C>
nlohmann::json solution_to_json(const QkzSolution<C>& sol) {
    nlohmann::json j;
    j["N"] = sol.N;
    j["mu"] = mu_label(sol.mu);
    j["ring"] = QRing<C>::name;
    nlohmann::json comps = nlohmann::json::object();
    for (const auto& [bits, p] : sol.components) comps[SpinConfig{sol.N, bits}.str()] = poly_to_json(p);
    j["components"] = comps;
    return j;
}

template nlohmann::json solution_to_json(const QkzSolution<GenericQ>&);
template nlohmann::json solution_to_json(const QkzSolution<Cyclotomic3>&);

}  // namespace xxz
