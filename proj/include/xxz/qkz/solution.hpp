#pragma once

#include "xxz/algebra/multipoly.hpp"
#include "xxz/spin/state.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace xxz {

// e: even N, Sz = 0.  plus/minus: odd N, Sz = +-1/2.
enum class Mu { e, plus, minus };

int delta_mu(Mu mu);
std::string mu_label(Mu mu);
Mu parse_mu(const std::string& s);
void check_parity(Mu mu, int N);
// Number of up spins in the sector of mu.
int mu_ups(Mu mu, int N);
// Mu of the even/odd partner needed by recursions and size links.
bool mu_matches(Mu mu, int N);

template <class C>
struct QkzSolution {
    int N = 0;
    Mu mu = Mu::e;
    RosterPtr roster;  // z1..zN
    std::map<std::uint32_t, MultiPoly<C>> components;

    int ups() const { return mu_ups(mu, N); }
    std::uint32_t base_bits() const { return (1u << ups()) - 1u; }
    MultiPoly<C> at(std::uint32_t bits) const {
        auto it = components.find(bits);
        return it == components.end() ? MultiPoly<C>(roster) : it->second;
    }
};

RosterPtr z_roster(int N);

inline std::string zname(int i) { return "z" + std::to_string(i); }

inline bool bit(std::uint32_t c, int site) { return c >> (site - 1) & 1u; }

// Linear form q^a x - q^b y with x, y variables of the roster.
template <class C>
MultiPoly<C> qlin(const RosterPtr& r, int a, const std::string& x, int b, const std::string& y) {
    return MultiPoly<C>::var(r, x).scaled(QRing<C>::q_pow(a)) - MultiPoly<C>::var(r, y).scaled(QRing<C>::q_pow(b));
}

template <class C>
nlohmann::json solution_to_json(const QkzSolution<C>& sol);

}  // namespace xxz
