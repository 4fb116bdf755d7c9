#pragma once

#include "xxz/algebra/cyclotomic3.hpp"

#include <json.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xxz {

// bit i set <=> spin up at site i+1.
struct SpinConfig {
    int N = 0;
    std::uint32_t bits = 0;

    bool up(int site) const { return bits >> (site - 1) & 1u; }
    int ups() const { return std::popcount(bits); }
    // '1' = up, site 1 first.
    std::string str() const;
    static SpinConfig parse(const std::string& s);

    friend auto operator<=>(const SpinConfig&, const SpinConfig&) = default;
};

// All N-site configurations with the given number of up spins, ascending bits.
std::vector<std::uint32_t> sector_basis(int N, int ups);

struct StateVector {
    int N = 0;
    std::optional<int> sector;  // number of up spins
    std::map<std::uint32_t, Cyclotomic3> components;

    Cyclotomic3 at(std::uint32_t bits) const {
        auto it = components.find(bits);
        return it == components.end() ? Cyclotomic3(0) : it->second;
    }
    // Multiplies by the inverse of the given component so that it becomes 1.
    StateVector normalized_at(std::uint32_t bits) const;
    // Sz = ups - N/2, reported as 2*Sz.
    int twice_sz() const { return sector ? 2 * *sector - N : 0; }
};

// true iff a = c * b for some nonzero c; c is returned through factor.
bool proportional(const StateVector& a, const StateVector& b, Cyclotomic3* factor = nullptr);

nlohmann::json to_json(const StateVector& v);
StateVector state_from_json(const nlohmann::json& j);

}  // namespace xxz
