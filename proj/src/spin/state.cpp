#include "xxz/spin/state.hpp"

#include "xxz/algebra/errors.hpp"

namespace xxz {

std::string SpinConfig::str() const {
    std::string s(N, '0');
    for (int i = 0; i < N; ++i)
        if (bits >> i & 1u) s[i] = '1';
    return s;
}

SpinConfig SpinConfig::parse(const std::string& s) {
    SpinConfig c{static_cast<int>(s.size()), 0};
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') c.bits |= 1u << i;
        else if (s[i] != '0') throw ParseError("bad spin configuration '" + s + "'");
    }
    return c;
}

std::vector<std::uint32_t> sector_basis(int N, int ups) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t b = 0; b < (1u << N); ++b)
        if (std::popcount(b) == ups) out.push_back(b);
    return out;
}

StateVector StateVector::normalized_at(std::uint32_t bits) const {
    Cyclotomic3 c = at(bits);
    if (c.is_zero()) throw AlgebraError("normalizing at a vanishing component");
    Cyclotomic3 inv = c.inverse();
    StateVector r = *this;
    for (auto& [b, x] : r.components) x *= inv;
    return r;
}

bool proportional(const StateVector& a, const StateVector& b, Cyclotomic3* factor) {
    if (a.N != b.N) return false;
    std::optional<Cyclotomic3> c;
    for (const auto& [bits, x] : b.components) {
        if (x.is_zero()) continue;
        c = a.at(bits) / x;
        break;
    }
    if (!c || c->is_zero()) return false;
    for (const auto& [bits, x] : b.components)
        if (!(a.at(bits) == *c * x)) return false;
    for (const auto& [bits, x] : a.components)
        if (!(x == *c * b.at(bits))) return false;
    if (factor) *factor = *c;
    return true;
}

nlohmann::json to_json(const StateVector& v) {
    nlohmann::json j;
    j["N"] = v.N;
    j["sector"] = v.sector ? nlohmann::json(*v.sector) : nlohmann::json(nullptr);
    nlohmann::json comps = nlohmann::json::object();
    for (const auto& [bits, x] : v.components) {
        if (x.is_zero()) continue;
        comps[SpinConfig{v.N, bits}.str()] = x.str();
    }
    j["components"] = comps;
    return j;
}

StateVector state_from_json(const nlohmann::json& j) {
    StateVector v;
    v.N = j.at("N").get<int>();
    if (!j.at("sector").is_null()) v.sector = j.at("sector").get<int>();
    for (const auto& [key, val] : j.at("components").items()) {
        SpinConfig c = SpinConfig::parse(key);
        if (c.N != v.N) throw ParseError("configuration length mismatch");
        v.components[c.bits] = Cyclotomic3::parse(val.get<std::string>());
    }
    return v;
}

}  // namespace xxz
