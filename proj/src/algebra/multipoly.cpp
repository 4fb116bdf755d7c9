#include "xxz/algebra/multipoly.hpp"

namespace xxz {

RosterPtr make_roster(std::vector<std::string> names) {
    if (names.size() > static_cast<std::size_t>(kMaxVars)) throw AlgebraError("too many variables");
    return std::make_shared<const Roster>(std::move(names));
}

std::vector<std::string> numbered(std::string_view prefix, int from, int to) {
    std::vector<std::string> out;
    for (int i = from; i <= to; ++i) out.push_back(std::string(prefix) + std::to_string(i));
    return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

template class MultiPoly<GenericQ>;
template class MultiPoly<Cyclotomic3>;

}  // namespace xxz
