#pragma once

#include <string>

namespace xxz {

// e: plain even size; e~: pseudo even size; -, +: the two odd-size ground states.
enum class EfpFamily { even, even_pseudo, odd_minus, odd_plus };

EfpFamily parse_family(const std::string& text);
std::string family_name(EfpFamily f);
// Chain length for parameter n: 2n or 2n+1.
int family_size(EfpFamily f, int n);
// Largest k with a nonzero EFP: n, or n+1 for +.
inline int family_max_k(EfpFamily f, int n) { return f == EfpFamily::odd_plus ? n + 1 : n; }

}  // namespace xxz
