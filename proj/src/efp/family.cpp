#include "xxz/efp/family.hpp"

#include "xxz/algebra/errors.hpp"

namespace xxz {

EfpFamily parse_family(const std::string& text) {
    if (text == "e") return EfpFamily::even;
    if (text == "e~" || text == "et" || text == "pseudo") return EfpFamily::even_pseudo;
    if (text == "-" || text == "minus") return EfpFamily::odd_minus;
    if (text == "+" || text == "plus") return EfpFamily::odd_plus;
    throw AlgebraError("unknown family '" + text + "' (expected e, e~, -, +)");
}

std::string family_name(EfpFamily f) {
    switch (f) {
        case EfpFamily::even: return "e";
        case EfpFamily::even_pseudo: return "e~";
        case EfpFamily::odd_minus: return "-";
        case EfpFamily::odd_plus: return "+";
    }
    return "?";
}

int family_size(EfpFamily f, int n) {
    return f == EfpFamily::even || f == EfpFamily::even_pseudo ? 2 * n : 2 * n + 1;
}

}  // namespace xxz
