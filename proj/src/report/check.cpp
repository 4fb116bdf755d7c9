#include "xxz/report/check.hpp"

namespace xxz {

const char* provenance_tag(Provenance p) {
    switch (p) {
        case Provenance::paper: return "PAPER";
        case Provenance::trivial: return "TRIVIAL";
        case Provenance::derived: return "DERIVED";
    }
    return "DERIVED";
}

}  // namespace xxz
