#include "xxz/qkz/verify.hpp"

namespace xxz {

std::string clip(std::string s, std::size_t n) {
    if (s.size() > n) s = s.substr(0, n) + "...";
    return s;
}

Cyclotomic3 rotation_phase(int N, bool last_up) {
    if (N % 2) return 1;
    TwistSpec tw = default_twist(N);
    return last_up ? tw.omega_down() : tw.omega_up();
}

}  // namespace xxz
