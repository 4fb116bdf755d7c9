#include "xxz/qkz/solver.hpp"

#include "xxz/spin/state.hpp"

#include <algorithm>

namespace xxz {

int inversions(std::uint32_t bits, int N) {
    int count = 0, downs = 0;
    for (int i = 0; i < N; ++i) {
        if (bits >> i & 1u) count += downs;
        else ++downs;
    }
    return count;
}

std::vector<std::vector<std::uint32_t>> inversion_levels(int N, int ups) {
    std::vector<std::vector<std::uint32_t>> levels;
    for (std::uint32_t b : sector_basis(N, ups)) {
        std::size_t inv = static_cast<std::size_t>(inversions(b, N));
        if (levels.size() <= inv) levels.resize(inv + 1);
        levels[inv].push_back(b);
    }
    for (auto& level : levels)
        std::sort(level.begin(), level.end(),
                  [N](std::uint32_t a, std::uint32_t b) { return SpinConfig{N, a}.str() < SpinConfig{N, b}.str(); });
    return levels;
}

}  // namespace xxz
