#pragma once

#include "xxz/exec.hpp"
#include "xxz/spin/operators.hpp"
#include "xxz/spin/state.hpp"

#include <cstdint>
#include <vector>

namespace xxz {

// One popcount block of an operator on the chain; basis ascending in bits.
struct SectorMatrix {
    int N = 0;
    int ups = 0;
    std::vector<std::uint32_t> basis;
    MatW m;
};

// T(y) = tr_0 R_{01}(y/z_1) ... R_{0N}(y/z_N) Omega_0 restricted to one sector.
// Each column is the auxiliary-space monodromy applied to a basis state; columns
// are independent and run in parallel under Exec::parallel.
SectorMatrix transfer_matrix_sector(const Cyclotomic3& y, const std::vector<Cyclotomic3>& z, const TwistSpec& twist,
                                    int ups, Exec exec = Exec::parallel);

// Full 2^N matrix assembled from all sectors.
MatW transfer_matrix(const Cyclotomic3& y, const std::vector<Cyclotomic3>& z, const TwistSpec& twist,
                     Exec exec = Exec::parallel);

enum class Boundary { periodic, twisted };

// H = -1/2 sum_i [sx sx + sy sy + Delta sz sz], Delta = -1/2. On the twisted
// chain the boundary hop sigma^+_N sigma^-_1 carries e^{i theta}, its partner
// e^{-i theta}; this is the sign that commutes with T(y|1, theta).
MatW hamiltonian(int N, Boundary boundary);
MatW sz_total(int N);

}  // namespace xxz
