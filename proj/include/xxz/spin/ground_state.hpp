#pragma once

#include "xxz/exec.hpp"
#include "xxz/spin/state.hpp"
#include "xxz/spin/transfer.hpp"

#include <vector>

namespace xxz {

struct GroundStateOptions {
    Cyclotomic3 y0 = 2;
    Cyclotomic3 y1 = 3;
    Exec exec = Exec::parallel;
};

// Eigenvalue-1 eigenvectors of T(y0|1, default twist), one per sector in which
// they occur, re-verified at y1. Each vector is normalized to 1 on its
// configuration with all up spins first. Throws if the eigenspace is not one
// vector (even N, Sz = 0) or two (odd N, Sz = +-1/2).
std::vector<StateVector> ground_states(int N, const GroundStateOptions& opt = {});

// The vector for a given number of up spins.
StateVector ground_state(int N, int ups, const GroundStateOptions& opt = {});

enum class Pairing { conjugated, bilinear };

// sum over configurations starting with k up spins of |psi|^2 (conjugated) or
// psi^2 (bilinear), divided by the same sum over all configurations.
Cyclotomic3 efp_homogeneous(const StateVector& state, int k, Pairing pairing);

// Base configuration bits: first `ups` sites up.
inline std::uint32_t aligned_bits(int ups) { return (1u << ups) - 1u; }

}  // namespace xxz
