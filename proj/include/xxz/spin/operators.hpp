#pragma once

#include "xxz/algebra/cyclotomic3.hpp"
#include "xxz/algebra/matrix.hpp"

namespace xxz {

using MatW = RingMatrix<Cyclotomic3>;

// Local two-site basis order: up-up, up-down, down-up, down-down.
inline int local_index(bool up_a, bool up_b) { return (up_a ? 0 : 2) + (up_b ? 0 : 1); }

// Weights of R(z) at q = w, normalized so that a(1) = c1(1) = c2(1) = 1, b(1) = 0.
struct RWeights {
    Cyclotomic3 a, b, c1, c2;
};
RWeights r_weights(const Cyclotomic3& z);

MatW r_matrix(const Cyclotomic3& z);
// P R(z)
MatW r_check(const Cyclotomic3& z);
MatW permutation4();

// Temperley-Lieb generator on two sites and tau = -q - q^{-1} (= 1 at q = w).
MatW tl_block();
Cyclotomic3 tl_tau();

// Boundary phase theta of the twisted chain: 0, +2pi/3 or -2pi/3.
enum class Twist { none, plus, minus };

struct TwistSpec {
    Twist kind = Twist::none;

    // e^{i theta}: the phase picked up by sigma^+ across the boundary.
    Cyclotomic3 boundary_phase() const;
    // Omega = diag(e^{i theta/2}, e^{-i theta/2}) on the auxiliary space.
    Cyclotomic3 omega_up() const;
    Cyclotomic3 omega_down() const;
    MatW omega_matrix() const;
};

TwistSpec default_twist(int N);

// Kronecker embedding of a 4x4 two-site operator acting on sites a, b (1-based)
// of an n-site chain; a need not be adjacent to b.
MatW embed_two_site(const MatW& op, int n, int a, int b);
MatW embed_one_site(const MatW& op, int n, int a);
MatW kron(const MatW& x, const MatW& y);

// Full-space TL generator e_i acting on sites i, i+1.
MatW tl_generator(int N, int i);

}  // namespace xxz
