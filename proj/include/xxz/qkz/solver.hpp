#pragma once

#include "xxz/exec.hpp"
#include "xxz/qkz/solution.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace xxz {

// Pairs (i < j) with i down and j up: distance from the aligned configuration.
int inversions(std::uint32_t bits, int N);

// Sector configurations ordered by inversion count, ties by bitstring.
std::vector<std::vector<std::uint32_t>> inversion_levels(int N, int ups);

// prod_{a <= i < j <= b} (q z_i - q^{-1} z_j)/(q - q^{-1})
template <class C>
MultiPoly<C> aligned_block(const RosterPtr& r, int a, int b) {
    MultiPoly<C> p = MultiPoly<C>::constant(r, C(1));
    int count = 0;
    for (int i = a; i <= b; ++i)
        for (int j = i + 1; j <= b; ++j) {
            p *= qlin<C>(r, 1, "z" + std::to_string(i), -1, "z" + std::to_string(j));
            ++count;
        }
    return p.scaled(QRing<C>::delta_pow(-count));
}

// Fully factorized component with all up spins first.
template <class C>
MultiPoly<C> base_component(Mu mu, int N, const RosterPtr& r) {
    check_parity(mu, N);
    const int n = N / 2;
    switch (mu) {
        case Mu::e: return aligned_block<C>(r, 1, n) * aligned_block<C>(r, n + 1, 2 * n);
        case Mu::minus: return aligned_block<C>(r, 1, n) * aligned_block<C>(r, n + 1, 2 * n + 1);
        case Mu::plus: {
            MultiPoly<C> p = aligned_block<C>(r, 1, n + 1) * aligned_block<C>(r, n + 2, 2 * n + 1);
            for (int i = n + 2; i <= 2 * n + 1; ++i) p *= MultiPoly<C>::var(r, "z" + std::to_string(i));
            return p;
        }
    }
    throw AlgebraError("unreachable");
}

// Psi_{..down up..}(z) from Psi_{..up down..} at sites i, i+1:
// [(q z_i - q^{-1} z_{i+1}) Psi_{ud}(z_i <-> z_{i+1}) - (q - q^{-1}) z_i Psi_{ud}(z)] / (z_{i+1} - z_i)
template <class C>
MultiPoly<C> lower_exchange(const MultiPoly<C>& ud, const RosterPtr& r, int i) {
    std::string zi = "z" + std::to_string(i), zj = "z" + std::to_string(i + 1);
    MultiPoly<C> num = qlin<C>(r, 1, zi, -1, zj) * ud.swap_vars(zi, zj) -
                       (MultiPoly<C>::var(r, zi) * ud).scaled(QRing<C>::delta_pow(1));
    return num.divide_exact(MultiPoly<C>::var(r, zj) - MultiPoly<C>::var(r, zi));
}

// Psi_{..up down..}(z) from Psi_{..down up..}, the inverse line:
// [(q z_i - q^{-1} z_{i+1}) Psi_{du}(z_i <-> z_{i+1}) - (q - q^{-1}) z_{i+1} Psi_{du}(z)] / (z_{i+1} - z_i)
template <class C>
MultiPoly<C> raise_exchange(const MultiPoly<C>& du, const RosterPtr& r, int i) {
    std::string zi = "z" + std::to_string(i), zj = "z" + std::to_string(i + 1);
    MultiPoly<C> num = qlin<C>(r, 1, zi, -1, zj) * du.swap_vars(zi, zj) -
                       (MultiPoly<C>::var(r, zj) * du).scaled(QRing<C>::delta_pow(1));
    return num.divide_exact(MultiPoly<C>::var(r, zj) - MultiPoly<C>::var(r, zi));
}

struct SolveOptions {
    Exec exec = Exec::parallel;
    // Re-derive every component from each admissible predecessor and compare.
    bool check_paths = true;
};

struct PathDisagreement : AlgebraError {
    using AlgebraError::AlgebraError;
};

// Triangular reconstruction from the base component, one inversion level at a time.
template <class C>
QkzSolution<C> solve_qkz(Mu mu, int N, const SolveOptions& opt = {}) {
    check_parity(mu, N);
    if (N > kMaxVars) throw AlgebraError("N too large");
    QkzSolution<C> sol;
    sol.N = N;
    sol.mu = mu;
    sol.roster = z_roster(N);
    const auto levels = inversion_levels(N, sol.ups());
    sol.components[levels.at(0).at(0)] = base_component<C>(mu, N, sol.roster);
    for (std::size_t lv = 1; lv < levels.size(); ++lv) {
        const auto& level = levels[lv];
        std::vector<MultiPoly<C>> out(level.size());
        for_each_index(opt.exec, level.size(), [&](std::size_t idx) {
            std::uint32_t c = level[idx];
            bool have = false;
            for (int i = 1; i < N; ++i) {
                // predecessor: site i down, i+1 up in c
                if ((c >> (i - 1) & 1u) || !(c >> i & 1u)) continue;
                std::uint32_t pred = c ^ (1u << (i - 1)) ^ (1u << i);
                MultiPoly<C> cand = lower_exchange(sol.components.at(pred), sol.roster, i);
                if (!have) {
                    out[idx] = std::move(cand);
                    have = true;
                    if (!opt.check_paths) break;
                } else if (!(cand == out[idx])) {
                    throw PathDisagreement("exchange paths disagree at " + SpinConfig{N, c}.str());
                }
            }
            if (!have) throw AlgebraError("no predecessor for " + SpinConfig{N, c}.str());
        });
        for (std::size_t idx = 0; idx < level.size(); ++idx) sol.components[level[idx]] = std::move(out[idx]);
    }
    return sol;
}

template <class C>
QkzSolution<Cyclotomic3> to_omega(const QkzSolution<C>& sol) {
    QkzSolution<Cyclotomic3> r;
    r.N = sol.N;
    r.mu = sol.mu;
    r.roster = sol.roster;
    for (const auto& [b, p] : sol.components)
        r.components[b] = p.template map_coeffs<Cyclotomic3>([](const C& c) { return QRing<C>::at_omega(c); });
    return r;
}

// q = w, z_i = 1.
template <class C>
StateVector specialize_homogeneous(const QkzSolution<C>& sol) {
    QkzSolution<Cyclotomic3> w = to_omega(sol);
    StateVector s;
    s.N = sol.N;
    s.sector = sol.ups();
    std::vector<Cyclotomic3> ones(sol.N, Cyclotomic3(1));
    for (const auto& [b, p] : w.components) {
        Cyclotomic3 v = p.evaluate(ones);
        if (!v.is_zero()) s.components[b] = v;
    }
    return s;
}

}  // namespace xxz
