#include "xxz/spin/ground_state.hpp"

#include "xxz/algebra/matrix.hpp"

namespace xxz {

namespace {

StateVector kernel_vector(const SectorMatrix& sm, const std::vector<Cyclotomic3>& v) {
    StateVector s;
    s.N = sm.N;
    s.sector = sm.ups;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.components[sm.basis[i]] = v[i];
    return s;
}

bool is_fixed(const SectorMatrix& sm, const StateVector& s) {
    for (std::size_t i = 0; i < sm.basis.size(); ++i) {
        Cyclotomic3 acc = 0;
        for (std::size_t j = 0; j < sm.basis.size(); ++j) acc += sm.m(i, j) * s.at(sm.basis[j]);
        if (!(acc == s.at(sm.basis[i]))) return false;
    }
    return true;
}

}  // namespace

std::vector<StateVector> ground_states(int N, const GroundStateOptions& opt) {
    std::vector<Cyclotomic3> ones(N, Cyclotomic3(1));
    TwistSpec twist = default_twist(N);
    std::vector<StateVector> found;
    for (int ups = 0; ups <= N; ++ups) {
        SectorMatrix t0 = transfer_matrix_sector(opt.y0, ones, twist, ups, opt.exec);
        MatW shifted = t0.m - MatW::identity(t0.basis.size());
        auto basis = kernel_basis(shifted);
        if (basis.empty()) continue;
        if (basis.size() > 1) throw AlgebraError("degenerate eigenvalue-1 space inside one sector");
        StateVector s = kernel_vector(t0, basis.front()).normalized_at(aligned_bits(ups));
        SectorMatrix t1 = transfer_matrix_sector(opt.y1, ones, twist, ups, opt.exec);
        if (!is_fixed(t1, s)) throw AlgebraError("eigenvector not shared by T(y1)");
        found.push_back(std::move(s));
    }
    std::size_t expected = N % 2 == 0 ? 1 : 2;
    if (found.size() != expected)
        throw AlgebraError("unexpected eigenvalue-1 multiplicity " + std::to_string(found.size()));
    for (const auto& s : found)
        if (std::abs(s.twice_sz()) != N % 2)
            throw AlgebraError("eigenvalue-1 vector in unexpected sector");
    return found;
}

StateVector ground_state(int N, int ups, const GroundStateOptions& opt) {
    for (auto& s : ground_states(N, opt))
        if (s.sector == ups) return s;
    throw AlgebraError("no ground state with " + std::to_string(ups) + " up spins");
}

Cyclotomic3 efp_homogeneous(const StateVector& state, int k, Pairing pairing) {
    if (k < 0 || k > state.N) throw AlgebraError("efp_homogeneous: k out of range");
    const std::uint32_t mask = aligned_bits(k);
    Cyclotomic3 num = 0, den = 0;
    for (const auto& [bits, x] : state.components) {
        Cyclotomic3 w = pairing == Pairing::conjugated ? x.conj() * x : x * x;
        den += w;
        if ((bits & mask) == mask) num += w;
    }
    return num / den;
}

}  // namespace xxz
