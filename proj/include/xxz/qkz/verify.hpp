#pragma once

#include "xxz/qkz/solver.hpp"
#include "xxz/report/check.hpp"
#include "xxz/spin/ground_state.hpp"
#include "xxz/spin/operators.hpp"

#include <string>

namespace xxz {

std::string clip(std::string s, std::size_t n = 160);

template <class C>
void poly_check(CheckReport& rep, std::string name, const MultiPoly<C>& expected, const MultiPoly<C>& got,
                Provenance prov = Provenance::derived) {
    bool ok = expected == got;
    rep.add(std::move(name), ok, ok ? "" : clip(expected.str()), ok ? "" : clip(got.str()), prov);
}

// Local exchange data for sites i, i+1 at fixed other spins.
template <class C>
struct ExchangeWeights {
    MultiPoly<C> a, b, c1, c2, lhs;  // scaled by q z_i - q^{-1} z_{i+1}
};

template <class C>
ExchangeWeights<C> exchange_weights(const RosterPtr& r, int i) {
    using P = MultiPoly<C>;
    std::string zi = zname(i), zj = zname(i + 1);
    P vi = P::var(r, zi), vj = P::var(r, zj);
    return {qlin<C>(r, 1, zj, -1, zi), vj - vi, vj.scaled(QRing<C>::delta_pow(1)), vi.scaled(QRing<C>::delta_pow(1)),
            qlin<C>(r, 1, zi, -1, zj)};
}

// Rotation (combinatorial point only): Psi_{c_N c_1 .. c_{N-1}}(z) = phase * Psi_c(z_2, .., z_N, z_1),
// phase = 1 for odd N; for even N e^{i pi/3} when c_N is down and e^{-i pi/3} when up.
Cyclotomic3 rotation_phase(int N, bool last_up);

template <class C>
CheckReport verify_structure(const QkzSolution<C>& sol) {
    using P = MultiPoly<C>;
    CheckReport rep;
    const int N = sol.N;
    const RosterPtr& r = sol.roster;
    const std::string tag = mu_label(sol.mu) + " N=" + std::to_string(N) + " ";
    auto cfg = [N](std::uint32_t b) { return SpinConfig{N, b}.str(); };

    // base component and normalization
    poly_check(rep, tag + "base component", base_component<C>(sol.mu, N, r), sol.at(sol.base_bits()),
               Provenance::paper);
    std::vector<C> ones(N, C(1));
    C at_one = sol.at(sol.base_bits()).evaluate(ones);
    rep.add(tag + "base component is 1 at z=1", at_one == C(1), "1", Ring<C>::str(at_one));

    for (int i = 1; i < N; ++i) {
        const std::string zi = zname(i), zj = zname(i + 1);
        const std::uint32_t mi = 1u << (i - 1), mj = 1u << i;
        ExchangeWeights<C> w = exchange_weights<C>(r, i);
        P lin = qlin<C>(r, 1, zi, -1, zj);
        bool exchange_ok = true, esym_ok = true, div_ok = true, inverse_ok = true;
        std::string bad;
        for (const auto& [c, psi] : sol.components) {
            bool ui = c & mi, uj = c & mj;
            // (a) full exchange relation
            P rhs;
            if (ui == uj) {
                rhs = w.a * psi;
            } else if (ui) {
                rhs = w.c2 * psi + w.b * sol.at(c ^ mi ^ mj);
            } else {
                rhs = w.b * sol.at(c ^ mi ^ mj) + w.c1 * psi;
            }
            if (!(w.lhs * psi.swap_vars(zi, zj) == rhs)) {
                bad += (exchange_ok ? "" : ",") + cfg(c);
                exchange_ok = false;
            }
            if (ui == uj) {
                // (c) aligned pairs carry the factor q z_i - q^{-1} z_{i+1}
                if (!psi.try_divide(lin)) div_ok = false;
            } else if (ui) {
                const P& ud = psi;
                P du = sol.at(c ^ mi ^ mj);
                // (b) e_i-symmetry: both rows of e_i applied to the pair are symmetric
                P row1 = du - ud.scaled(QRing<C>::q());
                P row2 = ud - du.scaled(QRing<C>::q_pow(-1));
                if (!(row1 == row1.swap_vars(zi, zj)) || !(row2 == row2.swap_vars(zi, zj))) esym_ok = false;
                // the inverse exchange line recovers the up-down component
                auto back = raise_exchange(du, r, i);
                if (!(back == ud)) inverse_ok = false;
            }
        }
        std::string at_i = " i=" + std::to_string(i);
        rep.add(tag + "exchange relation" + at_i, exchange_ok, "identity", exchange_ok ? "" : "fails at " + bad);
        rep.add(tag + "e_i symmetry" + at_i, esym_ok);
        rep.add(tag + "aligned-pair divisibility" + at_i, div_ok);
        rep.add(tag + "inverse exchange line" + at_i, inverse_ok);
    }

    // degree bounds
    const int bound = N % 2 == 0 ? N / 2 - 1 : N / 2;
    bool deg_ok = true;
    int worst = 0;
    for (const auto& [c, psi] : sol.components)
        for (int v = 1; v <= N; ++v) {
            if (psi.is_zero()) continue;
            int d = psi.degree(v - 1);
            worst = std::max(worst, d);
            if (d > bound || psi.min_degree(v - 1) < 0) deg_ok = false;
        }
    rep.add(tag + "degree bound", deg_ok, "<= " + std::to_string(bound), std::to_string(worst), Provenance::paper);
    return rep;
}

// Rotation check at the combinatorial point.
template <class C>
CheckReport verify_rotation(const QkzSolution<C>& generic) {
    QkzSolution<Cyclotomic3> sol = to_omega(generic);
    CheckReport rep;
    const int N = sol.N;
    std::map<std::string, std::string> rename;
    for (int j = 1; j <= N; ++j) rename[zname(j)] = zname(j == N ? 1 : j + 1);
    const std::uint32_t mask = (1u << N) - 1u;
    bool ok = true;
    std::string bad;
    for (const auto& [c, psi] : sol.components) {
        bool last_up = bit(c, N);
        std::uint32_t src = ((c << 1) | (c >> (N - 1))) & mask;
        PolyW rotated = psi.embed(sol.roster, rename).scaled(rotation_phase(N, last_up));
        if (!(sol.at(src) == rotated)) {
            if (ok) bad = SpinConfig{N, c}.str();
            ok = false;
        }
    }
    rep.add(mu_label(sol.mu) + " N=" + std::to_string(N) + " rotation at q=w", ok, "identity",
            ok ? "" : "fails at " + bad);
    return rep;
}

// Psi_N at z_{i+1} = q^2 z_i against the prefactor times the v_i insertion of Psi_{N-2}.
template <class C>
CheckReport verify_recursion(const QkzSolution<C>& big, const QkzSolution<C>& small, int i) {
    using P = MultiPoly<C>;
    CheckReport rep;
    const int N = big.N;
    if (small.N != N - 2 || small.mu != big.mu) throw AlgebraError("verify_recursion: mismatched solutions");
    if (i < 1 || i >= N) throw AlgebraError("verify_recursion: i out of range");
    const std::string tag = mu_label(big.mu) + " N=" + std::to_string(N) + "->" + std::to_string(N - 2) +
                            " i=" + std::to_string(i) + " ";
    const std::string zi = zname(i);
    RosterPtr r;
    {
        Roster names = *big.roster;
        names.erase(names.begin() + i);
        r = make_roster(names);
    }
    std::map<std::string, std::string> rename;
    for (int j = 1; j <= N - 2; ++j) rename[zname(j)] = zname(j < i ? j : j + 2);

    const int f = i - big.ups();
    P pref = P::constant(r, (-QRing<C>::q()).pow(f));
    if (delta_mu(big.mu)) pref *= P::var(r, zi).scaled(QRing<C>::q_pow(2));
    int factors = 0;
    for (int j = 1; j < i; ++j, ++factors) pref *= qlin<C>(r, 1, zname(j), -1, zi);
    for (int j = i + 2; j <= N; ++j, ++factors) pref *= qlin<C>(r, 3, zi, -1, zname(j));
    pref = pref.scaled(QRing<C>::delta_pow(-factors));

    const std::uint32_t mi = 1u << (i - 1), mj = 1u << i;
    bool ok = true, image_ok = true;
    std::string bad;
    for (const auto& [c, psi] : big.components) {
        P lhs = psi.substitute_var(zname(i + 1), zi, QRing<C>::q_pow(2)).embed(r);
        bool ui = c & mi, uj = c & mj;
        P rhs(r);
        if (ui != uj) {
            // remove sites i, i+1
            std::uint32_t low = c & (mi - 1u), high = c >> (i + 1);
            std::uint32_t c_small = low | (high << (i - 1));
            P inner = small.at(c_small).embed(r, rename) * pref;
            rhs = ui ? inner : inner.scaled(-QRing<C>::q_pow(-1));
        }
        if (!(lhs == rhs)) {
            if (ok) bad = SpinConfig{N, c}.str();
            ok = false;
        }
        if (ui == uj && !lhs.is_zero()) image_ok = false;
        if (ui && !uj) {
            P du = big.at(c ^ mi ^ mj).substitute_var(zname(i + 1), zi, QRing<C>::q_pow(2)).embed(r);
            if (!(du == lhs.scaled(-QRing<C>::q_pow(-1)))) image_ok = false;
        }
    }
    rep.add(tag + "recursion", ok, "identity", ok ? "" : "fails at " + bad);
    rep.add(tag + "image in span of v_i insertions", image_ok);
    return rep;
}

// Size links: Psi^+_{2n+1} (x) e_down = (1-q^{-2})^n p^- Psi^e_{2n+2}|_{z_{2n+2}=0} and
// Psi^e_{2n} (x) e_down = (1-q^2)^n [z_{2n+1}^n] p^- Psi^-_{2n+1}.
template <class C>
CheckReport verify_size_links(const QkzSolution<C>& odd_plus, const QkzSolution<C>& even_big,
                              const QkzSolution<C>& even_small, const QkzSolution<C>& odd_minus) {
    CheckReport rep;
    const int n = even_small.N / 2;
    if (odd_plus.mu != Mu::plus || odd_plus.N != 2 * n + 1 || even_big.N != 2 * n + 2 || even_small.N != 2 * n ||
        odd_minus.mu != Mu::minus || odd_minus.N != 2 * n + 1)
        throw AlgebraError("verify_size_links: inconsistent sizes");
    const C one(1);
    {
        const int M = 2 * n + 2;
        C factor = (one - QRing<C>::q_pow(-2)).pow(n);
        bool ok = true;
        for (const auto& [c, psi] : even_big.components) {
            if (bit(c, M)) continue;
            auto restricted = psi.substitute(zname(M), C(0)).scaled(factor);
            if (!(restricted.embed(odd_plus.roster) == odd_plus.at(c))) ok = false;
        }
        for (const auto& [c, psi] : odd_plus.components)
            if (!even_big.components.count(c)) ok = false;
        rep.add("size link +" + std::to_string(2 * n + 1) + " <- e" + std::to_string(M) + " at z=0", ok, "identity",
                "", Provenance::paper);
    }
    {
        const int M = 2 * n + 1;
        C factor = (one - QRing<C>::q_pow(2)).pow(n);
        bool ok = true;
        for (const auto& [c, psi] : odd_minus.components) {
            if (bit(c, M)) continue;
            auto lead = psi.coefficient(zname(M), n).scaled(factor);
            if (!(lead.embed(even_small.roster) == even_small.at(c))) ok = false;
        }
        for (const auto& [c, psi] : even_small.components)
            if (!odd_minus.components.count(c)) ok = false;
        rep.add("size link e" + std::to_string(2 * n) + " <- -" + std::to_string(M) + " leading coefficient", ok,
                "identity", "", Provenance::paper);
    }
    return rep;
}

// The w-specialized solution against the transfer-matrix eigenvector.
template <class C>
CheckReport verify_kernel(const QkzSolution<C>& sol, Exec exec = Exec::parallel) {
    CheckReport rep;
    StateVector from_qkz = specialize_homogeneous(sol);
    GroundStateOptions opt;
    opt.exec = exec;
    StateVector oracle = ground_state(sol.N, sol.ups(), opt);
    Cyclotomic3 factor;
    bool ok = proportional(from_qkz, oracle, &factor);
    rep.add(mu_label(sol.mu) + " N=" + std::to_string(sol.N) + " w-specialization vs transfer-matrix kernel", ok,
            "proportional", ok ? "factor " + factor.str() : "not proportional");
    return rep;
}

}  // namespace xxz
