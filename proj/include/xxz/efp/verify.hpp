#pragma once

#include "xxz/efp/inhom.hpp"
#include "xxz/qkz/verify.hpp"
#include "xxz/spin/ground_state.hpp"

namespace xxz {

template <class C>
CheckReport verify_efp_symmetry(const InhomEfp<C>& e) {
    CheckReport rep;
    const auto& p = e.poly;
    bool zs = true, ys = true;
    for (int j = 1; j < e.N - e.k; ++j)
        if (!(p.swap_vars(zname(j), zname(j + 1)) == p)) zs = false;
    for (int a = 1; a < 2 * e.k; ++a)
        if (!(p.swap_vars(yname(a), yname(a + 1)) == p)) ys = false;
    rep.add(e.label() + " z-symmetry", zs);
    rep.add(e.label() + " y-symmetry across all 2k", ys);
    rep.add(e.label() + " polynomial", !p.has_negative_exponents());
    return rep;
}

// Per-z degree bound used by the interpolation argument: 2n-1 (N=2n), 2n+1 (N=2n+1).
template <class C>
CheckReport verify_efp_degree(const InhomEfp<C>& e) {
    CheckReport rep;
    const int n = e.N / 2;
    const int bound = e.N % 2 == 0 ? 2 * n - 1 : 2 * n + 1;
    int worst = 0;
    for (int j = 1; j <= e.N - e.k; ++j) worst = std::max(worst, e.poly.degree(zname(j)));
    rep.add(e.label() + " per-z degree bound", worst <= bound, "<= " + std::to_string(bound), std::to_string(worst),
            Provenance::paper);
    return rep;
}

template <class C>
CheckReport verify_efp_initial(const InhomEfp<C>& e) {
    CheckReport rep;
    if (e.k != efp_initial_k(e.mu, e.N)) throw AlgebraError("verify_efp_initial: k is not the maximal value");
    poly_check(rep, e.label() + " factorized initial value", efp_initial_value<C>(e.mu, e.N, e.k, e.kind), e.poly,
               Provenance::paper);
    return rep;
}

// Odd sizes: prod z^{n+delta} Psi(z^{-1}) = P(z) Psi(z)^*.
template <class C>
CheckReport verify_odd_mirror(const QkzSolution<C>& sol) {
    CheckReport rep;
    const int N = sol.N;
    if (N % 2 == 0) throw AlgebraError("verify_odd_mirror: odd N only");
    const int power = N / 2 + delta_mu(sol.mu);
    bool ok = true;
    std::string bad;
    for (const auto& [c, psi] : sol.components) {
        MultiPoly<C> lhs = psi;
        Monomial m, w;
        for (int j = 1; j <= N; ++j) {
            lhs = lhs.invert_var(zname(j));
            m.e[j - 1] = static_cast<std::int16_t>(power);
            w.e[j - 1] = bit(c, j) ? 1 : 0;
        }
        lhs = lhs.shifted(m);
        MultiPoly<C> rhs = psi.star().shifted(w);
        if (!(lhs == rhs)) {
            if (ok) bad = SpinConfig{N, c}.str();
            ok = false;
        }
    }
    rep.add(mu_label(sol.mu) + " N=" + std::to_string(N) + " mirror identity for odd size", ok, "identity",
            ok ? "" : "fails at " + bad, Provenance::paper);
    return rep;
}

template <class C>
CheckReport verify_equality_tilde(const InhomEfp<C>& plain, const InhomEfp<C>& pseudo) {
    CheckReport rep;
    if (plain.N % 2 == 0 || plain.N != pseudo.N || plain.k != pseudo.k || plain.mu != pseudo.mu)
        throw AlgebraError("verify_equality_tilde: needs matching odd instances");
    const int k = plain.k;
    const int ups = plain.N / 2 + delta_mu(plain.mu);
    C unit = QRing<C>::q_pow(-6 * k * (ups - k)) * C((k * (k - 1) / 2) % 2 ? -1 : 1);
    poly_check(rep, plain.label() + " equals its pseudo version up to the unit (-1)^{k(k-1)/2} q^{-6k(ups-k)}",
               plain.poly.scaled(unit), pseudo.poly, Provenance::paper);
    return rep;
}

// E^+_{2n+1}(k; z \ z_last) = (-1)^n d^{-2n} prod z^{-1} E^e_{2n+2}(k; z)|_{z_last=0}.
template <class C>
CheckReport verify_zero_link(const InhomEfp<C>& odd_plus, const InhomEfp<C>& even) {
    CheckReport rep;
    const int n = (odd_plus.N - 1) / 2;
    const int k = odd_plus.k;
    if (odd_plus.mu != Mu::plus || even.mu != Mu::e || even.N != 2 * n + 2 || even.k != k ||
        odd_plus.kind != EfpKind::plain || even.kind != EfpKind::plain)
        throw AlgebraError("verify_zero_link: inconsistent instances");
    const int M = 2 * n + 1 - k;
    MultiPoly<C> rhs = even.poly.substitute(zname(M + 1), C(0));
    Monomial m;
    for (int j = 0; j < M; ++j) m.e[2 * k + j] = -1;
    rhs = rhs.shifted(m).scaled(QRing<C>::delta_pow(2 * n) * C(n % 2 ? -1 : 1));
    poly_check(rep, odd_plus.label() + " from " + even.label() + " at z_last=0", odd_plus.poly,
               rhs.embed(odd_plus.poly.roster()), Provenance::paper);
    return rep;
}

// E^e_{2n}(k; z \ z_last) = (-1)^n d^{2n} [z_last^{2n}] E^-_{2n+1}(k; z).
template <class C>
CheckReport verify_infinity_link(const InhomEfp<C>& even, const InhomEfp<C>& odd_minus) {
    CheckReport rep;
    const int n = even.N / 2;
    const int k = even.k;
    if (even.mu != Mu::e || odd_minus.mu != Mu::minus || odd_minus.N != 2 * n + 1 || odd_minus.k != k ||
        even.kind != EfpKind::plain || odd_minus.kind != EfpKind::plain)
        throw AlgebraError("verify_infinity_link: inconsistent instances");
    const int M = 2 * n + 1 - k;
    MultiPoly<C> rhs = odd_minus.poly.coefficient(zname(M), 2 * n);
    rhs = rhs.scaled(QRing<C>::delta_pow(2 * n) * C(n % 2 ? -1 : 1));
    poly_check(rep, even.label() + " from the leading z coefficient of " + odd_minus.label(), even.poly,
               rhs.embed(even.poly.roster()), Provenance::paper);
    return rep;
}

// E_N|_{z_{i+1}=q^2 z_i} = pref * E_{N-2}(z \ {z_i, z_{i+1}}) with
// pref = (-1)^k c_k prod_j (q y_j - q^{-1} z_i)/d prod_{l != i,i+1} (q z_l - q^{-1} z_i)(q^3 z_i - q^{-1} z_l)/d^2,
// c_k = q^{4k} (1+q^2) z_i for the plain family and q^{-2k} (1+q^{-2}) for the pseudo one.
template <class C>
CheckReport verify_efp_recursion(const InhomEfp<C>& big, const InhomEfp<C>& small, int i) {
    using P = MultiPoly<C>;
    CheckReport rep;
    const int k = big.k;
    const int M = big.N - k;
    if (small.N != big.N - 2 || small.k != k || small.mu != big.mu || small.kind != big.kind)
        throw AlgebraError("verify_efp_recursion: mismatched instances");
    if (big.kind == EfpKind::pseudo && big.N % 2) throw AlgebraError("verify_efp_recursion: pseudo family is even only");
    if (i < 1 || i >= M) throw AlgebraError("verify_efp_recursion: i out of range");
    P lhs = big.poly.substitute_var(zname(i + 1), zname(i), QRing<C>::q_pow(2));
    RosterPtr r = lhs.roster();
    const std::string zi = zname(i);
    const C sign(k % 2 ? -1 : 1);
    P pref = big.kind == EfpKind::plain
                 ? P::var(r, zi).scaled(sign * QRing<C>::q_pow(4 * k) * (C(1) + QRing<C>::q_pow(2)))
                 : P::constant(r, sign * QRing<C>::q_pow(-2 * k) * (C(1) + QRing<C>::q_pow(-2)));
    for (int j = 1; j <= 2 * k; ++j) pref *= qlin<C>(r, 1, yname(j), -1, zi).scaled(QRing<C>::delta_pow(-1));
    for (int l = 1; l <= M; ++l) {
        if (l == i || l == i + 1) continue;
        pref *= (qlin<C>(r, 1, zname(l), -1, zi) * qlin<C>(r, 3, zi, -1, zname(l)))
                    .scaled(QRing<C>::delta_pow(-2));
    }
    std::map<std::string, std::string> rename;
    for (int j = 1; j <= M - 2; ++j) rename[zname(j)] = zname(j < i ? j : j + 2);
    P rhs = pref * small.poly.embed(r, rename);
    poly_check(rep, big.label() + " -> " + small.label() + " recursion at i=" + std::to_string(i), rhs, lhs,
               Provenance::paper);
    return rep;
}

// Homogeneous limit q = w, z = y = 1 against the brute-force EFP of the
// transfer-matrix eigenvector: E(k)/E(0) times the extracted factor
// |w - w^{-1}|^{k(k-1)} = 3^{k(k-1)/2} (plain) or (w - w^{-1})^{k(k-1)} = (-3)^{k(k-1)/2} (pseudo).
template <class C>
CheckReport verify_homogeneous_limit(const InhomEfp<C>& ek, const InhomEfp<C>& e0, const StateVector& oracle) {
    CheckReport rep;
    auto at_one = [](const InhomEfp<C>& e) {
        auto w = e.poly.template map_coeffs<Cyclotomic3>([](const C& c) { return QRing<C>::at_omega(c); });
        return w.evaluate(std::vector<Cyclotomic3>(w.nvars(), Cyclotomic3(1)));
    };
    const int k = ek.k;
    const long tri = static_cast<long>(k) * (k - 1) / 2;
    Cyclotomic3 extraction = Cyclotomic3(ek.kind == EfpKind::plain ? 3 : -3).pow(tri);
    Cyclotomic3 got = at_one(ek) / at_one(e0) * extraction;
    Pairing pairing = ek.kind == EfpKind::plain ? Pairing::conjugated : Pairing::bilinear;
    Cyclotomic3 expected = efp_homogeneous(oracle, k, pairing);
    rep.add(ek.label() + " homogeneous limit vs brute-force EFP", got == expected, expected.str(), got.str());
    return rep;
}

}  // namespace xxz
