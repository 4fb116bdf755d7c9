#pragma once

#include "xxz/algebra/json_io.hpp"
#include "xxz/qkz/solver.hpp"

#include <json.hpp>

namespace xxz {

inline std::string yname(int i) { return "y" + std::to_string(i); }

// Psi with the first k spins up, sites 1..k renamed y_{first}..y_{first+k-1} and
// sites k+1..N renamed z_1..z_{N-k}, divided by prod_{i<j<=k}(q y_i - q^{-1} y_j).
template <class C>
struct ReducedState {
    Mu mu = Mu::e;
    int N = 0;
    int k = 0;
    RosterPtr roster;
    std::map<std::uint32_t, MultiPoly<C>> components;  // bits over the last N-k sites
    MultiPoly<C> divisor;                               // the exact factor removed
};

template <class C>
MultiPoly<C> aligned_factor(const RosterPtr& r, int first, int k) {
    MultiPoly<C> p = MultiPoly<C>::constant(r, C(1));
    for (int i = first; i < first + k; ++i)
        for (int j = i + 1; j < first + k; ++j) p *= qlin<C>(r, 1, yname(i), -1, yname(j));
    return p;
}

template <class C>
ReducedState<C> aligned_reduce(const QkzSolution<C>& sol, int k, int first = 1) {
    const int N = sol.N;
    if (k < 0 || k > sol.ups() || k > N) throw AlgebraError("aligned_reduce: k out of range");
    Roster names;
    std::map<std::string, std::string> rename;
    for (int i = 1; i <= k; ++i) {
        names.push_back(yname(first + i - 1));
        rename[zname(i)] = yname(first + i - 1);
    }
    for (int j = 1; j <= N - k; ++j) {
        names.push_back(zname(j));
        rename[zname(k + j)] = zname(j);
    }
    ReducedState<C> out;
    out.mu = sol.mu;
    out.N = N;
    out.k = k;
    out.roster = make_roster(names);
    out.divisor = aligned_factor<C>(out.roster, first, k);
    const std::uint32_t head = (1u << k) - 1u;
    for (const auto& [c, psi] : sol.components) {
        if ((c & head) != head) continue;
        MultiPoly<C> p = psi.embed(out.roster, rename);
        auto quotient = p.try_divide(out.divisor);
        if (!quotient)
            throw AlgebraError("aligned_reduce: component " + SpinConfig{N, c}.str() +
                               " is not divisible by the aligned factor");
        out.components[c >> k] = std::move(*quotient);
    }
    return out;
}

enum class EfpKind { plain, pseudo };

template <class C>
struct InhomEfp {
    Mu mu = Mu::e;
    EfpKind kind = EfpKind::plain;
    int N = 0;
    int k = 0;
    MultiPoly<C> poly;  // in y_1..y_{2k}, z_1..z_{N-k}

    std::string label() const {
        std::string m = mu_label(mu);
        if (kind == EfpKind::pseudo) m += "~";
        return "E^" + m + "_" + std::to_string(N) + "(" + std::to_string(k) + ")";
    }
};

inline RosterPtr efp_roster(int N, int k) {
    return make_roster(concat(numbered("y", 1, 2 * k), numbered("z", 1, N - k)));
}

namespace detail {

template <class C>
MultiPoly<C> z_weight(const RosterPtr& r, std::uint32_t bits, int sites) {
    Monomial m;
    for (int i = 1; i <= sites; ++i)
        if (bits >> (i - 1) & 1u) m.e[r->size() - sites + i - 1] = 1;
    return MultiPoly<C>::monomial(r, m, C(1));
}

template <class C>
MultiPoly<C> shift_exact(const MultiPoly<C>& p, const Monomial& m, const std::string& what) {
    MultiPoly<C> s = p.shifted(m);
    if (s.has_negative_exponents()) throw AlgebraError(what + " is not a polynomial");
    return s;
}

}  // namespace detail

// prod z^{-delta(mu)} (P(z) Psi(k; q^{-6} y_{k+1..2k}; z)^*, Psi(k; y_{1..k}; z)).
template <class C>
InhomEfp<C> inhom_efp(const QkzSolution<C>& sol, int k) {
    const int M = sol.N - k;
    RosterPtr r = efp_roster(sol.N, k);
    ReducedState<C> ket = aligned_reduce(sol, k, 1);
    ReducedState<C> bra = aligned_reduce(sol, k, k + 1);
    MultiPoly<C> sum(r);
    for (const auto& [c, v] : ket.components) {
        auto it = bra.components.find(c);
        if (it == bra.components.end()) continue;
        MultiPoly<C> b = it->second;
        for (int a = k + 1; a <= 2 * k; ++a) b = b.scale_var(yname(a), QRing<C>::q_pow(-6));
        b = b.star();
        sum += detail::z_weight<C>(r, c, M) * b.embed(r) * v.embed(r);
    }
    InhomEfp<C> e{sol.mu, EfpKind::plain, sol.N, k, sum};
    if (delta_mu(sol.mu)) {
        Monomial m;
        for (int i = 0; i < M; ++i) m.e[2 * k + i] = -1;
        e.poly = detail::shift_exact(sum, m, e.label());
    }
    return e;
}

// prod y_{k+1..2k}^{ups-k} prod z^{floor((N+1)/2)-1} (Psi(k; q^{-6} y^{-1}; z^{-1}), Psi(k; y; z)).
template <class C>
InhomEfp<C> inhom_pseudo_efp(const QkzSolution<C>& sol, int k) {
    const int M = sol.N - k;
    RosterPtr r = efp_roster(sol.N, k);
    ReducedState<C> ket = aligned_reduce(sol, k, 1);
    ReducedState<C> bra = aligned_reduce(sol, k, k + 1);
    MultiPoly<C> sum(r);
    for (const auto& [c, v] : ket.components) {
        auto it = bra.components.find(c);
        if (it == bra.components.end()) continue;
        MultiPoly<C> b = it->second;
        for (int a = k + 1; a <= 2 * k; ++a) b = b.scale_var(yname(a), QRing<C>::q_pow(-6)).invert_var(yname(a));
        for (int j = 1; j <= M; ++j) b = b.invert_var(zname(j));
        sum += b.embed(r) * v.embed(r);
    }
    const int h = (sol.N + 1) / 2;
    Monomial m;
    for (int a = k; a < 2 * k; ++a) m.e[a] = static_cast<std::int16_t>(sol.ups() - k);
    for (int j = 0; j < M; ++j) m.e[2 * k + j] = static_cast<std::int16_t>(h - 1);
    InhomEfp<C> e{sol.mu, EfpKind::pseudo, sol.N, k, {}};
    e.poly = detail::shift_exact(sum, m, e.label());
    return e;
}

template <class C>
InhomEfp<C> inhom_efp(Mu mu, int N, int k, EfpKind kind = EfpKind::plain, const SolveOptions& opt = {}) {
    QkzSolution<C> sol = solve_qkz<C>(mu, N, opt);
    return kind == EfpKind::plain ? inhom_efp(sol, k) : inhom_pseudo_efp(sol, k);
}

// Factorized values at the maximal number of aligned spins (k = N/2 for e,
// (N-1)/2 for -, (N+1)/2 for +). The aligned divisor carries no powers of
// q - q^{-1}, which leaves (q - q^{-1})^{-k(k-1)}, times (-1)^{k(k-1)/2} for the plain family, on top of the
// product; for + the prefactor prod z^{-1} leaves a single power of each z.
template <class C>
MultiPoly<C> efp_initial_value(Mu mu, int N, int k, EfpKind kind = EfpKind::plain) {
    RosterPtr r = efp_roster(N, k);
    int m = k;
    switch (mu) {
        case Mu::e: m = k; break;
        case Mu::minus: m = k + 1; break;
        case Mu::plus: m = k - 1; break;
    }
    MultiPoly<C> p = MultiPoly<C>::constant(r, C(1));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            p *= qlin<C>(r, 1, zname(i), -1, zname(j)) * qlin<C>(r, 1, zname(j), -1, zname(i));
    const C sign(kind == EfpKind::plain && (k * (k - 1) / 2) % 2 ? -1 : 1);
    p = p.scaled(sign * QRing<C>::delta_pow(-m * (m - 1) - k * (k - 1)));
    if (mu == Mu::plus)
        for (int i = 1; i <= m; ++i) p *= MultiPoly<C>::var(r, zname(i));
    return p;
}

// k at which the initial value applies, or -1.
inline int efp_initial_k(Mu mu, int N) {
    switch (mu) {
        case Mu::e: return N / 2;
        case Mu::minus: return (N - 1) / 2;
        case Mu::plus: return (N + 1) / 2;
    }
    return -1;
}

template <class C>
nlohmann::json efp_to_json(const InhomEfp<C>& e) {
    return {{"mu", mu_label(e.mu)},
            {"kind", e.kind == EfpKind::plain ? "plain" : "pseudo"},
            {"N", e.N},
            {"k", e.k},
            {"poly", poly_to_json(e.poly)}};
}

}  // namespace xxz
