#pragma once

#include "xxz/det/schur.hpp"
#include "xxz/efp/family.hpp"

#include <optional>

namespace xxz {

// M^{(rho~, sigma~)}(r, s; y; z): rows z_i^{rho~_j} | 0, then 0 | z_i^{sigma~_j},
// then y_a^{rho~_j} | y_a^{sigma~_j}; both sequences have length r + s.
template <class C>
RingMatrix<MultiPoly<C>> script_m(const std::vector<int>& rho, const std::vector<int>& sigma, const RosterPtr& ro,
                                  const std::vector<std::string>& zs, const std::vector<std::string>& ys) {
    const std::size_t r = zs.size(), s2 = ys.size();
    if (s2 % 2) throw AlgebraError("script_m: odd number of y variables");
    const std::size_t w = r + s2 / 2;
    if (rho.size() != w || sigma.size() != w) throw AlgebraError("script_m: sequence length must be r + s");
    RingMatrix<MultiPoly<C>> m(2 * w, 2 * w);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < w; ++j) {
            m(i, j) = MultiPoly<C>::var(ro, zs[i], rho[j]);
            m(r + i, w + j) = MultiPoly<C>::var(ro, zs[i], sigma[j]);
        }
    for (std::size_t a = 0; a < s2; ++a)
        for (std::size_t j = 0; j < w; ++j) {
            m(2 * r + a, j) = MultiPoly<C>::var(ro, ys[a], rho[j]);
            m(2 * r + a, w + j) = MultiPoly<C>::var(ro, ys[a], sigma[j]);
        }
    return m;
}

// prod_{i<j}(z_i - z_j)^2 prod_{i<j}(y_i - y_j) prod_{i,a}(z_i - y_a)
template <class C>
MultiPoly<C> script_s_denominator(const RosterPtr& ro, const std::vector<std::string>& zs,
                                  const std::vector<std::string>& ys) {
    using P = MultiPoly<C>;
    P d = P::constant(ro, C(1));
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j) d *= (P::var(ro, zs[i]) - P::var(ro, zs[j])).pow(2);
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) d *= P::var(ro, ys[i]) - P::var(ro, ys[j]);
    for (const auto& z : zs)
        for (const auto& y : ys) d *= P::var(ro, z) - P::var(ro, y);
    return d;
}

// det M by fraction-free elimination, divided by the denominator.
template <class C>
MultiPoly<C> script_s_det(const std::vector<int>& rho, const std::vector<int>& sigma, const RosterPtr& ro,
                          const std::vector<std::string>& zs, const std::vector<std::string>& ys,
                          Exec exec = Exec::serial) {
    MultiPoly<C> d = det_bareiss(script_m<C>(rho, sigma, ro, zs, ys), exec);
    auto out = d.try_divide(script_s_denominator<C>(ro, zs, ys));
    if (!out) throw AlgebraError("script_s_det: determinant not divisible by the denominator");
    return *out;
}

// Laplace expansion along the first r + s columns. Only row sets holding all
// of the first r rows contribute; each such set is {1..r} plus y-rows I.
// The minors are alternants V+(z, y_I) S_rho(z, y_I), with V+(x) = prod_{i<j}(x_j - x_i).
// After the common factors cancel against the denominator:
//   S = (-1)^{s(2s-1)} sum_I eps(I) V+(y_I) V+(y_I^c) S_rho(z, y_I) S_sigma(z, y_I^c) / V+(y).
template <class C>
MultiPoly<C> script_s_laplace(const std::vector<int>& rho, const std::vector<int>& sigma, const RosterPtr& ro,
                              const std::vector<std::string>& zs, const std::vector<std::string>& ys,
                              Exec exec = Exec::serial) {
    using P = MultiPoly<C>;
    const int r = static_cast<int>(zs.size()), s2 = static_cast<int>(ys.size()), s = s2 / 2;
    const Partition prho = partition_from_sequence(rho), psig = partition_from_sequence(sigma);
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t mask = 0; mask < (1u << s2); ++mask)
        if (std::popcount(mask) == s) subsets.push_back(mask);
    std::vector<P> terms(subsets.size());
    for_each_index(exec, subsets.size(), [&](std::size_t t) {
        std::uint32_t mask = subsets[t];
        std::vector<std::string> xi = zs, xc = zs, yi, yc;
        long row_sum = static_cast<long>(r) * (r + 1) / 2;
        for (int a = 0; a < s2; ++a) {
            if (mask >> a & 1u) {
                yi.push_back(ys[a]);
                row_sum += 2 * r + a + 1;
            } else {
                yc.push_back(ys[a]);
            }
        }
        xi.insert(xi.end(), yi.begin(), yi.end());
        xc.insert(xc.end(), yc.begin(), yc.end());
        const long col_sum = static_cast<long>(r + s) * (r + s + 1) / 2;
        P term = vandermonde_plus<C>(ro, yi) * vandermonde_plus<C>(ro, yc) * schur<C>(prho, ro, xi) *
                 schur<C>(psig, ro, xc);
        terms[t] = (row_sum + col_sum) % 2 ? -term : term;
    });
    P sum(ro);
    for (auto& t : terms) sum += t;
    if ((s * (s2 - 1)) % 2) sum = -sum;
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
            auto out = sum.try_divide(P::var(ro, ys[j]) - P::var(ro, ys[i]));
            if (!out) throw AlgebraError("script_s_laplace: sum not divisible by the y Vandermonde");
            sum = std::move(*out);
        }
    return sum;
}

// c * monomial with a = (c * monomial) * b, if such a factor exists.
template <class C>
std::optional<MultiPoly<C>> monomial_ratio(const MultiPoly<C>& a, const MultiPoly<C>& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    const auto& [ma, ca] = *a.terms().rbegin();
    const auto& [mb, cb] = *b.terms().rbegin();
    RosterPtr ro = a.roster() ? a.roster() : b.roster();
    MultiPoly<C> f = MultiPoly<C>::monomial(ro, ma - mb, Ring<C>::divide(ca, cb));
    if (f * b == a) return f;
    return std::nullopt;
}

// S^{(lambda~(r1), lambda~(r2))}(m, k) on variables z1..zm, y1..y2k.
PolyW staircase_script_s(int r1, int r2, int m, int k, const RosterPtr& ro, Exec exec = Exec::serial);
RosterPtr staircase_roster(int m, int k);

// Specialization z_i = w^e z_j for both e and all i != j, against the
// recursion to size m - 2 (at the cube root of unity).
CheckReport script_s_recursion_check(int r1, int r2, int m, int k);

// 3-power prefactor times the staircase S (times prod z^{-1} where stated),
// on the efp roster y1..y2k, z1..z_{N-k}.
PolyW efp_det_rep(EfpFamily f, int n, int k, Exec exec = Exec::serial);

// E from the qKZ route at the cube root of unity (pseudo for even_pseudo).
PolyW efp_core_at_omega(EfpFamily f, int n, int k);

struct DetRepComparison {
    EfpFamily family;
    int n = 0, k = 0;
    bool monomial = false;
    PolyW factor;  // E_core = factor * rep
    std::string str() const;
};

DetRepComparison compare_det_rep(EfpFamily f, int n, int k, Exec exec = Exec::serial);

// Measured constant c with E_core = c * det rep (no monomial part).
Cyclotomic3 det_rep_calibration(EfpFamily f, int n, int k);

}  // namespace xxz
