#pragma once

#include "xxz/algebra/matrix.hpp"
#include "xxz/det/partition.hpp"
#include "xxz/exec.hpp"
#include "xxz/report/check.hpp"

#include <algorithm>
#include <numeric>

namespace xxz {

// prod_{i<j} (x_j - x_i) over the listed variables.
template <class C>
MultiPoly<C> vandermonde_plus(const RosterPtr& r, const std::vector<std::string>& xs) {
    MultiPoly<C> p = MultiPoly<C>::constant(r, C(1));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) p *= MultiPoly<C>::var(r, xs[j]) - MultiPoly<C>::var(r, xs[i]);
    return p;
}

// det(x_i^{e_j}) by the permutation sum; each term is a single monomial.
template <class C>
MultiPoly<C> alternant(const RosterPtr& r, const std::vector<std::string>& xs, const std::vector<int>& exps) {
    const std::size_t m = xs.size();
    if (exps.size() != m) throw AlgebraError("alternant: size mismatch");
    MultiPoly<C> out(r);
    if (m == 0) return MultiPoly<C>::constant(r, C(1));
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> pos(m);
    for (std::size_t i = 0; i < m; ++i) pos[i] = MultiPoly<C>(r).index_of(xs[i]);
    do {
        int inv = 0;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                if (idx[a] > idx[b]) ++inv;
        Monomial mono;
        for (std::size_t i = 0; i < m; ++i) mono.e[pos[i]] = static_cast<std::int16_t>(mono.e[pos[i]] + exps[idx[i]]);
        out.add_term(mono, inv % 2 ? C(-1) : C(1));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

// Schur polynomial as the bialternant det(x_i^{mu_j + m - j}) / prod_{i<j}(x_i - x_j).
template <class C>
MultiPoly<C> schur(const Partition& p, const RosterPtr& r, const std::vector<std::string>& xs) {
    const int m = static_cast<int>(xs.size());
    if (p.length() != m) throw AlgebraError("schur: number of variables differs from the partition length");
    std::vector<int> mu = p.descending();
    std::vector<int> exps(m);
    for (int j = 0; j < m; ++j) exps[j] = mu[j] + m - 1 - j;
    MultiPoly<C> a = alternant<C>(r, xs, exps);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) a = a.divide_exact(MultiPoly<C>::var(r, xs[i]) - MultiPoly<C>::var(r, xs[j]));
    return a;
}

// S_{lambda(m,r)}|_{z_i = w^{e} z_j} = (-w^{-e} z_j)^r prod_{l != i,j}(z_l - w^{-e} z_j) S_{lambda(m-2,r)}
// at the cube root of unity w, e = +-1.
CheckReport schur_staircase_recursion_check(int m, int r);

}  // namespace xxz
