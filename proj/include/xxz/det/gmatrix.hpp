#pragma once

#include "xxz/algebra/cyclo_product.hpp"
#include "xxz/algebra/matrix.hpp"
#include "xxz/algebra/rational.hpp"
#include "xxz/report/check.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace xxz {

template <class T>
struct GMatrixSpec {
    int l = 0, r = 0, s = 0;
    std::vector<T> v;
    T lambda{1}, a1{1}, a2{1};

    int size() const { return 2 * (l + r + s); }
};

namespace detail {

template <class T>
T ipow(const T& x, long e) {
    T out = Ring<T>::one();
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out = out * x;
    return e < 0 ? Ring<T>::divide(Ring<T>::one(), out) : out;
}

inline long binom2(long n) { return n * (n - 1) / 2; }

}  // namespace detail

// Rows j..j+m-1 of the power matrix of `v`, written at (row0, col0).
template <class T>
void put_power_block(RingMatrix<T>& m, std::size_t row0, std::size_t col0, int rows, int first_power,
                     const std::vector<T>& v) {
    for (int i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(row0 + i, col0 + j) = detail::ipow(v[j], first_power + i);
}

template <class T>
std::vector<T> geometric_columns(const T& a, const T& lambda, int count) {
    std::vector<T> out;
    T x = a;
    for (int i = 0; i < count; ++i) {
        out.push_back(x);
        x = x * lambda;
    }
    return out;
}

template <class T>
void check_gspec(const GMatrixSpec<T>& g) {
    if (g.l < 0 || g.s < 0 || g.l + g.r < 0 || g.r + g.s < 0) throw AlgebraError("G matrix: invalid block sizes");
    if (static_cast<int>(g.v.size()) != g.l) throw AlgebraError("G matrix: need exactly l values v");
}

// [D(v) D(a1 lam) 0 0; 0 0 D(v) D(a2 lam); D^{(l+r)}(v) D^{(l+r)}(a1 lam) D^{(l+r)}(v) D^{(l+r)}(a2 lam)]
template <class T>
RingMatrix<T> g_matrix(const GMatrixSpec<T>& g) {
    check_gspec(g);
    const int h = g.l + g.r + g.s, top = g.l + g.r;
    const auto c1 = geometric_columns(g.a1, g.lambda, g.r + g.s), c2 = geometric_columns(g.a2, g.lambda, g.r + g.s);
    RingMatrix<T> m(2 * h, 2 * h);
    put_power_block(m, 0, 0, top, 0, g.v);
    put_power_block(m, 0, g.l, top, 0, c1);
    put_power_block(m, top, h, top, 0, g.v);
    put_power_block(m, top, h + g.l, top, 0, c2);
    put_power_block(m, 2 * top, 0, 2 * g.s, top, g.v);
    put_power_block(m, 2 * top, g.l, 2 * g.s, top, c1);
    put_power_block(m, 2 * top, h, 2 * g.s, top, g.v);
    put_power_block(m, 2 * top, h + g.l, 2 * g.s, top, c2);
    return m;
}

// [D(v) D(a1 lam) 0 0; 0 D_{l+r+2s}(a1 lam) D_{l+r+2s}(v) D_{l+r+2s}(a2 lam)]
template <class T>
RingMatrix<T> g_tilde_matrix(const GMatrixSpec<T>& g) {
    check_gspec(g);
    const int h = g.l + g.r + g.s, top = g.l + g.r;
    const auto c1 = geometric_columns(g.a1, g.lambda, g.r + g.s), c2 = geometric_columns(g.a2, g.lambda, g.r + g.s);
    RingMatrix<T> m(2 * h, 2 * h);
    put_power_block(m, 0, 0, top, 0, g.v);
    put_power_block(m, 0, g.l, top, 0, c1);
    put_power_block(m, top, g.l, top + 2 * g.s, 0, c1);
    put_power_block(m, top, h, top + 2 * g.s, 0, g.v);
    put_power_block(m, top, h + g.l, top + 2 * g.s, 0, c2);
    return m;
}

// G~ reached from G by elementary operations; `sign` accumulates the effect
// of each operation on the determinant.
template <class T>
struct GTildeDerivation {
    RingMatrix<T> matrix;
    int sign = 1;
};

template <class T>
GTildeDerivation<T> g_tilde_by_operations(const GMatrixSpec<T>& g) {
    const int h = g.l + g.r + g.s, top = g.l + g.r;
    GTildeDerivation<T> d{g_matrix(g), 1};
    auto& m = d.matrix;
    // row (top + i) += row i: determinant unchanged
    for (int i = 0; i < top; ++i)
        for (int j = 0; j < 2 * h; ++j) m(top + i, j) = m(top + i, j) + m(i, j);
    // column j -= column (h + j) for the v columns: determinant unchanged
    for (int j = 0; j < g.l; ++j)
        for (int i = 0; i < 2 * h; ++i) m(i, j) = m(i, j) - m(i, h + j);
    return d;
}

// D^{(r,s)}(lambda)
template <class T>
T d_lambda(int r, int s, const T& lam) {
    using detail::binom2;
    using detail::ipow;
    T num = ((s * (r + s)) % 2 ? T(-1) : T(1)) * ipow(lam, s * (binom2(r) - binom2(r + s)));
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) num = num * (ipow(lam, j - 1) - ipow(lam, i - 1));
    for (int i = 1; i <= r + 2 * s; ++i)
        for (int j = i + 1; j <= r + 2 * s; ++j) num = num * (ipow(lam, j - 1) - ipow(lam, i - 1));
    T den = Ring<T>::one();
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) den = den * (ipow(lam, j + s - 1) - ipow(lam, i - 1));
    return Ring<T>::divide(num, den);
}

// det G^{(0,r,s)}
template <class T>
T g0_det_closed(int r, int s, const T& lam, const T& a1, const T& a2) {
    T x = detail::ipow(T(a1 * a2), detail::binom2(r + s));
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) x = x * (detail::ipow(lam, j - 1) * a1 - detail::ipow(lam, i - 1) * a2);
    return x * d_lambda(r, s, lam);
}

// Closed form for r >= 0. The product over v_i - v_j runs over i < j, and
// the whole carries (-1)^{l s}.
template <class T>
T g_det_closed(const GMatrixSpec<T>& g) {
    check_gspec(g);
    if (g.r < 0) return Ring<T>::zero();
    T x = (g.l * g.s) % 2 ? T(-1) : T(1);
    for (int i = 0; i < g.l; ++i)
        for (int j = i + 1; j < g.l; ++j) {
            T d = g.v[i] - g.v[j];
            x = x * d * d;
        }
    for (const T* a : {&g.a1, &g.a2})
        for (int i = 0; i < g.l; ++i)
            for (int j = 1; j <= g.r + g.s; ++j) x = x * (g.v[i] - detail::ipow(g.lambda, j - 1) * *a);
    return x * g0_det_closed(g.r, g.s, g.lambda, g.a1, g.a2);
}

template <class T>
T g_det_exact(const GMatrixSpec<T>& g) {
    return det_exact(g_matrix(g));
}

// det G^{(0,0,s)} in Vandermonde form, as printed; the determinant is (-1)^s times this.
template <class T>
T g00_det_vandermonde(int s, const T& lam, const T& a1, const T& a2) {
    using detail::ipow;
    T x = ipow(T(a1 * a2), detail::binom2(s));
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j) {
            T d = ipow(lam, i - 1) - ipow(lam, j - 1);
            x = x * d * d;
        }
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) x = x * (ipow(lam, i - 1) * a1 - ipow(lam, j - 1) * a2);
    return x;
}

// det G^{(0,r,s)} at a1 = lam^s a2, block triangular product.
template <class T>
T g0_det_at_aligned(int r, int s, const T& lam, const T& a2) {
    using detail::binom2;
    using detail::ipow;
    T x = ((s * (r + s)) % 2 ? T(-1) : T(1)) * ipow(lam, s * binom2(r)) * ipow(a2, binom2(r) + binom2(r + 2 * s));
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) x = x * (ipow(lam, j - 1) - ipow(lam, i - 1));
    for (int i = 1; i <= r + 2 * s; ++i)
        for (int j = i + 1; j <= r + 2 * s; ++j) x = x * (ipow(lam, j - 1) - ipow(lam, i - 1));
    return x;
}

// D^{(r,s)} / D^{(r+1,s-1)} in product form.
template <class T>
T d_ratio_explicit(int r, int s, const T& lam) {
    using detail::ipow;
    T num = (r + s) % 2 ? T(-1) : T(1), den = Ring<T>::one();
    for (int i = 1; i <= r + 2 * s - 1; ++i) num = num * (ipow(lam, i) - T(1));
    for (int i = 1; i <= s - 1; ++i) num = num * (ipow(lam, i) - T(1)) * (ipow(lam, i) - T(1));
    for (int i = 1; i <= r; ++i) den = den * (ipow(lam, i) - T(1));
    for (int i = 1; i <= 2 * s - 1; ++i) den = den * (ipow(lam, i) - T(1));
    for (int i = 1; i <= 2 * s - 2; ++i) den = den * (ipow(lam, i) - T(1));
    return Ring<T>::divide(num, den);
}

// det G^{(l,r,s)} / det G^{(l,r+1,s-1)}, independent of v.
template <class T>
T g_ratio_closed(int l, int r, int s, const T& lam, const T& a1, const T& a2) {
    if (r < 0 || s < 1) throw AlgebraError("g_ratio_closed: need r >= 0, s >= 1");
    T x = (l % 2 ? T(-1) : T(1)) * detail::ipow(lam, (s - 1) * (3 * s - 2) / 2);
    for (int j = -(s - 1); j <= s - 1; ++j) x = x * (detail::ipow(lam, j) * a1 - a2);
    return x * d_ratio_explicit(r, s, lam);
}

template <class T>
T g_ratio_exact(const GMatrixSpec<T>& g) {
    GMatrixSpec<T> h = g;
    h.r += 1;
    h.s -= 1;
    return Ring<T>::divide(g_det_exact(g), g_det_exact(h));
}

// Closed form with every entry a power of t: v_i = t^{v_i}, lambda = t^{lam},
// a_alpha = t^{a_alpha}.
struct GExponents {
    int l = 0, r = 0, s = 0;
    std::vector<int> v;
    int lam = 1, a1 = 0, a2 = 0;

    GMatrixSpec<Rational> at(const Rational& t) const;
    std::string str() const;
};

CycloProduct g_det_closed_t(const GExponents& g);

// Seeded identity suite: exact determinant against the closed form on random
// rational instances with l, r, s <= max_block.
struct GInstanceResult {
    int index = 0;
    GMatrixSpec<Rational> spec;
    Rational exact, closed;
    bool pass = false;
};

std::vector<GInstanceResult> g_det_suite(std::uint64_t seed, int instances, int max_block = 3,
                                         Exec exec = Exec::serial);
std::string gspec_str(const GMatrixSpec<Rational>& g);

CheckReport appendix_checks(std::uint64_t seed, int instances, Exec exec = Exec::serial);

}  // namespace xxz
