#pragma once

#include "xxz/algebra/multipoly.hpp"
#include "xxz/algebra/ring.hpp"
#include "xxz/exec.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace xxz {

template <class T>
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Ring<T>::zero()) {}

    static RingMatrix identity(std::size_t n) {
        RingMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Ring<T>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RingMatrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        RingMatrix m(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
        return m;
    }

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        if (a.cols_ != b.rows_) throw AlgebraError("matrix shape mismatch");
        RingMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (Ring<T>::is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        return r;
    }
    friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] + b.data_[i];
        return a;
    }
    friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] - b.data_[i];
        return a;
    }
    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    bool is_zero() const {
        for (const auto& x : data_)
            if (!Ring<T>::is_zero(x)) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

enum class DetMethod { automatic, bareiss, laplace, elimination };

// Fraction-free elimination; every division is exact in an integral domain.
template <class T>
T det_bareiss(RingMatrix<T> m, Exec exec = Exec::serial) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw AlgebraError("determinant of non-square matrix");
    if (n == 0) return Ring<T>::one();
    bool negate = false;
    T prev = Ring<T>::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (Ring<T>::is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && Ring<T>::is_zero(m(p, k))) ++p;
            if (p == n) return Ring<T>::zero();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            negate = !negate;
        }
        for_each_index(exec, n - k - 1, [&](std::size_t off) {
            std::size_t i = k + 1 + off;
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = Ring<T>::divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        });
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? T(-d) : d;
}

// Cofactor expansion along rows with memoized column subsets (n <= 20).
template <class T>
T det_laplace(const RingMatrix<T>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw AlgebraError("determinant of non-square matrix");
    if (n > 20) throw AlgebraError("det_laplace limited to 20x20");
    if (n == 0) return Ring<T>::one();
    std::vector<std::optional<T>> memo(std::size_t{1} << n);
    std::function<T(std::uint32_t)> rec = [&](std::uint32_t cols) -> T {
        int used = static_cast<int>(n) - std::popcount(cols);
        if (cols == 0) return Ring<T>::one();
        if (memo[cols]) return *memo[cols];
        T sum = Ring<T>::zero();
        int pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(cols >> j & 1u)) continue;
            const T& a = m(static_cast<std::size_t>(used), j);
            if (!Ring<T>::is_zero(a)) {
                T term = a * rec(cols & ~(1u << j));
                sum = (pos % 2 == 0) ? T(sum + term) : T(sum - term);
            }
            ++pos;
        }
        memo[cols] = sum;
        return sum;
    };
    return rec((std::uint32_t{1} << n) - 1);
}

// Gaussian elimination over a field.
template <class T>
T det_elimination(RingMatrix<T> m) {
    static_assert(Ring<T>::is_field, "det_elimination needs a field");
    const std::size_t n = m.rows();
    if (n != m.cols()) throw AlgebraError("determinant of non-square matrix");
    T det = Ring<T>::one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && Ring<T>::is_zero(m(p, k))) ++p;
        if (p == n) return Ring<T>::zero();
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det = det * m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (Ring<T>::is_zero(m(i, k))) continue;
            T f = Ring<T>::divide(m(i, k), m(k, k));
            for (std::size_t j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
        }
    }
    return det;
}

template <class T>
T det_exact(const RingMatrix<T>& m, DetMethod method = DetMethod::automatic) {
    switch (method) {
        case DetMethod::bareiss: return det_bareiss(m);
        case DetMethod::laplace: return det_laplace(m);
        case DetMethod::elimination:
            if constexpr (Ring<T>::is_field) return det_elimination(m);
            else throw AlgebraError("elimination path needs a field");
        case DetMethod::automatic: break;
    }
    if constexpr (Ring<T>::is_field) return det_elimination(m);
    else return det_bareiss(m);
}

// Generalized Laplace expansion along the column set `cols`:
// det M = sum over row sets I, |I| = |cols|, of eps(I, cols) det M[I, cols] det M[I^c, cols^c],
// eps = (-1)^{sum of 1-based row and column indices}.
template <class T, class MinorDet>
T det_laplace_columns(const RingMatrix<T>& m, const std::vector<std::size_t>& cols, MinorDet&& minor_det) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw AlgebraError("determinant of non-square matrix");
    const std::size_t p = cols.size();
    std::vector<bool> in_cols(n, false);
    std::size_t col_sum = 0;
    for (auto c : cols) {
        in_cols[c] = true;
        col_sum += c + 1;
    }
    std::vector<std::size_t> other_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!in_cols[j]) other_cols.push_back(j);
    T sum = Ring<T>::zero();
    std::vector<std::size_t> rows_sel(p);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
        if (depth == p) {
            std::vector<bool> chosen(n, false);
            std::size_t row_sum = 0;
            for (auto r : rows_sel) {
                chosen[r] = true;
                row_sum += r + 1;
            }
            std::vector<std::size_t> other_rows;
            for (std::size_t i = 0; i < n; ++i)
                if (!chosen[i]) other_rows.push_back(i);
            T a = minor_det(m.submatrix(rows_sel, cols));
            if (Ring<T>::is_zero(a)) return;
            T b = minor_det(m.submatrix(other_rows, other_cols));
            T term = a * b;
            sum = ((row_sum + col_sum) % 2 == 0) ? T(sum + term) : T(sum - term);
            return;
        }
        for (std::size_t r = start; r + (p - depth) <= n; ++r) {
            rows_sel[depth] = r;
            choose(r + 1, depth + 1);
        }
    };
    choose(0, 0);
    return sum;
}

// Right kernel over a field via reduced row echelon form: leftmost pivot,
// first nonzero row. One basis vector per free column, with a 1 there.
template <class T>
std::vector<std::vector<T>> kernel_basis(RingMatrix<T> m, std::size_t* rank_out = nullptr) {
    static_assert(Ring<T>::is_field, "kernel_basis needs a field");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && Ring<T>::is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
        T inv = Ring<T>::divide(Ring<T>::one(), m(r, c));
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || Ring<T>::is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    if (rank_out) *rank_out = r;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, Ring<T>::zero());
        v[f] = Ring<T>::one();
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
std::size_t rank(const RingMatrix<T>& m) {
    std::size_t r = 0;
    kernel_basis(m, &r);
    return r;
}

}  // namespace xxz
