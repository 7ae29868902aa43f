#ifndef PGONAL_LINALG_HPP
#define PGONAL_LINALG_HPP

#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace pgonal {

template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
struct LinearSolution {
    bool consistent = false;
    std::vector<T> particular;      // empty when inconsistent
    std::vector<std::vector<T>> kernel;  // basis of the homogeneous solutions
};

// Reduced row echelon form in place; returns the pivot column of each row.
template <class T>
std::vector<int> rref(Mat<T>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && is_zero_val(m[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        T inv = one_like(m[r][c]) / m[r][c];
        for (auto& x : m[r]) x = x * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero_val(m[i][c])) continue;
            T f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

// Kernel basis of the homogeneous system m x = 0, columns = unknowns.
template <class T>
std::vector<std::vector<T>> kernel_basis(Mat<T> m, const T& one) {
    std::vector<std::vector<T>> out;
    if (m.empty()) return out;
    std::size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<int> pivot_of_col(cols, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);
    T zero = zero_like(one);
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<T> v(cols, zero);
        v[c] = one;
        for (std::size_t j = 0; j < cols; ++j)
            if (pivot_of_col[j] >= 0) v[j] = -m[pivot_of_col[j]][c];
        out.push_back(std::move(v));
    }
    return out;
}

// Exact solve of M x = v.  Inconsistent systems come back with
// consistent = false rather than an error.
template <class T>
LinearSolution<T> linear_solve(const Mat<T>& M, const std::vector<T>& v, const T& one) {
    LinearSolution<T> sol;
    std::size_t rows = M.size();
    std::size_t cols = rows ? M[0].size() : 0;
    ensure(v.size() == rows, "linear_solve: dimension mismatch");
    T zero = zero_like(one);
    if (rows == 0) {
        sol.consistent = true;
        return sol;
    }
    Mat<T> aug = M;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(v[i]);
    auto pivots = rref(aug);
    for (int p : pivots)
        if (p == static_cast<int>(cols)) return sol;  // pivot in the rhs column
    sol.consistent = true;
    sol.particular.assign(cols, zero);
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug[i][cols];
    Mat<T> hom = M;
    sol.kernel = kernel_basis(std::move(hom), one);
    return sol;
}

template <class T>
std::vector<T> mat_apply(const Mat<T>& M, const std::vector<T>& x, const T& one) {
    T zero = zero_like(one);
    std::vector<T> r(M.size(), zero);
    for (std::size_t i = 0; i < M.size(); ++i) {
        ensure(M[i].size() == x.size(), "mat_apply: dimension mismatch");
        for (std::size_t j = 0; j < x.size(); ++j) r[i] = r[i] + M[i][j] * x[j];
    }
    return r;
}

// Determinant by fraction-free-ish Gaussian elimination over a field.
template <class T>
T determinant(Mat<T> m, const T& one) {
    std::size_t n = m.size();
    T det = one;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && is_zero_val(m[sel][c])) ++sel;
        if (sel == n) return zero_like(one);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        T inv = one / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero_val(m[i][c])) continue;
            T f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

}  // namespace pgonal

#endif
