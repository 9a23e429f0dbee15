#pragma once

#include <optional>
#include <vector>

#include "noethops/field_traits.hpp"

namespace noethops {

// Dense row-major matrix over an exact field.
template <class K>
struct DenseMatrix {
    size_t rows = 0, cols = 0;
    std::vector<K> a;

    DenseMatrix() = default;
    DenseMatrix(size_t r, size_t c, const K& zero) : rows(r), cols(c), a(r * c, zero) {}
    K& at(size_t i, size_t j) { return a[i * cols + j]; }
    const K& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// In-place reduced row echelon form; returns pivot columns in order.
// Pivot choice: first row with a nonzero entry, scanning columns left to
// right, so the result is deterministic.
template <class K>
std::vector<size_t> rref_in_place(DenseMatrix<K>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t sel = row;
        while (sel < m.rows && FieldTraits<K>::is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.a[row * m.cols + j], m.a[sel * m.cols + j]);
        K inv = FieldTraits<K>::inverse(m.at(row, col));
        for (size_t j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row || FieldTraits<K>::is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Canonical reduced echelon basis of the span of the given row vectors.
// Unique for the row space, hence usable for exact span comparison.
template <class K>
std::vector<std::vector<K>> echelonize_rows(std::vector<std::vector<K>> rows, const K& zero) {
    if (rows.empty()) return rows;
    DenseMatrix<K> m(rows.size(), rows[0].size(), zero);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    std::vector<size_t> pivots = rref_in_place(m);
    std::vector<std::vector<K>> out;
    for (size_t i = 0; i < pivots.size(); ++i) {
        std::vector<K> v(m.cols, zero);
        for (size_t j = 0; j < m.cols; ++j) v[j] = m.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

// Basis of the right kernel {v : M v = 0}, echelonized so that each vector's
// first nonzero coordinate (in column order) is 1 and is the only nonzero in
// that coordinate across the basis.
template <class K>
std::vector<std::vector<K>> exact_kernel(DenseMatrix<K> m, const K& zero, const K& one) {
    std::vector<size_t> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<K>> basis;
    for (size_t j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<K> v(m.cols, zero);
        v[j] = one;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = zero - m.at(i, j);
        basis.push_back(std::move(v));
    }
    return echelonize_rows(std::move(basis), zero);
}

template <class K>
bool spans_equal(const std::vector<std::vector<K>>& a, const std::vector<std::vector<K>>& b,
                 const K& zero) {
    auto ea = echelonize_rows(a, zero);
    auto eb = echelonize_rows(b, zero);
    if (ea.size() != eb.size()) return false;
    for (size_t i = 0; i < ea.size(); ++i)
        for (size_t j = 0; j < ea[i].size(); ++j)
            if (!FieldTraits<K>::is_zero(ea[i][j] - eb[i][j])) return false;
    return true;
}

// Solve M x = rhs over an exact field; nullopt when inconsistent.  When the
// system is underdetermined the free coordinates are set to zero.
template <class K>
std::optional<std::vector<K>> exact_solve(DenseMatrix<K> m, std::vector<K> rhs, const K& zero) {
    size_t n = m.cols;
    DenseMatrix<K> aug(m.rows, n + 1, zero);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = rhs[i];
    }
    std::vector<size_t> pivots = rref_in_place(aug);
    std::vector<K> x(n, zero);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n) return std::nullopt; // pivot in the rhs column
        x[pivots[i]] = aug.at(i, n);
    }
    return x;
}

} // namespace noethops
