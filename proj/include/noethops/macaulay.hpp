#pragma once

#include <span>

#include "noethops/linalg.hpp"
#include "noethops/numeric_linalg.hpp"
#include "noethops/polynomial.hpp"

namespace noethops {

// Pairing of the differential monomial d^alpha against a row polynomial,
// evaluated at the point:  sum over terms c * x^beta with beta >= alpha of
// c * beta!/(beta-alpha)! * p^(beta-alpha).
template <class K>
K dop_pairing(const Polynomial<K>& row, const Monomial& alpha, std::span<const K> point) {
    K acc = K(0);
    for (const auto& [beta, c] : row.terms()) {
        if (!alpha.divides(beta)) continue;
        K t = c;
        for (size_t v = 0; v < alpha.arity(); ++v) {
            for (int k = 0; k < alpha.e[v]; ++k) t = t * K(beta.e[v] - k);
            for (int k = alpha.e[v]; k < beta.e[v]; ++k) t = t * point[v];
        }
        acc = acc + t;
    }
    return acc;
}

// Numeric Macaulay fill: rows indexed by shifted generators, columns by
// differential monomials.  The parallel kernel distributes rows across
// OpenMP threads; each entry is computed independently, so both kernels
// produce identical matrices.
CMatrix macaulay_fill_serial(const std::vector<CPoly>& rows, const std::vector<Monomial>& cols,
                             std::span<const Complex> point);
CMatrix macaulay_fill_openmp(const std::vector<CPoly>& rows, const std::vector<Monomial>& cols,
                             std::span<const Complex> point);
// dispatch: OpenMP build uses the parallel kernel for non-trivial sizes
CMatrix macaulay_fill(const std::vector<CPoly>& rows, const std::vector<Monomial>& cols,
                      std::span<const Complex> point);

// Exact fill shared by the rational and residue-field paths.
template <class K, class EntryFn>
DenseMatrix<K> fill_matrix(size_t rows, size_t cols, const K& zero, const EntryFn& fn) {
    DenseMatrix<K> m(rows, cols, zero);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = fn(i, j);
    return m;
}

} // namespace noethops
