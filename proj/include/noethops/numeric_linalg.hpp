#pragma once

#include <vector>

#include "noethops/field_traits.hpp"

namespace noethops {

// Row-major complex matrix handed to the Eigen-backed routines.
struct CMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Complex> a;

    CMatrix() = default;
    CMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Complex(0, 0)) {}
    Complex& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Complex& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// Orthonormal kernel basis from the SVD: right singular vectors whose
// singular values satisfy sigma <= tol * sigma_max.  A zero matrix yields
// the full identity basis.  scale_floor raises the reference scale above
// sigma_max, so a matrix whose entries are all residual noise relative to
// the problem data is treated as zero.
std::vector<std::vector<Complex>> numeric_kernel(const CMatrix& m, double tol,
                                                 double scale_floor = 0.0);

size_t numeric_rank(const CMatrix& m, double tol);

// Echelonize row vectors with magnitude pivoting; pivot entries are scaled
// to 1 and entries below `tol` times the largest magnitude are treated as
// zero.  Rows that vanish are dropped.
std::vector<std::vector<Complex>> numeric_echelonize_rows(std::vector<std::vector<Complex>> rows,
                                                          double tol);

bool numeric_spans_equal(const std::vector<std::vector<Complex>>& a,
                         const std::vector<std::vector<Complex>>& b, double tol);

// Least-squares solution of M x = rhs.
std::vector<Complex> least_squares_solve(const CMatrix& m, const std::vector<Complex>& rhs);

// Eigenvalues and left eigenvectors (i.e. eigenvectors of the transpose).
struct EigenSystem {
    std::vector<Complex> values;
    // vectors[k] is an eigenvector of M^T for values[k]
    std::vector<std::vector<Complex>> vectors;
};
EigenSystem transpose_eigensystem(const CMatrix& m);

} // namespace noethops
