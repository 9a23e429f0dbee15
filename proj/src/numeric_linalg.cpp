#include "noethops/numeric_linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace noethops {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
    Eigen::MatrixXcd e(m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) e(static_cast<long>(i), static_cast<long>(j)) = m.at(i, j);
    return e;
}

} // namespace

std::vector<std::vector<Complex>> numeric_kernel(const CMatrix& m, double tol,
                                                 double scale_floor) {
    std::vector<std::vector<Complex>> basis;
    if (m.cols == 0) return basis;
    if (m.rows == 0) {
        for (size_t j = 0; j < m.cols; ++j) {
            std::vector<Complex> v(m.cols, Complex(0, 0));
            v[j] = Complex(1, 0);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    Eigen::MatrixXcd e = to_eigen(m);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeFullV);
    const auto& sing = svd.singularValues();
    double smax = sing.size() > 0 ? sing(0) : 0.0;
    double scale = std::max(smax, scale_floor);
    long rank = 0;
    if (scale > 0) {
        for (long k = 0; k < sing.size(); ++k)
            if (sing(k) > tol * scale) ++rank;
    }
    const Eigen::MatrixXcd& v = svd.matrixV();
    for (long j = rank; j < static_cast<long>(m.cols); ++j) {
        std::vector<Complex> vec(m.cols);
        for (size_t i = 0; i < m.cols; ++i) vec[i] = v(static_cast<long>(i), j);
        basis.push_back(std::move(vec));
    }
    return basis;
}

size_t numeric_rank(const CMatrix& m, double tol) {
    if (m.rows == 0 || m.cols == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& sing = svd.singularValues();
    double smax = sing.size() > 0 ? sing(0) : 0.0;
    if (smax <= 0) return 0;
    size_t rank = 0;
    for (long k = 0; k < sing.size(); ++k)
        if (sing(k) > tol * smax) ++rank;
    return rank;
}

std::vector<std::vector<Complex>> numeric_echelonize_rows(std::vector<std::vector<Complex>> rows,
                                                          double tol) {
    if (rows.empty()) return rows;
    size_t cols = rows[0].size();
    double scale = 0;
    for (const auto& r : rows)
        for (const auto& z : r) scale = std::max(scale, std::abs(z));
    if (scale == 0) return {};
    double eps = tol * scale;

    size_t row = 0;
    std::vector<size_t> pivots;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t sel = row;
        double best = 0;
        for (size_t i = row; i < rows.size(); ++i) {
            double v = std::abs(rows[i][col]);
            if (v > best) { best = v; sel = i; }
        }
        if (best <= eps) continue;
        std::swap(rows[row], rows[sel]);
        Complex inv = Complex(1, 0) / rows[row][col];
        for (size_t j = col; j < cols; ++j) rows[row][j] *= inv;
        rows[row][col] = Complex(1, 0);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == row) continue;
            Complex f = rows[i][col];
            if (std::abs(f) == 0) continue;
            for (size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[row][j];
            rows[i][col] = Complex(0, 0);
        }
        pivots.push_back(col);
        ++row;
    }
    rows.resize(row);
    // flush entries that fell below the noise floor so prints stay clean
    for (auto& r : rows)
        for (auto& z : r)
            if (std::abs(z) <= eps) z = Complex(0, 0);
    return rows;
}

bool numeric_spans_equal(const std::vector<std::vector<Complex>>& a,
                         const std::vector<std::vector<Complex>>& b, double tol) {
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    size_t cols = a[0].size();
    auto pack = [&](const std::vector<std::vector<Complex>>& rows) {
        CMatrix m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            double norm = 0;
            for (const auto& z : rows[i]) norm = std::max(norm, std::abs(z));
            if (norm == 0) norm = 1;
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j] / norm;
        }
        return m;
    };
    CMatrix ma = pack(a), mb = pack(b);
    size_t ra = numeric_rank(ma, tol), rb = numeric_rank(mb, tol);
    if (ra != rb) return false;
    CMatrix stacked(a.size() + b.size(), cols);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < cols; ++j) stacked.at(i, j) = ma.at(i, j);
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < cols; ++j) stacked.at(a.size() + i, j) = mb.at(i, j);
    return numeric_rank(stacked, tol) == ra;
}

std::vector<Complex> least_squares_solve(const CMatrix& m, const std::vector<Complex>& rhs) {
    Eigen::MatrixXcd e = to_eigen(m);
    Eigen::VectorXcd b(m.rows);
    for (size_t i = 0; i < m.rows; ++i) b(static_cast<long>(i)) = rhs[i];
    Eigen::VectorXcd x = e.colPivHouseholderQr().solve(b);
    std::vector<Complex> out(m.cols);
    for (size_t j = 0; j < m.cols; ++j) out[j] = x(static_cast<long>(j));
    return out;
}

EigenSystem transpose_eigensystem(const CMatrix& m) {
    Eigen::MatrixXcd e = to_eigen(m).transpose();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(e, /*computeEigenvectors=*/true);
    EigenSystem out;
    long n = e.rows();
    for (long k = 0; k < n; ++k) {
        out.values.push_back(solver.eigenvalues()(k));
        std::vector<Complex> v(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) v[static_cast<size_t>(i)] = solver.eigenvectors()(i, k);
        out.vectors.push_back(std::move(v));
    }
    return out;
}

} // namespace noethops
