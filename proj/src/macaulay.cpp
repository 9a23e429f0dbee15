#include "noethops/macaulay.hpp"

namespace noethops {

CMatrix macaulay_fill_serial(const std::vector<CPoly>& rows, const std::vector<Monomial>& cols,
                             std::span<const Complex> point) {
    CMatrix m(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            m.at(i, j) = dop_pairing(rows[i], cols[j], point);
    return m;
}

CMatrix macaulay_fill_openmp(const std::vector<CPoly>& rows, const std::vector<Monomial>& cols,
                             std::span<const Complex> point) {
    CMatrix m(rows.size(), cols.size());
    const long nrows = static_cast<long>(rows.size());
#ifdef NOETHOPS_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < nrows; ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            m.at(static_cast<size_t>(i), j) = dop_pairing(rows[static_cast<size_t>(i)], cols[j], point);
    return m;
}

CMatrix macaulay_fill(const std::vector<CPoly>& rows, const std::vector<Monomial>& cols,
                      std::span<const Complex> point) {
#ifdef NOETHOPS_OPENMP
    if (rows.size() * cols.size() >= 256) return macaulay_fill_openmp(rows, cols, point);
#endif
    return macaulay_fill_serial(rows, cols, point);
}

} // namespace noethops
