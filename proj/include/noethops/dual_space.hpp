#pragma once

#include <optional>
#include <set>

#include "noethops/diffop.hpp"
#include "noethops/ideal.hpp"
#include "noethops/macaulay.hpp"

namespace noethops {

// Base point of a dual-space computation.  Exact rational coordinates give
// exact kernels; complex coordinates run the SVD pipeline.
struct Point {
    std::vector<Complex> coords;
    std::optional<std::vector<Rational>> exact;

    bool is_exact() const { return exact.has_value(); }
    size_t arity() const { return coords.size(); }

    static Point complex_point(std::vector<Complex> c) {
        Point p;
        p.coords = std::move(c);
        return p;
    }
    static Point rational_point(std::vector<Rational> q) {
        Point p;
        p.exact = std::move(q);
        for (const auto& c : *p.exact) p.coords.emplace_back(c.to_double(), 0.0);
        return p;
    }
};

struct DualOptions {
    double tolerance = 1e-6;       // relative SVD threshold for numeric kernels
    double residual_scale = 1e-4;  // scale of the point-on-variety residual check
    int degree_cap = 20;
    int total_degree_limit = -1;   // eliminating duals: fixed truncation, skip the certificate
    bool require_complete = true;  // g-corners: error when the staircase is not closed by the cap
    bool check_point = true;
};

constexpr int kCompleteDual = -1;

template <class K>
struct DualSpace {
    RingPtr ring;
    std::vector<K> point;
    std::vector<ConstDiffOp<K>> basis; // echelonized, each pivot coefficient 1
    int truncation = kCompleteDual;
    std::optional<std::pair<std::vector<int>, int>> elimination; // (variables V, bound d)
    double tolerance = 1e-6;

    size_t dimension() const { return basis.size(); }
    // lead = first stored term: minimal total degree, grevlex tie-break
    std::vector<Monomial> lead_monomials() const {
        std::vector<Monomial> out;
        for (const auto& op : basis) out.push_back(op.terms().begin()->first);
        return out;
    }
};

using NumericDualSpace = DualSpace<Complex>;
using ExactDualSpace = DualSpace<Rational>;

namespace detail {

inline int deg_in_vars(const Monomial& m, const std::vector<int>& vars) {
    int d = 0;
    for (int v : vars) d += m.e[v];
    return d;
}

template <class K>
bool is_origin(const std::vector<K>& point) {
    for (const auto& c : point)
        if (!FieldTraits<K>::is_zero(c)) return false;
    return true;
}

// Macaulay-kernel engine shared by all dual-space computations.
template <class K>
class DualEngine {
public:
    DualEngine(RingPtr ring, std::vector<Polynomial<K>> gens, std::vector<K> point,
               DualOptions opts)
        : ring_(std::move(ring)), gens_(std::move(gens)), point_(std::move(point)),
          opts_(opts) {
        for (const auto& g : gens_)
            if (!g.is_zero()) maxdeg_ = std::max(maxdeg_, g.total_degree());
        origin_ = is_origin(point_);
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<K>& point() const { return point_; }
    const DualOptions& options() const { return opts_; }

    void set_column_filter(std::vector<int> vars, int bound) {
        filter_vars_ = std::move(vars);
        filter_bound_ = bound;
    }
    void set_column_support(std::vector<Monomial> support) { support_ = std::move(support); }

    std::vector<Monomial> columns(int d) const {
        if (!support_.empty()) return support_;
        std::vector<Monomial> cols;
        for (auto& m : monomials_up_to_degree(ring_->arity(), d)) {
            if (filter_bound_ >= 0 && deg_in_vars(m, filter_vars_) > filter_bound_) continue;
            cols.push_back(std::move(m));
        }
        return cols;
    }

    // kernel vectors echelonized against the given column sequence
    std::vector<std::vector<K>> echelon_kernel(int d, const std::vector<Monomial>& cols) const {
        if (cols.empty()) return {};
        std::vector<Polynomial<K>> rows;
        for (const auto& g : gens_) {
            if (g.is_zero()) continue;
            int bound = d + maxdeg_ - g.total_degree();
            K one = FieldTraits<K>::one_like(g.terms().begin()->second);
            for (auto& m : monomials_up_to_degree(ring_->arity(), std::max(bound, 0))) {
                Polynomial<K> row = g.mul_term(m, one);
                if (origin_ && !interacts(row, cols)) continue; // provably zero row
                rows.push_back(std::move(row));
            }
        }

        if constexpr (std::is_same_v<K, Complex>) {
            CMatrix m = macaulay_fill(rows, cols, point_);
            double scale = 0;
            for (const auto& row : rows)
                for (const auto& [mm, c] : row.terms()) scale = std::max(scale, std::abs(c));
            auto vecs = numeric_kernel(m, opts_.tolerance, scale);
            return numeric_echelonize_rows(std::move(vecs), opts_.tolerance);
        } else {
            K zero = K(0);
            DenseMatrix<K> m = fill_matrix(rows.size(), cols.size(), zero, [&](size_t i, size_t j) {
                return dop_pairing(rows[i], cols[j], std::span<const K>(point_));
            });
            return exact_kernel(std::move(m), zero, K(1));
        }
    }

    std::vector<ConstDiffOp<K>> basis_at(int d) const {
        std::vector<Monomial> cols = columns(d);
        std::vector<ConstDiffOp<K>> ops;
        for (const auto& v : echelon_kernel(d, cols)) {
            ConstDiffOp<K> op(ring_);
            for (size_t j = 0; j < cols.size(); ++j) op.add_term(cols[j], v[j]);
            if (!op.is_zero()) ops.push_back(std::move(op));
        }
        return ops;
    }

    // columns for local lead-term extraction: total degree ascending,
    // grevlex descending within a degree, so the first nonzero coordinate
    // of an echelon vector is the minimal-degree grevlex-largest monomial
    std::vector<Monomial> local_columns(int d) const {
        std::vector<Monomial> cols = columns(d);
        std::stable_sort(cols.begin(), cols.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return grevlex_less(b, a);
        });
        return cols;
    }

private:
    static bool interacts(const Polynomial<K>& row, const std::vector<Monomial>& cols) {
        for (const auto& [beta, c] : row.terms())
            for (const auto& alpha : cols)
                if (alpha == beta) return true;
        return false;
    }

    RingPtr ring_;
    std::vector<Polynomial<K>> gens_;
    std::vector<K> point_;
    DualOptions opts_;
    int maxdeg_ = 0;
    bool origin_ = false;
    std::vector<int> filter_vars_;
    int filter_bound_ = -1;
    std::vector<Monomial> support_;
};

template <class K>
double coeff_norm(const Polynomial<K>& g) {
    double n = 0;
    for (const auto& [m, c] : g.terms()) {
        if constexpr (std::is_same_v<K, Complex>) n = std::max(n, std::abs(c));
        else n = std::max(n, std::abs(c.to_double()));
    }
    return n;
}

template <class K>
void verify_point(const std::vector<Polynomial<K>>& gens, const std::vector<K>& point,
                  const DualOptions& opts) {
    if (!opts.check_point) return;
    if constexpr (std::is_same_v<K, Complex>) {
        double pnorm = 0;
        for (const auto& c : point) pnorm = std::max(pnorm, std::abs(c));
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            Complex v = g.template evaluate_with<Complex>(std::span<const Complex>(point),
                                                          [](const Complex& c) { return c; });
            double bound = opts.residual_scale * (1.0 + std::pow(std::max(pnorm, 1.0),
                                                                 g.total_degree()));
            if (std::abs(v) > bound * std::max(coeff_norm(g), 1.0))
                fail(Error::Code::NotOnVariety, "point not on variety");
        }
    } else {
        for (const auto& g : gens) {
            K v = g.template evaluate_with<K>(std::span<const K>(point),
                                              [](const K& c) { return c; });
            if (!FieldTraits<K>::is_zero(v))
                fail(Error::Code::NotOnVariety, "point not on variety");
        }
    }
}

} // namespace detail

// Kernel of the degree-d Macaulay matrix, echelonized.
template <class K>
DualSpace<K> truncated_dual(const std::vector<K>& point, const std::vector<Polynomial<K>>& gens,
                            int d, const DualOptions& opts = {}) {
    if (gens.empty()) fail(Error::Code::BadInput, "dual space of an empty generator list");
    detail::verify_point(gens, point, opts);
    detail::DualEngine<K> eng(gens[0].ring(), gens, point, opts);
    DualSpace<K> D;
    D.ring = gens[0].ring();
    D.point = point;
    D.basis = eng.basis_at(d);
    D.truncation = d;
    D.tolerance = opts.tolerance;
    return D;
}

// Complete dual basis of an isolated solution: iterate the truncation degree
// until the kernel dimension is unchanged from d to d+1.
template <class K>
DualSpace<K> zero_dimensional_dual(const std::vector<K>& point,
                                   const std::vector<Polynomial<K>>& gens,
                                   const DualOptions& opts = {}) {
    if (gens.empty()) fail(Error::Code::BadInput, "dual space of an empty generator list");
    detail::verify_point(gens, point, opts);
    detail::DualEngine<K> eng(gens[0].ring(), gens, point, opts);
    std::vector<ConstDiffOp<K>> prev = eng.basis_at(0);
    for (int d = 1; d <= opts.degree_cap; ++d) {
        std::vector<ConstDiffOp<K>> cur = eng.basis_at(d);
        if (cur.size() == prev.size()) {
            DualSpace<K> D;
            D.ring = gens[0].ring();
            D.point = point;
            D.basis = std::move(prev);
            D.truncation = kCompleteDual;
            D.tolerance = opts.tolerance;
            return D;
        }
        prev = std::move(cur);
    }
    fail(Error::Code::NoStabilization, "point may not be isolated");
}

// Dual operators whose lead terms have degree at most d in the variables V,
// computed by iterating the total degree with a deg_V column filter.  With
// opts.total_degree_limit >= 0 the basis at that fixed truncation is
// returned without the stabilization certificate.
template <class K>
DualSpace<K> eliminating_dual(const std::vector<K>& point, const std::vector<Polynomial<K>>& gens,
                              const std::vector<int>& V, int d, const DualOptions& opts = {}) {
    if (V.empty()) fail(Error::Code::BadInput, "eliminating dual needs a nonempty variable set");
    detail::verify_point(gens, point, opts);
    detail::DualEngine<K> eng(gens[0].ring(), gens, point, opts);
    eng.set_column_filter(V, d);

    DualSpace<K> D;
    D.ring = gens[0].ring();
    D.point = point;
    D.elimination = std::make_pair(V, d);
    D.tolerance = opts.tolerance;

    if (opts.total_degree_limit >= 0) {
        D.basis = eng.basis_at(opts.total_degree_limit);
        D.truncation = opts.total_degree_limit;
        return D;
    }
    std::vector<ConstDiffOp<K>> prev = eng.basis_at(0);
    for (int k = 1; k <= opts.degree_cap; ++k) {
        std::vector<ConstDiffOp<K>> cur = eng.basis_at(k);
        if (cur.size() == prev.size()) {
            D.basis = std::move(prev);
            D.truncation = kCompleteDual;
            return D;
        }
        prev = std::move(cur);
    }
    fail(Error::Code::NoStabilization, "eliminating dual not finite at this truncation");
}

// Number of degree-i elements in the degree-graded echelon basis.
template <class K>
int dual_hilbert_function(int i, const DualSpace<K>& D) {
    if (D.truncation != kCompleteDual && i > D.truncation)
        fail(Error::Code::BadInput, "degree exceeds the dual-space truncation");
    int count = 0;
    for (const auto& m : D.lead_monomials())
        if (m.degree() == i) ++count;
    return count;
}

// E^d of the colon ideal I : x_v, via the right action of x_v on E^(d+1) of
// I; the total-degree truncation grows until the contracted span stops
// changing.
template <class K>
DualSpace<K> colon_dual(const std::vector<K>& point, const std::vector<Polynomial<K>>& gens,
                        int v, int d, const DualOptions& opts = {}) {
    DualOptions inner = opts;
    auto contract_basis = [&](const DualSpace<K>& E) {
        std::vector<std::vector<K>> vecs;
        std::vector<Monomial> cols = monomials_up_to_degree(gens[0].ring()->arity(),
                                                            std::max(E.truncation - 1, 0));
        for (const auto& op : E.basis) {
            ConstDiffOp<K> c = op.contract(static_cast<size_t>(v));
            std::vector<K> vec(cols.size(), K(0));
            bool nonzero = false;
            for (size_t j = 0; j < cols.size(); ++j) {
                if (const K* cf = c.coeff(cols[j])) {
                    vec[j] = *cf;
                    nonzero = true;
                }
            }
            if (nonzero) vecs.push_back(std::move(vec));
        }
        if constexpr (std::is_same_v<K, Complex>) {
            vecs = numeric_echelonize_rows(std::move(vecs), opts.tolerance);
        } else {
            vecs = echelonize_rows(std::move(vecs), K(0));
        }
        std::vector<ConstDiffOp<K>> ops;
        for (const auto& vec : vecs) {
            ConstDiffOp<K> op(gens[0].ring());
            for (size_t j = 0; j < cols.size(); ++j) op.add_term(cols[j], vec[j]);
            ops.push_back(std::move(op));
        }
        return ops;
    };

    std::vector<ConstDiffOp<K>> prev;
    bool have_prev = false;
    for (int k = 1; k <= opts.degree_cap; ++k) {
        inner.total_degree_limit = k;
        DualSpace<K> E = eliminating_dual(point, gens, {v}, d + 1, inner);
        std::vector<ConstDiffOp<K>> image = contract_basis(E);
        if (have_prev && image.size() == prev.size()) {
            DualSpace<K> D;
            D.ring = gens[0].ring();
            D.point = point;
            D.basis = std::move(image);
            D.truncation = kCompleteDual;
            D.elimination = std::make_pair(std::vector<int>{v}, d);
            D.tolerance = opts.tolerance;
            return D;
        }
        prev = std::move(image);
        have_prev = true;
    }
    fail(Error::Code::NoStabilization, "colon dual did not stabilize by the degree cap");
}

template <class K>
struct GCornersResult {
    std::vector<Monomial> corners;
    std::vector<Polynomial<K>> standard_basis;
    bool complete = false;
    int reached_degree = 0;
};

// Minimal generators of the local lead-term ideal, degree by degree: a
// monomial is a g-corner when it is neither a dual lead term nor divisible
// by an earlier corner.  Terminates when every degree-d monomial is
// divisible by a found corner; positive-dimensional staircases hit the cap
// and either error or return the (correct) corners of degree <= cap.
template <class K>
GCornersResult<K> g_corners(const std::vector<K>& point, const std::vector<Polynomial<K>>& gens,
                            bool produce_sb, const DualOptions& opts = {}) {
    detail::verify_point(gens, point, opts);
    detail::DualEngine<K> eng(gens[0].ring(), gens, point, opts);
    size_t arity = gens[0].ring()->arity();

    GCornersResult<K> res;
    std::vector<ConstDiffOp<K>> dual;
    std::set<Monomial, GrevlexLess> std_leads;

    auto corner_divides = [&](const Monomial& m) {
        for (const auto& c : res.corners)
            if (c.divides(m)) return true;
        return false;
    };
    for (int d = 0; d <= opts.degree_cap; ++d) {
        // leads under the local convention: minimal degree, then grevlex-largest
        std::vector<Monomial> cols = eng.local_columns(d);
        auto vecs = eng.echelon_kernel(d, cols);
        dual.clear();
        std_leads.clear();
        for (const auto& v : vecs) {
            ConstDiffOp<K> op(gens[0].ring());
            for (size_t j = 0; j < cols.size(); ++j) op.add_term(cols[j], v[j]);
            if (op.is_zero()) continue;
            for (size_t j = 0; j < cols.size(); ++j) {
                if (!FieldTraits<K>::is_zero(v[j])) {
                    std_leads.insert(cols[j]);
                    break;
                }
            }
            dual.push_back(std::move(op));
        }

        for (const auto& m : monomials_of_degree(arity, d))
            if (!corner_divides(m) && !std_leads.count(m)) res.corners.push_back(m);

        res.reached_degree = d;
        if (d > 0) {
            bool all_covered = true;
            for (const auto& m : monomials_of_degree(arity, d))
                if (!corner_divides(m)) { all_covered = false; break; }
            if (all_covered) {
                res.complete = true;
                break;
            }
        }
    }
    if (!res.complete && opts.require_complete)
        fail(Error::Code::NoStabilization, "g-corner staircase not closed by the degree cap");

    if (produce_sb && res.complete) {
        // standard-basis element per corner: (x-p)^corner plus a combination
        // of translated standard monomials annihilated by the dual
        std::vector<Monomial> std_monos(std_leads.begin(), std_leads.end());
        RingPtr ring = gens[0].ring();
        auto translated = [&](const Monomial& m) {
            Polynomial<K> f = Polynomial<K>::constant(ring, K(1));
            for (size_t vi = 0; vi < arity; ++vi) {
                Polynomial<K> lin = Polynomial<K>::term(ring, Monomial::unit(arity, vi), K(1));
                lin.add_term(Monomial(arity), K(0) - point[vi]);
                for (int k = 0; k < m.e[vi]; ++k) f = f * lin;
            }
            return f;
        };
        auto factorial_of = [&](const Monomial& m) {
            K v = K(1);
            for (size_t vi = 0; vi < arity; ++vi)
                for (int k = 2; k <= m.e[vi]; ++k) v = v * K(k);
            return v;
        };
        for (const auto& corner : res.corners) {
            size_t n = std_monos.size();
            if constexpr (std::is_same_v<K, Complex>) {
                CMatrix m(dual.size(), n);
                std::vector<Complex> rhs(dual.size(), Complex(0, 0));
                for (size_t i = 0; i < dual.size(); ++i) {
                    for (size_t j = 0; j < n; ++j) {
                        const K* c = dual[i].coeff(std_monos[j]);
                        m.at(i, j) = c ? *c * factorial_of(std_monos[j]) : K(0);
                    }
                    const K* cb = dual[i].coeff(corner);
                    rhs[i] = cb ? -(*cb * factorial_of(corner)) : K(0);
                }
                std::vector<Complex> sol = least_squares_solve(m, rhs);
                Polynomial<K> f = translated(corner);
                for (size_t j = 0; j < n; ++j)
                    f = f + translated(std_monos[j]).scaled(sol[j]);
                res.standard_basis.push_back(std::move(f));
            } else {
                K zero = K(0);
                DenseMatrix<K> m(dual.size(), n, zero);
                std::vector<K> rhs(dual.size(), zero);
                for (size_t i = 0; i < dual.size(); ++i) {
                    for (size_t j = 0; j < n; ++j) {
                        const K* c = dual[i].coeff(std_monos[j]);
                        if (c) m.at(i, j) = *c * factorial_of(std_monos[j]);
                    }
                    const K* cb = dual[i].coeff(corner);
                    if (cb) rhs[i] = zero - (*cb * factorial_of(corner));
                }
                auto sol = exact_solve(std::move(m), std::move(rhs), zero);
                if (!sol) fail(Error::Code::BadInput, "standard-basis solve failed");
                Polynomial<K> f = translated(corner);
                for (size_t j = 0; j < n; ++j)
                    f = f + translated(std_monos[j]).scaled((*sol)[j]);
                res.standard_basis.push_back(std::move(f));
            }
        }
    }
    return res;
}

// Ideal-based conveniences for the numeric pipeline.
std::vector<CPoly> complex_generators(const Ideal& I, const RingPtr& cring);
RingPtr complex_ring_like(const RingPtr& ring);

} // namespace noethops
