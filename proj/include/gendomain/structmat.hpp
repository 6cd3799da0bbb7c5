#ifndef GENDOMAIN_STRUCTMAT_HPP
#define GENDOMAIN_STRUCTMAT_HPP

#include <Eigen/Dense>

#include "gendomain/symbol.hpp"

namespace gendomain {

enum class MatrixKind {
    toeplitz, ///< entries f(x - y), summing form of the convolution operator
    hankel    ///< entries f(x + y), summing form of the correlation operator
};

/// Dense matrix realization of a general domain Toeplitz/Hankel operator.
/// Row i corresponds to the i-th point of `rows` (Xi), column j to the j-th
/// point of `cols` (Upsilon); the orderings live on the grids themselves.
struct GeneralDomainMatrix {
    Eigen::MatrixXcd entries;
    GridDomain rows;
    GridDomain cols;
    MatrixKind kind;

    double sampling_length() const noexcept { return rows.sampling_length(); }

    /// Apply to a coefficient vector indexed by the column ordering.
    Eigen::VectorXcd apply(const Eigen::VectorXcd& g) const { return entries * g; }
};

namespace detail {

inline GeneralDomainMatrix build_structured(const SampledField& f, const GridDomain& xi,
                                            const GridDomain& ups, MatrixKind kind) {
    if (xi.dimension() != ups.dimension() || xi.dimension() != f.domain.dimension())
        throw DimensionMismatch("xi, upsilon and field dimensions must agree");
    if (xi.sampling_length() != ups.sampling_length() ||
        xi.sampling_length() != f.domain.sampling_length())
        throw SamplingMismatch("xi, upsilon and field sampling lengths must agree");
    const int d = xi.dimension();
    Eigen::MatrixXcd m(xi.size(), ups.size());
    IntVec z(d);
    for (int i = 0; i < xi.size(); ++i) {
        const IntVec& x = xi.point(i);
        for (int j = 0; j < ups.size(); ++j) {
            const IntVec& y = ups.point(j);
            for (int k = 0; k < d; ++k)
                z[k] = kind == MatrixKind::toeplitz ? x[k] - y[k] : x[k] + y[k];
            int idx = f.domain.index_of(z);
            if (idx < 0)
                throw DomainCoverage("symbol not defined at a required point of Omega");
            m(i, j) = f.values(idx);
        }
    }
    return GeneralDomainMatrix{std::move(m), xi, ups, kind};
}

} // namespace detail

/// Matrix of the summing operator g(x) -> sum_y f(x-y) g(y).
inline GeneralDomainMatrix build_toeplitz(const SampledField& f, const GridDomain& xi,
                                          const GridDomain& ups) {
    return detail::build_structured(f, xi, ups, MatrixKind::toeplitz);
}

/// Matrix of the summing operator g(x) -> sum_y f(x+y) g(y).
inline GeneralDomainMatrix build_hankel(const SampledField& f, const GridDomain& xi,
                                        const GridDomain& ups) {
    return detail::build_structured(f, xi, ups, MatrixKind::hankel);
}

/// On full boxes with lexicographic orderings the matrix is multilevel
/// Toeplitz (or Hankel): each entry depends only on x - y (resp. x + y).
/// Returns false when entries violate that constancy, e.g. under a shuffled
/// ordering or after a perturbation.
inline bool verify_block_structure(const GeneralDomainMatrix& m) {
    auto rb = m.rows.box_bounds();
    auto cb = m.cols.box_bounds();
    const int d = m.rows.dimension();
    // Multi-index a matrix position would carry under descending lex layout
    // of the box; positions are decoded independently of the stored ordering
    // so that a shuffled ordering is detected.
    auto decode = [d](const std::pair<IntVec, IntVec>& box, int pos) {
        IntVec p(d);
        for (int k = d - 1; k >= 0; --k) {
            std::int64_t extent = box.second[k] - box.first[k] + 1;
            p[k] = box.second[k] - pos % extent; // descending per axis
            pos = static_cast<int>(pos / extent);
        }
        return p;
    };
    std::map<IntVec, Complex> seen;
    IntVec z(d);
    for (int i = 0; i < m.rows.size(); ++i) {
        IntVec x = decode(rb, i);
        for (int j = 0; j < m.cols.size(); ++j) {
            IntVec y = decode(cb, j);
            for (int k = 0; k < d; ++k)
                z[k] = m.kind == MatrixKind::toeplitz ? x[k] - y[k] : x[k] + y[k];
            auto [it, fresh] = seen.emplace(z, m.entries(i, j));
            if (!fresh && it->second != m.entries(i, j))
                return false;
        }
    }
    return true;
}

} // namespace gendomain

#endif // GENDOMAIN_STRUCTMAT_HPP
