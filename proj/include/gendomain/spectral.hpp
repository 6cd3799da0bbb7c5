#ifndef GENDOMAIN_SPECTRAL_HPP
#define GENDOMAIN_SPECTRAL_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gendomain/structmat.hpp"

namespace gendomain {

enum class PsdVerdict { psd, not_psd, not_hermitian };

/// Singular spectrum, numerical rank and PSD certification of a matrix,
/// with the tolerances that produced the verdict recorded alongside.
struct SpectralReport {
    Eigen::VectorXd singular_values; ///< descending, nonnegative
    int numerical_rank = 0;          ///< #{sigma_i > rank_tol * sigma_1}
    double rank_tol = 0.0;
    bool is_hermitian = false;
    Eigen::VectorXd eigenvalues;     ///< ascending; only set when Hermitian
    double min_eigenvalue = 0.0;     ///< only meaningful when Hermitian
    PsdVerdict psd_verdict = PsdVerdict::not_hermitian;
    double psd_tol = 0.0;
};

/// Entrywise Hermitian test at absolute tolerance 1e-12 (scaled by the
/// largest entry when entries exceed 1). Symmetrization is deliberately not
/// applied: a non-Hermitian matrix gets verdict not_hermitian.
inline bool is_hermitian_matrix(const Eigen::MatrixXcd& m, double tol = 1e-12) {
    if (m.rows() != m.cols())
        return false;
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j <= i; ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol * scale)
                return false;
    return true;
}

inline SpectralReport analyze_matrix(const Eigen::MatrixXcd& m, double rank_tol = 1e-10,
                                     double psd_tol = 1e-10) {
    SpectralReport r;
    r.rank_tol = rank_tol;
    r.psd_tol = psd_tol;

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    if (svd.info() != Eigen::Success)
        throw NumericalFailure("singular value decomposition did not converge");
    r.singular_values = svd.singularValues();

    double sigma1 = r.singular_values.size() > 0 ? r.singular_values(0) : 0.0;
    if (sigma1 > 0.0)
        for (Eigen::Index i = 0; i < r.singular_values.size(); ++i)
            if (r.singular_values(i) > rank_tol * sigma1)
                ++r.numerical_rank;

    r.is_hermitian = is_hermitian_matrix(m);
    if (!r.is_hermitian) {
        r.psd_verdict = PsdVerdict::not_hermitian;
        return r;
    }
    // Sign information must come from a symmetric eigensolver, not from the
    // singular values.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalFailure("Hermitian eigendecomposition did not converge");
    r.eigenvalues = es.eigenvalues();
    r.min_eigenvalue = r.eigenvalues.size() > 0 ? r.eigenvalues(0) : 0.0;
    r.psd_verdict = r.min_eigenvalue >= -psd_tol * std::max(sigma1, 1.0) ? PsdVerdict::psd
                                                                         : PsdVerdict::not_psd;
    return r;
}

inline SpectralReport analyze(const GeneralDomainMatrix& m, double rank_tol = 1e-10,
                              double psd_tol = 1e-10) {
    return analyze_matrix(m.entries, rank_tol, psd_tol);
}

} // namespace gendomain

#endif // GENDOMAIN_SPECTRAL_HPP
