#ifndef GENDOMAIN_RECOVERY_HPP
#define GENDOMAIN_RECOVERY_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <optional>
#include <string>

#include "gendomain/spectral.hpp"

namespace gendomain {

/// Outcome of an exponential-sum recovery. Frequencies are expressed per
/// integer grid step: the model reproduces the input when evaluated at the
/// integer coordinates of the sampling grid.
struct RecoveryResult {
    ExpSum model{0};                    ///< reduced exponential sum
    double residual = 0.0;              ///< relative l2 misfit on the input grid
    bool frequencies_real = false;
    bool coefficients_positive = false;
    int rank_used = 0;

    /// Real frequency vectors xi_k (model exponents are i*xi_k).
    std::vector<RealVec> frequencies() const {
        std::vector<RealVec> out;
        for (const auto& t : model.terms()) {
            RealVec xi(t.zeta.size());
            for (std::size_t m = 0; m < t.zeta.size(); ++m)
                xi[m] = t.zeta[m].imag();
            out.push_back(std::move(xi));
        }
        return out;
    }

    std::vector<double> coefficients() const {
        std::vector<double> out;
        for (const auto& t : model.terms())
            out.push_back(t.coeff.real());
        return out;
    }
};

namespace detail {

/// Roots of sum_j a_j z^j via companion-matrix eigenvalues. Coefficients
/// whose magnitude is below 1e-12 * ||a|| are treated as zero at the leading
/// end; the trimmed degree is reported through `degree`.
inline std::vector<Complex> polynomial_roots(const Eigen::VectorXcd& a, int& degree) {
    double scale = a.norm();
    int deg = static_cast<int>(a.size()) - 1;
    while (deg > 0 && std::abs(a(deg)) <= 1e-12 * scale)
        --deg;
    degree = deg;
    if (deg == 0)
        return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i)
        companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i)
        companion(i, deg - 1) = -a(i) / a(deg);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion);
    if (es.info() != Eigen::Success)
        throw NumericalFailure("companion eigenvalue computation did not converge");
    std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
    return roots;
}

/// Smallest right singular vector of the (k+1) x (k+1) leading principal
/// submatrix; the null direction when sigma_k > 0 ~ sigma_{k+1}.
inline Eigen::VectorXcd null_vector(const Eigen::MatrixXcd& m, int k) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.topLeftCorner(k + 1, k + 1), Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success)
        throw NumericalFailure("null-vector SVD did not converge");
    return svd.matrixV().col(k);
}

inline RecoveryResult zero_model(int dim) {
    RecoveryResult r;
    r.model = ExpSum(dim);
    r.residual = 0.0;
    r.frequencies_real = true;
    r.coefficients_positive = true;
    r.rank_used = 0;
    return r;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Least-squares coefficient fit
// ---------------------------------------------------------------------------

/// Least-squares solution of sum_k c_k exp(i xi_k . x) ~ f over all grid
/// points (x in integer coordinates). Returns coefficients and the relative
/// l2 residual.
inline std::pair<Eigen::VectorXcd, double> vandermonde_fit(const std::vector<RealVec>& freqs,
                                                           const SampledField& f) {
    const int d = f.domain.dimension();
    const int k = static_cast<int>(freqs.size());
    if (k > f.domain.size())
        throw DimensionMismatch("more frequencies than sample points");
    Eigen::MatrixXcd a(f.domain.size(), k);
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(freqs[j].size()) != d)
            throw DimensionMismatch("frequency dimension mismatch");
        for (int i = 0; i < f.domain.size(); ++i) {
            double phase = 0.0;
            const IntVec& p = f.domain.point(i);
            for (int m = 0; m < d; ++m)
                phase += freqs[j][m] * static_cast<double>(p[m]);
            a(i, j) = std::polar(1.0, phase);
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
    if (qr.rank() < k)
        throw RankDeficientSystem("candidate exponentials are numerically collinear");
    Eigen::VectorXcd c = qr.solve(f.values);
    double nf = f.values.norm();
    double res = nf > 0.0 ? (a * c - f.values).norm() / nf : 0.0;
    return {std::move(c), res};
}

// ---------------------------------------------------------------------------
// 1D Caratheodory-Fejer / Pisarenko
// ---------------------------------------------------------------------------

/// Recover f(n) = sum_k c_k exp(i xi_k n), c_k > 0, from a Hermitian-symmetric
/// sequence indexed -N..N whose (N+1)x(N+1) Toeplitz matrix is PSD.
inline RecoveryResult cf_recover_1d(const Eigen::VectorXcd& f, double rank_tol = 1e-10,
                                    double psd_tol = 1e-10) {
    static constexpr double kUnimodTol = 1e-6;
    static constexpr double kFreqDedupTol = 1e-6;

    if (f.size() % 2 == 0)
        throw DimensionMismatch("sequence must have odd length 2N+1");
    const int n = static_cast<int>(f.size() / 2); // N

    double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
    for (int i = 0; i <= n; ++i)
        if (std::abs(f(n + i) - std::conj(f(n - i))) > 1e-12 * scale)
            throw NotPSD("sequence is not Hermitian-symmetric");

    Eigen::MatrixXcd t(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            t(i, j) = f(i - j + n);

    SpectralReport rep = analyze_matrix(t, rank_tol, psd_tol);
    if (rep.psd_verdict != PsdVerdict::psd)
        throw NotPSD("induced Toeplitz matrix is not positive semidefinite");
    const int k = rep.numerical_rank;
    if (k == 0)
        return detail::zero_model(1);
    if (k > n)
        throw RankTooLarge("rank exceeds N; outside the theorem hypothesis");

    Eigen::VectorXcd a = detail::null_vector(t, k);
    int degree = 0;
    std::vector<Complex> roots = detail::polynomial_roots(a, degree);
    if (degree < k)
        throw NonUnimodularRoots("null polynomial is degenerate");

    // Null direction is orthogonal to the exponential columns, so the roots
    // are exp(-i xi_k); radial drift is projected away before taking args.
    std::vector<double> xs;
    for (Complex r : roots) {
        if (std::abs(std::abs(r) - 1.0) > kUnimodTol)
            throw NonUnimodularRoots("root off the unit circle");
        double xi = -std::arg(r / std::abs(r));
        for (double seen : xs) {
            double diff = std::abs(xi - seen);
            diff = std::min(diff, 2.0 * M_PI - diff);
            if (diff < kFreqDedupTol)
                throw NonUnimodularRoots("repeated root; frequencies not distinct");
        }
        xs.push_back(xi);
    }

    std::vector<RealVec> freqs;
    for (double xi : xs)
        freqs.push_back({xi});
    GridDomain line(1, 1.0, [&] {
        std::vector<IntVec> pts;
        for (int i = -n; i <= n; ++i)
            pts.push_back({i});
        return pts;
    }());
    auto [c, residual] = vandermonde_fit(freqs, SampledField(line, [&] {
                                             Eigen::VectorXcd v(2 * n + 1);
                                             for (int i = 0; i < 2 * n + 1; ++i)
                                                 v(i) = f(line.point(i)[0] + n);
                                             return v;
                                         }()));

    double ctol = 1e-7 * std::max(1.0, c.cwiseAbs().maxCoeff());
    RecoveryResult out;
    out.model = ExpSum(1);
    for (int j = 0; j < c.size(); ++j) {
        if (std::abs(c(j).imag()) > ctol || c(j).real() <= ctol)
            throw NegativeCoefficient("recovered coefficient is not real positive");
        out.model.add_term(c(j).real(), {Complex(0.0, xs[static_cast<std::size_t>(j)])});
    }
    out.residual = residual;
    out.frequencies_real = true;
    out.coefficients_positive = true;
    out.rank_used = k;
    return out;
}

// ---------------------------------------------------------------------------
// 1D Fischer (real exponentials, PSD Hankel)
// ---------------------------------------------------------------------------

/// Fischer recovery result; the discrete statement has genuine exceptional
/// cases, reported as a first-class outcome rather than an error.
struct FischerOutcome {
    bool exceptional = false;
    std::string reason;                  ///< set when exceptional
    std::optional<RecoveryResult> result;
};

/// Recover f(n) = sum_k c_k lambda_k^n with c_k > 0 and lambda_k > 0 from a
/// real sequence indexed 0..2N whose (N+1)x(N+1) Hankel matrix is PSD.
inline FischerOutcome fischer_recover_1d(const Eigen::VectorXd& f, double rank_tol = 1e-10,
                                         double psd_tol = 1e-10,
                                         double residual_tol = 1e-8) {
    if (f.size() % 2 == 0)
        throw DimensionMismatch("sequence must have odd length 2N+1");
    const int n = static_cast<int>(f.size() / 2);

    Eigen::MatrixXcd h(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            h(i, j) = f(i + j);

    SpectralReport rep = analyze_matrix(h, rank_tol, psd_tol);
    if (rep.psd_verdict != PsdVerdict::psd)
        throw NotPSD("induced Hankel matrix is not positive semidefinite");
    const int k = rep.numerical_rank;

    FischerOutcome out;
    if (k == 0) {
        out.result = detail::zero_model(1);
        return out;
    }

    auto exceptional = [&](std::string why) {
        FischerOutcome e;
        e.exceptional = true;
        e.reason = std::move(why);
        return e;
    };

    Eigen::VectorXcd a = detail::null_vector(h, k);
    int degree = 0;
    std::vector<Complex> roots = detail::polynomial_roots(a, degree);
    if (degree < k)
        return exceptional("null polynomial has fewer than rank-many roots");

    // Here the roots are the bases lambda_k themselves.
    std::vector<double> lambdas;
    for (Complex r : roots) {
        if (std::abs(r.imag()) > 1e-8 * (1.0 + std::abs(r)) || r.real() <= 1e-12)
            return exceptional("root is not a positive real number");
        double lam = r.real();
        for (double seen : lambdas)
            if (std::abs(lam - seen) < 1e-6 * std::max(1.0, std::abs(seen)))
                return exceptional("repeated root");
        lambdas.push_back(lam);
    }

    Eigen::MatrixXd v(2 * n + 1, k);
    for (int j = 0; j < k; ++j) {
        double p = 1.0;
        for (int i = 0; i < 2 * n + 1; ++i) {
            v(i, j) = p;
            p *= lambdas[static_cast<std::size_t>(j)];
        }
    }
    Eigen::VectorXd c = v.colPivHouseholderQr().solve(f);
    double nf = f.norm();
    double residual = nf > 0.0 ? (v * c - f).norm() / nf : 0.0;
    if (residual >= residual_tol)
        return exceptional("residual too large; sequence is not an exponential sum");
    double ctol = 1e-7 * std::max(1.0, c.cwiseAbs().maxCoeff());
    for (int j = 0; j < c.size(); ++j)
        if (c(j) <= ctol)
            return exceptional("recovered coefficient is not positive");

    RecoveryResult r;
    r.model = ExpSum(1);
    for (int j = 0; j < c.size(); ++j)
        r.model.add_term(c(j), {Complex(std::log(lambdas[static_cast<std::size_t>(j)]), 0.0)});
    r.residual = residual;
    r.frequencies_real = true;
    r.coefficients_positive = true;
    r.rank_used = k;
    out.result = std::move(r);
    return out;
}

// ---------------------------------------------------------------------------
// Multidimensional Caratheodory-Fejer recovery
// ---------------------------------------------------------------------------

/// Constructive multidimensional recovery from a field on the full box
/// {-2N..2N}^d: certify the inner Toeplitz operator PSD of rank K, run 1D
/// recovery on the central probe of every axis, fit over the cross product
/// of the axis frequency sets and prune to the K surviving terms.
inline RecoveryResult cf_recover_md(const SampledField& f, double rank_tol = 1e-10,
                                    double prune_tol = 1e-6, int candidate_cap = 4096,
                                    double psd_tol = 1e-10, double residual_tol = 1e-8) {
    const int d = f.domain.dimension();
    auto [lo, hi] = f.domain.box_bounds();
    for (int m = 0; m < d; ++m)
        if (lo[m] != -hi[m] || hi[m] != hi[0])
            throw NotABox("domain must be a box {-2N..2N}^d centered at 0");
    if (hi[0] % 2 != 0)
        throw NotABox("box side must be 4N+1");
    const int n = static_cast<int>(hi[0] / 2); // N

    std::vector<IntVec> inner_pts;
    {
        IntVec p(d, -n);
        while (true) {
            inner_pts.push_back(p);
            int m = d - 1;
            for (; m >= 0; --m) {
                if (++p[m] <= n)
                    break;
                p[m] = -n;
            }
            if (m < 0)
                break;
        }
    }
    GridDomain inner(d, f.domain.sampling_length(), std::move(inner_pts));
    GeneralDomainMatrix theta = build_toeplitz(f, inner, inner);
    SpectralReport rep = analyze(theta, rank_tol, psd_tol);
    if (rep.psd_verdict != PsdVerdict::psd)
        throw NotPSD("general domain Toeplitz matrix is not positive semidefinite");
    const int k = rep.numerical_rank;
    if (k == 0)
        return detail::zero_model(d);
    if (k > 2 * n)
        throw RankTooLarge("rank exceeds 2N; outside the theorem hypothesis");

    // Axis frequency sets from the central probes.
    std::vector<std::vector<double>> axis_freqs(d);
    IntVec frozen(static_cast<std::size_t>(d - 1), 0);
    for (int axis = 0; axis < d; ++axis) {
        RecoveryResult slice = cf_recover_1d(probe(f, axis, frozen), rank_tol, psd_tol);
        if (slice.model.size() == 0)
            throw VerificationFailed("central probe produced an empty frequency set");
        for (const auto& t : slice.model.terms())
            axis_freqs[axis].push_back(t.zeta[0].imag());
    }

    std::size_t count = 1;
    for (const auto& phi : axis_freqs) {
        count *= phi.size();
        if (count > static_cast<std::size_t>(candidate_cap))
            throw CandidateExplosion("candidate frequency grid exceeds the configured cap");
    }

    std::vector<RealVec> candidates;
    candidates.reserve(count);
    std::vector<std::size_t> combo(d, 0);
    while (true) {
        RealVec xi(d);
        for (int m = 0; m < d; ++m)
            xi[m] = axis_freqs[m][combo[m]];
        candidates.push_back(std::move(xi));
        int m = d - 1;
        for (; m >= 0; --m) {
            if (++combo[m] < axis_freqs[m].size())
                break;
            combo[m] = 0;
        }
        if (m < 0)
            break;
    }

    auto [c_all, res_all] = vandermonde_fit(candidates, f);
    (void)res_all;
    double cmax = c_all.cwiseAbs().maxCoeff();
    std::vector<RealVec> kept;
    for (int j = 0; j < c_all.size(); ++j)
        if (std::abs(c_all(j)) > prune_tol * cmax)
            kept.push_back(candidates[static_cast<std::size_t>(j)]);

    if (static_cast<int>(kept.size()) != k)
        throw VerificationFailed("kept term count does not equal the certified rank");

    auto [c, residual] = vandermonde_fit(kept, f);
    if (residual >= residual_tol)
        throw VerificationFailed("model residual exceeds tolerance");
    double ctol = 1e-7 * std::max(1.0, c.cwiseAbs().maxCoeff());
    RecoveryResult out;
    out.model = ExpSum(d);
    for (int j = 0; j < c.size(); ++j) {
        if (std::abs(c(j).imag()) > ctol || c(j).real() <= ctol)
            throw VerificationFailed("recovered coefficient is not real positive");
        ComplexVec zeta(d);
        for (int m = 0; m < d; ++m)
            zeta[m] = Complex(0.0, kept[static_cast<std::size_t>(j)][m]);
        out.model.add_term(c(j).real(), zeta);
    }
    out.residual = residual;
    out.frequencies_real = true;
    out.coefficients_positive = true;
    out.rank_used = k;
    return out;
}

} // namespace gendomain

#endif // GENDOMAIN_RECOVERY_HPP
