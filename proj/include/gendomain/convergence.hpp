#ifndef GENDOMAIN_CONVERGENCE_HPP
#define GENDOMAIN_CONVERGENCE_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "gendomain/spectral.hpp"

namespace gendomain {

/// One row of a discretization sweep.
struct SweepRecord {
    double l = 0.0;
    bool empty_domain = false;       ///< no lattice point at this l (recorded, not fatal)
    int xi_size = 0;
    int ups_size = 0;
    int omega_size = 0;
    int numerical_rank = 0;
    double sigma_max = 0.0;
    double symbol_norm = 0.0;        ///< ||f|| on Omega_l
    std::int64_t boundary_count = 0; ///< N_l
    std::int64_t interior_count = 0;
    double ld_boundary = 0.0;        ///< l^d * N_l
    std::vector<double> operator_errors; ///< one per test function (norm sweeps)
};

struct SweepReport {
    std::vector<double> l_values;       ///< strictly decreasing
    std::vector<SweepRecord> per_l;
    int stabilization_index = -1;       ///< first index after which rank is constant
                                        ///< across the remaining (>= 3) values
};

namespace detail {

inline void check_decreasing(const std::vector<double>& l_values) {
    if (l_values.empty())
        throw InvalidSpec("sweep needs at least one sampling length");
    for (std::size_t i = 0; i + 1 < l_values.size(); ++i)
        if (!(l_values[i] > l_values[i + 1]))
            throw InvalidSpec("sampling lengths must be strictly decreasing");
    if (!(l_values.back() > 0.0))
        throw InvalidSpec("sampling lengths must be positive");
}

} // namespace detail

/// Rank of the general domain matrix across a decreasing sequence of
/// sampling lengths. The rank sequence is expected to be nondecreasing and
/// to stabilize at the continuous rank once the grids resolve the symbol.
inline SweepReport rank_sweep(const Symbol& sym, const DomainSpec& xi_spec,
                              const DomainSpec& ups_spec, const std::vector<double>& l_values,
                              MatrixKind kind = MatrixKind::hankel, double rank_tol = 1e-10) {
    detail::check_decreasing(l_values);
    SweepReport report;
    report.l_values = l_values;
    const int d = xi_spec.dimension();
    for (double l : l_values) {
        SweepRecord rec;
        rec.l = l;
        try {
            GridDomain xi = lattice_points(xi_spec, l);
            GridDomain ups = lattice_points(ups_spec, l);
            GridDomain omega = minkowski(
                xi, ups, kind == MatrixKind::hankel ? MinkowskiSign::plus : MinkowskiSign::minus);
            SampledField f = sample(sym, omega);
            GeneralDomainMatrix m = kind == MatrixKind::hankel ? build_hankel(f, xi, ups)
                                                               : build_toeplitz(f, xi, ups);
            SpectralReport sr = analyze(m, rank_tol);
            rec.xi_size = xi.size();
            rec.ups_size = ups.size();
            rec.omega_size = omega.size();
            rec.numerical_rank = sr.numerical_rank;
            rec.sigma_max = sr.singular_values.size() > 0 ? sr.singular_values(0) : 0.0;
            rec.symbol_norm = f.values.norm();
            BoundaryCount bc = boundary_cube_count(ups_spec, l);
            rec.boundary_count = bc.boundary;
            rec.interior_count = bc.interior;
            rec.ld_boundary = std::pow(l, d) * static_cast<double>(bc.boundary);
        } catch (const EmptyDomain&) {
            rec.empty_domain = true;
        }
        report.per_l.push_back(std::move(rec));
    }
    // Stabilization: rank constant across the last three (or more) values.
    const auto& rows = report.per_l;
    for (std::size_t i = 0; i + 3 <= rows.size(); ++i) {
        bool stable = !rows[i].empty_domain;
        for (std::size_t j = i; stable && j < rows.size(); ++j)
            stable = !rows[j].empty_domain && rows[j].numerical_rank == rows[i].numerical_rank;
        if (stable) {
            report.stabilization_index = static_cast<int>(i);
            break;
        }
    }
    return report;
}

/// Smooth compactly supported test function: amplitude * bump((x-center)/R).
struct BumpFunction {
    RealVec center;
    double radius = 1.0;
    double amplitude = 1.0;

    double operator()(const RealVec& x) const {
        double r2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double t = x[i] - center[i];
            r2 += t * t;
        }
        double rr = radius * radius;
        if (r2 >= rr)
            return 0.0;
        return amplitude * std::exp(-r2 / (rr - r2));
    }
};

/// Bumps with support radius 0.6 * inradius, centers nudged inside the
/// domain so the functions differ.
inline std::vector<BumpFunction> default_test_functions(const DomainSpec& spec, int count = 3) {
    RealVec c = spec.center_point();
    double inr = spec.inradius();
    std::vector<BumpFunction> out;
    for (int i = 0; i < count; ++i) {
        BumpFunction b;
        b.center = c;
        if (!b.center.empty())
            b.center[static_cast<std::size_t>(i) % b.center.size()] +=
                0.15 * inr * (i % 2 == 0 ? 1.0 : -1.0) * (1.0 + 0.3 * i);
        b.radius = 0.6 * inr * (1.0 - 0.08 * i);
        b.amplitude = 1.0 + 0.5 * i;
        out.push_back(std::move(b));
    }
    return out;
}

namespace detail {

/// Discrete image l^d sum_{y in Ups_l} f(x+y) g(y) at the given x points,
/// evaluated by direct summation (no matrix is materialized).
inline Eigen::VectorXcd correlation_image(const Symbol& sym, const GridDomain& ups, double l,
                                          const std::vector<RealVec>& x_points,
                                          const BumpFunction& g) {
    const int d = ups.dimension();
    std::vector<double> gv(static_cast<std::size_t>(ups.size()));
    for (int j = 0; j < ups.size(); ++j)
        gv[static_cast<std::size_t>(j)] = g(ups.physical(j));
    double weight = std::pow(l, d);
    Eigen::VectorXcd out(static_cast<Eigen::Index>(x_points.size()));
    RealVec xy(d);
    for (std::size_t i = 0; i < x_points.size(); ++i) {
        Complex s = 0.0;
        for (int j = 0; j < ups.size(); ++j) {
            if (gv[static_cast<std::size_t>(j)] == 0.0)
                continue;
            RealVec y = ups.physical(j);
            for (int m = 0; m < d; ++m)
                xy[m] = x_points[i][m] + y[m];
            s += eval(sym, xy) * gv[static_cast<std::size_t>(j)];
        }
        out(static_cast<Eigen::Index>(i)) = weight * s;
    }
    return out;
}

} // namespace detail

/// Scaled operator-image convergence: for each l, compare the discrete image
/// l^d Gamma_{f,l} g against the reference computed on a 4x finer grid at the
/// same evaluation points. The reference grid at l_ref = min(l)/4 plays the
/// role of the continuous operator.
inline SweepReport norm_convergence(const Symbol& sym, const DomainSpec& spec,
                                    const std::vector<double>& l_values,
                                    const std::vector<BumpFunction>& test_functions) {
    detail::check_decreasing(l_values);
    if (test_functions.empty())
        throw InvalidSpec("norm convergence needs at least one test function");
    const int d = spec.dimension();
    const double l_ref = l_values.back() / 4.0;
    GridDomain ups_ref = lattice_points(spec, l_ref);

    SweepReport report;
    report.l_values = l_values;
    for (double l : l_values) {
        SweepRecord rec;
        rec.l = l;
        try {
            GridDomain xi = lattice_points(spec, l);
            GridDomain ups = xi;
            rec.xi_size = xi.size();
            rec.ups_size = ups.size();
            std::vector<RealVec> xs;
            for (int i = 0; i < xi.size(); ++i)
                xs.push_back(xi.physical(i));
            for (const auto& g : test_functions) {
                Eigen::VectorXcd coarse = detail::correlation_image(sym, ups, l, xs, g);
                Eigen::VectorXcd fine = detail::correlation_image(sym, ups_ref, l_ref, xs, g);
                double nf = fine.norm();
                rec.operator_errors.push_back(nf > 0.0 ? (coarse - fine).norm() / nf
                                                       : coarse.norm());
            }
            BoundaryCount bc = boundary_cube_count(spec, l);
            rec.boundary_count = bc.boundary;
            rec.interior_count = bc.interior;
            rec.ld_boundary = std::pow(l, d) * static_cast<double>(bc.boundary);
        } catch (const EmptyDomain&) {
            rec.empty_domain = true;
        }
        report.per_l.push_back(std::move(rec));
    }
    return report;
}

/// Boundary-cube statistics across sampling lengths; for a well-behaved
/// boundary l^d * N_l tends to zero.
inline SweepReport boundary_sweep(const DomainSpec& spec, const std::vector<double>& l_values) {
    detail::check_decreasing(l_values);
    const int d = spec.dimension();
    SweepReport report;
    report.l_values = l_values;
    for (double l : l_values) {
        SweepRecord rec;
        rec.l = l;
        try {
            BoundaryCount bc = boundary_cube_count(spec, l);
            rec.boundary_count = bc.boundary;
            rec.interior_count = bc.interior;
            rec.ld_boundary = std::pow(l, d) * static_cast<double>(bc.boundary);
            rec.ups_size = static_cast<int>(bc.boundary + bc.interior);
        } catch (const EmptyDomain&) {
            rec.empty_domain = true;
        }
        report.per_l.push_back(std::move(rec));
    }
    return report;
}

} // namespace gendomain

#endif // GENDOMAIN_CONVERGENCE_HPP
