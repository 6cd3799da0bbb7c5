#ifndef GENDOMAIN_SYMBOL_HPP
#define GENDOMAIN_SYMBOL_HPP

#include <complex>
#include <map>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "gendomain/lattice.hpp"

namespace gendomain {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

namespace detail {
inline Complex dot(const ComplexVec& zeta, const RealVec& x) {
    Complex s = 0.0;
    for (std::size_t m = 0; m < zeta.size(); ++m)
        s += zeta[m] * x[m];
    return s;
}
} // namespace detail

// ---------------------------------------------------------------------------
// ExpSum: f(x) = sum_k c_k exp(zeta_k . x), kept in reduced form.
// ---------------------------------------------------------------------------

struct ExpTerm {
    Complex coeff;
    ComplexVec zeta;
};

class ExpSum {
public:
    /// Merge tolerance for exponents treated as equal during reduction.
    static constexpr double kMergeTol = 1e-12;

    explicit ExpSum(int dim) : dim_(dim) {}

    ExpSum(int dim, std::vector<ExpTerm> terms) : dim_(dim) {
        for (auto& t : terms) {
            if (static_cast<int>(t.zeta.size()) != dim)
                throw DimensionMismatch("exponent dimension mismatch");
            add_term(t.coeff, t.zeta);
        }
    }

    int dimension() const noexcept { return dim_; }
    const std::vector<ExpTerm>& terms() const noexcept { return terms_; }
    int size() const noexcept { return static_cast<int>(terms_.size()); }

    /// Merge duplicate exponents (within kMergeTol per component) and drop
    /// zero coefficients. Idempotent by construction; exposed so callers can
    /// normalize after in-place edits of the term list.
    void add_term(Complex c, const ComplexVec& zeta) {
        if (static_cast<int>(zeta.size()) != dim_)
            throw DimensionMismatch("exponent dimension mismatch");
        for (auto& t : terms_) {
            bool same = true;
            for (int m = 0; m < dim_; ++m)
                if (std::abs(t.zeta[m] - zeta[m]) > kMergeTol) {
                    same = false;
                    break;
                }
            if (same) {
                t.coeff += c;
                prune_zeros();
                return;
            }
        }
        if (c != Complex(0.0))
            terms_.push_back({c, zeta});
    }

    Complex eval(const RealVec& x) const {
        if (static_cast<int>(x.size()) != dim_)
            throw DimensionMismatch("evaluation point dimension mismatch");
        Complex s = 0.0;
        for (const auto& t : terms_)
            s += t.coeff * std::exp(detail::dot(t.zeta, x));
        return s;
    }

private:
    void prune_zeros() {
        std::erase_if(terms_, [](const ExpTerm& t) { return t.coeff == Complex(0.0); });
    }

    int dim_;
    std::vector<ExpTerm> terms_;
};

// ---------------------------------------------------------------------------
// ExpPoly: f(x) = sum_j p_j(x) exp(zeta_j . x) with multivariate p_j.
// ---------------------------------------------------------------------------

/// Multivariate polynomial as a monomial-exponent -> coefficient map.
using Monomials = std::map<std::vector<int>, Complex>;

struct PolyTerm {
    Monomials poly;
    ComplexVec zeta;
};

class ExpPoly {
public:
    ExpPoly(int dim, std::vector<PolyTerm> terms) : dim_(dim), terms_(std::move(terms)) {
        for (auto& t : terms_) {
            if (static_cast<int>(t.zeta.size()) != dim_)
                throw DimensionMismatch("exponent dimension mismatch");
            bool nonzero = false;
            for (const auto& [alpha, c] : t.poly) {
                if (static_cast<int>(alpha.size()) != dim_)
                    throw DimensionMismatch("monomial dimension mismatch");
                if (c != Complex(0.0))
                    nonzero = true;
            }
            if (!nonzero)
                throw InvalidSpec("exponential polynomial term with zero polynomial");
        }
    }

    int dimension() const noexcept { return dim_; }
    const std::vector<PolyTerm>& terms() const noexcept { return terms_; }

    Complex eval(const RealVec& x) const {
        if (static_cast<int>(x.size()) != dim_)
            throw DimensionMismatch("evaluation point dimension mismatch");
        Complex s = 0.0;
        for (const auto& t : terms_) {
            Complex p = 0.0;
            for (const auto& [alpha, c] : t.poly) {
                double mono = 1.0;
                for (int m = 0; m < dim_; ++m)
                    for (int e = 0; e < alpha[m]; ++e)
                        mono *= x[m];
                p += c * mono;
            }
            s += p * std::exp(detail::dot(t.zeta, x));
        }
        return s;
    }

private:
    int dim_;
    std::vector<PolyTerm> terms_;
};

/// Either symbol model; everything downstream only needs point evaluation.
using Symbol = std::variant<ExpSum, ExpPoly>;

inline int dimension(const Symbol& sym) {
    return std::visit([](const auto& s) { return s.dimension(); }, sym);
}

inline Complex eval(const Symbol& sym, const RealVec& x) {
    return std::visit([&](const auto& s) { return s.eval(x); }, sym);
}

// ---------------------------------------------------------------------------
// SampledField
// ---------------------------------------------------------------------------

/// Complex values of a symbol on a grid, indexed by the grid's ordering.
struct SampledField {
    GridDomain domain;
    Eigen::VectorXcd values;

    SampledField(GridDomain d, Eigen::VectorXcd v) : domain(std::move(d)), values(std::move(v)) {
        if (values.size() != domain.size())
            throw DimensionMismatch("field value count does not match domain size");
    }

    Complex at(const IntVec& p) const {
        int i = domain.index_of(p);
        if (i < 0)
            throw DomainCoverage("field is not defined at the requested point");
        return values(i);
    }
};

template <typename Sym>
SampledField sample(const Sym& sym, const GridDomain& g) {
    Eigen::VectorXcd v(g.size());
    for (int i = 0; i < g.size(); ++i)
        v(i) = eval_dispatch(sym, g.physical(i));
    return SampledField(g, std::move(v));
}

inline Complex eval_dispatch(const ExpSum& s, const RealVec& x) { return s.eval(x); }
inline Complex eval_dispatch(const ExpPoly& s, const RealVec& x) { return s.eval(x); }
inline Complex eval_dispatch(const Symbol& s, const RealVec& x) { return eval(s, x); }

// ---------------------------------------------------------------------------
// Probes and tensor membership
// ---------------------------------------------------------------------------

/// 1D slice of a field on a full box along `axis` (0-based), with the other
/// coordinates frozen at `frozen` (listed in axis order, skipping `axis`).
/// Entries are ordered by increasing coordinate.
inline Eigen::VectorXcd probe(const SampledField& f, int axis, const IntVec& frozen) {
    const int d = f.domain.dimension();
    if (axis < 0 || axis >= d)
        throw IndexOutOfRange("probe axis out of range");
    if (static_cast<int>(frozen.size()) != d - 1)
        throw IndexOutOfRange("probe expects d-1 frozen coordinates");
    auto [lo, hi] = f.domain.box_bounds();
    IntVec p(d);
    int j = 0;
    for (int k = 0; k < d; ++k) {
        if (k == axis)
            continue;
        if (frozen[j] < lo[k] || frozen[j] > hi[k])
            throw IndexOutOfRange("frozen coordinate outside box");
        p[k] = frozen[j++];
    }
    Eigen::VectorXcd out(hi[axis] - lo[axis] + 1);
    for (std::int64_t c = lo[axis]; c <= hi[axis]; ++c) {
        p[axis] = c;
        out(c - lo[axis]) = f.values(f.domain.index_of(p));
    }
    return out;
}

namespace detail {

/// Relative distance of v from the column span of basis.
inline double subspace_residual(const Eigen::MatrixXcd& basis, const Eigen::VectorXcd& v) {
    double nv = v.norm();
    if (nv == 0.0)
        return 0.0;
    Eigen::VectorXcd c = basis.colPivHouseholderQr().solve(v);
    return (basis * c - v).norm() / nv;
}

} // namespace detail

/// Independent check used alongside tensor_membership: every probe of f lies
/// in its axis subspace (relative residual below tol).
inline bool all_probes_in_subspaces(const SampledField& f,
                                    const std::vector<Eigen::MatrixXcd>& subspaces,
                                    double tol = 1e-8) {
    const int d = f.domain.dimension();
    auto [lo, hi] = f.domain.box_bounds();
    for (int axis = 0; axis < d; ++axis) {
        // iterate over all frozen combinations
        IntVec frozen(d - 1);
        std::vector<std::int64_t> flo, fhi;
        for (int k = 0; k < d; ++k)
            if (k != axis) {
                flo.push_back(lo[k]);
                fhi.push_back(hi[k]);
            }
        for (int k = 0; k < d - 1; ++k)
            frozen[k] = flo[k];
        while (true) {
            if (detail::subspace_residual(subspaces[axis], probe(f, axis, frozen)) > tol)
                return false;
            if (d == 1)
                break;
            int k = d - 2;
            for (; k >= 0; --k) {
                if (++frozen[k] <= fhi[k])
                    break;
                frozen[k] = flo[k];
            }
            if (k < 0)
                break;
        }
    }
    return true;
}

/// Whether f (on a full box with equal per-axis extent n) lies in the span of
/// all elementary tensors u_1 x ... x u_d with u_j drawn from the j-th basis.
/// Decided by least-squares residual below tol * ||f||.
inline bool tensor_membership(const SampledField& f,
                              const std::vector<Eigen::MatrixXcd>& subspaces,
                              double tol = 1e-8) {
    const int d = f.domain.dimension();
    if (static_cast<int>(subspaces.size()) != d)
        throw DimensionMismatch("one subspace basis required per axis");
    auto [lo, hi] = f.domain.box_bounds();
    std::int64_t n = hi[0] - lo[0] + 1;
    for (int k = 0; k < d; ++k)
        if (hi[k] - lo[k] + 1 != n)
            throw NotABox("tensor membership requires equal per-axis extent");
    for (const auto& u : subspaces)
        if (u.rows() != n)
            throw DimensionMismatch("subspace basis row count must equal axis extent");

    std::size_t cols = 1;
    for (const auto& u : subspaces)
        cols *= static_cast<std::size_t>(u.cols());
    Eigen::MatrixXcd a(f.domain.size(), static_cast<Eigen::Index>(cols));
    std::vector<int> combo(d, 0);
    for (std::size_t col = 0;; ++col) {
        for (int i = 0; i < f.domain.size(); ++i) {
            const IntVec& p = f.domain.point(i);
            Complex v = 1.0;
            for (int k = 0; k < d; ++k)
                v *= subspaces[k](p[k] - lo[k], combo[k]);
            a(i, static_cast<Eigen::Index>(col)) = v;
        }
        int k = d - 1;
        for (; k >= 0; --k) {
            if (++combo[k] < subspaces[k].cols())
                break;
            combo[k] = 0;
        }
        if (k < 0)
            break;
    }
    double nf = f.values.norm();
    if (nf == 0.0)
        return true;
    Eigen::VectorXcd c = a.colPivHouseholderQr().solve(f.values);
    return (a * c - f.values).norm() < tol * nf;
}

} // namespace gendomain

#endif // GENDOMAIN_SYMBOL_HPP
