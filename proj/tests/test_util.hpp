#ifndef GENDOMAIN_TEST_UTIL_HPP
#define GENDOMAIN_TEST_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "gendomain/gendomain.hpp"

namespace gdtest {

namespace gd = gendomain;

/// Full box {-n..n}^d with sampling length l, default ordering.
inline gd::GridDomain centered_box(int d, int n, double l = 1.0) {
    std::vector<gd::IntVec> pts;
    gd::IntVec p(d, -n);
    while (true) {
        pts.push_back(p);
        int k = d - 1;
        for (; k >= 0; --k) {
            if (++p[k] <= n)
                break;
            p[k] = -n;
        }
        if (k < 0)
            break;
    }
    return gd::GridDomain(d, l, std::move(pts));
}

/// k values in (-pi+0.3, pi-0.3) with pairwise distance >= 0.3.
inline std::vector<double> separated_frequencies(std::mt19937_64& rng, int k, double sep = 0.3) {
    std::uniform_real_distribution<double> dist(-M_PI + 0.3, M_PI - 0.3);
    std::vector<double> out;
    while (static_cast<int>(out.size()) < k) {
        double x = dist(rng);
        bool ok = true;
        for (double y : out)
            if (std::abs(x - y) < sep)
                ok = false;
        if (ok)
            out.push_back(x);
    }
    return out;
}

/// Reduced ExpSum with real frequencies (per-axis separation >= sep, one
/// frequency value per term per axis) and positive coefficients in [0.5, 5].
inline gd::ExpSum random_positive_model(std::mt19937_64& rng, int d, int k, double sep = 0.3) {
    std::vector<std::vector<double>> axis(d);
    for (int m = 0; m < d; ++m)
        axis[m] = separated_frequencies(rng, k, sep);
    std::uniform_real_distribution<double> cdist(0.5, 5.0);
    gd::ExpSum model(d);
    for (int j = 0; j < k; ++j) {
        gd::ComplexVec zeta(d);
        for (int m = 0; m < d; ++m)
            zeta[m] = gd::Complex(0.0, axis[m][static_cast<std::size_t>(j)]);
        model.add_term(cdist(rng), zeta);
    }
    return model;
}

/// Like random_positive_model but with random complex coefficients.
inline gd::ExpSum random_expsum(std::mt19937_64& rng, int d, int k, double sep = 0.3) {
    std::vector<std::vector<double>> axis(d);
    for (int m = 0; m < d; ++m)
        axis[m] = separated_frequencies(rng, k, sep);
    std::uniform_real_distribution<double> cdist(0.5, 5.0);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * M_PI);
    gd::ExpSum model(d);
    for (int j = 0; j < k; ++j) {
        gd::ComplexVec zeta(d);
        for (int m = 0; m < d; ++m)
            zeta[m] = gd::Complex(0.0, axis[m][static_cast<std::size_t>(j)]);
        model.add_term(std::polar(cdist(rng), ph(rng)), zeta);
    }
    return model;
}

struct MatchError {
    double frequency = std::numeric_limits<double>::infinity();
    double coefficient = std::numeric_limits<double>::infinity();
};

/// Optimal matching (over permutations, k <= 8) of recovered terms against
/// the true model; reports max componentwise frequency error and max
/// coefficient error.
inline MatchError match_terms(const gd::ExpSum& truth, const gd::RecoveryResult& rec) {
    const auto rf = rec.frequencies();
    const auto rc = rec.coefficients();
    const auto& tt = truth.terms();
    MatchError best;
    if (tt.size() != rf.size())
        return best;
    const int k = static_cast<int>(tt.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        double fe = 0.0, ce = 0.0;
        for (int j = 0; j < k; ++j) {
            const auto& t = tt[static_cast<std::size_t>(j)];
            const auto& xi = rf[static_cast<std::size_t>(perm[j])];
            for (std::size_t m = 0; m < xi.size(); ++m)
                fe = std::max(fe, std::abs(t.zeta[m].imag() - xi[m]));
            ce = std::max(ce, std::abs(t.coeff.real() - rc[static_cast<std::size_t>(perm[j])]));
        }
        if (fe < best.frequency) {
            best.frequency = fe;
            best.coefficient = ce;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace gdtest

#endif // GENDOMAIN_TEST_UTIL_HPP
