#ifndef GENDOMAIN_LATTICE_HPP
#define GENDOMAIN_LATTICE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "gendomain/errors.hpp"

namespace gendomain {

/// Integer lattice point in Z^d.
using IntVec = std::vector<std::int64_t>;
/// Point in R^d.
using RealVec = std::vector<double>;

// ---------------------------------------------------------------------------
// DomainSpec: open, bounded, connected region in R^d.
// ---------------------------------------------------------------------------

struct BoxShape {
    std::vector<double> halfwidths; // open box (-h_i, h_i) per axis
};

struct DiscShape {
    std::vector<double> center;
    double radius = 0.0; // open ball
};

struct TriangleShape {
    std::array<std::array<double, 2>, 3> vertices; // 2D only, open interior
};

/// Explicit list of lattice points. The associated region is the interior of
/// the union of the closed sampling cubes centered at the points.
struct MaskShape {
    std::vector<IntVec> points;
};

class DomainSpec {
public:
    using Shape = std::variant<BoxShape, DiscShape, TriangleShape, MaskShape>;

    static DomainSpec box(std::vector<double> halfwidths) {
        if (halfwidths.empty())
            throw InvalidSpec("box needs at least one halfwidth");
        for (double h : halfwidths)
            if (!(h > 0.0))
                throw InvalidSpec("box halfwidths must be positive");
        int d = static_cast<int>(halfwidths.size());
        return DomainSpec(d, BoxShape{std::move(halfwidths)});
    }

    static DomainSpec disc(std::vector<double> center, double radius) {
        if (center.empty())
            throw InvalidSpec("disc needs a center");
        if (!(radius > 0.0))
            throw InvalidSpec("disc radius must be positive");
        int d = static_cast<int>(center.size());
        return DomainSpec(d, DiscShape{std::move(center), radius});
    }

    static DomainSpec triangle(const std::array<std::array<double, 2>, 3>& vertices) {
        double area2 = signed_area2(vertices);
        if (std::abs(area2) == 0.0)
            throw InvalidSpec("triangle is degenerate");
        TriangleShape t{vertices};
        if (area2 < 0.0) // orient counterclockwise
            std::swap(t.vertices[1], t.vertices[2]);
        return DomainSpec(2, t);
    }

    static DomainSpec mask(std::vector<IntVec> points) {
        if (points.empty())
            throw InvalidSpec("mask needs at least one point");
        int d = static_cast<int>(points.front().size());
        for (const auto& p : points)
            if (static_cast<int>(p.size()) != d)
                throw InvalidSpec("mask points must share one dimension");
        return DomainSpec(d, MaskShape{std::move(points)});
    }

    int dimension() const noexcept { return dim_; }
    const Shape& shape() const noexcept { return shape_; }

    bool is_mask() const noexcept { return std::holds_alternative<MaskShape>(shape_); }

    /// Open-set membership of a physical point (strict inequalities).
    /// Not defined for masks, whose region depends on the sampling length.
    bool contains(const RealVec& x) const {
        if (static_cast<int>(x.size()) != dim_)
            throw DimensionMismatch("point dimension does not match spec");
        if (const auto* b = std::get_if<BoxShape>(&shape_)) {
            for (int i = 0; i < dim_; ++i)
                if (!(std::abs(x[i]) < b->halfwidths[i]))
                    return false;
            return true;
        }
        if (const auto* c = std::get_if<DiscShape>(&shape_)) {
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) {
                double t = x[i] - c->center[i];
                s += t * t;
            }
            return s < c->radius * c->radius;
        }
        if (const auto* t = std::get_if<TriangleShape>(&shape_)) {
            // Counterclockwise vertices; strict interior via cross products.
            for (int e = 0; e < 3; ++e) {
                const auto& a = t->vertices[e];
                const auto& b = t->vertices[(e + 1) % 3];
                double cross = (b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0]);
                if (!(cross > 0.0))
                    return false;
            }
            return true;
        }
        throw InvalidSpec("open-set membership is undefined for mask shapes");
    }

    /// True iff the closed cube with center n*l and side l lies inside the
    /// open region. For masks: all 3^d neighbours of n belong to the mask.
    bool cube_inside(const IntVec& n, double l) const {
        if (static_cast<int>(n.size()) != dim_)
            throw DimensionMismatch("point dimension does not match spec");
        if (const auto* b = std::get_if<BoxShape>(&shape_)) {
            for (int i = 0; i < dim_; ++i)
                if (!(std::abs(n[i] * l) + l / 2.0 < b->halfwidths[i]))
                    return false;
            return true;
        }
        if (const auto* c = std::get_if<DiscShape>(&shape_)) {
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) {
                double t = std::abs(n[i] * l - c->center[i]) + l / 2.0;
                s += t * t;
            }
            return s < c->radius * c->radius;
        }
        if (std::holds_alternative<TriangleShape>(shape_)) {
            // Convex region: the cube is inside iff all four corners are.
            for (int corner = 0; corner < 4; ++corner) {
                RealVec x(2);
                x[0] = n[0] * l + ((corner & 1) ? l / 2.0 : -l / 2.0);
                x[1] = n[1] * l + ((corner & 2) ? l / 2.0 : -l / 2.0);
                if (!contains(x))
                    return false;
            }
            return true;
        }
        const auto& m = std::get<MaskShape>(shape_);
        std::vector<IntVec> sorted = m.points;
        std::sort(sorted.begin(), sorted.end());
        IntVec q(dim_);
        std::vector<int> off(dim_, -1);
        while (true) {
            for (int i = 0; i < dim_; ++i)
                q[i] = n[i] + off[i];
            if (!std::binary_search(sorted.begin(), sorted.end(), q))
                return false;
            int i = 0;
            for (; i < dim_; ++i) {
                if (++off[i] <= 1)
                    break;
                off[i] = -1;
            }
            if (i == dim_)
                return true;
        }
    }

    /// Per-axis integer bounds [lo, hi] that enclose every candidate lattice
    /// point at sampling length l.
    std::pair<IntVec, IntVec> lattice_bounds(double l) const {
        IntVec lo(dim_), hi(dim_);
        auto set = [&](int i, double a, double b) {
            lo[i] = static_cast<std::int64_t>(std::floor(a / l));
            hi[i] = static_cast<std::int64_t>(std::ceil(b / l));
        };
        if (const auto* b = std::get_if<BoxShape>(&shape_)) {
            for (int i = 0; i < dim_; ++i)
                set(i, -b->halfwidths[i], b->halfwidths[i]);
        } else if (const auto* c = std::get_if<DiscShape>(&shape_)) {
            for (int i = 0; i < dim_; ++i)
                set(i, c->center[i] - c->radius, c->center[i] + c->radius);
        } else if (const auto* t = std::get_if<TriangleShape>(&shape_)) {
            for (int i = 0; i < 2; ++i) {
                double a = t->vertices[0][i], b2 = a;
                for (const auto& v : t->vertices) {
                    a = std::min(a, v[i]);
                    b2 = std::max(b2, v[i]);
                }
                set(i, a, b2);
            }
        } else {
            const auto& m = std::get<MaskShape>(shape_);
            for (int i = 0; i < dim_; ++i) {
                lo[i] = hi[i] = m.points.front()[i];
                for (const auto& p : m.points) {
                    lo[i] = std::min(lo[i], p[i]);
                    hi[i] = std::max(hi[i], p[i]);
                }
            }
        }
        return {lo, hi};
    }

    /// Radius of the largest ball contained in the region (used for placing
    /// interior test functions). Not defined for masks.
    double inradius() const {
        if (const auto* b = std::get_if<BoxShape>(&shape_))
            return *std::min_element(b->halfwidths.begin(), b->halfwidths.end());
        if (const auto* c = std::get_if<DiscShape>(&shape_))
            return c->radius;
        if (const auto* t = std::get_if<TriangleShape>(&shape_)) {
            double area = std::abs(signed_area2(t->vertices)) / 2.0;
            double per = 0.0;
            for (int e = 0; e < 3; ++e) {
                const auto& a = t->vertices[e];
                const auto& b = t->vertices[(e + 1) % 3];
                per += std::hypot(b[0] - a[0], b[1] - a[1]);
            }
            return 2.0 * area / per;
        }
        throw InvalidSpec("inradius is undefined for mask shapes");
    }

    /// Geometric center (incenter for triangles).
    RealVec center_point() const {
        if (std::holds_alternative<BoxShape>(shape_))
            return RealVec(dim_, 0.0);
        if (const auto* c = std::get_if<DiscShape>(&shape_))
            return c->center;
        if (const auto* t = std::get_if<TriangleShape>(&shape_)) {
            double a = std::hypot(t->vertices[2][0] - t->vertices[1][0],
                                  t->vertices[2][1] - t->vertices[1][1]);
            double b = std::hypot(t->vertices[2][0] - t->vertices[0][0],
                                  t->vertices[2][1] - t->vertices[0][1]);
            double c2 = std::hypot(t->vertices[1][0] - t->vertices[0][0],
                                   t->vertices[1][1] - t->vertices[0][1]);
            double s = a + b + c2;
            return {(a * t->vertices[0][0] + b * t->vertices[1][0] + c2 * t->vertices[2][0]) / s,
                    (a * t->vertices[0][1] + b * t->vertices[1][1] + c2 * t->vertices[2][1]) / s};
        }
        throw InvalidSpec("center is undefined for mask shapes");
    }

private:
    DomainSpec(int dim, Shape shape) : dim_(dim), shape_(std::move(shape)) {}

    static double signed_area2(const std::array<std::array<double, 2>, 3>& v) {
        return (v[1][0] - v[0][0]) * (v[2][1] - v[0][1]) -
               (v[2][0] - v[0][0]) * (v[1][1] - v[0][1]);
    }

    int dim_;
    Shape shape_;
};

// ---------------------------------------------------------------------------
// Ordering and GridDomain
// ---------------------------------------------------------------------------

/// Descending lexicographic comparison, first coordinate most significant.
inline bool lex_greater(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

/// Bijection between {0,...,n-1} and a point set. Forward lookup is by
/// position, inverse by point value.
class Ordering {
public:
    Ordering() = default;

    explicit Ordering(std::vector<IntVec> points) : points_(std::move(points)) {
        for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
            auto [it, fresh] = index_.emplace(points_[i], i);
            if (!fresh)
                throw InvalidSpec("duplicate point in ordering");
        }
    }

    int size() const noexcept { return static_cast<int>(points_.size()); }
    const IntVec& forward(int i) const { return points_.at(static_cast<std::size_t>(i)); }
    const std::vector<IntVec>& points() const noexcept { return points_; }

    int inverse(const IntVec& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }

    bool contains(const IntVec& p) const { return index_.count(p) != 0; }

private:
    std::vector<IntVec> points_;
    std::map<IntVec, int> index_;
};

/// A finite set of integer lattice points together with the sampling length.
/// The physical position of a point n is n*l. Iteration order is the
/// attached ordering (descending lexicographic unless substituted).
class GridDomain {
public:
    GridDomain(int dim, double l, std::vector<IntVec> points, bool sort_lex = true)
        : dim_(dim), l_(l) {
        if (!(l > 0.0))
            throw InvalidSpec("sampling length must be positive");
        if (points.empty())
            throw EmptyDomain("grid domain has no points");
        for (const auto& p : points)
            if (static_cast<int>(p.size()) != dim)
                throw DimensionMismatch("grid point dimension mismatch");
        if (sort_lex)
            std::sort(points.begin(), points.end(), lex_greater);
        order_ = Ordering(std::move(points));
    }

    int dimension() const noexcept { return dim_; }
    double sampling_length() const noexcept { return l_; }
    int size() const noexcept { return order_.size(); }
    const Ordering& ordering() const noexcept { return order_; }
    const IntVec& point(int i) const { return order_.forward(i); }
    const std::vector<IntVec>& points() const noexcept { return order_.points(); }
    int index_of(const IntVec& p) const { return order_.inverse(p); }
    bool contains(const IntVec& p) const { return order_.contains(p); }

    RealVec physical(int i) const {
        const IntVec& p = point(i);
        RealVec x(dim_);
        for (int k = 0; k < dim_; ++k)
            x[k] = static_cast<double>(p[k]) * l_;
        return x;
    }

    /// Same point set under a substituted ordering. perm[i] is the position
    /// in the current ordering of the point placed at position i.
    GridDomain permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != size())
            throw IndexOutOfRange("permutation length mismatch");
        std::vector<IntVec> pts;
        pts.reserve(perm.size());
        for (int i : perm)
            pts.push_back(point(i));
        return GridDomain(dim_, l_, std::move(pts), /*sort_lex=*/false);
    }

    /// Full-box check: per-axis bounds [lo_k, hi_k] with every combination
    /// present. Returns (lo, hi) or throws NotABox.
    std::pair<IntVec, IntVec> box_bounds() const {
        IntVec lo = point(0), hi = point(0);
        for (const auto& p : points())
            for (int k = 0; k < dim_; ++k) {
                lo[k] = std::min(lo[k], p[k]);
                hi[k] = std::max(hi[k], p[k]);
            }
        std::int64_t cells = 1;
        for (int k = 0; k < dim_; ++k)
            cells *= hi[k] - lo[k] + 1;
        if (cells != size())
            throw NotABox("domain is not a full box");
        return {lo, hi};
    }

    bool is_box() const {
        try {
            (void)box_bounds();
            return true;
        } catch (const NotABox&) {
            return false;
        }
    }

private:
    int dim_;
    double l_;
    Ordering order_;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// All integer vectors n with n*l strictly inside the region, in descending
/// lexicographic order. For masks the listed points are returned as-is
/// (re-sorted), independent of l.
inline GridDomain lattice_points(const DomainSpec& spec, double l) {
    if (!(l > 0.0))
        throw InvalidSpec("sampling length must be positive");
    const int d = spec.dimension();
    if (spec.is_mask()) {
        const auto& m = std::get<MaskShape>(spec.shape());
        auto pts = m.points;
        std::sort(pts.begin(), pts.end(), lex_greater);
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return GridDomain(d, l, std::move(pts), /*sort_lex=*/false);
    }
    auto [lo, hi] = spec.lattice_bounds(l);
    std::vector<IntVec> pts;
    IntVec n = lo;
    RealVec x(d);
    while (true) {
        for (int i = 0; i < d; ++i)
            x[i] = static_cast<double>(n[i]) * l;
        if (spec.contains(x))
            pts.push_back(n);
        int i = d - 1;
        for (; i >= 0; --i) {
            if (++n[i] <= hi[i])
                break;
            n[i] = lo[i];
        }
        if (i < 0)
            break;
    }
    if (pts.empty())
        throw EmptyDomain("no lattice point inside the region; l too coarse");
    return GridDomain(d, l, std::move(pts));
}

enum class MinkowskiSign { plus, minus };

/// Pointwise Minkowski sum/difference {x +- y}, deduplicated, default order.
inline GridDomain minkowski(const GridDomain& a, const GridDomain& b, MinkowskiSign sign) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("minkowski operands differ in dimension");
    if (a.sampling_length() != b.sampling_length())
        throw SamplingMismatch("minkowski operands differ in sampling length");
    const int d = a.dimension();
    std::vector<IntVec> pts;
    pts.reserve(static_cast<std::size_t>(a.size()) * b.size());
    for (const auto& x : a.points())
        for (const auto& y : b.points()) {
            IntVec z(d);
            for (int k = 0; k < d; ++k)
                z[k] = sign == MinkowskiSign::plus ? x[k] + y[k] : x[k] - y[k];
            pts.push_back(std::move(z));
        }
    std::sort(pts.begin(), pts.end(), lex_greater);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return GridDomain(d, a.sampling_length(), std::move(pts), /*sort_lex=*/false);
}

/// Descending lexicographic ordering of a grid's point set.
inline Ordering lex_order(const GridDomain& g) {
    auto pts = g.points();
    std::sort(pts.begin(), pts.end(), lex_greater);
    return Ordering(std::move(pts));
}

struct BoundaryCount {
    std::int64_t boundary = 0; ///< N_l: cubes meeting the boundary
    std::int64_t interior = 0; ///< cubes strictly inside
};

/// Partition of the lattice points of a region into interior points (whose
/// closed l-cube lies inside) and boundary points.
inline BoundaryCount boundary_cube_count(const DomainSpec& spec, double l) {
    GridDomain g = lattice_points(spec, l);
    BoundaryCount out;
    for (const auto& n : g.points()) {
        if (spec.cube_inside(n, l))
            ++out.interior;
        else
            ++out.boundary;
    }
    return out;
}

} // namespace gendomain

#endif // GENDOMAIN_LATTICE_HPP
