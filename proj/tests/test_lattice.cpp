#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace gendomain;

TEST_CASE("lattice_points enumerates open-set membership") {
    SECTION("disc of radius 2.5 at l=1 holds 21 points") {
        // direct enumeration of x^2+y^2 < 6.25 over {-2..2}^2
        GridDomain g = lattice_points(DomainSpec::disc({0.0, 0.0}, 2.5), 1.0);
        CHECK(g.size() == 21);
        CHECK_FALSE(g.contains({2, 2}));
        CHECK(g.contains({2, 1}));
    }
    SECTION("3D box with halfwidth 1.5 at l=1 is the integer cube") {
        GridDomain g = lattice_points(DomainSpec::box({1.5, 1.5, 1.5}), 1.0);
        CHECK(g.size() == 27);
        for (const auto& p : g.points())
            for (auto c : p)
                CHECK(std::abs(c) <= 1);
    }
    SECTION("tiny disc keeps only the origin") {
        GridDomain g = lattice_points(DomainSpec::disc({0.0, 0.0}, 0.4), 1.0);
        REQUIRE(g.size() == 1);
        CHECK(g.point(0) == IntVec{0, 0});
    }
    SECTION("no interior lattice point raises EmptyDomain") {
        CHECK_THROWS_AS(lattice_points(DomainSpec::disc({0.5, 0.5}, 0.4), 1.0), EmptyDomain);
    }
    SECTION("boundary points are excluded (strict membership)") {
        GridDomain g = lattice_points(DomainSpec::box({1.0}), 0.5);
        CHECK(g.size() == 3); // +-1 sit on the boundary of (-1,1)
    }
}

TEST_CASE("lattice_points is monotone under refinement") {
    auto spec = DomainSpec::disc({0.0, 0.0}, 1.7);
    GridDomain coarse = lattice_points(spec, 0.5);
    GridDomain fine = lattice_points(spec, 0.25);
    for (const auto& p : coarse.points()) {
        IntVec scaled(p.size());
        for (std::size_t k = 0; k < p.size(); ++k)
            scaled[k] = 2 * p[k];
        CHECK(fine.contains(scaled));
    }
}

TEST_CASE("minkowski arithmetic") {
    GridDomain a(1, 1.0, {{0}, {1}});
    SECTION("{0,1} - {0,1} = {-1,0,1}") {
        GridDomain d = minkowski(a, a, MinkowskiSign::minus);
        CHECK(d.size() == 3);
        CHECK(d.contains({-1}));
        CHECK(d.contains({0}));
        CHECK(d.contains({1}));
    }
    SECTION("{-1,0,1}^3 + {-1,0,1}^3 = {-2..2}^3") {
        GridDomain cube = gdtest::centered_box(3, 1);
        GridDomain s = minkowski(cube, cube, MinkowskiSign::plus);
        CHECK(s.size() == 125);
    }
    SECTION("singletons add exactly") {
        GridDomain v(2, 1.0, {{3, -1}});
        GridDomain w(2, 1.0, {{-5, 2}});
        GridDomain s = minkowski(v, w, MinkowskiSign::plus);
        REQUIRE(s.size() == 1);
        CHECK(s.point(0) == IntVec{-2, 1});
    }
    SECTION("cardinality bound |a+b| <= |a||b|") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> coord(-3, 3);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<IntVec> pa, pb;
            for (int i = 0; i < 4; ++i)
                pa.push_back({coord(rng), coord(rng)});
            for (int i = 0; i < 3; ++i)
                pb.push_back({coord(rng), coord(rng)});
            std::sort(pa.begin(), pa.end());
            pa.erase(std::unique(pa.begin(), pa.end()), pa.end());
            std::sort(pb.begin(), pb.end());
            pb.erase(std::unique(pb.begin(), pb.end()), pb.end());
            GridDomain ga(2, 1.0, pa), gb(2, 1.0, pb);
            GridDomain s = minkowski(ga, gb, MinkowskiSign::plus);
            CHECK(s.size() <= ga.size() * gb.size());
        }
    }
    SECTION("mismatched operands are rejected") {
        GridDomain b1(2, 1.0, {{0, 0}});
        CHECK_THROWS_AS(minkowski(a, b1, MinkowskiSign::plus), DimensionMismatch);
        GridDomain b2(1, 0.5, {{0}});
        CHECK_THROWS_AS(minkowski(a, b2, MinkowskiSign::plus), SamplingMismatch);
    }
}

TEST_CASE("descending lexicographic ordering") {
    SECTION("{-1,0,1}^3 is listed as in the multilevel layout") {
        GridDomain g = gdtest::centered_box(3, 1);
        CHECK(g.point(0) == IntVec{1, 1, 1});
        CHECK(g.point(1) == IntVec{1, 1, 0});
        CHECK(g.point(2) == IntVec{1, 1, -1});
        CHECK(g.point(3) == IntVec{1, 0, 1});
        CHECK(g.point(4) == IntVec{1, 0, 0});
        CHECK(g.point(26) == IntVec{-1, -1, -1});
    }
    SECTION("singleton") {
        GridDomain g(2, 1.0, {{4, 2}});
        Ordering o = lex_order(g);
        CHECK(o.size() == 1);
        CHECK(o.forward(0) == IntVec{4, 2});
    }
    SECTION("{0,1}^2") {
        GridDomain g(2, 1.0, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
        CHECK(g.point(0) == IntVec{1, 1});
        CHECK(g.point(1) == IntVec{1, 0});
        CHECK(g.point(2) == IntVec{0, 1});
        CHECK(g.point(3) == IntVec{0, 0});
    }
    SECTION("strict total order") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> coord(-4, 4);
        for (int trial = 0; trial < 50; ++trial) {
            IntVec a{coord(rng), coord(rng), coord(rng)};
            IntVec b{coord(rng), coord(rng), coord(rng)};
            if (a == b)
                CHECK((!lex_greater(a, b) && !lex_greater(b, a)));
            else
                CHECK(lex_greater(a, b) != lex_greater(b, a));
        }
    }
    SECTION("ordering bijection round-trips") {
        GridDomain g = lattice_points(DomainSpec::disc({0.0, 0.0}, 2.5), 1.0);
        for (int i = 0; i < g.size(); ++i)
            CHECK(g.index_of(g.point(i)) == i);
    }
}

TEST_CASE("boundary cube statistics") {
    SECTION("1D box at l=0.5: all three cubes interior") {
        BoundaryCount bc = boundary_cube_count(DomainSpec::box({1.0}), 0.5);
        CHECK(bc.boundary == 0);
        CHECK(bc.interior == 3);
    }
    SECTION("disc: l^2 N_l decreases along l = 2^-j") {
        auto spec = DomainSpec::disc({0.0, 0.0}, 1.0);
        double prev = std::numeric_limits<double>::infinity();
        for (int j = 2; j <= 6; ++j) {
            double l = std::pow(2.0, -j);
            BoundaryCount bc = boundary_cube_count(spec, l);
            double scaled = l * l * static_cast<double>(bc.boundary);
            CHECK(scaled < prev);
            prev = scaled;
        }
    }
    SECTION("single-point mask partitions into one cube") {
        auto spec = DomainSpec::mask({{2, -1}});
        BoundaryCount bc = boundary_cube_count(spec, 0.7);
        CHECK(bc.boundary + bc.interior == 1);
    }
    SECTION("partition N_l + interior = |points| for assorted specs") {
        std::vector<DomainSpec> specs = {
            DomainSpec::box({1.0, 1.3}),
            DomainSpec::disc({0.1, -0.2}, 1.4),
            DomainSpec::triangle({{{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}}})};
        for (const auto& spec : specs)
            for (double l : {0.5, 0.25, 0.125}) {
                GridDomain g = lattice_points(spec, l);
                BoundaryCount bc = boundary_cube_count(spec, l);
                CHECK(bc.boundary + bc.interior == g.size());
            }
    }
}

TEST_CASE("domain spec validation") {
    CHECK_THROWS_AS(DomainSpec::box({1.0, -1.0}), InvalidSpec);
    CHECK_THROWS_AS(DomainSpec::disc({0.0}, 0.0), InvalidSpec);
    CHECK_THROWS_AS(DomainSpec::triangle({{{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}}}), InvalidSpec);
    CHECK_THROWS_AS(DomainSpec::mask({}), InvalidSpec);
}

TEST_CASE("permuted ordering keeps the point set") {
    GridDomain g = gdtest::centered_box(2, 1);
    std::vector<int> perm(static_cast<std::size_t>(g.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    GridDomain shuffled = g.permuted(perm);
    CHECK(shuffled.size() == g.size());
    CHECK(shuffled.point(0) == g.point(g.size() - 1));
    for (const auto& p : g.points())
        CHECK(shuffled.contains(p));
}
