#include "doctest.h"
#include "test_support.hpp"

#include "toric/errors.hpp"

#include <numeric>

using namespace toric;
using namespace toric::testing;

namespace {

std::vector<std::string> form_strings(const LatticePolytope& poly) {
    std::vector<std::string> out;
    for (const auto& f : lattice_distance_forms(poly)) out.push_back(f.to_string());
    return out;
}

// Lattice points of the box [-r, r]^d satisfying every facet except `skip`.
std::size_t count_in_box(const LatticePolytope& poly, long long r, std::size_t skip) {
    std::size_t count = 0;
    Point p(poly.dim, -r);
    for (;;) {
        bool inside = true;
        for (std::size_t i = 0; i < poly.facets.size() && inside; ++i)
            if (i != skip && poly.facets[i].distance(p) < 0) inside = false;
        count += inside;
        std::size_t k = 0;
        while (k < poly.dim && p[k] == r) p[k++] = -r;
        if (k == poly.dim) break;
        ++p[k];
    }
    return count;
}

} // namespace

TEST_CASE("convex_hull_facets: square") {
    auto poly = convex_hull_facets(square());
    CHECK(form_strings(poly) == std::vector<std::string>{"x1", "x2", "-x1 + 1", "-x2 + 1"});
    CHECK(poly.vertices.size() == 4);
}

TEST_CASE("convex_hull_facets: trapezoid") {
    auto poly = convex_hull_facets(trapezoid());
    CHECK(form_strings(poly) == std::vector<std::string>{"x1", "x2", "-x2 + 1", "-x1 - x2 + 2"});
    CHECK(poly.vertices == std::vector<Point>{{0, 0}, {0, 1}, {1, 1}, {2, 0}});
}

TEST_CASE("convex_hull_facets: unit segment") {
    auto poly = convex_hull_facets(segment(1));
    CHECK(form_strings(poly) == std::vector<std::string>{"x1", "-x1 + 1"});
}

TEST_CASE("convex_hull_facets rejects lower-dimensional input") {
    CHECK_THROWS_AS(convex_hull_facets(PointConfiguration(2, {{0, 0}, {1, 1}, {2, 2}})), NotFullDimensional);
    CHECK_THROWS_AS(convex_hull_facets(PointConfiguration(2, {{0, 0}})), NotFullDimensional);
}

TEST_CASE("lattice_distance_forms") {
    auto forms = lattice_distance_forms(convex_hull_facets(square()));
    REQUIRE(forms.size() == 4);
    CHECK(forms[0] == poly("x1", xvars()));
    CHECK(forms[1] == poly("x2", xvars()));
    CHECK(forms[2] == poly("1-x1", xvars()));
    CHECK(forms[3] == poly("1-x2", xvars()));

    auto trap = convex_hull_facets(trapezoid());
    CHECK(trap.distances({1, 1}) == std::vector<long long>{1, 1, 0, 0});

    auto sq = convex_hull_facets(square());
    for (const auto& v : sq.vertices) {
        auto d = sq.distances(v);
        CHECK(std::count(d.begin(), d.end(), 0) == 2);
    }
    auto named = lattice_distance_forms(sq, {"y1", "y2"});
    CHECK(named[2] == poly("1-y1", yvars()));
}

TEST_CASE("lattice_points") {
    CHECK(lattice_points(convex_hull_facets(square())).size() == 4);
    CHECK(lattice_points(convex_hull_facets(trapezoid())).points ==
          std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}});
    CHECK(lattice_points(convex_hull_facets(segment(2))).points == std::vector<Point>{{0}, {1}, {2}});
}

TEST_CASE("sample_interior") {
    auto s = sample_interior(square(), 1, 0);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == RationalPoint{q("1/2"), q("1/2")});
    CHECK(sample_interior(trapezoid(), 1, 7)[0] == RationalPoint{q("4/5"), q("2/5")});
    for (const auto& p : sample_interior(square(), 50, 3))
        for (const auto& x : p) CHECK((x > 0 && x < 1));
    CHECK(sample_interior(trapezoid(), 20, 5) == sample_interior(trapezoid(), 20, 5));
    CHECK(sample_interior(trapezoid(), 20, 5) != sample_interior(trapezoid(), 20, 6));
}

TEST_CASE("design_matrix") {
    auto dm = design_matrix(square());
    CHECK(dm.ones_row_added);
    CHECK(dm.rows == std::vector<std::vector<long long>>{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    auto simplex = design_matrix(PointConfiguration(2, {{1, 0}, {0, 1}}));
    CHECK_FALSE(simplex.ones_row_added);
    CHECK(simplex.num_rows() == 2);
    auto trap = design_matrix(trapezoid());
    CHECK(trap.ones_row_added);
    CHECK(trap.num_rows() == 3);
    CHECK(trap.num_cols() == 5);
}

TEST_CASE("configuration validation") {
    CHECK_THROWS(PointConfiguration(2, {{0, 0}, {1}}));
    CHECK_THROWS(PointConfiguration(2, {{0, 0}, {1, 0}}, {"a", "a"}));
    CHECK_THROWS(PointConfiguration(2, {{0, 0}, {1, 0}}, {"a"}));
    CHECK(square().label(3) == "(1,1)");
}

TEST_CASE("affine chart of a lower-dimensional configuration") {
    PointConfiguration diag(3, {{0, 0, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 2}});
    auto chart = affine_chart(diag);
    CHECK(chart.free == std::vector<std::size_t>{0, 1});
    CHECK(chart.dependent == std::vector<std::size_t>{2});
    CHECK(chart.lift({q("1/2"), q("1/3")}) == RationalPoint{q("1/2"), q("1/3"), q("5/6")});
    CHECK(convex_hull_facets(chart.project(diag)).facets.size() == 4);
    CHECK(affine_chart(square()).full());
}

// Properties ------------------------------------------------------------------

TEST_CASE("property: lattice points of the hull contain the configuration") {
    for (const auto& c : {square(), trapezoid(), segment(1), segment(3)}) {
        auto pts = lattice_points(convex_hull_facets(c)).points;
        for (const auto& p : c.points) CHECK(std::find(pts.begin(), pts.end(), p) != pts.end());
        CHECK(pts.size() == c.size()); // saturated fixtures
    }
    PointConfiguration corners(2, {{0, 0}, {2, 0}, {0, 2}});
    CHECK(lattice_points(convex_hull_facets(corners)).size() == 6);
}

TEST_CASE("property: sampled interior points have positive lattice distances") {
    for (const auto& c : {square(), trapezoid(), segment(2)}) {
        auto poly = convex_hull_facets(c);
        for (const auto& p : sample_interior(c, 50, 11))
            for (const auto& f : poly.facets) CHECK(f.distance(p) > 0);
    }
}

TEST_CASE("property: facets are irredundant and normals primitive") {
    for (const auto& c : {square(), trapezoid(), segment(2), PointConfiguration(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                                                                   {0, 0, 1}, {1, 1, 1}})}) {
        auto poly = convex_hull_facets(c);
        const long long r = 6;
        auto base = count_in_box(poly, r, poly.facets.size());
        for (std::size_t i = 0; i < poly.facets.size(); ++i) {
            CHECK(count_in_box(poly, r, i) > base);
            long long g = 0;
            for (auto v : poly.facets[i].normal) g = std::gcd(g, v < 0 ? -v : v);
            CHECK(g == 1);
        }
        for (const auto& v : poly.vertices)
            for (const auto& f : poly.facets) CHECK(f.distance(v) >= 0);
    }
}

TEST_CASE("property: random polygons") {
    Rng rng(21);
    for (int t = 0; t < 10; ++t) {
        PointConfiguration c;
        c.dim = 2;
        while (c.points.size() < 6) {
            Point p{rng.integer(0, 4), rng.integer(0, 4)};
            if (std::find(c.points.begin(), c.points.end(), p) == c.points.end()) c.points.push_back(p);
        }
        LatticePolytope poly;
        try {
            poly = convex_hull_facets(c);
        } catch (const NotFullDimensional&) {
            continue;
        }
        for (const auto& p : c.points) CHECK(poly.contains(p));
        for (const auto& v : poly.vertices) {
            auto d = poly.distances(v);
            CHECK(std::count(d.begin(), d.end(), 0) >= 2);
        }
    }
}
