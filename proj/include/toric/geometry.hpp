#pragma once

#include "toric/polynomial.hpp"
#include "toric/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace toric {

using Point = std::vector<long long>;
using RationalPoint = std::vector<Rational>;

/// Ordered list of lattice points in Z^dim, optionally labelled.
struct PointConfiguration {
    std::size_t dim = 0;
    std::vector<Point> points;
    std::vector<std::string> labels; // empty or one unique label per point

    PointConfiguration() = default;
    PointConfiguration(std::size_t dim, std::vector<Point> points, std::vector<std::string> labels = {});

    std::size_t size() const { return points.size(); }
    /// Throws DimensionMismatch / SchemaError on violated invariants.
    void validate() const;
    /// Label of point i, falling back to the coordinate string.
    std::string label(std::size_t i) const;
};

/// Half-space <p, normal> + offset >= 0 with a primitive inward normal.
struct Facet {
    Point normal;
    long long offset = 0;

    long long distance(const Point& p) const;
    Rational distance(const RationalPoint& p) const;

    friend bool operator==(const Facet&, const Facet&) = default;
};

struct LatticePolytope {
    std::size_t dim = 0;
    std::vector<Facet> facets;
    std::vector<Point> vertices;

    bool contains(const Point& p) const;
    bool contains(const RationalPoint& p) const;
    /// Lattice distances of p to every facet, in facet order.
    std::vector<long long> distances(const Point& p) const;
};

/// Columns are the configuration's points; a top row of ones is prepended
/// when the all-ones vector is not in the row span of the coordinates.
struct DesignMatrix {
    std::vector<std::vector<long long>> rows;
    bool ones_row_added = false;

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_cols() const { return rows.empty() ? 0 : rows.front().size(); }
};

std::string format_point(const Point& p);
std::string format_point(const RationalPoint& p);
RationalPoint to_rational_point(const Point& p);

/// Facets of conv(config) by brute force over d-subsets of the points.
/// Facets are ordered by offset, then by the position of the first nonzero
/// normal entry, then by normal (descending lexicographic); vertices are
/// sorted lexicographically. Throws NotFullDimensional.
LatticePolytope convex_hull_facets(const PointConfiguration& config);

/// h_i(p) = <p, n_i> + a_i over the given variables (default x1..xd).
std::vector<Polynomial> lattice_distance_forms(const LatticePolytope& poly,
                                               const std::vector<std::string>& variables = {});

/// All lattice points of the polytope in lexicographic order.
PointConfiguration lattice_points(const LatticePolytope& poly);

/// `count` points sum_b mu_b b with every mu_b > 0 and sum mu_b = 1. Sample 0
/// is the barycenter; the rest use coefficients drawn from a seeded
/// mt19937_64, so the output depends only on (config, count, seed).
std::vector<RationalPoint> sample_interior(const PointConfiguration& config, std::size_t count, std::uint64_t seed);

DesignMatrix design_matrix(const PointConfiguration& config);

/// Coordinates on the affine hull of a configuration: the `free` coordinates
/// are kept, each dependent coordinate is an affine function of them.
struct AffineChart {
    std::size_t ambient = 0;
    std::vector<std::size_t> free;
    std::vector<std::size_t> dependent;
    std::vector<RationalVector> expressions; // per dependent: coefficients over free, then constant

    bool full() const { return dependent.empty(); }
    Point project(const Point& p) const;
    RationalPoint project(const RationalPoint& p) const;
    PointConfiguration project(const PointConfiguration& config) const;
    /// Inverse of project on the affine hull.
    RationalPoint lift(const RationalPoint& free_coords) const;
    /// Dependent coordinates as polynomials in the free variables.
    std::map<std::string, Polynomial> substitution(const std::vector<std::string>& variables) const;
};

AffineChart affine_chart(const PointConfiguration& config);

} // namespace toric
