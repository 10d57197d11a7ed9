#include "toric/geometry.hpp"

#include "toric/errors.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace toric {

PointConfiguration::PointConfiguration(std::size_t dim_, std::vector<Point> points_, std::vector<std::string> labels_)
    : dim(dim_), points(std::move(points_)), labels(std::move(labels_)) {
    validate();
}

void PointConfiguration::validate() const {
    if (dim == 0) throw DimensionMismatch("configuration dimension must be positive");
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].size() != dim)
            throw DimensionMismatch("point " + std::to_string(i) + " has " + std::to_string(points[i].size()) +
                                    " coordinates, expected " + std::to_string(dim));
    if (!labels.empty()) {
        if (labels.size() != points.size()) throw SchemaError("label count does not match point count");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size()) throw SchemaError("labels are not unique");
    }
}

std::string PointConfiguration::label(std::size_t i) const {
    return labels.empty() ? format_point(points.at(i)) : labels.at(i);
}

long long Facet::distance(const Point& p) const {
    if (p.size() != normal.size()) throw DimensionMismatch("point dimension does not match facet");
    long long s = offset;
    for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * normal[i];
    return s;
}

Rational Facet::distance(const RationalPoint& p) const {
    if (p.size() != normal.size()) throw DimensionMismatch("point dimension does not match facet");
    Rational s(static_cast<long>(offset));
    for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * static_cast<long>(normal[i]);
    return s;
}

bool LatticePolytope::contains(const Point& p) const {
    return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.distance(p) >= 0; });
}

bool LatticePolytope::contains(const RationalPoint& p) const {
    return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.distance(p) >= 0; });
}

std::vector<long long> LatticePolytope::distances(const Point& p) const {
    std::vector<long long> out;
    out.reserve(facets.size());
    for (const auto& f : facets) out.push_back(f.distance(p));
    return out;
}

std::string format_point(const Point& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

std::string format_point(const RationalPoint& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << to_string(p[i]);
    os << ")";
    return os.str();
}

RationalPoint to_rational_point(const Point& p) {
    RationalPoint out;
    out.reserve(p.size());
    for (long long v : p) out.emplace_back(static_cast<long>(v));
    return out;
}

namespace {

bool facet_order(const Facet& a, const Facet& b) {
    if (a.offset != b.offset) return a.offset < b.offset;
    auto first_nonzero = [](const Point& n) {
        return std::find_if(n.begin(), n.end(), [](long long v) { return v != 0; }) - n.begin();
    };
    auto fa = first_nonzero(a.normal), fb = first_nonzero(b.normal);
    if (fa != fb) return fa < fb;
    return a.normal > b.normal;
}

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

LatticePolytope convex_hull_facets(const PointConfiguration& config) {
    config.validate();
    const std::size_t d = config.dim;
    std::vector<Point> pts = config.points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) throw NotFullDimensional("empty configuration");

    linalg::IntMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<long long> row(d);
        for (std::size_t c = 0; c < d; ++c) row[c] = pts[i][c] - pts[0][c];
        diffs.push_back(std::move(row));
    }
    if (linalg::rank(diffs) != d)
        throw NotFullDimensional("points span an affine space of dimension " + std::to_string(linalg::rank(diffs)) +
                                 " < " + std::to_string(d));

    std::set<std::pair<Point, long long>> found;
    for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
        linalg::IntMatrix rows;
        for (std::size_t r = 1; r < idx.size(); ++r) {
            std::vector<long long> row(d);
            for (std::size_t c = 0; c < d; ++c) row[c] = pts[idx[r]][c] - pts[idx[0]][c];
            rows.push_back(std::move(row));
        }
        auto kernel = linalg::integer_nullspace(rows, d);
        if (kernel.size() != 1) return;
        Point n = kernel.front();
        long long base = 0;
        for (std::size_t c = 0; c < d; ++c) base += n[c] * pts[idx[0]][c];
        bool above = false, below = false;
        for (const auto& p : pts) {
            long long v = 0;
            for (std::size_t c = 0; c < d; ++c) v += n[c] * p[c];
            above = above || v > base;
            below = below || v < base;
        }
        if (above && below) return;
        if (below) {
            for (auto& x : n) x = -x;
            base = -base;
        }
        found.emplace(std::move(n), -base);
    });

    LatticePolytope poly;
    poly.dim = d;
    for (const auto& [n, a] : found) poly.facets.push_back(Facet{n, a});
    std::sort(poly.facets.begin(), poly.facets.end(), facet_order);

    for (const auto& p : pts) {
        linalg::IntMatrix tight;
        for (const auto& f : poly.facets)
            if (f.distance(p) == 0) tight.push_back(f.normal);
        if (!tight.empty() && linalg::rank(tight) == d) poly.vertices.push_back(p);
    }
    return poly;
}

std::vector<Polynomial> lattice_distance_forms(const LatticePolytope& poly, const std::vector<std::string>& variables) {
    auto vars = variables.empty() ? numbered_variables("x", poly.dim) : variables;
    if (vars.size() != poly.dim) throw DimensionMismatch("need one variable per polytope dimension");
    std::vector<Polynomial> forms;
    forms.reserve(poly.facets.size());
    for (const auto& f : poly.facets) {
        RationalVector coeffs;
        for (long long v : f.normal) coeffs.emplace_back(static_cast<long>(v));
        forms.push_back(Polynomial::linear(vars, coeffs, Rational(static_cast<long>(f.offset))));
    }
    return forms;
}

PointConfiguration lattice_points(const LatticePolytope& poly) {
    if (poly.vertices.empty()) throw NotFullDimensional("polytope has no vertices");
    const std::size_t d = poly.dim;
    Point lo = poly.vertices.front(), hi = poly.vertices.front();
    for (const auto& v : poly.vertices)
        for (std::size_t c = 0; c < d; ++c) {
            lo[c] = std::min(lo[c], v[c]);
            hi[c] = std::max(hi[c], v[c]);
        }
    PointConfiguration out;
    out.dim = d;
    Point p = lo;
    for (;;) {
        if (poly.contains(p)) out.points.push_back(p);
        std::size_t c = d;
        while (c > 0) {
            --c;
            if (p[c] < hi[c]) {
                ++p[c];
                for (std::size_t k = c + 1; k < d; ++k) p[k] = lo[k];
                break;
            }
            if (c == 0) return out;
        }
    }
}

std::vector<RationalPoint> sample_interior(const PointConfiguration& config, std::size_t count, std::uint64_t seed) {
    if (config.points.empty()) throw DimensionMismatch("cannot sample from an empty configuration");
    const std::size_t n = config.size();
    std::mt19937_64 rng(seed);
    std::vector<RationalPoint> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<unsigned long> mu(n, 1);
        if (s > 0)
            for (auto& m : mu) m = 1 + static_cast<unsigned long>(rng() % 97);
        unsigned long total = std::accumulate(mu.begin(), mu.end(), 0ul);
        RationalPoint p(config.dim, Rational(0));
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < config.dim; ++c)
                p[c] += Rational(static_cast<long>(mu[b]) * static_cast<long>(config.points[b][c]));
        for (auto& x : p) {
            x /= Rational(static_cast<long>(total));
        }
        out.push_back(std::move(p));
    }
    return out;
}

DesignMatrix design_matrix(const PointConfiguration& config) {
    config.validate();
    DesignMatrix dm;
    for (std::size_t c = 0; c < config.dim; ++c) {
        std::vector<long long> row;
        row.reserve(config.size());
        for (const auto& p : config.points) row.push_back(p[c]);
        dm.rows.push_back(std::move(row));
    }
    std::vector<long long> ones(config.size(), 1);
    auto with_ones = dm.rows;
    with_ones.push_back(ones);
    if (linalg::rank(with_ones) > linalg::rank(dm.rows)) {
        dm.rows.insert(dm.rows.begin(), ones);
        dm.ones_row_added = true;
    }
    return dm;
}

AffineChart affine_chart(const PointConfiguration& config) {
    config.validate();
    const std::size_t d = config.dim;
    // Coordinates reversed so that trailing coordinates become the dependent ones.
    linalg::Matrix rows;
    for (const auto& p : config.points) {
        RationalVector r;
        for (std::size_t c = d; c-- > 0;) r.emplace_back(static_cast<long>(p[c]));
        r.emplace_back(1L);
        rows.push_back(std::move(r));
    }
    auto relations = linalg::nullspace(rows, d + 1);
    AffineChart chart;
    chart.ambient = d;
    std::vector<bool> pivot(d, false);
    linalg::Echelon e;
    if (!relations.empty()) {
        e = linalg::rref(relations, d + 1);
        for (auto c : e.pivots) pivot.at(d - 1 - c) = true;
    }
    for (std::size_t c = 0; c < d; ++c)
        if (!pivot[c]) chart.free.push_back(c);
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
        chart.dependent.push_back(d - 1 - e.pivots[r]);
        RationalVector expr;
        for (auto f : chart.free) expr.push_back(-e.reduced[r][d - 1 - f]);
        expr.push_back(-e.reduced[r][d]);
        chart.expressions.push_back(std::move(expr));
    }
    return chart;
}

Point AffineChart::project(const Point& p) const {
    Point out;
    for (auto f : free) out.push_back(p.at(f));
    return out;
}

RationalPoint AffineChart::project(const RationalPoint& p) const {
    RationalPoint out;
    for (auto f : free) out.push_back(p.at(f));
    return out;
}

PointConfiguration AffineChart::project(const PointConfiguration& config) const {
    PointConfiguration out;
    out.dim = free.size();
    for (const auto& p : config.points) out.points.push_back(project(p));
    out.labels = config.labels;
    return out;
}

RationalPoint AffineChart::lift(const RationalPoint& q) const {
    if (q.size() != free.size()) throw DimensionMismatch("chart point has the wrong number of coordinates");
    RationalPoint out(ambient, Rational(0));
    for (std::size_t k = 0; k < free.size(); ++k) out[free[k]] = q[k];
    for (std::size_t r = 0; r < dependent.size(); ++r) {
        Rational v = expressions[r].back();
        for (std::size_t k = 0; k < free.size(); ++k) v += expressions[r][k] * q[k];
        out[dependent[r]] = v;
    }
    return out;
}

std::map<std::string, Polynomial> AffineChart::substitution(const std::vector<std::string>& variables) const {
    if (variables.size() != ambient) throw DimensionMismatch("chart needs one variable per coordinate");
    std::map<std::string, Polynomial> out;
    for (std::size_t r = 0; r < dependent.size(); ++r) {
        RationalVector coeffs(ambient, Rational(0));
        for (std::size_t k = 0; k < free.size(); ++k) coeffs[free[k]] = expressions[r][k];
        out.emplace(variables[dependent[r]], Polynomial::linear(variables, coeffs, expressions[r].back()));
    }
    return out;
}

} // namespace toric
