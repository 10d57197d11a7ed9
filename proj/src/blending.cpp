#include "toric/blending.hpp"

#include "toric/errors.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <random>

namespace toric {

WeightVector::WeightVector(RationalVector weights) : w_(std::move(weights)) {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] <= 0) throw InvalidWeights("weight " + std::to_string(i) + " = " + to_string(w_[i]) + " is not positive");
}

void BlendingSystem::validate() {
    config.validate();
    if (variables.empty()) variables = numbered_variables("x", config.dim);
    if (variables.size() != config.dim) throw DimensionMismatch("blending system needs one variable per dimension");
    if (functions.size() != config.size())
        throw DimensionMismatch("blending system has " + std::to_string(functions.size()) + " functions for " +
                                std::to_string(config.size()) + " points");
    if (weights.size() == 0) weights = WeightVector::ones(config.size());
    if (weights.size() != config.size()) throw DimensionMismatch("weight count does not match point count");
    for (auto& f : functions) f = f.with_variables(variables);
}

RationalVector BlendingSystem::eval(std::span<const Rational> x) const {
    RationalVector out;
    out.reserve(functions.size());
    for (const auto& f : functions) out.push_back(f.eval(x));
    return out;
}

BlendingSystem toric_blending(const LatticePolytope& poly, const PointConfiguration& points, const WeightVector& w,
                              const std::vector<std::string>& variables) {
    if (points.dim != poly.dim) throw DimensionMismatch("configuration and polytope dimensions differ");
    if (w.size() != points.size()) throw DimensionMismatch("weight count does not match point count");
    auto vars = variables.empty() ? numbered_variables("x", poly.dim) : variables;
    auto forms = lattice_distance_forms(poly, vars);

    std::vector<Polynomial> beta;
    beta.reserve(points.size());
    for (std::size_t b = 0; b < points.size(); ++b) {
        Polynomial prod = Polynomial::constant(Rational(1), vars);
        for (std::size_t i = 0; i < poly.facets.size(); ++i) {
            long long h = poly.facets[i].distance(points.points[b]);
            if (h < 0)
                throw PointOutsidePolytope("point " + format_point(points.points[b]) + " has lattice distance " +
                                           std::to_string(h) + " to facet " + std::to_string(i));
            if (h > 0) prod *= forms[i].pow(static_cast<unsigned>(h));
        }
        beta.push_back(std::move(prod));
    }
    Polynomial beta_w(vars);
    for (std::size_t b = 0; b < beta.size(); ++b) beta_w += beta[b] * w[b];

    BlendingSystem sys;
    sys.config = points;
    sys.weights = w;
    sys.kind = BlendingKind::Toric;
    sys.variables = vars;
    for (std::size_t b = 0; b < beta.size(); ++b) sys.functions.emplace_back(beta[b] * w[b], beta_w);
    sys.validate();
    return sys;
}

namespace {

// Random rational points for the sampled identity test; denominators small
// and varied so that low-degree identities cannot vanish by accident often.
std::vector<RationalPoint> random_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<RationalPoint> out;
    for (std::size_t s = 0; s < count; ++s) {
        RationalPoint p;
        for (std::size_t c = 0; c < dim; ++c) {
            long num = static_cast<long>(rng() % 2001) - 1000;
            long den = 1 + static_cast<long>(rng() % 97);
            Rational r(num, den);
            r.canonicalize();
            p.push_back(r);
        }
        out.push_back(std::move(p));
    }
    return out;
}

Check identity_holds(const RationalFunction& lhs, const RationalFunction& rhs, IdentityMode mode, std::uint64_t seed,
                     const std::string& what) {
    if (mode == IdentityMode::Exact) {
        if (lhs == rhs) return Check::pass();
        return Check::fail(what + ": " + lhs.to_string() + " != " + rhs.to_string());
    }
    auto vars = merge_variables(lhs.variables(), rhs.variables());
    const std::size_t dim = vars.size();
    auto l = lhs.with_variables(vars), r = rhs.with_variables(vars);
    std::size_t tested = 0;
    for (const auto& p : random_points(dim, 60, seed)) {
        if (tested == 30) break;
        try {
            if (l.eval(p) != r.eval(p)) return Check::fail(what + " fails at " + format_point(p));
            ++tested;
        } catch (const PoleError&) {
            continue;
        }
    }
    return Check::pass();
}

} // namespace

namespace {

// Identities only need to hold on the affine hull of the configuration.
RationalFunction on_hull(const RationalFunction& f, const std::map<std::string, Polynomial>& sub) {
    return sub.empty() ? f : f.substituted(sub);
}

} // namespace

Check verify_partition_of_unity(const BlendingSystem& sys, IdentityMode mode, std::uint64_t seed) {
    auto sub = affine_chart(sys.config).substitution(sys.variables);
    RationalFunction sum = RationalFunction::constant(Rational(0), sys.variables);
    for (const auto& f : sys.functions) sum += f;
    return identity_holds(on_hull(sum, sub), RationalFunction::constant(Rational(1), sys.variables), mode, seed,
                          "sum of blending functions");
}

Check verify_linear_precision(const BlendingSystem& sys, IdentityMode mode, std::uint64_t seed) {
    auto sub = affine_chart(sys.config).substitution(sys.variables);
    for (std::size_t c = 0; c < sys.config.dim; ++c) {
        RationalFunction sum = RationalFunction::constant(Rational(0), sys.variables);
        for (std::size_t b = 0; b < sys.functions.size(); ++b) {
            long long coord = sys.config.points[b][c];
            if (coord == 0) continue;
            sum += sys.functions[b] * RationalFunction::constant(Rational(static_cast<long>(coord)), sys.variables);
        }
        auto target = on_hull(RationalFunction(Polynomial::variable(sys.variables, c)), sub);
        Check ok = identity_holds(on_hull(sum, sub), target, mode, seed + c, "linear precision in coordinate " + sys.variables[c]);
        if (!ok) return ok;
    }
    return Check::pass();
}

Check verify_interior_positivity(const BlendingSystem& sys, const LatticePolytope& poly, std::size_t samples,
                                 std::uint64_t seed) {
    PointConfiguration verts;
    verts.dim = poly.dim;
    verts.points = poly.vertices;
    auto chart = affine_chart(sys.config);
    if (poly.dim != sys.config.dim && poly.dim != chart.free.size())
        throw DimensionMismatch("polytope dimension does not match the configuration");
    for (auto p : sample_interior(verts, samples, seed)) {
        if (poly.dim != sys.config.dim) p = chart.lift(p);
        for (std::size_t b = 0; b < sys.functions.size(); ++b) {
            Rational v;
            try {
                v = sys.functions[b].eval(p);
            } catch (const PoleError&) {
                return Check::fail("function " + sys.config.label(b) + " has a pole at " + format_point(p));
            }
            if (v < 0)
                return Check::fail("function " + sys.config.label(b) + " is " + to_string(v) + " at " +
                                   format_point(p));
        }
    }
    return Check::pass();
}

Check verify_toric_membership(const BlendingSystem& sys, std::size_t samples, std::uint64_t seed) {
    DesignMatrix dm = design_matrix(sys.config);
    auto kernel = linalg::integer_nullspace(dm.rows, sys.config.size());
    if (kernel.empty()) return Check::pass();
    for (const auto& p : sample_interior(sys.config, samples, seed)) {
        RationalVector scaled;
        try {
            scaled = sys.eval(p);
        } catch (const PoleError&) {
            continue;
        }
        if (std::any_of(scaled.begin(), scaled.end(), [](const Rational& v) { return v == 0; })) continue;
        for (std::size_t b = 0; b < scaled.size(); ++b) scaled[b] /= sys.weights[b];
        for (const auto& v : kernel) {
            Rational lhs = 1, rhs = 1;
            for (std::size_t b = 0; b < v.size(); ++b) {
                if (v[b] > 0) lhs *= pow(scaled[b], v[b]);
                if (v[b] < 0) rhs *= pow(scaled[b], -v[b]);
            }
            if (lhs != rhs) {
                std::string vec;
                for (std::size_t b = 0; b < v.size(); ++b) vec += (b ? "," : "") + std::to_string(v[b]);
                return Check::fail("binomial relation for kernel vector (" + vec + ") fails at " + format_point(p) +
                                   ": " + to_string(lhs) + " != " + to_string(rhs));
            }
        }
    }
    return Check::pass();
}

PrecisionReport verify_rational_linear_precision(const BlendingSystem& sys, const CheckOptions& opts) {
    PrecisionReport r;
    r.partition_of_unity = verify_partition_of_unity(sys, opts.mode, opts.seed);
    r.toric_membership = verify_toric_membership(sys, opts.samples, opts.seed);
    auto chart = affine_chart(sys.config);
    r.interior_positivity =
        verify_interior_positivity(sys, convex_hull_facets(chart.project(sys.config)), opts.samples, opts.seed);
    r.linear_precision = verify_linear_precision(sys, opts.mode, opts.seed);
    return r;
}

bool has_strict_linear_precision(const BlendingSystem& sys, const CheckOptions& opts) {
    return sys.kind == BlendingKind::Toric && verify_rational_linear_precision(sys, opts).all();
}

RationalPoint toric_patch_eval(const BlendingSystem& sys, const std::vector<RationalPoint>& control,
                               const RationalPoint& p) {
    if (control.size() != sys.functions.size())
        throw DimensionMismatch("need one control point per configuration point");
    if (control.empty()) return {};
    const std::size_t out_dim = control.front().size();
    RationalPoint out(out_dim, Rational(0));
    for (std::size_t b = 0; b < control.size(); ++b) {
        if (control[b].size() != out_dim) throw DimensionMismatch("control points differ in dimension");
        Rational f = sys.functions[b].eval(p);
        for (std::size_t c = 0; c < out_dim; ++c) out[c] += f * control[b][c];
    }
    return out;
}

} // namespace toric
