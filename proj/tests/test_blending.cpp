#include "doctest.h"
#include "test_support.hpp"

#include "toric/errors.hpp"

#include <numeric>

using namespace toric;
using namespace toric::testing;

namespace {

BlendingSystem custom_segment(const std::vector<std::string>& fns) {
    BlendingSystem sys;
    sys.config = segment(1);
    sys.weights = WeightVector::ones(2);
    sys.variables = {"x1"};
    for (const auto& f : fns) sys.functions.emplace_back(poly(f, sys.variables));
    sys.validate();
    return sys;
}

BlendingSystem trapezoid_toric() {
    auto c = trapezoid();
    return toric_blending(convex_hull_facets(c), c, trapezoid_weights());
}

} // namespace

TEST_CASE("toric_blending: square gives the bilinear products") {
    auto sys = square_toric();
    REQUIRE(sys.functions.size() == 4);
    CHECK(sys.kind == BlendingKind::Toric);
    CHECK(sys.functions[0] == ratfun("(1-x1)*(1-x2)", "1", xvars()));
    CHECK(sys.functions[1] == ratfun("x1*(1-x2)", "1", xvars()));
    CHECK(sys.functions[2] == ratfun("x2*(1-x1)", "1", xvars()));
    CHECK(sys.functions[3] == ratfun("x1*x2", "1", xvars()));
    CHECK(sys.functions[0].denominator().is_constant());
}

TEST_CASE("toric_blending: trapezoid weight sum at the origin") {
    auto sys = trapezoid_toric();
    std::vector<Rational> origin{q("0"), q("0")};
    CHECK(sys.functions[0].denominator().eval(origin) != 0);
    // the stored denominator is beta_w itself
    auto den = sys.functions[0].denominator();
    auto num = sys.functions[0].numerator();
    CHECK(num.eval(origin) / den.eval(origin) == 1);
    // beta_w(0,0) = 4 up to the normalization of the stored denominator
    auto beta_w = poly("(1-x2)*(2-x1-x2)^2 + 2*x1*(1-x2)*(2-x1-x2) + x1^2*(1-x2) + x2*(2-x1-x2) + x1*x2",
                       xvars());
    CHECK(beta_w.eval(origin) == 4);
    CHECK(RationalFunction(den, Polynomial::constant(q("1"), xvars())) ==
          RationalFunction(beta_w * (den.leading_coefficient() / beta_w.leading_coefficient()),
                           Polynomial::constant(q("1"), xvars())));
}

TEST_CASE("toric_blending: unit segment is Bernstein degree 1") {
    auto sys = segment_toric(1);
    CHECK(sys.functions[0] == ratfun("1-x1", "1", {"x1"}));
    CHECK(sys.functions[1] == ratfun("x1", "1", {"x1"}));
}

TEST_CASE("toric_blending rejects points outside the polytope") {
    auto poly = convex_hull_facets(square());
    PointConfiguration extra(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 2}});
    CHECK_THROWS_AS(toric_blending(poly, extra, WeightVector::ones(5)), PointOutsidePolytope);
}

TEST_CASE("weights must be positive") {
    CHECK_THROWS_AS(WeightVector(qv({"1", "0"})), InvalidWeights);
    CHECK_THROWS_AS(WeightVector(qv({"1", "-1/2"})), InvalidWeights);
}

TEST_CASE("verify_partition_of_unity") {
    CHECK(verify_partition_of_unity(square_toric()));
    CHECK(verify_partition_of_unity(trapezoid_beta_tilde()));
    auto bad = custom_segment({"x1", "1-x1"});
    bad.functions[0] = RationalFunction(poly("x1*x2", {"x1", "x2"}));
    bad.variables = {"x1", "x2"};
    bad.config = PointConfiguration(2, {{0, 0}, {1, 0}});
    bad.functions[1] = RationalFunction(poly("1-x1", {"x1", "x2"}));
    CHECK_FALSE(verify_partition_of_unity(bad));
    CHECK_FALSE(verify_partition_of_unity(custom_segment({"x1", "1-x1^2"})));
}

TEST_CASE("verify_linear_precision") {
    CHECK(verify_linear_precision(square_toric()));
    auto trap = verify_linear_precision(trapezoid_toric());
    CHECK_FALSE(trap);
    CHECK(trap.witness.find("x1") != std::string::npos);
    CHECK(verify_linear_precision(trapezoid_beta_tilde()));
}

TEST_CASE("verify_interior_positivity") {
    CHECK(verify_interior_positivity(square_toric(), convex_hull_facets(square()), 50, 0));
    CHECK(verify_interior_positivity(trapezoid_beta_tilde(), convex_hull_facets(trapezoid()), 50, 0));
    auto neg = custom_segment({"2*x1-1", "2-2*x1"});
    CHECK(verify_partition_of_unity(neg));
    CHECK_FALSE(verify_linear_precision(neg)); // 0*(2x-1) + 1*(2-2x) != x
    std::vector<Rational> quarter{q("1/4")};
    CHECK(neg.functions[0].eval(quarter) == q("-1/2"));
    CHECK_FALSE(verify_interior_positivity(neg, convex_hull_facets(segment(1)), 50, 0));
}

TEST_CASE("verify_toric_membership") {
    CHECK(verify_toric_membership(square_toric()));
    auto kernel = linalg::integer_nullspace(design_matrix(square()).rows, 4);
    REQUIRE(kernel.size() == 1);
    CHECK(std::abs(kernel[0][0]) == 1);

    auto beta = trapezoid_beta_tilde();
    CHECK(verify_toric_membership(beta));
    auto lhs = beta.functions[0] * beta.functions[2];
    auto rhs = beta.functions[1] * beta.functions[1] * RationalFunction::constant(q("1/4"), yvars());
    CHECK(lhs == rhs);
    CHECK(lhs == ratfun("y1^2*(1-y2)^2*(2-y1-y2)^2", "(2-y2)^4", yvars()));

    auto wrong = trapezoid_beta_tilde();
    wrong.weights = WeightVector::ones(5);
    CHECK_FALSE(verify_toric_membership(wrong));
}

TEST_CASE("verify_rational_linear_precision: the square/trapezoid dichotomy") {
    CHECK(has_strict_linear_precision(square_toric()));
    auto toric = verify_rational_linear_precision(trapezoid_toric());
    CHECK(toric.partition_of_unity);
    CHECK(toric.toric_membership);
    CHECK(toric.interior_positivity);
    CHECK_FALSE(toric.linear_precision);
    CHECK_FALSE(has_strict_linear_precision(trapezoid_toric()));
    CHECK(verify_rational_linear_precision(trapezoid_beta_tilde()).all());
    CHECK_FALSE(has_strict_linear_precision(trapezoid_beta_tilde())); // custom, not toric
}

TEST_CASE("sampled identity mode agrees with exact mode on fixtures") {
    CheckOptions opts;
    opts.mode = IdentityMode::Sampled;
    CHECK(verify_rational_linear_precision(trapezoid_beta_tilde(), opts).all());
    CHECK_FALSE(verify_linear_precision(trapezoid_toric(), IdentityMode::Sampled, 0));
}

TEST_CASE("toric_patch_eval") {
    auto sys = square_toric();
    std::vector<RationalPoint> pts;
    for (const auto& b : sys.config.points) pts.push_back(to_rational_point(b));
    CHECK(toric_patch_eval(sys, pts, {q("1/3"), q("1/3")}) == RationalPoint{q("1/3"), q("1/3")});
    std::vector<RationalPoint> ctrl{{q("0"), q("0")}, {q("0"), q("0")}, {q("0"), q("0")}, {q("1"), q("1")}};
    CHECK(toric_patch_eval(sys, ctrl, {q("1/2"), q("1/2")}) == RationalPoint{q("1/4"), q("1/4")});
    auto beta = trapezoid_beta_tilde();
    std::vector<RationalPoint> tp;
    for (const auto& b : beta.config.points) tp.push_back(to_rational_point(b));
    CHECK(toric_patch_eval(beta, tp, {q("4/5"), q("2/5")}) == RationalPoint{q("4/5"), q("2/5")});
    CHECK_THROWS_AS(toric_patch_eval(beta, tp, {q("0"), q("2")}), PoleError);
}

// Properties ------------------------------------------------------------------

TEST_CASE("property: toric systems sum to one") {
    CHECK(verify_partition_of_unity(square_toric()));
    CHECK(verify_partition_of_unity(trapezoid_toric()));
    CHECK(verify_partition_of_unity(segment_toric(3)));
    Rng rng(5);
    int built = 0;
    while (built < 5) {
        std::size_t dim = built < 3 ? 2 : 3;
        PointConfiguration c;
        c.dim = dim;
        while (c.points.size() < dim + 2) {
            Point p;
            for (std::size_t k = 0; k < dim; ++k) p.push_back(rng.integer(0, 2));
            if (std::find(c.points.begin(), c.points.end(), p) == c.points.end()) c.points.push_back(p);
        }
        LatticePolytope poly;
        try {
            poly = convex_hull_facets(c);
        } catch (const NotFullDimensional&) {
            continue;
        }
        auto pts = lattice_points(poly);
        RationalVector w;
        for (std::size_t b = 0; b < pts.size(); ++b) w.emplace_back(static_cast<long>(rng.integer(1, 4)));
        auto sys = toric_blending(poly, pts, WeightVector(w));
        CHECK(verify_partition_of_unity(sys));
        CHECK(verify_interior_positivity(sys, poly, 10, built));
        CHECK(verify_toric_membership(sys, 5, built));
        ++built;
    }
}

TEST_CASE("property: linear precision is invariant under permuting the points") {
    Rng rng(6);
    for (const auto& base : {square_toric(), trapezoid_toric(), trapezoid_beta_tilde()}) {
        bool expected = verify_linear_precision(base).ok;
        for (int t = 0; t < 5; ++t) {
            std::vector<std::size_t> perm(base.functions.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng.gen);
            BlendingSystem s = base;
            RationalVector w;
            for (std::size_t b = 0; b < perm.size(); ++b) {
                s.config.points[b] = base.config.points[perm[b]];
                s.functions[b] = base.functions[perm[b]];
                w.push_back(base.weights[perm[b]]);
            }
            s.config.labels.clear();
            s.weights = WeightVector(w);
            CHECK(verify_linear_precision(s).ok == expected);
            CHECK(verify_partition_of_unity(s).ok);
        }
    }
}
