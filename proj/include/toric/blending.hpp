#pragma once

#include "toric/geometry.hpp"
#include "toric/rational_function.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

/// Positive weights, one per configuration point.
class WeightVector {
public:
    WeightVector() = default;
    /// Throws InvalidWeights when an entry is not strictly positive.
    explicit WeightVector(RationalVector weights);
    static WeightVector ones(std::size_t n) { return WeightVector(RationalVector(n, Rational(1))); }

    const RationalVector& values() const { return w_; }
    std::size_t size() const { return w_.size(); }
    const Rational& operator[](std::size_t i) const { return w_[i]; }

private:
    RationalVector w_;
};

enum class BlendingKind { Toric, Custom };

/// One rational function per configuration point, all over `variables`.
struct BlendingSystem {
    PointConfiguration config;
    WeightVector weights;
    std::vector<RationalFunction> functions;
    BlendingKind kind = BlendingKind::Custom;
    std::vector<std::string> variables;
    std::vector<std::string> warnings;

    /// Re-embeds every function over `variables` and checks counts.
    void validate();
    /// Values of all functions at x (PoleError on a pole).
    RationalVector eval(std::span<const Rational> x) const;
};

/// Outcome of a verification: `ok` plus a human-readable witness on failure.
struct Check {
    bool ok = true;
    std::string witness;

    explicit operator bool() const { return ok; }
    static Check pass() { return {}; }
    static Check fail(std::string why) { return {false, std::move(why)}; }
};

/// Exact mode cross-multiplies; Sampled mode compares values at 30 random
/// rational points (a probabilistic identity test).
enum class IdentityMode { Exact, Sampled };

struct CheckOptions {
    std::size_t samples = 50;
    std::uint64_t seed = 0;
    IdentityMode mode = IdentityMode::Exact;
};

/// Toric blending functions w_b beta_b / beta_w with
/// beta_b = prod_i h_i^{h_i(b)}. The denominator beta_w is kept as computed.
/// Throws PointOutsidePolytope when a point has a negative lattice distance.
BlendingSystem toric_blending(const LatticePolytope& poly, const PointConfiguration& points, const WeightVector& w,
                              const std::vector<std::string>& variables = {});

/// The identity checks below hold on the affine hull of the configuration,
/// so lower-dimensional configurations (fiber products) are handled by
/// substituting the dependent coordinates.

/// sum_b f_b == 1.
Check verify_partition_of_unity(const BlendingSystem& sys, IdentityMode mode = IdentityMode::Exact,
                                std::uint64_t seed = 0);

/// sum_b f_b * b == x, coordinate by coordinate.
Check verify_linear_precision(const BlendingSystem& sys, IdentityMode mode = IdentityMode::Exact,
                              std::uint64_t seed = 0);

/// Every function defined and >= 0 at `samples` points of relint(poly). For
/// a lower-dimensional configuration poly lives in its affine chart.
Check verify_interior_positivity(const BlendingSystem& sys, const LatticePolytope& poly, std::size_t samples = 50,
                                 std::uint64_t seed = 0);

/// Binomial relations prod (f_b/w_b)^{v+} = prod (f_b/w_b)^{v-} for every
/// integer kernel vector v of the design matrix, at sampled interior points
/// where no function vanishes.
Check verify_toric_membership(const BlendingSystem& sys, std::size_t samples = 50, std::uint64_t seed = 0);

struct PrecisionReport {
    Check partition_of_unity;
    Check toric_membership;
    Check interior_positivity;
    Check linear_precision;

    bool all() const {
        return partition_of_unity.ok && toric_membership.ok && interior_positivity.ok && linear_precision.ok;
    }
};

/// Runs all four rational-linear-precision conditions; poly = conv(config).
PrecisionReport verify_rational_linear_precision(const BlendingSystem& sys, const CheckOptions& opts = {});

/// The system is toric and passes every condition.
bool has_strict_linear_precision(const BlendingSystem& sys, const CheckOptions& opts = {});

/// sum_b f_b(p) Q_b.
RationalPoint toric_patch_eval(const BlendingSystem& sys, const std::vector<RationalPoint>& control,
                               const RationalPoint& p);

} // namespace toric
