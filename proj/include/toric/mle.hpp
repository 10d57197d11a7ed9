#pragma once

// Maximum likelihood estimation for models with rational linear precision.

#include "toric/blending.hpp"
#include "toric/tfp.hpp"

#include <cstdint>
#include <vector>

namespace toric {

/// Nonnegative counts with a positive total.
struct DataVector {
    std::vector<long long> counts;
    long long total = 0;

    DataVector() = default;
    /// Throws DomainError on a negative count or a zero total.
    explicit DataVector(std::vector<long long> counts);

    std::size_t size() const { return counts.size(); }
    /// u / u_+ as exact rationals.
    RationalVector empirical() const;
};

struct Distribution {
    RationalVector probs;

    std::size_t size() const { return probs.size(); }
    std::vector<double> to_double() const;
};

/// p = sum_b (u_b / u_+) b, then f_b(p) for every function of the system.
/// Throws NonGenericData when p lies on the boundary of conv(config) (some
/// facet margin of u vanishes) and PoleError when p is a pole.
Distribution mle_closed_form(const BlendingSystem& sys, const DataVector& u);

/// The data point sum_b (u_b / u_+) b.
RationalPoint data_point(const PointConfiguration& config, const DataVector& u);

struct Marginals {
    DataVector B; // u^i_{j,+}
    DataVector C; // u^i_{+,k}
    std::vector<long long> classes; // u^i_{+,+}
};

/// Marginalizes TFP data (ordered by (i, j, k)) onto both factors.
Marginals marginalize(const Multigrading& g, const DataVector& u);

/// pB^i_j pC^i_k / pA^i with pA^i = u^i_{+,+} / u_+, in (i, j, k) order.
/// Throws ZeroClassTotal.
Distribution tfp_mle_combine(const Distribution& pB, const Distribution& pC, const Multigrading& g,
                             const DataVector& u);

/// dm p - dm u / u_+.
RationalVector birch_residual(const DesignMatrix& dm, const DataVector& u, const Distribution& p);

struct IpsResult {
    std::vector<double> probs;
    std::size_t iterations = 0;
    double residual = 0.0; // sup-norm of dm p - dm u / u_+
};

/// Generalized iterative scaling on the scaled toric model, started at
/// w / sum(w). Throws NotConverged when the residual is still >= tol after
/// max_iter sweeps, and NonGenericData when a target margin vanishes.
IpsResult ips_fit(const DesignMatrix& dm, const WeightVector& w, const DataVector& u, double tol = 1e-10,
                  std::size_t max_iter = 10000);

/// sum_i u_i log p_i with 0 log 0 = 0. Throws DomainError when p_i <= 0 and u_i > 0.
double log_likelihood(const DataVector& u, const Distribution& p);
double log_likelihood(const DataVector& u, const std::vector<double>& p);

} // namespace toric
