#include "toric/mle.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace toric {

DataVector::DataVector(std::vector<long long> c) : counts(std::move(c)) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0) throw DomainError("count " + std::to_string(i + 1) + " is negative");
        total += counts[i];
    }
    if (total <= 0) throw DomainError("data vector has zero total");
}

RationalVector DataVector::empirical() const {
    RationalVector out;
    out.reserve(counts.size());
    for (long long c : counts) {
        Rational r(static_cast<long>(c), static_cast<long>(total));
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

std::vector<double> Distribution::to_double() const {
    std::vector<double> out;
    out.reserve(probs.size());
    for (const auto& p : probs) out.push_back(p.get_d());
    return out;
}

RationalPoint data_point(const PointConfiguration& config, const DataVector& u) {
    if (u.size() != config.size())
        throw DimensionMismatch("data vector has " + std::to_string(u.size()) + " entries for " +
                                std::to_string(config.size()) + " points");
    RationalPoint p(config.dim, Rational(0));
    auto e = u.empirical();
    for (std::size_t b = 0; b < config.size(); ++b)
        for (std::size_t k = 0; k < config.dim; ++k) p[k] += e[b] * static_cast<long>(config.points[b][k]);
    return p;
}

Distribution mle_closed_form(const BlendingSystem& sys, const DataVector& u) {
    auto p = data_point(sys.config, u);
    auto chart = affine_chart(sys.config);
    auto poly = convex_hull_facets(chart.project(sys.config));
    for (std::size_t i = 0; i < poly.facets.size(); ++i) {
        if (poly.facets[i].distance(chart.project(p)) <= 0)
            throw NonGenericData("data point " + format_point(p) + " lies on facet " + std::to_string(i + 1) +
                                 " of the polytope; the margin of that facet vanishes");
    }
    return Distribution{sys.eval(p)};
}

namespace {

struct TfpOrder {
    std::vector<std::size_t> cls, b, c;
};

TfpOrder tfp_order(const Multigrading& g) {
    TfpOrder o;
    auto cb = g.classesB();
    auto cc = g.classesC();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (auto b : cb[i])
            for (auto c : cc[i]) {
                o.cls.push_back(i);
                o.b.push_back(b);
                o.c.push_back(c);
            }
    return o;
}

} // namespace

Marginals marginalize(const Multigrading& g, const DataVector& u) {
    auto o = tfp_order(g);
    if (u.size() != o.cls.size())
        throw DimensionMismatch("data vector has " + std::to_string(u.size()) + " entries for " +
                                std::to_string(o.cls.size()) + " fiber product points");
    std::vector<long long> ub(g.assignmentB.size(), 0), uc(g.assignmentC.size(), 0), ua(g.size(), 0);
    for (std::size_t n = 0; n < o.cls.size(); ++n) {
        ub[o.b[n]] += u.counts[n];
        uc[o.c[n]] += u.counts[n];
        ua[o.cls[n]] += u.counts[n];
    }
    return Marginals{DataVector(std::move(ub)), DataVector(std::move(uc)), std::move(ua)};
}

Distribution tfp_mle_combine(const Distribution& pB, const Distribution& pC, const Multigrading& g,
                             const DataVector& u) {
    if (pB.size() != g.assignmentB.size() || pC.size() != g.assignmentC.size())
        throw DimensionMismatch("factor distributions do not match the multigrading");
    auto m = marginalize(g, u);
    for (std::size_t i = 0; i < m.classes.size(); ++i)
        if (m.classes[i] == 0) throw ZeroClassTotal("degree class " + std::to_string(i + 1) + " has no observations");
    auto o = tfp_order(g);
    Distribution out;
    out.probs.reserve(o.cls.size());
    for (std::size_t n = 0; n < o.cls.size(); ++n) {
        Rational pa(static_cast<long>(m.classes[o.cls[n]]), static_cast<long>(u.total));
        pa.canonicalize();
        out.probs.push_back(pB.probs[o.b[n]] * pC.probs[o.c[n]] / pa);
    }
    return out;
}

RationalVector birch_residual(const DesignMatrix& dm, const DataVector& u, const Distribution& p) {
    if (u.size() != dm.num_cols() || p.size() != dm.num_cols())
        throw DimensionMismatch("design matrix has " + std::to_string(dm.num_cols()) + " columns");
    auto e = u.empirical();
    RationalVector out;
    for (const auto& row : dm.rows) {
        Rational r = 0;
        for (std::size_t b = 0; b < row.size(); ++b) r += static_cast<long>(row[b]) * (p.probs[b] - e[b]);
        out.push_back(r);
    }
    return out;
}

IpsResult ips_fit(const DesignMatrix& dm, const WeightVector& w, const DataVector& u, double tol,
                  std::size_t max_iter) {
    const std::size_t n = dm.num_cols();
    if (u.size() != n || w.size() != n) throw DimensionMismatch("design matrix has " + std::to_string(n) + " columns");
    if (!(tol > 0)) throw DomainError("tolerance must be positive");

    std::vector<double> empirical(n);
    for (std::size_t b = 0; b < n; ++b) empirical[b] = static_cast<double>(u.counts[b]) / static_cast<double>(u.total);

    // Nonnegative rows with a common column sum s; the slack row closes the gap.
    std::vector<std::vector<long long>> M;
    for (const auto& row : dm.rows) {
        long long lo = *std::min_element(row.begin(), row.end());
        std::vector<long long> shifted(row);
        if (lo < 0)
            for (auto& v : shifted) v -= lo;
        if (std::any_of(shifted.begin(), shifted.end(), [](long long v) { return v != 0; })) M.push_back(shifted);
    }
    std::vector<long long> colsum(n, 0);
    for (const auto& row : M)
        for (std::size_t b = 0; b < n; ++b) colsum[b] += row[b];
    long long s = *std::max_element(colsum.begin(), colsum.end());
    std::vector<long long> slack(n);
    for (std::size_t b = 0; b < n; ++b) slack[b] = s - colsum[b];
    if (std::any_of(slack.begin(), slack.end(), [](long long v) { return v != 0; })) M.push_back(slack);

    std::vector<double> target(M.size(), 0.0);
    for (std::size_t a = 0; a < M.size(); ++a) {
        for (std::size_t b = 0; b < n; ++b) target[a] += static_cast<double>(M[a][b]) * empirical[b];
        if (!(target[a] > 0)) throw NonGenericData("target margin " + std::to_string(a + 1) + " of the data vanishes");
    }

    double wsum = 0;
    std::vector<double> p(n);
    for (std::size_t b = 0; b < n; ++b) wsum += (p[b] = w[b].get_d());
    for (auto& v : p) v /= wsum;

    auto residual = [&] {
        double r = 0;
        for (const auto& row : dm.rows) {
            double d = 0;
            for (std::size_t b = 0; b < n; ++b) d += static_cast<double>(row[b]) * (p[b] - empirical[b]);
            r = std::max(r, std::abs(d));
        }
        return r;
    };

    IpsResult res;
    res.residual = residual();
    std::vector<double> logratio(M.size());
    while (res.residual >= tol) {
        if (res.iterations == max_iter) {
            std::ostringstream os;
            os << "iterative scaling did not converge in " << max_iter << " sweeps; residual " << res.residual;
            throw NotConverged(os.str());
        }
        for (std::size_t a = 0; a < M.size(); ++a) {
            double current = 0;
            for (std::size_t b = 0; b < n; ++b) current += static_cast<double>(M[a][b]) * p[b];
            logratio[a] = std::log(target[a] / current);
        }
        double total = 0;
        for (std::size_t b = 0; b < n; ++b) {
            double e = 0;
            for (std::size_t a = 0; a < M.size(); ++a) e += static_cast<double>(M[a][b]) * logratio[a];
            p[b] *= std::exp(e / static_cast<double>(s));
            total += p[b];
        }
        for (auto& v : p) v /= total;
        ++res.iterations;
        res.residual = residual();
    }
    res.probs = std::move(p);
    return res;
}

double log_likelihood(const DataVector& u, const std::vector<double>& p) {
    if (u.size() != p.size()) throw DimensionMismatch("data and distribution lengths differ");
    double l = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (u.counts[i] == 0) continue;
        if (!(p[i] > 0))
            throw DomainError("probability " + std::to_string(i + 1) + " is zero but its count is positive");
        l += static_cast<double>(u.counts[i]) * std::log(p[i]);
    }
    return l;
}

double log_likelihood(const DataVector& u, const Distribution& p) {
    for (std::size_t i = 0; i < p.size() && i < u.size(); ++i)
        if (u.counts[i] > 0 && p.probs[i] <= 0)
            throw DomainError("probability " + std::to_string(i + 1) + " is not positive but its count is");
    return log_likelihood(u, p.to_double());
}

} // namespace toric
