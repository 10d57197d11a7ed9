#include "toric/tfp.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

GradedConfiguration::GradedConfiguration(PointConfiguration config_, std::vector<std::size_t> assignment_)
    : config(std::move(config_)), assignment(std::move(assignment_)) {
    config.validate();
    if (assignment.size() != config.size())
        throw SchemaError("grading assigns " + std::to_string(assignment.size()) + " degrees to " +
                          std::to_string(config.size()) + " points");
}

namespace {

std::vector<std::vector<std::size_t>> group_classes(const std::vector<std::size_t>& assignment,
                                                    std::size_t num_classes) {
    std::vector<std::vector<std::size_t>> out(num_classes);
    for (std::size_t p = 0; p < assignment.size(); ++p) {
        if (assignment[p] >= num_classes)
            throw EmptyDegreeClass("point " + std::to_string(p) + " assigned to degree " +
                                   std::to_string(assignment[p]) + " but only " + std::to_string(num_classes) +
                                   " degrees exist");
        out[assignment[p]].push_back(p);
    }
    return out;
}

} // namespace

std::vector<std::vector<std::size_t>> GradedConfiguration::classes(std::size_t num_classes) const {
    return group_classes(assignment, num_classes);
}

RationalVector AffineMap::apply(const Point& p) const {
    RationalVector out;
    for (const auto& row : matrix) {
        if (row.size() != p.size() + 1) throw DimensionMismatch("affine map dimension mismatch");
        Rational v = row.back();
        for (std::size_t c = 0; c < p.size(); ++c) v += row[c] * static_cast<long>(p[c]);
        out.push_back(v);
    }
    return out;
}

std::string AffineMap::to_string(const std::vector<std::string>& variables) const {
    std::ostringstream os;
    os << "(";
    for (std::size_t r = 0; r < matrix.size(); ++r) {
        RationalVector coeffs(matrix[r].begin(), matrix[r].end() - 1);
        os << (r ? ", " : "") << Polynomial::linear(variables, coeffs, matrix[r].back()).to_string();
    }
    os << ")";
    return os.str();
}

std::vector<std::vector<std::size_t>> Multigrading::classesB() const { return group_classes(assignmentB, size()); }

std::vector<std::vector<std::size_t>> Multigrading::classesC() const { return group_classes(assignmentC, size()); }

namespace {

RationalVector augmented(const Point& p) {
    RationalVector v = to_rational_point(p);
    v.emplace_back(1);
    return v;
}

// Solves for an affine map sending every point of `side` to the degree of
// its class, scanning points in order so that an inconsistency is reported
// against the earlier points that force a different degree.
AffineMap solve_degree_map(const GradedConfiguration& side, const PointConfiguration& A, const char* name) {
    const std::size_t n = side.config.size();
    const std::size_t cols = side.config.dim + 1;
    linalg::Matrix rows;
    for (std::size_t m = 0; m < n; ++m) {
        RationalVector row = augmented(side.config.points[m]);
        if (!rows.empty()) {
            // express [b_m; 1] through earlier rows when possible
            linalg::Matrix transposed(cols, RationalVector(rows.size()));
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < cols; ++c) transposed[c][r] = rows[r][c];
            if (auto coeffs = linalg::solve(transposed, row, rows.size())) {
                RationalVector implied(A.dim, Rational(0));
                for (std::size_t r = 0; r < rows.size(); ++r)
                    for (std::size_t t = 0; t < A.dim; ++t)
                        implied[t] += (*coeffs)[r] * static_cast<long>(A.points[side.assignment[r]][t]);
                RationalVector assigned = to_rational_point(A.points[side.assignment[m]]);
                if (implied != assigned) {
                    std::ostringstream os;
                    os << "no affine degree map for " << name << ": point " << format_point(side.config.points[m])
                       << " has degree " << format_point(assigned) << " but is an affine combination of";
                    for (std::size_t r = 0; r < rows.size(); ++r)
                        if ((*coeffs)[r] != 0)
                            os << " " << to_string((*coeffs)[r]) << "*" << format_point(side.config.points[r]);
                    os << ", forcing degree " << format_point(implied);
                    throw NoDegreeMap(os.str());
                }
            }
        }
        rows.push_back(std::move(row));
    }
    AffineMap map;
    for (std::size_t t = 0; t < A.dim; ++t) {
        RationalVector rhs;
        for (std::size_t m = 0; m < n; ++m) rhs.emplace_back(static_cast<long>(A.points[side.assignment[m]][t]));
        auto sol = linalg::solve(rows, rhs, cols);
        if (!sol) throw NoDegreeMap(std::string("no affine degree map for ") + name);
        map.matrix.push_back(std::move(*sol));
    }
    return map;
}

void require_nonempty_classes(const GradedConfiguration& side, std::size_t r, const char* name) {
    auto cls = side.classes(r);
    for (std::size_t i = 0; i < r; ++i)
        if (cls[i].empty())
            throw EmptyDegreeClass(std::string("degree class ") + std::to_string(i + 1) + " of " + name + " is empty");
}

} // namespace

Multigrading validate_multigrading(const GradedConfiguration& B, const GradedConfiguration& C,
                                   const PointConfiguration& A) {
    A.validate();
    const std::size_t r = A.size();
    if (r == 0) throw DependentDegrees("multigrading has no degrees");
    if (linalg::rank(A.points) != r)
        throw DependentDegrees("the " + std::to_string(r) + " degrees have rank " +
                               std::to_string(linalg::rank(A.points)));
    auto omega = linalg::solve(linalg::to_rational(A.points), RationalVector(r, Rational(1)), A.dim);
    if (!omega) throw NoOmega("no omega with omega . a^i = 1 for all i");

    require_nonempty_classes(B, r, "B");
    require_nonempty_classes(C, r, "C");

    Multigrading g;
    g.degrees = A;
    g.omega = std::move(*omega);
    g.assignmentB = B.assignment;
    g.assignmentC = C.assignment;
    g.degree_map_B = solve_degree_map(B, A, "B");
    g.degree_map_C = solve_degree_map(C, A, "C");
    return g;
}

TfpConfiguration tfp_configuration(const GradedConfiguration& B, const WeightVector& wB,
                                   const GradedConfiguration& C, const WeightVector& wC, const Multigrading& g) {
    if (B.assignment != g.assignmentB || C.assignment != g.assignmentC)
        throw SchemaError("graded configurations do not match the multigrading");
    if (wB.size() != B.config.size() || wC.size() != C.config.size())
        throw DimensionMismatch("weight count does not match point count");
    auto clsB = B.classes(g.size());
    auto clsC = C.classes(g.size());

    TfpConfiguration out;
    out.points.dim = B.config.dim + C.config.dim;
    RationalVector weights;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < clsB[i].size(); ++j) {
            for (std::size_t k = 0; k < clsC[i].size(); ++k) {
                std::size_t b = clsB[i][j], c = clsC[i][k];
                Point p = B.config.points[b];
                p.insert(p.end(), C.config.points[c].begin(), C.config.points[c].end());
                out.points.points.push_back(std::move(p));
                out.points.labels.push_back("z[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "][" +
                                            std::to_string(k + 1) + "]");
                weights.push_back(wB[b] * wC[c]);
                out.index.push_back(TfpIndex{i, j, k, b, c});
            }
        }
    }
    out.weights = WeightVector(std::move(weights));
    return out;
}

TfpConfiguration tfp_configuration(const BlendingSystem& sysB, const BlendingSystem& sysC, const Multigrading& g) {
    return tfp_configuration(GradedConfiguration(sysB.config, g.assignmentB), sysB.weights,
                             GradedConfiguration(sysC.config, g.assignmentC), sysC.weights, g);
}

RationalFunction class_sum(const BlendingSystem& sys, const std::vector<std::size_t>& assignment, std::size_t i) {
    if (assignment.size() != sys.functions.size()) throw DimensionMismatch("assignment length mismatch");
    RationalFunction sum = RationalFunction::constant(Rational(0), sys.variables);
    for (std::size_t p = 0; p < assignment.size(); ++p)
        if (assignment[p] == i) sum += sys.functions[p];
    return sum;
}

namespace {

std::string summarize(const PrecisionReport& r) {
    std::string out;
    auto add = [&](const char* name, const Check& c) {
        if (!c.ok) out += std::string(out.empty() ? "" : "; ") + name + ": " + c.witness;
    };
    add("partition of unity", r.partition_of_unity);
    add("toric membership", r.toric_membership);
    add("interior positivity", r.interior_positivity);
    add("linear precision", r.linear_precision);
    return out;
}

} // namespace

BlendingSystem tfp_blending(const BlendingSystem& sysB, const BlendingSystem& sysC, const Multigrading& g,
                            DenominatorForm form, bool check_factors) {
    if (sysB.functions.size() != g.assignmentB.size() || sysC.functions.size() != g.assignmentC.size())
        throw DimensionMismatch("factor systems do not match the multigrading");
    TfpConfiguration tfp = tfp_configuration(sysB, sysC, g);

    auto xv = numbered_variables("x", sysB.config.dim);
    auto yv = numbered_variables("y", sysC.config.dim);
    auto vars = xv;
    vars.insert(vars.end(), yv.begin(), yv.end());

    std::vector<RationalFunction> fB, fC;
    for (const auto& f : sysB.functions) fB.push_back(f.renamed(xv).with_variables(vars));
    for (const auto& f : sysC.functions) fC.push_back(f.renamed(yv).with_variables(vars));

    std::vector<RationalFunction> denominators;
    for (std::size_t i = 0; i < g.size(); ++i) {
        RationalFunction n = RationalFunction::constant(Rational(0), vars);
        const auto& assign = form == DenominatorForm::B ? g.assignmentB : g.assignmentC;
        const auto& fs = form == DenominatorForm::B ? fB : fC;
        for (std::size_t p = 0; p < assign.size(); ++p)
            if (assign[p] == i) n += fs[p];
        if (n.is_zero()) throw EmptyDegreeClass("degree class " + std::to_string(i + 1) + " sums to zero");
        denominators.push_back(std::move(n));
    }

    BlendingSystem out;
    out.config = tfp.points;
    out.weights = tfp.weights;
    out.kind = BlendingKind::Custom;
    out.variables = vars;
    for (const auto& idx : tfp.index) out.functions.push_back(fB[idx.b] * fC[idx.c] / denominators[idx.i]);
    out.validate();

    if (check_factors) {
        auto rb = verify_rational_linear_precision(sysB);
        if (!rb.all()) out.warnings.push_back("factor B fails rational linear precision: " + summarize(rb));
        auto rc = verify_rational_linear_precision(sysC);
        if (!rc.all()) out.warnings.push_back("factor C fails rational linear precision: " + summarize(rc));
    }
    return out;
}

FaceCertificate graded_face(const GradedConfiguration& B, const LatticePolytope& poly, std::size_t i) {
    std::size_t r = 1 + *std::max_element(B.assignment.begin(), B.assignment.end());
    if (i >= r) throw EmptyDegreeClass("degree class " + std::to_string(i + 1) + " does not exist");
    auto cls = B.classes(r)[i];
    if (cls.empty()) throw EmptyDegreeClass("degree class " + std::to_string(i + 1) + " is empty");

    FaceCertificate cert;
    cert.point_indices = cls;
    cert.points.dim = B.config.dim;
    for (auto p : cls) cert.points.points.push_back(B.config.points[p]);
    for (std::size_t f = 0; f < poly.facets.size(); ++f) {
        bool tight = std::all_of(cls.begin(), cls.end(),
                                 [&](std::size_t p) { return poly.facets[f].distance(B.config.points[p]) == 0; });
        if (tight) cert.facets.push_back(f);
    }
    for (std::size_t p = 0; p < B.config.size(); ++p) {
        bool on_face = std::all_of(cert.facets.begin(), cert.facets.end(),
                                   [&](std::size_t f) { return poly.facets[f].distance(B.config.points[p]) == 0; });
        bool in_class = B.assignment[p] == i;
        if (on_face != in_class)
            throw NotAFace("degree class " + std::to_string(i + 1) + " is not cut out by a face: point " +
                           format_point(B.config.points[p]) + (in_class ? " lies off" : " also lies on") +
                           " the smallest face containing the class");
    }
    return cert;
}

Check verify_face_partition(const BlendingSystem& sys, const GradedConfiguration& B, const LatticePolytope& poly,
                            std::size_t i, std::size_t samples, std::uint64_t seed) {
    FaceCertificate cert = graded_face(B, poly, i);
    RationalFunction sum = class_sum(sys, B.assignment, i);
    for (const auto& p : sample_interior(cert.points, samples, seed)) {
        Rational v;
        try {
            v = sum.eval(p);
        } catch (const PoleError&) {
            return Check::fail("class sum has a pole at " + format_point(p));
        }
        if (v != 1) return Check::fail("class sum is " + to_string(v) + " at " + format_point(p));
    }
    return Check::pass();
}

Check verify_form_agreement(const BlendingSystem& sysB, const BlendingSystem& sysC, const Multigrading& g,
                            std::size_t samples, std::uint64_t seed) {
    auto formB = tfp_blending(sysB, sysC, g, DenominatorForm::B, false);
    auto formC = tfp_blending(sysB, sysC, g, DenominatorForm::C, false);
    for (const auto& p : sample_interior(formB.config, samples, seed)) {
        for (std::size_t f = 0; f < formB.functions.size(); ++f) {
            Rational vb, vc;
            try {
                vb = formB.functions[f].eval(p);
                vc = formC.functions[f].eval(p);
            } catch (const PoleError&) {
                return Check::fail("pole at interior point " + format_point(p) + " in " + formB.config.label(f));
            }
            if (vb != vc)
                return Check::fail(formB.config.label(f) + " forms differ at " + format_point(p) + ": " +
                                   to_string(vb) + " vs " + to_string(vc));
        }
    }
    return Check::pass();
}

} // namespace toric
