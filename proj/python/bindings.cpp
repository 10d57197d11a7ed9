#include "toric/cli.hpp"
#include "toric/errors.hpp"
#include "toric/horn.hpp"
#include "toric/io.hpp"
#include "toric/mle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace toric;

namespace {

using IntMatrix = std::vector<std::vector<long long>>;

// Accepts int, str "p/q" or fractions.Fraction.
RationalVector rationals(const py::sequence& xs) {
    RationalVector out;
    for (auto x : xs) out.push_back(parse_rational(py::str(x).cast<std::string>()));
    return out;
}

std::vector<std::string> strings(const RationalVector& v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

PointConfiguration config_of(const IntMatrix& points) {
    if (points.empty()) throw DimensionMismatch("no points");
    return PointConfiguration(points.front().size(), points);
}

WeightVector weights_of(const std::optional<py::sequence>& w, std::size_t n) {
    return w ? WeightVector(rationals(*w)) : WeightVector::ones(n);
}

HornPair pair_of(const IntMatrix& H, const py::sequence& lambda) {
    HornPair p;
    p.H = HornMatrix(H);
    p.lambda = rationals(lambda);
    return p;
}

py::tuple tuple_of(const HornPair& p) { return py::make_tuple(p.H.entries(), strings(p.lambda)); }

} // namespace

PYBIND11_MODULE(_toric_precision, m) {
    m.doc() = "Exact rational linear precision, toric fiber products and closed-form MLEs";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "ToricError", PyExc_ValueError);

    m.def("facets", [](const IntMatrix& points) {
        auto poly = convex_hull_facets(config_of(points));
        std::vector<std::pair<std::vector<long long>, long long>> facets;
        for (const auto& f : poly.facets) facets.emplace_back(f.normal, f.offset);
        return py::make_tuple(facets, poly.vertices);
    }, py::arg("points"), "Facets (normal, offset) and vertices of the convex hull.");

    m.def("toric_blending", [](const IntMatrix& points, std::optional<py::sequence> weights) {
        auto c = config_of(points);
        auto sys = toric_blending(convex_hull_facets(c), c, weights_of(weights, c.size()));
        std::vector<std::string> out;
        for (const auto& f : sys.functions) out.push_back(f.to_string());
        return out;
    }, py::arg("points"), py::arg("weights") = py::none(), "Toric blending functions as strings.");

    m.def("verify", [](const std::string& path, std::size_t samples, std::uint64_t seed) {
        auto sys = io::parse_model_file(path).blending();
        CheckOptions opts;
        opts.samples = samples;
        opts.seed = seed;
        auto r = verify_rational_linear_precision(sys, opts);
        py::dict d;
        d["partition_of_unity"] = r.partition_of_unity.ok;
        d["toric_membership"] = r.toric_membership.ok;
        d["interior_positivity"] = r.interior_positivity.ok;
        d["linear_precision"] = r.linear_precision.ok;
        return d;
    }, py::arg("path"), py::arg("samples") = 50, py::arg("seed") = 0,
       "The four rational-linear-precision conditions for a model file.");

    m.def("horn_parametrize", [](const IntMatrix& H, const py::sequence& lambda, const py::sequence& u) {
        auto uu = rationals(u);
        return strings(horn_parametrize(pair_of(H, lambda), uu));
    }, py::arg("H"), py::arg("lam"), py::arg("u"));

    m.def("validate_horn_pair", [](const IntMatrix& H, const py::sequence& lambda, std::size_t trials,
                                   std::uint64_t seed) {
        auto r = validate_horn_pair(pair_of(H, lambda), trials, seed);
        py::dict d;
        d["sums_to_one"] = r.sums_to_one;
        d["positive"] = r.positive;
        d["witness"] = r.witness;
        return d;
    }, py::arg("H"), py::arg("lam"), py::arg("trials") = 100, py::arg("seed") = 0);

    m.def("simplex_horn_pair", [](std::size_t n) { return tuple_of(simplex_horn_pair(n)); }, py::arg("m"));

    m.def("tfp_horn_pair", [](const IntMatrix& HB, const py::sequence& lB, const IntMatrix& HC,
                              const py::sequence& lC, std::size_t classes, const std::vector<std::size_t>& block_b,
                              const std::vector<std::size_t>& block_c) {
        return tuple_of(tfp_horn_pair(pair_of(HB, lB), pair_of(HC, lC), classes, block_b, block_c));
    }, py::arg("HB"), py::arg("lamB"), py::arg("HC"), py::arg("lamC"), py::arg("num_classes"),
       py::arg("block_b"), py::arg("block_c"), "Block indices are 0-based.");

    m.def("minimize_horn_pair", [](const IntMatrix& H, const py::sequence& lambda) {
        return tuple_of(minimize_horn_pair(pair_of(H, lambda)).pair);
    }, py::arg("H"), py::arg("lam"));

    m.def("mle_closed_form", [](const std::string& path, const std::vector<long long>& counts) {
        auto sys = io::parse_model_file(path).blending();
        return strings(mle_closed_form(sys, DataVector(counts)).probs);
    }, py::arg("path"), py::arg("counts"), "Exact MLE of a model file's blending system.");

    m.def("ips_fit", [](const IntMatrix& points, const std::vector<long long>& counts,
                        std::optional<py::sequence> weights, double tol, std::size_t max_iter) {
        auto c = config_of(points);
        auto r = ips_fit(design_matrix(c), weights_of(weights, c.size()), DataVector(counts), tol, max_iter);
        return py::make_tuple(r.probs, r.iterations);
    }, py::arg("points"), py::arg("counts"), py::arg("weights") = py::none(), py::arg("tol") = 1e-10,
       py::arg("max_iter") = 10000);

    m.def("run", [](const std::string& verb, const std::vector<std::string>& inputs, const std::string& data,
                    const std::string& horn, std::size_t samples, std::uint64_t seed, const std::string& form,
                    bool json) {
        cli::Command cmd;
        cmd.verb = verb;
        cmd.inputs = inputs;
        cmd.data = data;
        cmd.horn = horn;
        cmd.samples = samples;
        cmd.seed = seed;
        cmd.form = form == "C" ? DenominatorForm::C : DenominatorForm::B;
        cmd.json = json;
        auto r = cli::run_command(cmd);
        return py::make_tuple(r.exit_code, r.output, r.error);
    }, py::arg("verb"), py::arg("inputs"), py::arg("data") = "", py::arg("horn") = "", py::arg("samples") = 50,
       py::arg("seed") = 0, py::arg("form") = "B", py::arg("json") = false,
       "Runs a command-line verb; returns (exit_code, output, error).");
}
