#include "toric/cli.hpp"

#include "toric/errors.hpp"
#include "toric/io.hpp"
#include "toric/mle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace toric::cli {

using io::json;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::ostringstream text;
    json doc = json::object();
    bool ok = true;
};

void require_inputs(const Command& cmd, std::size_t lo, std::size_t hi) {
    if (cmd.inputs.size() < lo || cmd.inputs.size() > hi) {
        std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
        throw SchemaError(cmd.verb + " expects " + want + " input file(s), got " + std::to_string(cmd.inputs.size()));
    }
}

std::string join(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

std::string join(const std::vector<double>& v) {
    std::ostringstream os;
    os << std::setprecision(12) << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

std::string status(const Check& c) { return c.ok ? "PASS" : "FAIL (" + c.witness + ")"; }

RationalVector parse_point(const std::string& text) {
    RationalVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw SchemaError("--at: empty coordinate");
        try {
            out.push_back(parse_rational(item.substr(b, e - b + 1)));
        } catch (const ParseError& err) {
            throw SchemaError(std::string("--at: ") + err.what());
        }
    }
    return out;
}

io::Model load_graded(const std::string& path) {
    auto m = io::parse_model_file(path);
    if (!m.graded) throw SchemaError(path + ": expected a graded model (missing \"grading\")");
    return m;
}

HornPair load_horn(const std::string& path) {
    auto m = io::parse_model_file(path);
    if (!m.horn) throw SchemaError(path + ": expected a Horn pair (missing \"H\")");
    return *m.horn;
}

// Blending system and multigrading of the fiber product of two graded models.
struct Product {
    BlendingSystem sysB, sysC, sys;
    Multigrading g;
    TfpConfiguration tfp;
};

Product fiber_product(const Command& cmd) {
    auto B = load_graded(cmd.inputs[0]);
    auto C = load_graded(cmd.inputs[1]);
    if (B.degrees->points != C.degrees->points)
        throw SchemaError("the two models use different multigradings A");
    Product p;
    p.g = validate_multigrading(*B.graded, *C.graded, *B.degrees);
    p.sysB = B.blending();
    p.sysC = C.blending();
    p.sys = tfp_blending(p.sysB, p.sysC, p.g, cmd.form);
    p.tfp = tfp_configuration(p.sysB, p.sysC, p.g);
    return p;
}

void print_matrix(std::ostream& os, const HornPair& pair) {
    const auto& H = pair.H;
    std::size_t width = 2;
    for (const auto& row : H.entries())
        for (long long v : row) width = std::max(width, std::to_string(v).size());
    for (const auto& l : pair.column_labels) width = std::max(width, l.size());
    for (const auto& l : pair.lambda) width = std::max(width, to_string(l).size());
    const std::size_t w = width + 1;
    if (!pair.column_labels.empty()) {
        os << std::string(7, ' ');
        for (const auto& l : pair.column_labels) os << std::setw(static_cast<int>(w)) << l;
        os << "\n";
    }
    for (std::size_t r = 0; r < H.rows(); ++r) {
        os << std::left << std::setw(7) << ("r" + std::to_string(r + 1)) << std::right;
        for (long long v : H.entries()[r]) os << std::setw(static_cast<int>(w)) << v;
        os << "\n";
    }
    os << std::left << std::setw(7) << "lambda" << std::right;
    for (const auto& l : pair.lambda) os << std::setw(static_cast<int>(w)) << to_string(l);
    os << "\n";
}

void report_horn(Output& out, const HornReport& r) {
    out.text << "sums to one: " << (r.sums_to_one ? "PASS" : "FAIL") << (r.symbolic_checked ? " (symbolic)" : "")
             << "\npositive: " << (r.positive ? "PASS" : "FAIL") << "\n";
    if (!r.ok()) out.text << "witness: " << r.witness << "\n";
    out.doc["validation"] = json{{"sums_to_one", r.sums_to_one},
                                 {"positive", r.positive},
                                 {"symbolic", r.symbolic_checked}};
    if (!r.ok()) out.doc["validation"]["witness"] = r.witness;
    out.ok = out.ok && r.ok();
}

void cmd_facets(const Command& cmd, Output& out) {
    require_inputs(cmd, 1, 1);
    auto m = io::parse_model_file(cmd.inputs[0]);
    auto poly = convex_hull_facets(m.config);
    auto forms = lattice_distance_forms(poly);
    out.text << "facets (" << poly.facets.size() << "):\n";
    for (const auto& f : forms) out.text << "  " << f.to_string() << " >= 0\n";
    out.text << "vertices (" << poly.vertices.size() << "):";
    for (const auto& v : poly.vertices) out.text << " " << format_point(v);
    out.text << "\n";
    out.doc = io::to_json(poly);
}

void print_functions(std::ostream& os, const BlendingSystem& sys) {
    for (std::size_t b = 0; b < sys.functions.size(); ++b)
        os << "  " << sys.config.label(b) << ": " << sys.functions[b].to_string() << "\n";
}

void cmd_blend(const Command& cmd, Output& out) {
    require_inputs(cmd, 1, 1);
    auto sys = io::parse_model_file(cmd.inputs[0]).blending();
    out.text << (sys.kind == BlendingKind::Toric ? "toric" : "custom") << " blending functions ("
             << sys.functions.size() << "):\n";
    print_functions(out.text, sys);
    out.doc = io::to_json(sys);
}

void cmd_verify(const Command& cmd, Output& out) {
    require_inputs(cmd, 1, 1);
    auto sys = io::parse_model_file(cmd.inputs[0]).blending();
    CheckOptions opts;
    opts.samples = cmd.samples;
    opts.seed = cmd.seed;
    auto r = verify_rational_linear_precision(sys, opts);
    out.text << "1. partition of unity: " << status(r.partition_of_unity) << "\n"
             << "2. toric membership: " << status(r.toric_membership) << "\n"
             << "3. interior positivity: " << status(r.interior_positivity) << "\n"
             << "4. linear precision: " << status(r.linear_precision) << "\n"
             << "rational linear precision: " << (r.all() ? "yes" : "no") << "\n";
    out.doc = io::to_json(r);
    out.ok = r.all();
}

void cmd_tfp(const Command& cmd, Output& out) {
    require_inputs(cmd, 2, 2);
    auto p = fiber_product(cmd);
    auto pu = verify_partition_of_unity(p.sys);
    auto lp = verify_linear_precision(p.sys);
    auto agree = verify_form_agreement(p.sysB, p.sysC, p.g, cmd.samples, cmd.seed);
    out.text << "fiber product with " << p.tfp.points.size() << " points, "
             << (cmd.form == DenominatorForm::B ? "B" : "C") << "-denominator form\n";
    for (std::size_t n = 0; n < p.tfp.points.size(); ++n)
        out.text << "  " << p.tfp.points.label(n) << " = " << format_point(p.tfp.points.points[n])
                 << "  weight " << to_string(p.tfp.weights[n]) << "\n      " << p.sys.functions[n].to_string()
                 << "\n";
    for (const auto& w : p.sys.warnings) out.text << "warning: " << w << "\n";
    out.text << "partition of unity: " << status(pu) << "\nlinear precision: " << status(lp)
             << "\ndenominator forms agree on samples: " << status(agree) << "\n";
    out.doc = io::to_json(p.sys);
    out.doc["checks"] = json{{"partition_of_unity", io::to_json(pu)},
                             {"linear_precision", io::to_json(lp)},
                             {"form_agreement", io::to_json(agree)}};
    out.ok = pu.ok && lp.ok && agree.ok;
}

void cmd_horn_tfp(const Command& cmd, Output& out) {
    require_inputs(cmd, 3, 3);
    auto pb = load_horn(cmd.inputs[0]);
    auto pc = load_horn(cmd.inputs[1]);
    auto grading = io::parse_grading_file(cmd.inputs[2]);
    auto pair = tfp_horn_pair(pb, pc, grading.degrees.size(), grading.block_b, grading.block_c);
    out.text << "Horn matrix (" << pair.H.rows() << " x " << pair.H.cols() << "), columns (i,j,k):\n";
    print_matrix(out.text, pair);
    out.doc = io::to_json(pair);
    report_horn(out, validate_horn_pair(pair, cmd.samples, cmd.seed));
}

void cmd_horn_validate(const Command& cmd, Output& out) {
    require_inputs(cmd, 1, 1);
    auto pair = load_horn(cmd.inputs[0]);
    report_horn(out, validate_horn_pair(pair, cmd.samples, cmd.seed));
}

void cmd_horn_minimize(const Command& cmd, Output& out) {
    require_inputs(cmd, 1, 1);
    auto pair = load_horn(cmd.inputs[0]);
    auto r = minimize_horn_pair(pair);
    out.text << "rows: " << pair.H.rows() << " -> " << r.pair.H.rows() << "\n";
    for (const auto& n : r.notes) out.text << "  " << n << "\n";
    print_matrix(out.text, r.pair);
    out.doc = io::to_json(r.pair);
    out.doc["notes"] = r.notes;
}

struct Fitted {
    BlendingSystem sys;
    WeightVector weights;
    DataVector u;
    Distribution exact;
    std::optional<Product> product;
};

Fitted fit(const Command& cmd) {
    require_inputs(cmd, 1, 2);
    if (cmd.data.empty()) throw SchemaError(cmd.verb + " requires --data");
    Fitted f;
    if (cmd.inputs.size() == 2) {
        f.product = fiber_product(cmd);
        f.sys = f.product->sys;
        f.weights = f.product->tfp.weights;
    } else {
        auto m = io::parse_model_file(cmd.inputs[0]);
        f.sys = m.blending();
        f.weights = m.weights;
    }
    std::vector<std::string> labels;
    for (std::size_t b = 0; b < f.sys.config.size(); ++b) labels.push_back(f.sys.config.label(b));
    f.u = io::parse_data(cmd.data, labels);
    if (f.u.size() != f.sys.config.size())
        throw SchemaError("--data has " + std::to_string(f.u.size()) + " counts for " +
                          std::to_string(f.sys.config.size()) + " points");
    return f;
}

void cmd_mle(const Command& cmd, Output& out) {
    auto f = fit(cmd);
    f.exact = mle_closed_form(f.sys, f.u);
    auto dm = design_matrix(f.sys.config);
    auto birch = birch_residual(dm, f.u, f.exact);
    bool birch_ok = std::all_of(birch.begin(), birch.end(), [](const Rational& r) { return r == 0; });
    auto ips = ips_fit(dm, f.weights, f.u, cmd.tol, cmd.max_iter);
    double dev = 0;
    for (std::size_t b = 0; b < ips.probs.size(); ++b)
        dev = std::max(dev, std::abs(ips.probs[b] - f.exact.probs[b].get_d()));
    bool ips_ok = dev < 1e-8;

    out.text << "data point: " << format_point(data_point(f.sys.config, f.u)) << "\n"
             << "exact MLE: " << join(f.exact.probs) << "\n"
             << "Birch residual: " << join(birch) << (birch_ok ? " (zero)" : " (NONZERO)") << "\n"
             << "IPS: " << join(ips.probs) << " after " << ips.iterations << " sweeps, max deviation " << dev
             << (ips_ok ? " (agrees)" : " (DISAGREES)") << "\n";
    out.doc["exact"] = io::to_json(f.exact.probs);
    out.doc["float"] = f.exact.to_double();
    out.doc["birch_residual"] = io::to_json(birch);
    out.doc["iterations"] = ips.iterations;
    out.doc["ips"] = ips.probs;
    out.doc["ips_max_deviation"] = dev;
    out.ok = birch_ok && ips_ok;

    if (f.product) {
        auto& p = *f.product;
        auto m = marginalize(p.g, f.u);
        auto combined = tfp_mle_combine(mle_closed_form(p.sysB, m.B), mle_closed_form(p.sysC, m.C), p.g, f.u);
        bool same = combined.probs == f.exact.probs;
        out.text << "product formula: " << (same ? "agrees" : "DISAGREES") << "\n";
        out.doc["product_formula_agrees"] = same;
        out.ok = out.ok && same;
    }
    if (!cmd.horn.empty()) {
        auto pair = load_horn(cmd.horn);
        if (!pair.column_labels.empty()) {
            std::vector<std::string> labels;
            for (std::size_t b = 0; b < f.sys.config.size(); ++b) labels.push_back(f.sys.config.label(b));
            pair = align_columns(pair, labels);
        }
        RationalVector u;
        for (long long c : f.u.counts) u.emplace_back(static_cast<long>(c));
        bool same = horn_parametrize(pair, u) == f.exact.probs;
        out.text << "Horn parametrization: " << (same ? "agrees" : "DISAGREES") << "\n";
        out.doc["horn_agrees"] = same;
        out.ok = out.ok && same;
    }
}

void cmd_ips(const Command& cmd, Output& out) {
    auto f = fit(cmd);
    auto ips = ips_fit(design_matrix(f.sys.config), f.weights, f.u, cmd.tol, cmd.max_iter);
    out.text << "IPS: " << join(ips.probs) << "\nsweeps: " << ips.iterations << "\nresidual: " << ips.residual
             << "\nlog-likelihood: " << log_likelihood(f.u, ips.probs) << "\n";
    out.doc["float"] = ips.probs;
    out.doc["iterations"] = ips.iterations;
    out.doc["residual"] = ips.residual;
}

void cmd_patch(const Command& cmd, Output& out) {
    require_inputs(cmd, 1, 1);
    if (cmd.at.empty()) throw SchemaError("patch requires --at");
    auto sys = io::parse_model_file(cmd.inputs[0]).blending();
    auto p = parse_point(cmd.at);
    std::vector<RationalPoint> control;
    if (cmd.control.empty()) {
        for (const auto& b : sys.config.points) control.push_back(to_rational_point(b));
    } else {
        std::ifstream in(io::resolve_path(cmd.control));
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw SchemaError(cmd.control + ": invalid JSON: " + e.what());
        }
        if (!j.is_array()) throw SchemaError(cmd.control + ": expected an array of control points");
        for (const auto& pt : j) {
            RationalPoint q;
            if (!pt.is_array()) throw SchemaError(cmd.control + ": control points must be arrays");
            for (const auto& x : pt) {
                if (x.is_number_integer())
                    q.emplace_back(static_cast<long>(x.get<long long>()));
                else if (x.is_string())
                    q.push_back(parse_rational(x.get<std::string>()));
                else
                    throw SchemaError(cmd.control + ": coordinates must be integers or rational strings");
            }
            control.push_back(q);
        }
    }
    auto value = toric_patch_eval(sys, control, p);
    out.text << "F" << format_point(p) << " = " << format_point(value) << "\n";
    out.doc["point"] = io::to_json(p);
    out.doc["value"] = io::to_json(value);
}

} // namespace

Result run_command(const Command& cmd) {
    Output out;
    Result res;
    try {
        if (cmd.verb == "facets") cmd_facets(cmd, out);
        else if (cmd.verb == "blend") cmd_blend(cmd, out);
        else if (cmd.verb == "verify") cmd_verify(cmd, out);
        else if (cmd.verb == "tfp") cmd_tfp(cmd, out);
        else if (cmd.verb == "horn-tfp") cmd_horn_tfp(cmd, out);
        else if (cmd.verb == "horn-validate") cmd_horn_validate(cmd, out);
        else if (cmd.verb == "horn-minimize") cmd_horn_minimize(cmd, out);
        else if (cmd.verb == "mle") cmd_mle(cmd, out);
        else if (cmd.verb == "ips") cmd_ips(cmd, out);
        else if (cmd.verb == "patch") cmd_patch(cmd, out);
        else throw SchemaError("unknown command \"" + cmd.verb + "\"");
    } catch (const NotConverged& e) {
        res.exit_code = 1;
        res.error = e.what();
        return res;
    } catch (const Error& e) {
        res.exit_code = 2;
        res.error = e.what();
        return res;
    }
    res.exit_code = out.ok ? 0 : 1;
    if (cmd.json) {
        out.doc["ok"] = out.ok;
        res.output = out.doc.dump(2) + "\n";
    } else {
        res.output = out.text.str();
    }
    return res;
}

} // namespace toric::cli
