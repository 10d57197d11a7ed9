#include "toric/io.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace toric::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) { throw SchemaError(path + ": " + what); }

const json& field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) schema(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) schema(path, std::string("missing field \"") + key + "\"");
    return *it;
}

const json* optional_field(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
}

long long integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema(path, "expected an integer");
    return j.get<long long>();
}

std::vector<long long> int_vector(const json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of integers");
    std::vector<long long> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::vector<long long>> int_matrix(const json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of integer arrays");
    std::vector<std::vector<long long>> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_vector(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::string> strings(const json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) schema(path + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

Rational rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    if (!j.is_string()) schema(path, "expected a rational written as a string \"p/q\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        schema(path, e.what());
    }
}

RationalVector rational_vector(const json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of rationals");
    RationalVector out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::size_t> class_indices(const json& j, std::size_t r, const std::string& path) {
    auto raw = int_vector(j, path);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 1 || static_cast<std::size_t>(raw[i]) > r)
            schema(path + "[" + std::to_string(i) + "]",
                   "degree index must be between 1 and " + std::to_string(r));
        out.push_back(static_cast<std::size_t>(raw[i] - 1));
    }
    return out;
}

PointConfiguration configuration(const json& j, const std::string& path) {
    auto points = int_matrix(field(j, "points", path), path + ".points");
    if (points.empty()) schema(path + ".points", "configuration has no points");
    std::size_t dim = points.front().size();
    if (auto* d = optional_field(j, "dim")) {
        long long v = integer(*d, path + ".dim");
        if (v < 1) schema(path + ".dim", "dimension must be positive");
        dim = static_cast<std::size_t>(v);
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].size() != dim)
            schema(path + ".points[" + std::to_string(i) + "]",
                   "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(points[i].size()));
    std::vector<std::string> labels;
    if (auto* l = optional_field(j, "labels")) labels = strings(*l, path + ".labels");
    try {
        return PointConfiguration(dim, std::move(points), std::move(labels));
    } catch (const Error& e) {
        schema(path, e.what());
    }
}

WeightVector weights(const json& j, std::size_t n, const std::string& path) {
    auto w = rational_vector(j, path);
    if (w.size() != n) schema(path, "expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] <= 0) schema(path + "[" + std::to_string(i) + "]", "weights must be positive, got " + to_string(w[i]));
    return WeightVector(std::move(w));
}

Polynomial polynomial(const json& j, const std::vector<std::string>& vars, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_polynomial(j.get<std::string>(), vars);
        } catch (const ParseError& e) {
            schema(path, e.what());
        }
    }
    if (j.is_number_integer()) return Polynomial::constant(rational(j, path), vars);
    if (!j.is_array()) schema(path, "expected a polynomial expression string or a list of [coefficient, exponents]");
    Polynomial::Terms terms;
    for (std::size_t t = 0; t < j.size(); ++t) {
        std::string tp = path + "[" + std::to_string(t) + "]";
        if (!j[t].is_array() || j[t].size() != 2) schema(tp, "expected [coefficient, exponents]");
        Rational c = rational(j[t][0], tp + "[0]");
        auto e = int_vector(j[t][1], tp + "[1]");
        if (e.size() != vars.size())
            schema(tp + "[1]", "expected " + std::to_string(vars.size()) + " exponents, got " + std::to_string(e.size()));
        Exponent ex;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 0) schema(tp + "[1][" + std::to_string(k) + "]", "exponents must be nonnegative");
            ex.push_back(static_cast<std::uint32_t>(e[k]));
        }
        terms[ex] += c;
    }
    return Polynomial(vars, std::move(terms));
}

BlendingSystem blending_system(const json& doc, const PointConfiguration& config, const WeightVector& w,
                               const std::string& path) {
    std::vector<std::string> vars = numbered_variables("x", config.dim);
    if (auto* v = optional_field(doc, "variables")) {
        vars = strings(*v, path + ".variables");
        if (vars.size() != config.dim)
            schema(path + ".variables", "expected " + std::to_string(config.dim) + " variable names");
    }
    BlendingKind kind = BlendingKind::Custom;
    if (auto* k = optional_field(doc, "kind")) {
        if (*k == "toric")
            kind = BlendingKind::Toric;
        else if (*k != "custom")
            schema(path + ".kind", "expected \"toric\" or \"custom\"");
    }
    const json* fns = optional_field(doc, "functions");
    if (!fns) {
        if (kind != BlendingKind::Toric) schema(path, "custom blending system without \"functions\"");
        try {
            return toric_blending(convex_hull_facets(config), config, w, vars);
        } catch (const Error& e) {
            schema(path, e.what());
        }
    }
    if (!fns->is_array() || fns->size() != config.size())
        schema(path + ".functions", "expected one function per point (" + std::to_string(config.size()) + ")");
    BlendingSystem sys;
    sys.config = config;
    sys.weights = w;
    sys.kind = kind;
    sys.variables = vars;
    for (std::size_t b = 0; b < fns->size(); ++b) {
        std::string fp = path + ".functions[" + std::to_string(b) + "]";
        const json& f = (*fns)[b];
        Polynomial num = polynomial(f.is_object() ? field(f, "num", fp) : f, vars, fp + (f.is_object() ? ".num" : ""));
        Polynomial den = Polynomial::constant(Rational(1), vars);
        if (f.is_object())
            if (auto* d = optional_field(f, "den")) den = polynomial(*d, vars, fp + ".den");
        if (den.is_zero()) schema(fp + ".den", "denominator is zero");
        sys.functions.emplace_back(num, den);
    }
    sys.validate();
    return sys;
}

HornPair horn_pair(const json& doc, const std::string& path) {
    HornPair p;
    try {
        p.H = HornMatrix(int_matrix(field(doc, "H", path), path + ".H"));
    } catch (const InvalidHornMatrix& e) {
        schema(path + ".H", e.what());
    }
    p.lambda = rational_vector(field(doc, "lambda", path), path + ".lambda");
    if (auto* l = optional_field(doc, "column_labels")) p.column_labels = strings(*l, path + ".column_labels");
    try {
        p.validate();
    } catch (const InvalidHornMatrix& e) {
        schema(path, e.what());
    }
    return p;
}

json read_json(const std::string& path) {
    auto resolved = resolve_path(path);
    std::ifstream in(resolved);
    if (!in) throw IoError("cannot open " + resolved);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(resolved + ": invalid JSON: " + e.what());
    }
}

} // namespace

BlendingSystem Model::blending() const {
    if (system) return *system;
    return toric_blending(convex_hull_facets(config), config, weights);
}

std::string resolve_path(const std::string& path) {
    if (fs::exists(path)) return path;
    if (const char* dir = std::getenv("TORIC_PRECISION_FIXTURES"); dir && *dir) {
        fs::path p(path);
        for (const fs::path& candidate : {fs::path(dir) / p, fs::path(dir) / p.filename()})
            if (fs::exists(candidate)) return candidate.string();
    }
    throw IoError("no such file: " + path);
}

Model parse_model(const json& doc, const std::string& origin) {
    const std::string root = origin + ":$";
    if (!doc.is_object()) schema(root, "expected an object");
    Model m;
    m.origin = origin;
    if (doc.contains("H")) {
        m.kind = ModelKind::Horn;
        m.horn = horn_pair(doc, root);
        return m;
    }
    if (auto* c = optional_field(doc, "config"))
        m.config = configuration(*c, root + ".config");
    else
        m.config = configuration(doc, root);
    if (auto* w = optional_field(doc, "weights"))
        m.weights = weights(*w, m.config.size(), root + ".weights");
    else
        m.weights = WeightVector::ones(m.config.size());

    if (auto* g = optional_field(doc, "grading")) {
        m.kind = ModelKind::Graded;
        auto A = int_matrix(field(*g, "A", root + ".grading"), root + ".grading.A");
        if (A.empty()) schema(root + ".grading.A", "at least one degree is required");
        try {
            m.degrees = PointConfiguration(A.front().size(), A);
        } catch (const Error& e) {
            schema(root + ".grading.A", e.what());
        }
        auto assignment = class_indices(field(*g, "assignment", root + ".grading"), A.size(), root + ".grading.assignment");
        if (assignment.size() != m.config.size())
            schema(root + ".grading.assignment", "expected one degree index per point");
        m.graded = GradedConfiguration(m.config, std::move(assignment));
    }
    if (doc.contains("functions") || doc.contains("kind")) {
        if (m.kind != ModelKind::Graded) m.kind = ModelKind::Blending;
        m.system = blending_system(doc, m.config, m.weights, root);
    }
    return m;
}

Model parse_model_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(origin + ": invalid JSON: " + e.what());
    }
    return parse_model(doc, origin);
}

Model parse_model_file(const std::string& path) { return parse_model(read_json(path), path); }

HornGrading parse_grading(const json& doc, const std::string& origin) {
    const std::string root = origin + ":$";
    HornGrading g;
    auto A = int_matrix(field(doc, "A", root), root + ".A");
    if (A.empty()) schema(root + ".A", "at least one degree is required");
    try {
        g.degrees = PointConfiguration(A.front().size(), A);
    } catch (const Error& e) {
        schema(root + ".A", e.what());
    }
    g.block_b = class_indices(field(doc, "blockB", root), A.size(), root + ".blockB");
    g.block_c = class_indices(field(doc, "blockC", root), A.size(), root + ".blockC");
    return g;
}

HornGrading parse_grading_file(const std::string& path) { return parse_grading(read_json(path), path); }

DataVector parse_data(const std::string& text, const std::vector<std::string>& labels) {
    std::vector<long long> counts;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw SchemaError("--data: empty data vector");
    try {
        if (text[first] == '[' || text[first] == '{') {
            json j = json::parse(text);
            if (j.is_array()) {
                counts = int_vector(j, "--data");
            } else {
                if (labels.empty()) throw SchemaError("--data: keyed data needs a labelled model");
                counts.assign(labels.size(), 0);
                for (auto& [key, value] : j.items()) {
                    auto it = std::find(labels.begin(), labels.end(), key);
                    if (it == labels.end()) throw SchemaError("--data: unknown label \"" + key + "\"");
                    counts[static_cast<std::size_t>(it - labels.begin())] = integer(value, "--data." + key);
                }
            }
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::size_t used = 0;
                long long v = std::stoll(item, &used);
                if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
                counts.push_back(v);
            }
        }
        return DataVector(std::move(counts));
    } catch (const json::exception& e) {
        throw SchemaError(std::string("--data: ") + e.what());
    } catch (const std::logic_error& e) {
        throw SchemaError(std::string("--data: not an integer list: ") + e.what());
    } catch (const DomainError& e) {
        throw SchemaError(std::string("--data: ") + e.what());
    }
}

json to_json(const Rational& r) { return to_string(r); }

json to_json(const RationalVector& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

json to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(json::array({to_string(c), e}));
    return out;
}

json to_json(const RationalFunction& f) {
    return json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}, {"text", f.to_string()}};
}

json to_json(const PointConfiguration& c) {
    json out{{"dim", c.dim}, {"points", c.points}};
    if (!c.labels.empty()) out["labels"] = c.labels;
    return out;
}

json to_json(const LatticePolytope& poly) {
    json facets = json::array();
    for (const auto& f : poly.facets) facets.push_back(json{{"normal", f.normal}, {"offset", f.offset}});
    return json{{"facets", facets}, {"vertices", poly.vertices}};
}

json to_json(const BlendingSystem& sys) {
    json fns = json::array();
    for (const auto& f : sys.functions) fns.push_back(to_json(f));
    json out{{"config", to_json(sys.config)},
             {"weights", to_json(sys.weights.values())},
             {"kind", sys.kind == BlendingKind::Toric ? "toric" : "custom"},
             {"variables", sys.variables},
             {"functions", fns}};
    if (!sys.warnings.empty()) out["warnings"] = sys.warnings;
    return out;
}

json to_json(const HornPair& pair) {
    json out{{"H", pair.H.entries()}, {"lambda", to_json(pair.lambda)}};
    if (!pair.column_labels.empty()) out["column_labels"] = pair.column_labels;
    return out;
}

json to_json(const Check& check) {
    json out{{"ok", check.ok}};
    if (!check.ok) out["witness"] = check.witness;
    return out;
}

json to_json(const PrecisionReport& r) {
    return json{{"partition_of_unity", to_json(r.partition_of_unity)},
                {"toric_membership", to_json(r.toric_membership)},
                {"interior_positivity", to_json(r.interior_positivity)},
                {"linear_precision", to_json(r.linear_precision)},
                {"all", r.all()}};
}

} // namespace toric::io
