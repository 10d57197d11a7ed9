#pragma once

// JSON model files and report serialization.

#include "toric/blending.hpp"
#include "toric/horn.hpp"
#include "toric/mle.hpp"
#include "toric/tfp.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace toric::io {

using json = nlohmann::ordered_json;

enum class ModelKind { Configuration, Graded, Blending, Horn };

/// Everything a model file can describe. Graded files carry a grading;
/// blending files carry functions; Horn files carry only `horn`.
struct Model {
    ModelKind kind = ModelKind::Configuration;
    std::string origin;
    PointConfiguration config;
    WeightVector weights;
    std::optional<GradedConfiguration> graded;
    std::optional<PointConfiguration> degrees; // the multigrading A
    std::optional<BlendingSystem> system;
    std::optional<HornPair> horn;

    /// The file's custom functions, or the toric blending functions of
    /// conv(config) with the file's weights.
    BlendingSystem blending() const;
};

/// Degree classes for the columns of two Horn pairs.
struct HornGrading {
    PointConfiguration degrees;
    std::vector<std::size_t> block_b; // 0-based
    std::vector<std::size_t> block_c;
};

/// Applies TORIC_PRECISION_FIXTURES when `path` does not exist. Throws IoError.
std::string resolve_path(const std::string& path);

/// Throws SchemaError naming the offending field path, or IoError.
Model parse_model(const json& doc, const std::string& origin = "<json>");
Model parse_model_text(const std::string& text, const std::string& origin = "<string>");
Model parse_model_file(const std::string& path);

HornGrading parse_grading(const json& doc, const std::string& origin = "<json>");
HornGrading parse_grading_file(const std::string& path);

/// Comma-separated nonnegative integers, or a JSON integer array, or an
/// object keyed by model labels (requires `labels`).
DataVector parse_data(const std::string& text, const std::vector<std::string>& labels = {});

json to_json(const Rational& r);
json to_json(const RationalVector& v);
json to_json(const Polynomial& p);
json to_json(const RationalFunction& f);
json to_json(const PointConfiguration& c);
json to_json(const LatticePolytope& poly);
json to_json(const BlendingSystem& sys);
json to_json(const HornPair& pair);
json to_json(const Check& check);
json to_json(const PrecisionReport& report);

} // namespace toric::io
