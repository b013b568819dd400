#include "levymd/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace levymd {

namespace {

using nlohmann::json;

[[noreturn]] void fail(ConfigCode code, const std::string& detail) {
    throw ConfigError(code, detail);
}

double require_number(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number()) {
        fail(ConfigCode::BadParameter, where + ": missing numeric field '" + key + "'");
    }
    return obj[key].get<double>();
}

CumulantModel parse_component(const json& node, std::size_t index) {
    const std::string where = "components[" + std::to_string(index) + "]";
    if (!node.is_object() || !node.contains("kind") || !node["kind"].is_string()) {
        fail(ConfigCode::BadDocument, where + ": expected an object with a string 'kind'");
    }
    const std::string kind = node["kind"].get<std::string>();
    const json params = node.value("params", json::object());
    try {
        if (kind == "brownian") {
            return CumulantModel::brownian_drift(params.value("mu", 0.0),
                                                 require_number(params, "sigma2", where));
        }
        if (kind == "poisson") {
            return CumulantModel::poisson(require_number(params, "lambda", where));
        }
        if (kind == "compound-poisson-exp") {
            return CumulantModel::compound_poisson_exp(require_number(params, "lambda", where),
                                                       require_number(params, "beta", where));
        }
        if (kind == "gamma") {
            return CumulantModel::gamma_subordinator(require_number(params, "a", where),
                                                     require_number(params, "b", where));
        }
        if (kind == "deterministic") {
            return CumulantModel::deterministic(require_number(params, "mu", where));
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        fail(ConfigCode::BadParameter, where + ": " + e.what());
    }
    fail(ConfigCode::UnknownComponentKind, where + ": unknown component kind '" + kind + "'");
}

std::vector<double> number_array(const json& node, const char* key, ConfigCode code) {
    if (!node.is_array()) {
        fail(code, std::string(key) + ": expected an array of numbers");
    }
    std::vector<double> out;
    out.reserve(node.size());
    for (const auto& v : node) {
        if (!v.is_number()) fail(code, std::string(key) + ": expected an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

void check_positive(std::span<const double> values, const char* key) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
            std::ostringstream os;
            os << "coefficients must be positive: " << key << "[" << i << "] = " << values[i];
            fail(ConfigCode::NonPositiveCoefficient, os.str());
        }
    }
}

void check_nus(std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0 && values[i] < 1.0)) {
            std::ostringstream os;
            os << "nu out of (0,1): nus[" << i << "] = " << values[i];
            fail(ConfigCode::NuOutOfRange, os.str());
        }
    }
}

}  // namespace

ConfigError::ConfigError(ConfigCode code, const std::string& detail)
    : std::runtime_error(std::string("config-error[") + tag(code) + "]: " + detail),
      code_(code) {}

const char* ConfigError::tag(ConfigCode code) {
    switch (code) {
        case ConfigCode::BadDocument: return "bad-document";
        case ConfigCode::UnknownComponentKind: return "unknown-component-kind";
        case ConfigCode::BadParameter: return "bad-parameter";
        case ConfigCode::NonPositiveCoefficient: return "non-positive-coefficient";
        case ConfigCode::NuOutOfRange: return "nu-out-of-range";
        case ConfigCode::DimensionMismatch: return "dimension-mismatch";
    }
    return "unknown";
}

std::size_t RunConfig::dim() const { return condition == 1 ? cond1->dim() : cond2->dim(); }

MeanVector RunConfig::mean() const {
    if (m_override) {
        const bool zero = std::all_of(m_override->begin(), m_override->end(),
                                      [](double v) { return v == 0.0; });
        return MeanVector{*m_override, zero};
    }
    const auto& components = condition == 1 ? cond1->components : cond2->components;
    return mean_vector(components);
}

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        fail(ConfigCode::BadDocument, e.what());
    }
    if (!doc.is_object()) fail(ConfigCode::BadDocument, "top-level value must be an object");

    RunConfig out;
    out.condition = doc.value("condition", 1);
    if (out.condition != 1 && out.condition != 2) {
        fail(ConfigCode::BadParameter, "condition must be 1 or 2");
    }

    if (!doc.contains("components") || !doc["components"].is_array() ||
        doc["components"].empty()) {
        fail(ConfigCode::BadDocument, "components: expected a non-empty array");
    }
    std::vector<CumulantModel> components;
    for (std::size_t i = 0; i < doc["components"].size(); ++i) {
        components.push_back(parse_component(doc["components"][i], i));
    }
    const std::size_t h = components.size();

    if (!doc.contains("coefficients")) fail(ConfigCode::BadDocument, "missing 'coefficients'");
    if (!doc.contains("nus")) fail(ConfigCode::BadDocument, "missing 'nus'");

    if (out.condition == 1) {
        const auto c = number_array(doc["coefficients"], "coefficients",
                                    ConfigCode::NonPositiveCoefficient);
        if (c.size() != h + 1) {
            fail(ConfigCode::DimensionMismatch,
                 "coefficients: expected " + std::to_string(h + 1) + " entries (shared first), got " +
                     std::to_string(c.size()));
        }
        check_positive(c, "coefficients");
        const auto nus = number_array(doc["nus"], "nus", ConfigCode::NuOutOfRange);
        if (nus.size() != h + 1) {
            fail(ConfigCode::DimensionMismatch,
                 "nus: expected " + std::to_string(h + 1) + " entries (shared first), got " +
                     std::to_string(nus.size()));
        }
        check_nus(nus);
        out.cond1 = Condition1Config{std::move(components), c, nus};
    } else {
        const auto& w = doc["coefficients"];
        if (!w.is_array() || w.empty() || !w[0].is_array()) {
            fail(ConfigCode::BadDocument,
                 "coefficients: condition 2 expects an array of per-component rows");
        }
        if (w.size() != h) {
            fail(ConfigCode::DimensionMismatch,
                 "coefficients: expected " + std::to_string(h) + " rows, got " +
                     std::to_string(w.size()));
        }
        std::vector<std::vector<double>> weights;
        weights.reserve(h);
        std::size_t k = 0;
        for (std::size_t i = 0; i < h; ++i) {
            auto row = number_array(w[i], "coefficients", ConfigCode::NonPositiveCoefficient);
            if (i == 0) {
                k = row.size();
                if (k == 0) fail(ConfigCode::DimensionMismatch, "coefficients: empty row");
            } else if (row.size() != k) {
                fail(ConfigCode::DimensionMismatch, "coefficients: ragged rows");
            }
            check_positive(row, "coefficients");
            weights.push_back(std::move(row));
        }
        const auto nus = number_array(doc["nus"], "nus", ConfigCode::NuOutOfRange);
        if (nus.size() != 1) {
            fail(ConfigCode::DimensionMismatch, "nus: condition 2 expects exactly one entry");
        }
        check_nus(nus);
        out.cond2 = Condition2Config{std::move(components), std::move(weights), nus[0]};
    }

    if (doc.contains("m_override")) {
        auto m = number_array(doc["m_override"], "m_override", ConfigCode::BadParameter);
        if (m.size() != h) {
            fail(ConfigCode::DimensionMismatch,
                 "m_override: expected " + std::to_string(h) + " entries, got " +
                     std::to_string(m.size()));
        }
        out.m_override = std::move(m);
    }

    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) {
            fail(ConfigCode::BadParameter, "seed: expected a nonnegative integer");
        }
        out.seed = doc["seed"].get<std::uint64_t>();
    }
    out.output = doc.value("output", std::string("-"));
    const std::string fmt = doc.value("format", std::string("csv"));
    if (fmt == "csv") {
        out.format = OutputFormat::Csv;
    } else if (fmt == "json") {
        out.format = OutputFormat::Json;
    } else {
        fail(ConfigCode::BadParameter, "format: expected 'csv' or 'json', got '" + fmt + "'");
    }

    try {
        if (out.condition == 1) out.cond1->validate(); else out.cond2->validate();
    } catch (const std::exception& e) {
        fail(ConfigCode::BadParameter, e.what());
    }

    out.echo = doc.dump();
    return out;
}

}  // namespace levymd
