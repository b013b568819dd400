#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "levymd/processes.hpp"

namespace levymd {

inline constexpr const char* kVersion = "0.1.0";

// Stable machine-readable rejection codes; each renders as a distinct tag in
// the diagnostic message.
enum class ConfigCode {
    BadDocument,
    UnknownComponentKind,
    BadParameter,
    NonPositiveCoefficient,
    NuOutOfRange,
    DimensionMismatch,
};

class ConfigError : public std::runtime_error {
  public:
    ConfigError(ConfigCode code, const std::string& detail);
    [[nodiscard]] ConfigCode code() const { return code_; }
    [[nodiscard]] static const char* tag(ConfigCode code);

  private:
    ConfigCode code_;
};

enum class OutputFormat { Csv, Json };

// A validated run manifest: the model under one of the two clock conditions,
// an optional mean override, and the I/O knobs shared by every subcommand.
struct RunConfig {
    int condition = 1;
    std::optional<Condition1Config> cond1;
    std::optional<Condition2Config> cond2;
    std::optional<std::vector<double>> m_override;
    std::uint64_t seed = 12345;
    std::string output = "-";
    OutputFormat format = OutputFormat::Csv;
    std::string echo;  // canonical serialization of the accepted document

    [[nodiscard]] std::size_t dim() const;
    // Component means: the override when present, else kappa'(0) per model.
    [[nodiscard]] MeanVector mean() const;
};

// Parses and validates a JSON manifest.  Document shape:
//   {
//     "condition": 1 | 2,
//     "components": [{"kind": "...", "params": {...}}, ...],
//     "coefficients": [c_0, c_1, ..., c_h]            (condition 1)
//                   | [[c_11, ..., c_1k], ...]        (condition 2)
//     "nus": [nu_0, nu_1, ..., nu_h]                  (condition 1)
//          | [nu]                                     (condition 2)
//     "m_override": [...],  "seed": ...,  "output": "...",  "format": "csv"|"json"
//   }
// Throws ConfigError with a distinct code per violated invariant.
[[nodiscard]] RunConfig parse_config(const std::string& text);

}  // namespace levymd
