#pragma once

// Flat `section.key = value` configuration documents.
//
//   # comment
//   geometry.hot_arm_length = 750     # micrometres
//   drive.voltage = 8                 # volts
//   material.young_modulus = 158e9    # SI
//
// Sections: material, environment, geometry, drive, study. Geometry values
// are micrometres, everything else is SI. Missing keys keep their default;
// unknown keys are errors.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thermoact/model.hpp"
#include "thermoact/study.hpp"

namespace thermoact::config {

struct StudySettings {
  double ratio_min = study::kRatioMin;
  double ratio_max = study::kRatioMax;
  int ratio_grid = static_cast<int>(study::kDefaultRatioGrid);
  int fd_nodes = 4097;
  int stiffness_elements = 64;
  bool bending_only = false;

  bool operator==(const StudySettings&) const = default;
};

struct Config {
  ActuatorSpec spec;
  StudySettings study;

  bool operator==(const Config&) const = default;
};

struct ConfigDiagnostic {
  std::size_t line = 0;    // 1-based; 0 when not tied to a line
  std::size_t column = 0;  // 1-based
  std::string message;
};

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(std::vector<ConfigDiagnostic> diagnostics);
  const std::vector<ConfigDiagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<ConfigDiagnostic> diagnostics_;
};

/// Parses and validates. Throws ConfigError carrying every syntax, key and
/// invariant problem found.
Config parse_config(std::string_view text);

/// Emits every key at full precision; parse_config(serialize_config(c)) == c.
std::string serialize_config(const Config& config);

/// Shortest decimal text that reads back as exactly `value`.
std::string format_exact(double value);

/// Decimal text for value * 10^shift, exact in the sense that reading it
/// and applying read_scaled(text, -shift) returns `value` bit-for-bit.
std::string format_scaled(double value, int shift);

/// Reads `text` as a decimal number times 10^shift, rounded once.
/// Throws std::invalid_argument on malformed text.
double read_scaled(std::string_view text, int shift);

}  // namespace thermoact::config
