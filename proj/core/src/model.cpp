#include "thermoact/model.hpp"

#include <cmath>

namespace thermoact {
namespace {

std::string join(const std::vector<Diagnostic>& diagnostics) {
  std::string out = "invalid actuator spec:";
  for (const auto& d : diagnostics) {
    out += "\n  ";
    out += d.field;
    out += ": ";
    out += d.message;
  }
  return out;
}

void require_positive(std::vector<Diagnostic>& out, const char* field, double value) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    out.push_back({field, std::string(field) + " must be strictly positive"});
  }
}

}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : std::invalid_argument(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::vector<Diagnostic> check(const ActuatorSpec& spec) {
  std::vector<Diagnostic> out;

  const auto& m = spec.material;
  require_positive(out, "material.young_modulus", m.young_modulus);
  if (!std::isfinite(m.poisson_ratio) || m.poisson_ratio < 0.0 || m.poisson_ratio >= 0.5) {
    out.push_back({"material.poisson_ratio", "poisson_ratio must lie in [0, 0.5)"});
  }
  require_positive(out, "material.density", m.density);
  require_positive(out, "material.thermal_conductivity", m.thermal_conductivity);
  require_positive(out, "material.expansion_coefficient", m.expansion_coefficient);
  require_positive(out, "material.specific_heat", m.specific_heat);
  require_positive(out, "material.resistivity", m.resistivity);

  const auto& e = spec.environment;
  if (!std::isfinite(e.convection_coefficient) || e.convection_coefficient < 0.0) {
    out.push_back({"environment.convection_coefficient", "convection_coefficient must be non-negative"});
  }
  if (!std::isfinite(e.ambient_temperature)) {
    out.push_back({"environment.ambient_temperature", "ambient_temperature must be finite"});
  }

  const auto& g = spec.geometry;
  require_positive(out, "geometry.hot_arm_length", g.hot_arm_length);
  require_positive(out, "geometry.cold_arm_length", g.cold_arm_length);
  require_positive(out, "geometry.gap", g.gap);
  require_positive(out, "geometry.beam_width", g.beam_width);
  require_positive(out, "geometry.beam_thickness", g.beam_thickness);
  require_positive(out, "geometry.extension_length", g.extension_length);
  require_positive(out, "geometry.pad_side", g.pad_side);
  if (g.cold_arm_length > g.hot_arm_length) {
    out.push_back({"geometry.cold_arm_length", "cold_arm_length exceeds hot_arm_length"});
  }

  if (!std::isfinite(spec.drive.voltage) || spec.drive.voltage < 0.0) {
    out.push_back({"drive.voltage", "voltage must be non-negative"});
  }
  return out;
}

ValidatedSpec validate(const ActuatorSpec& spec) {
  auto diagnostics = check(spec);
  if (!diagnostics.empty()) {
    throw ValidationError(std::move(diagnostics));
  }
  return ValidatedSpec(spec);
}

ActuatorSpec default_spec() {
  return ActuatorSpec{};
}

}  // namespace thermoact
