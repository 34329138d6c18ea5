#pragma once

// Domain records for a laterally driven electrothermal microactuator.
//
// Everything stored here is strict SI: metres, pascals, volts, ohm-metres,
// and degrees Celsius (only ever used as temperature differences against the
// ambient value). Config files work in micrometres; the conversion lives in
// config.hpp and nowhere else.

#include <stdexcept>
#include <string>
#include <vector>

namespace thermoact {

/// Polysilicon bulk properties.
///
/// poisson_ratio, density and specific_heat are carried for config fidelity
/// only; the steady-state Euler-Bernoulli model never reads them.
struct Material {
  double young_modulus = 158e9;         // Pa
  double poisson_ratio = 0.066;         // -
  double density = 2320.0;              // kg/m^3
  double thermal_conductivity = 41.0;   // W/(m.degC)
  double expansion_coefficient = 2.7e-6;// 1/degC
  double specific_heat = 700.0;         // J/(kg.degC)
  double resistivity = 5e-4;            // ohm.m

  bool operator==(const Material&) const = default;
};

struct Environment {
  double convection_coefficient = 50.0; // W/(m^2.degC); zero selects the adiabatic-sides limit
  double ambient_temperature = 20.0;    // degC

  bool operator==(const Environment&) const = default;
};

/// In-plane layout of the device. Both arms share one rectangular cross
/// section of width x thickness; width is the in-plane bending depth.
struct Geometry {
  double hot_arm_length = 750e-6;
  double cold_arm_length = 345e-6;
  double gap = 5e-6;
  double beam_width = 2.8e-6;
  double beam_thickness = 2e-6;
  double extension_length = 40e-6;
  double pad_side = 200e-6;  // unused by the model

  double path_length() const { return hot_arm_length + gap + cold_arm_length; }
  double length_ratio() const { return cold_arm_length / hot_arm_length; }

  bool operator==(const Geometry&) const = default;
};

struct Drive {
  double voltage = 8.0;  // V

  bool operator==(const Drive&) const = default;
};

struct ActuatorSpec {
  Material material;
  Environment environment;
  Geometry geometry;
  Drive drive;

  bool operator==(const ActuatorSpec&) const = default;
};

/// One violated invariant, e.g. {"geometry.cold_arm_length", "cold_arm_length exceeds hot_arm_length"}.
struct Diagnostic {
  std::string field;
  std::string message;
};

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// An ActuatorSpec that has passed validate(). Downstream solvers accept only
/// this type, so an invalid spec can never reach them.
class ValidatedSpec {
 public:
  const ActuatorSpec& spec() const noexcept { return spec_; }
  const Material& material() const noexcept { return spec_.material; }
  const Environment& environment() const noexcept { return spec_.environment; }
  const Geometry& geometry() const noexcept { return spec_.geometry; }
  const Drive& drive() const noexcept { return spec_.drive; }

  bool operator==(const ValidatedSpec&) const = default;

 private:
  friend ValidatedSpec validate(const ActuatorSpec& spec);
  explicit ValidatedSpec(const ActuatorSpec& spec) : spec_(spec) {}

  ActuatorSpec spec_;
};

/// Every violated invariant, in field order. Empty means valid.
std::vector<Diagnostic> check(const ActuatorSpec& spec);

/// Returns the spec unchanged when check() is empty; throws ValidationError
/// carrying all diagnostics otherwise.
ValidatedSpec validate(const ActuatorSpec& spec);

/// Canonical operating point: handbook polysilicon values, L1 = 750 um,
/// L2/L1 = 0.46, g = 5 um, 8 V.
ActuatorSpec default_spec();

}  // namespace thermoact
