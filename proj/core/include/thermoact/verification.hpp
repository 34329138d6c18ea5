#pragma once

// Closed-form pipeline vs the two numerical oracles.

#include "thermoact/model.hpp"
#include "thermoact/thermomech.hpp"

namespace thermoact::verification {

inline constexpr double kThermalTolerance = 1e-3;
inline constexpr double kMechanicalTolerance = 0.02;

/// max |T_fd - T_closed| over the nodes, relative to the closed-form peak
/// rise; 0 when the rise is identically zero.
double thermal_oracle_error(const ValidatedSpec& spec, int nodes);

struct MechanicalComparison {
  thermomech::FrameSolution force_method;
  thermomech::StiffnessResponse stiffness;
  /// |d_force - d_stiffness| / |d_stiffness|; 0 when both vanish.
  double tip_error = 0.0;
};

MechanicalComparison mechanical_oracle_error(const ValidatedSpec& spec, int elements_per_member,
                                             const thermomech::FrameOptions& options = {});

}  // namespace thermoact::verification
