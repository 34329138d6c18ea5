#include "thermoact/verification.hpp"

#include <algorithm>
#include <cmath>

#include "thermoact/electrothermal.hpp"

namespace thermoact::verification {

double thermal_oracle_error(const ValidatedSpec& spec, int nodes) {
  const auto profile = electrothermal::solve_temperature_profile(spec);
  const auto sampled = electrothermal::fd_temperature_oracle(spec, nodes);
  double worst = 0.0;
  for (std::size_t i = 0; i < sampled.x.size(); ++i) {
    worst = std::max(worst, std::abs(sampled.temperature[i] - profile.temperature_at(sampled.x[i])));
  }
  const double rise = profile.peak_temperature() - profile.ambient();
  if (rise == 0.0) return worst;
  return worst / rise;
}

MechanicalComparison mechanical_oracle_error(const ValidatedSpec& spec, int elements_per_member,
                                             const thermomech::FrameOptions& options) {
  MechanicalComparison out;
  out.force_method = thermomech::simulate(spec, options);
  out.stiffness = thermomech::stiffness_oracle(spec, elements_per_member);
  const double reference = std::abs(out.stiffness.tip_deflection);
  const double diff = std::abs(out.force_method.tip_deflection - out.stiffness.tip_deflection);
  out.tip_error = reference == 0.0 ? diff : diff / reference;
  return out;
}

}  // namespace thermoact::verification
