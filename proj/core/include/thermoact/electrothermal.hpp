#pragma once

// Steady Joule heating of the series current path
//
//   k w h T'' + j^2 rho w h = 2 (h + w) beta (T - T_s),   T(0) = T(L_p) = T_s
//
// along one uniform rod of length L_p = L1 + g + L2 whose two ends sit on the
// anchors. Path coordinate 0 is the hot anchor; the hot arm occupies
// [0, L1], the connecting link [L1, L1 + g], the cold arm [L1 + g, L_p].

#include <vector>

#include "thermoact/model.hpp"

namespace thermoact::electrothermal {

enum class Regime {
  convective,      // beta > 0: hyperbolic profile
  adiabatic_sides  // beta == 0 or m L_p below the switch: parabola
};

/// Below this value of m L_p the parabolic closed form is used.
inline constexpr double kParabolicSwitch = 1e-6;

class TemperatureProfile {
 public:
  TemperatureProfile(double path_length, double decay_parameter, double source_strength,
                     double ambient, double current_density);

  double path_length() const noexcept { return path_length_; }
  /// m, with m^2 = 2 (h + w) beta / (k w h).
  double decay_parameter() const noexcept { return decay_; }
  /// j^2 rho / k, the source term of the rise equation theta'' - m^2 theta = -q.
  double source_strength() const noexcept { return source_; }
  /// T_inf = q / m^2; infinite in the adiabatic-sides regime.
  double source_plateau() const noexcept;
  double ambient() const noexcept { return ambient_; }
  double current_density() const noexcept { return current_density_; }
  Regime regime() const noexcept { return regime_; }

  /// Throws std::out_of_range outside [0, path_length].
  double temperature_at(double x) const;
  /// T(x) - T_s, same domain.
  double rise_at(double x) const;
  /// Integral of T - T_s over [a, b], from the closed-form antiderivative.
  double integrated_rise(double a, double b) const;
  /// T(L_p / 2).
  double peak_temperature() const;

 private:
  double rise_unchecked(double x) const;
  double primitive(double x) const;

  double path_length_;
  double decay_;
  double source_;
  double ambient_;
  double current_density_;
  Regime regime_;
};

struct ThermalLoad {
  double hot_elongation = 0.0;   // m
  double cold_elongation = 0.0;  // m

  double mismatch() const noexcept { return hot_elongation - cold_elongation; }
};

/// j = V / (rho (L1 + g + L2)); pads and fillets carry no resistance.
double current_density(const ValidatedSpec& spec);

TemperatureProfile solve_temperature_profile(const ValidatedSpec& spec);

/// Free thermal elongations of the two arms. The cold-arm integral is taken
/// over the mirror interval [0, L2], which the symmetric profile makes
/// identical to [L1 + g, L_p]. Throws std::invalid_argument when the profile
/// was built for a different path length.
ThermalLoad arm_elongations(const TemperatureProfile& profile, const Geometry& geometry,
                            const Material& material);

struct SampledProfile {
  std::vector<double> x;            // m, uniform, x.front() = 0, x.back() = L_p
  std::vector<double> temperature;  // degC
};

/// Second-order central differences on `nodes` uniformly spaced points with
/// Dirichlet ends, solved by the Thomas algorithm. Verification only.
/// Throws std::invalid_argument when nodes < 3.
SampledProfile fd_temperature_oracle(const ValidatedSpec& spec, int nodes);

}  // namespace thermoact::electrothermal
