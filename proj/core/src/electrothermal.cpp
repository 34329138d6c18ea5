#include "thermoact/electrothermal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace thermoact::electrothermal {
namespace {

// (sinh z - z) / z^3, without the cancellation near z = 0.
double sinh_remainder(double z) {
  const double z2 = z * z;
  if (std::abs(z) < 0.5) {
    double term = 1.0 / 6.0;
    double sum = term;
    for (int k = 1; k < 20; ++k) {
      term *= z2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
      sum += term;
      if (term < std::numeric_limits<double>::epsilon() * sum) break;
    }
    return sum;
  }
  return (std::sinh(z) - z) / (z2 * z);
}

// Decay parameter at which the two branches of the antiderivative meet.
constexpr double kSeriesAntiderivativeLimit = 1.0;

}  // namespace

TemperatureProfile::TemperatureProfile(double path_length, double decay_parameter,
                                       double source_strength, double ambient,
                                       double current_density)
    : path_length_(path_length),
      decay_(decay_parameter),
      source_(source_strength),
      ambient_(ambient),
      current_density_(current_density),
      regime_(decay_parameter * path_length < kParabolicSwitch ? Regime::adiabatic_sides
                                                                : Regime::convective) {}

double TemperatureProfile::source_plateau() const noexcept {
  if (regime_ == Regime::adiabatic_sides) return std::numeric_limits<double>::infinity();
  return source_ / (decay_ * decay_);
}

double TemperatureProfile::rise_unchecked(double x) const {
  const double L = path_length_;
  if (regime_ == Regime::adiabatic_sides) {
    return 0.5 * source_ * x * (L - x);
  }
  // 1 - cosh(m(x - L/2)) / cosh(mL/2) rewritten as a product of exponentials
  // so that neither large mL nor small mL loses the result.
  const double m = decay_;
  const double left = -std::expm1(-m * x);
  const double right = -std::expm1(-m * (L - x));
  return source_plateau() * left * right / (1.0 + std::exp(-m * L));
}

double TemperatureProfile::rise_at(double x) const {
  if (!(x >= 0.0 && x <= path_length_)) {
    throw std::out_of_range("temperature profile evaluated at x = " + std::to_string(x) +
                            " outside [0, " + std::to_string(path_length_) + "]");
  }
  return rise_unchecked(x);
}

double TemperatureProfile::temperature_at(double x) const { return ambient_ + rise_at(x); }

double TemperatureProfile::peak_temperature() const {
  return ambient_ + rise_unchecked(0.5 * path_length_);
}

double TemperatureProfile::primitive(double x) const {
  const double L = path_length_;
  const double c = 0.5 * L;
  const double m = decay_;
  if (regime_ == Regime::adiabatic_sides) {
    return 0.5 * source_ * (0.5 * L * x * x - x * x * x / 3.0);
  }
  const double u = x - c;
  if (m * L <= kSeriesAntiderivativeLimit) {
    // q [ x 2 sinh^2(mc/2) / m^2 - u^3 phi(mu) ] / cosh(mc)
    const double s = std::sinh(0.5 * m * c) / m;
    return source_ * (2.0 * x * s * s - u * u * u * sinh_remainder(m * u)) / std::cosh(m * c);
  }
  // T_inf [ x - sinh(mu) / (m cosh(mc)) ], |u| <= c keeps the ratio bounded.
  const double ratio = (std::exp(m * (u - c)) - std::exp(-m * (u + c))) / (1.0 + std::exp(-2.0 * m * c));
  return source_plateau() * (x - ratio / m);
}

double TemperatureProfile::integrated_rise(double a, double b) const {
  const auto in_domain = [this](double x) { return x >= 0.0 && x <= path_length_; };
  if (!in_domain(a) || !in_domain(b)) {
    throw std::out_of_range("integration interval outside the current path");
  }
  if (source_ == 0.0) return 0.0;
  return primitive(b) - primitive(a);
}

double current_density(const ValidatedSpec& spec) {
  return spec.drive().voltage / (spec.material().resistivity * spec.geometry().path_length());
}

TemperatureProfile solve_temperature_profile(const ValidatedSpec& spec) {
  const auto& geo = spec.geometry();
  const auto& mat = spec.material();
  const double w = geo.beam_width;
  const double h = geo.beam_thickness;
  const double beta = spec.environment().convection_coefficient;

  const double j = current_density(spec);
  const double m = std::sqrt(2.0 * (h + w) * beta / (mat.thermal_conductivity * w * h));
  const double q = j * j * mat.resistivity / mat.thermal_conductivity;
  return TemperatureProfile(geo.path_length(), m, q, spec.environment().ambient_temperature, j);
}

ThermalLoad arm_elongations(const TemperatureProfile& profile, const Geometry& geometry,
                            const Material& material) {
  const double expected = geometry.path_length();
  if (std::abs(profile.path_length() - expected) > 1e-12 * expected) {
    throw std::invalid_argument("temperature profile path length does not match the geometry");
  }
  const double alpha = material.expansion_coefficient;
  return ThermalLoad{
      alpha * profile.integrated_rise(0.0, geometry.hot_arm_length),
      alpha * profile.integrated_rise(0.0, geometry.cold_arm_length),
  };
}

SampledProfile fd_temperature_oracle(const ValidatedSpec& spec, int nodes) {
  if (nodes < 3) {
    throw std::invalid_argument("finite-difference oracle needs at least 3 nodes");
  }
  const auto& geo = spec.geometry();
  const auto& mat = spec.material();
  const double w = geo.beam_width;
  const double h = geo.beam_thickness;
  const double beta = spec.environment().convection_coefficient;
  const double ambient = spec.environment().ambient_temperature;
  const double L = geo.path_length();
  const double j = current_density(spec);

  // theta = T - T_s:  -theta[i-1] + (2 + m^2 dx^2) theta[i] - theta[i+1] = q dx^2
  const double m2 = 2.0 * (h + w) * beta / (mat.thermal_conductivity * w * h);
  const double q = j * j * mat.resistivity / mat.thermal_conductivity;
  const auto n = static_cast<std::size_t>(nodes);
  const double dx = L / static_cast<double>(n - 1);
  const double diag = 2.0 + m2 * dx * dx;
  const double rhs = q * dx * dx;

  const std::size_t interior = n - 2;
  std::vector<double> c_prime(interior);
  std::vector<double> d_prime(interior);
  c_prime[0] = -1.0 / diag;
  d_prime[0] = rhs / diag;
  for (std::size_t i = 1; i < interior; ++i) {
    const double denom = diag + c_prime[i - 1];
    c_prime[i] = -1.0 / denom;
    d_prime[i] = (rhs + d_prime[i - 1]) / denom;
  }
  std::vector<double> theta(n, 0.0);
  theta[interior] = d_prime[interior - 1];
  for (std::size_t i = interior - 1; i >= 1; --i) {
    theta[i] = d_prime[i - 1] - c_prime[i - 1] * theta[i + 1];
  }

  SampledProfile out;
  out.x.resize(n);
  out.temperature.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.x[i] = (i + 1 == n) ? L : dx * static_cast<double>(i);
    out.temperature[i] = ambient + theta[i];
  }
  return out;
}

}  // namespace thermoact::electrothermal
