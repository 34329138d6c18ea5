#include "thermoact/thermomech.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace thermoact::thermomech {
namespace {

// Three-point Gauss-Legendre on [0, 1]; exact through degree five.
constexpr std::array<double, 3> kGaussNodes = {0.1127016653792583, 0.5, 0.8872983346207417};
constexpr std::array<double, 3> kGaussWeights = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

// Moment about `cut` of a force (fx, fy) and couple mz acting at `at`.
double moment_about(const Point& cut, const Point& at, double fx, double fy, double mz) {
  return mz + (at.x - cut.x) * fy - (at.y - cut.y) * fx;
}

// Member forces for an action applied at `at` on the primary structure,
// for every member listed in `loaded` (members between A and `at`).
template <std::size_t N>
MemberForceSet forces_from_action(const FrameModel& frame, const std::array<MemberId, N>& loaded,
                                  const Point& at, double fx, double fy, double mz) {
  MemberForceSet out{};
  for (const auto id : loaded) {
    const auto& mem = frame.member(id);
    const double len = mem.length();
    const double dx = (mem.end.x - mem.start.x) / len;
    const double dy = (mem.end.y - mem.start.y) / len;
    auto& slot = out[static_cast<std::size_t>(id)];
    slot.moment_start = moment_about(mem.start, at, fx, fy, mz);
    slot.moment_end = moment_about(mem.end, at, fx, fy, mz);
    slot.axial = fx * dx + fy * dy;
  }
  return out;
}

constexpr std::array<MemberId, 3> kLoadPath = {MemberId::hot_arm, MemberId::link, MemberId::cold_arm};
constexpr std::array<MemberId, 1> kHotArmOnly = {MemberId::hot_arm};

constexpr double kResidualTolerance = 1e-12;

// Sum over members of the integral of (M_a M_b / EI [+ N_a N_b / EA]).
double work_product(const FrameModel& frame, const MemberForceSet& a, const MemberForceSet& b,
                    bool include_axial) {
  double total = 0.0;
  for (std::size_t k = 0; k < kMemberCount; ++k) {
    const auto& mem = frame.members[k];
    const double len = mem.length();
    double bending = 0.0;
    for (std::size_t g = 0; g < kGaussNodes.size(); ++g) {
      const double s = kGaussNodes[g] * len;
      bending += kGaussWeights[g] * a[k].moment_at(s, len) * b[k].moment_at(s, len);
    }
    total += bending * len / mem.bending_rigidity;
    if (include_axial) {
      total += a[k].axial * b[k].axial * len / mem.axial_rigidity;
    }
  }
  return total;
}

}  // namespace

double Member::length() const { return std::hypot(end.x - start.x, end.y - start.y); }

double FlexibilityMatrix::max_abs() const {
  double out = 0.0;
  for (const auto& row : f) {
    for (double v : row) out = std::max(out, std::abs(v));
  }
  return out;
}

double FlexibilityMatrix::asymmetry() const {
  double out = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) out = std::max(out, std::abs(f[i][j] - f[j][i]));
  }
  return out;
}

std::array<double, 3> FlexibilityMatrix::leading_minors() const {
  const double m1 = f[0][0];
  const double m2 = f[0][0] * f[1][1] - f[0][1] * f[1][0];
  const double m3 = f[0][0] * (f[1][1] * f[2][2] - f[1][2] * f[2][1]) -
                    f[0][1] * (f[1][0] * f[2][2] - f[1][2] * f[2][0]) +
                    f[0][2] * (f[1][0] * f[2][1] - f[1][1] * f[2][0]);
  return {m1, m2, m3};
}

bool FlexibilityMatrix::positive_definite() const {
  const auto minors = leading_minors();
  return std::all_of(minors.begin(), minors.end(), [](double m) { return m > 0.0; });
}

SmallAngleError::SmallAngleError(double rotation)
    : SolverError("junction rotation " + std::to_string(rotation) +
                  " rad violates the small-angle limit of " + std::to_string(kSmallAngleLimit) + " rad"),
      rotation_(rotation) {}

FrameModel build_frame(const Geometry& geometry, const Material& material) {
  const double L1 = geometry.hot_arm_length;
  const double L2 = geometry.cold_arm_length;
  const double g = geometry.gap;
  const double w = geometry.beam_width;
  const double t = geometry.beam_thickness;

  FrameModel frame;
  frame.hot_anchor = {0.0, 0.0};
  frame.junction = {L1, 0.0};
  frame.cold_corner = {L1, -g};
  frame.cold_anchor = {L1 - L2, -g};
  frame.jaw_tip = {L1 + geometry.extension_length, 0.0};
  frame.second_moment = t * w * w * w / 12.0;
  frame.section_area = w * t;

  const double EI = material.young_modulus * frame.second_moment;
  const double EA = material.young_modulus * frame.section_area;
  frame.members[static_cast<std::size_t>(MemberId::hot_arm)] = {frame.hot_anchor, frame.junction, EI, EA};
  frame.members[static_cast<std::size_t>(MemberId::link)] = {frame.junction, frame.cold_corner, EI, EA};
  frame.members[static_cast<std::size_t>(MemberId::cold_arm)] = {frame.cold_corner, frame.cold_anchor, EI, EA};
  frame.members[static_cast<std::size_t>(MemberId::extension)] = {frame.junction, frame.jaw_tip, EI, EA};
  return frame;
}

MemberForceSet unit_redundant_actions(const FrameModel& frame, int index) {
  switch (index) {
    case 1: return forces_from_action(frame, kLoadPath, frame.cold_anchor, 1.0, 0.0, 0.0);
    case 2: return forces_from_action(frame, kLoadPath, frame.cold_anchor, 0.0, 1.0, 0.0);
    case 3: return forces_from_action(frame, kLoadPath, frame.cold_anchor, 0.0, 0.0, 1.0);
    default: throw std::invalid_argument("redundant index must be 1, 2 or 3");
  }
}

FlexibilityMatrix flexibility_matrix(const FrameModel& frame, const FrameOptions& options) {
  const std::array<MemberForceSet, 3> unit = {
      unit_redundant_actions(frame, 1),
      unit_redundant_actions(frame, 2),
      unit_redundant_actions(frame, 3),
  };
  FlexibilityMatrix flex;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const double v = work_product(frame, unit[i], unit[j], !options.bending_only);
      flex.f[i][j] = v;
      flex.f[j][i] = v;
    }
  }
  return flex;
}

Redundants solve_redundants(const FlexibilityMatrix& flex, const electrothermal::ThermalLoad& load) {
  if (!flex.positive_definite()) {
    throw SolverError("flexibility matrix is not positive definite (degenerate frame)");
  }
  // Symmetric diagonal scaling: the rows of F carry different units
  // (m/N, 1/N, 1/(N.m)), so elimination and the residual check both work on
  // S F S y = S r with S = diag(1/sqrt(f_ii)) and X = S y.
  std::array<double, 3> scale{};
  for (int i = 0; i < 3; ++i) scale[i] = 1.0 / std::sqrt(flex.f[i][i]);
  const std::array<double, 3> rhs = {-load.mismatch() * scale[0], 0.0, 0.0};

  std::array<std::array<double, 3>, 3> a{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a[i][j] = scale[i] * flex.f[i][j] * scale[j];
  }
  std::array<std::array<double, 4>, 3> aug{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) aug[i][j] = a[i][j];
    aug[i][3] = rhs[i];
  }
  // Gaussian elimination with partial pivoting.
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(aug[r][col]) > std::abs(aug[pivot][col])) pivot = r;
    }
    std::swap(aug[col], aug[pivot]);
    for (int r = col + 1; r < 3; ++r) {
      const double factor = aug[r][col] / aug[col][col];
      for (int c = col; c < 4; ++c) aug[r][c] -= factor * aug[col][c];
    }
  }
  std::array<double, 3> y{};
  for (int r = 2; r >= 0; --r) {
    double acc = aug[r][3];
    for (int c = r + 1; c < 3; ++c) acc -= aug[r][c] * y[c];
    y[r] = acc / aug[r][r];
  }

  const double rhs_norm = std::abs(rhs[0]);
  double residual = 0.0;
  for (int i = 0; i < 3; ++i) {
    double row = -rhs[i];
    for (int j = 0; j < 3; ++j) row += a[i][j] * y[j];
    residual = std::max(residual, std::abs(row));
  }
  if (rhs_norm > 0.0 && !(residual <= kResidualTolerance * rhs_norm)) {
    std::ostringstream msg;
    msg << "compatibility residual " << residual / rhs_norm << " (relative) exceeds " << kResidualTolerance;
    throw SolverError(msg.str());
  }
  const std::array<double, 3> x = {y[0] * scale[0], y[1] * scale[1], y[2] * scale[2]};
  return {x[0], x[1], x[2]};
}

MomentDistribution moment_distribution(const FrameModel& frame, const Redundants& redundants) {
  return forces_from_action(frame, kLoadPath, frame.cold_anchor, redundants.axial,
                            redundants.transverse, redundants.moment);
}

JunctionResponse virtual_tip_response(const FrameModel& frame, const MomentDistribution& moments) {
  // Virtual unit +y force and unit counter-clockwise couple at B. Only the
  // hot arm lies between A and B on the primary structure, and along it the
  // virtual force is transverse, so no axial term contributes.
  const auto force = forces_from_action(frame, kHotArmOnly, frame.junction, 0.0, 1.0, 0.0);
  const auto couple = forces_from_action(frame, kHotArmOnly, frame.junction, 0.0, 0.0, 1.0);
  const double uy = work_product(frame, moments, force, false);
  const double theta_z = work_product(frame, moments, couple, false);
  return {-uy, -theta_z};
}

double tip_deflection(double deflection, double rotation, const Geometry& geometry) {
  if (!(std::abs(rotation) < kSmallAngleLimit)) {
    throw SmallAngleError(rotation);
  }
  return deflection + geometry.extension_length * rotation;
}

FrameSolution simulate(const ValidatedSpec& spec, const FrameOptions& options) {
  const auto profile = electrothermal::solve_temperature_profile(spec);
  const auto frame = build_frame(spec.geometry(), spec.material());

  FrameSolution out;
  out.thermal_load = electrothermal::arm_elongations(profile, spec.geometry(), spec.material());
  out.flexibility = flexibility_matrix(frame, options);
  out.redundants = solve_redundants(out.flexibility, out.thermal_load);
  out.moments = moment_distribution(frame, out.redundants);
  const auto response = virtual_tip_response(frame, out.moments);
  out.junction_deflection = response.deflection;
  out.junction_rotation = response.rotation;
  out.tip_deflection = tip_deflection(response.deflection, response.rotation, spec.geometry());
  out.peak_temperature = profile.peak_temperature();
  return out;
}

}  // namespace thermoact::thermomech
