#pragma once

// Plane rigid-frame model of the actuator, solved by consistent deformation.
//
// Node layout (metres, y toward the hot side):
//
//   A (0, 0) ------------------------- B (L1, 0) ---- J (L1 + L, 0)
//   hot anchor          hot arm        |              jaw tip
//                                      | link
//            D (L1 - L2, -g) --------- C (L1, -g)
//            cold anchor    cold arm
//
// The primary structure is the cantilever fixed at A with the cold anchor D
// fully released; the three redundants are the reactions the anchor at D
// applies to the frame (+x force, +y force, counter-clockwise moment).
//
// Internal moment at a cut is the moment about the cut of every action on
// the D side (or the virtual-load side) of it; axial force is tension
// positive. Reported junction deflection, rotation and tip deflection are
// positive toward the cold arm (-y, clockwise).

#include <array>
#include <stdexcept>

#include "thermoact/electrothermal.hpp"
#include "thermoact/model.hpp"

namespace thermoact::thermomech {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class MemberId { hot_arm = 0, link = 1, cold_arm = 2, extension = 3 };
inline constexpr std::size_t kMemberCount = 4;

struct Member {
  Point start;
  Point end;
  double bending_rigidity;  // EI, N.m^2
  double axial_rigidity;    // EA, N

  double length() const;
};

struct FrameModel {
  Point hot_anchor;   // A
  Point junction;     // B
  Point cold_corner;  // C
  Point cold_anchor;  // D
  Point jaw_tip;      // J
  std::array<Member, kMemberCount> members;  // indexed by MemberId
  double second_moment;  // I = t w^3 / 12, m^4
  double section_area;   // w t, m^2

  const Member& member(MemberId id) const { return members[static_cast<std::size_t>(id)]; }
};

/// Linear internal moment and constant axial force along one member, s
/// measured from the member start.
struct MemberForces {
  double moment_start = 0.0;
  double moment_end = 0.0;
  double axial = 0.0;

  double moment_at(double s, double length) const {
    return moment_start + (moment_end - moment_start) * (s / length);
  }
};

using MemberForceSet = std::array<MemberForces, kMemberCount>;
using MomentDistribution = MemberForceSet;

struct FlexibilityMatrix {
  std::array<std::array<double, 3>, 3> f{};

  double operator()(int i, int j) const { return f[i][j]; }
  double max_abs() const;
  double asymmetry() const;  // max |f_ij - f_ji|
  std::array<double, 3> leading_minors() const;
  bool positive_definite() const;
};

struct Redundants {
  double axial = 0.0;       // X1, N
  double transverse = 0.0;  // X2, N
  double moment = 0.0;      // X3, N.m

  double operator[](int i) const { return i == 0 ? axial : (i == 1 ? transverse : moment); }
};

struct JunctionResponse {
  double deflection = 0.0;  // u, m
  double rotation = 0.0;    // theta, rad
};

struct FrameSolution {
  electrothermal::ThermalLoad thermal_load;
  FlexibilityMatrix flexibility;
  Redundants redundants;
  MomentDistribution moments;
  double junction_deflection = 0.0;  // u, m
  double junction_rotation = 0.0;    // theta, rad
  double tip_deflection = 0.0;       // d_tip, m
  double peak_temperature = 0.0;     // degC
};

struct FrameOptions {
  /// Drop the N n / EA terms from the flexibility integrals.
  bool bending_only = false;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SmallAngleError : public SolverError {
 public:
  explicit SmallAngleError(double rotation);
  double rotation() const noexcept { return rotation_; }

 private:
  double rotation_;
};

/// |theta| must stay below this for the straight-extension extrapolation.
inline constexpr double kSmallAngleLimit = 0.1;

FrameModel build_frame(const Geometry& geometry, const Material& material);

/// Member forces on the primary structure for a unit value of redundant
/// `index` (1, 2 or 3) applied at D. The extension carries nothing.
MemberForceSet unit_redundant_actions(const FrameModel& frame, int index);

FlexibilityMatrix flexibility_matrix(const FrameModel& frame, const FrameOptions& options = {});

/// Solves F X = -(dl_h - dl_c, 0, 0): the free expansion of the primary
/// structure opens an axial gap dl_h - dl_c at D, and the anchor reactions
/// close it. Throws SolverError when F is not positive definite or the
/// post-solve residual check fails.
Redundants solve_redundants(const FlexibilityMatrix& flex, const electrothermal::ThermalLoad& load);

MomentDistribution moment_distribution(const FrameModel& frame, const Redundants& redundants);

/// Unit-load virtual work at the junction B on the primary structure.
JunctionResponse virtual_tip_response(const FrameModel& frame, const MomentDistribution& moments);

/// d_tip = u + L theta. Throws SmallAngleError when |theta| >= kSmallAngleLimit.
double tip_deflection(double deflection, double rotation, const Geometry& geometry);

FrameSolution simulate(const ValidatedSpec& spec, const FrameOptions& options = {});

struct StiffnessResponse {
  double junction_deflection = 0.0;  // same sign conventions as FrameSolution
  double junction_rotation = 0.0;
  double tip_deflection = 0.0;
  Redundants cold_anchor_reaction;  // support actions on the frame at D
};

/// Independent direct-stiffness plane-frame solution with
/// `elements_per_member` Euler-Bernoulli elements on every member, the
/// extension included. Thermal strain enters as element equivalent axial
/// forces EA alpha dT with dT the element-average rise of the same
/// temperature profile. Throws std::invalid_argument for fewer than one
/// element and SolverError if the reduced stiffness matrix cannot be
/// factorized.
StiffnessResponse stiffness_oracle(const ValidatedSpec& spec, int elements_per_member);

}  // namespace thermoact::thermomech
