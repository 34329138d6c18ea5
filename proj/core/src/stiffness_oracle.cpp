// Direct-stiffness plane-frame solution used to cross-check the force method.
// Shares only the temperature profile and the frame geometry with simulate().

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <cmath>
#include <vector>

#include "thermoact/thermomech.hpp"

namespace thermoact::thermomech {
namespace {

struct Element {
  int first;   // node index
  int second;  // node index
  double temperature_rise;
};

using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Vector6 = Eigen::Matrix<double, 6, 1>;

Matrix6 local_stiffness(double EA, double EI, double len) {
  Matrix6 k = Matrix6::Zero();
  const double a = EA / len;
  const double b = EI / (len * len * len);
  k(0, 0) = a;   k(0, 3) = -a;
  k(3, 0) = -a;  k(3, 3) = a;

  k(1, 1) = 12 * b;        k(1, 2) = 6 * b * len;        k(1, 4) = -12 * b;        k(1, 5) = 6 * b * len;
  k(2, 1) = 6 * b * len;   k(2, 2) = 4 * b * len * len;  k(2, 4) = -6 * b * len;   k(2, 5) = 2 * b * len * len;
  k(4, 1) = -12 * b;       k(4, 2) = -6 * b * len;       k(4, 4) = 12 * b;         k(4, 5) = -6 * b * len;
  k(5, 1) = 6 * b * len;   k(5, 2) = 2 * b * len * len;  k(5, 4) = -6 * b * len;   k(5, 5) = 4 * b * len * len;
  return k;
}

Matrix6 rotation(double c, double s) {
  Matrix6 t = Matrix6::Zero();
  for (int block = 0; block < 2; ++block) {
    const int o = 3 * block;
    t(o, o) = c;       t(o, o + 1) = s;
    t(o + 1, o) = -s;  t(o + 1, o + 1) = c;
    t(o + 2, o + 2) = 1.0;
  }
  return t;
}

}  // namespace

StiffnessResponse stiffness_oracle(const ValidatedSpec& spec, int elements_per_member) {
  if (elements_per_member < 1) {
    throw std::invalid_argument("stiffness oracle needs at least one element per member");
  }
  const auto& geo = spec.geometry();
  const auto profile = electrothermal::solve_temperature_profile(spec);
  const auto frame = build_frame(geo, spec.material());
  const double alpha = spec.material().expansion_coefficient;
  const int n = elements_per_member;

  // Nodes: A .. B .. C .. D along the current path, then the extension.
  std::vector<Point> nodes;
  std::vector<Element> elements;
  const int node_a = 0;
  nodes.push_back(frame.hot_anchor);

  int node_b = -1;
  int node_d = -1;
  double path_start = 0.0;
  int previous = node_a;
  for (const auto id : {MemberId::hot_arm, MemberId::link, MemberId::cold_arm}) {
    const auto& mem = frame.member(id);
    const double len = mem.length();
    for (int e = 1; e <= n; ++e) {
      const double t = static_cast<double>(e) / n;
      nodes.push_back({mem.start.x + (mem.end.x - mem.start.x) * t,
                       mem.start.y + (mem.end.y - mem.start.y) * t});
      const int current = static_cast<int>(nodes.size()) - 1;
      const double s0 = path_start + len * static_cast<double>(e - 1) / n;
      const double s1 = (e == n) ? path_start + len : path_start + len * t;
      const double rise = profile.integrated_rise(s0, std::min(s1, profile.path_length())) / (s1 - s0);
      elements.push_back({previous, current, rise});
      previous = current;
    }
    path_start += len;
    if (id == MemberId::hot_arm) node_b = previous;
    if (id == MemberId::cold_arm) node_d = previous;
  }
  nodes.back() = frame.cold_anchor;

  previous = node_b;
  const auto& ext = frame.member(MemberId::extension);
  for (int e = 1; e <= n; ++e) {
    const double t = static_cast<double>(e) / n;
    nodes.push_back({ext.start.x + (ext.end.x - ext.start.x) * t, ext.start.y});
    const int current = static_cast<int>(nodes.size()) - 1;
    elements.push_back({previous, current, 0.0});
    previous = current;
  }
  const int node_j = previous;

  const auto dof_count = static_cast<int>(3 * nodes.size());
  // Map global DOFs to reduced indices; anchors A and D are fully fixed.
  std::vector<int> reduced(dof_count, -1);
  int free_count = 0;
  for (int node = 0; node < static_cast<int>(nodes.size()); ++node) {
    for (int k = 0; k < 3; ++k) {
      if (node != node_a && node != node_d) reduced[3 * node + k] = free_count++;
    }
  }

  const double EA = frame.member(MemberId::hot_arm).axial_rigidity;
  const double EI = frame.member(MemberId::hot_arm).bending_rigidity;

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(elements.size() * 36);
  Eigen::VectorXd load = Eigen::VectorXd::Zero(free_count);
  std::vector<Matrix6> element_k;
  std::vector<Vector6> element_f;
  element_k.reserve(elements.size());
  element_f.reserve(elements.size());

  for (const auto& el : elements) {
    const Point& p = nodes[el.first];
    const Point& q = nodes[el.second];
    const double len = std::hypot(q.x - p.x, q.y - p.y);
    const Matrix6 T = rotation((q.x - p.x) / len, (q.y - p.y) / len);
    const Matrix6 kg = T.transpose() * local_stiffness(EA, EI, len) * T;

    Vector6 f_local = Vector6::Zero();
    const double thermal_force = EA * alpha * el.temperature_rise;
    f_local(0) = -thermal_force;
    f_local(3) = thermal_force;
    const Vector6 fg = T.transpose() * f_local;

    const std::array<int, 6> dofs = {3 * el.first,  3 * el.first + 1,  3 * el.first + 2,
                                     3 * el.second, 3 * el.second + 1, 3 * el.second + 2};
    for (int r = 0; r < 6; ++r) {
      const int rr = reduced[dofs[r]];
      if (rr < 0) continue;
      load(rr) += fg(r);
      for (int c = 0; c < 6; ++c) {
        const int cc = reduced[dofs[c]];
        if (cc >= 0) triplets.emplace_back(rr, cc, kg(r, c));
      }
    }
    element_k.push_back(kg);
    element_f.push_back(fg);
  }

  Eigen::SparseMatrix<double> K(free_count, free_count);
  K.setFromTriplets(triplets.begin(), triplets.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
  solver.compute(K);
  if (solver.info() != Eigen::Success) {
    throw SolverError("global stiffness matrix is singular");
  }
  const Eigen::VectorXd u = solver.solve(load);
  if (solver.info() != Eigen::Success) {
    throw SolverError("global stiffness solve failed");
  }

  const auto displacement = [&](int node, int k) {
    const int r = reduced[3 * node + k];
    return r < 0 ? 0.0 : u(r);
  };

  // Support action at D on the frame: sum of the end forces K u - f of the
  // elements meeting there.
  Eigen::Vector3d reaction = Eigen::Vector3d::Zero();
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const auto& el = elements[e];
    const int local_offset = el.first == node_d ? 0 : (el.second == node_d ? 3 : -1);
    if (local_offset < 0) continue;
    Vector6 ue;
    for (int k = 0; k < 3; ++k) {
      ue(k) = displacement(el.first, k);
      ue(3 + k) = displacement(el.second, k);
    }
    const Vector6 end_forces = element_k[e] * ue - element_f[e];
    reaction += end_forces.segment<3>(local_offset);
  }

  StiffnessResponse out;
  out.junction_deflection = -displacement(node_b, 1);
  out.junction_rotation = -displacement(node_b, 2);
  out.tip_deflection = -displacement(node_j, 1);
  out.cold_anchor_reaction = {reaction(0), reaction(1), reaction(2)};
  return out;
}

}  // namespace thermoact::thermomech
