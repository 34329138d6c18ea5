// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "thermoact/study.hpp"
#include "thermoact/thermomech.hpp"
#include "thermoact/verification.hpp"

using namespace thermoact;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::array<double, 3> kHotArms = {500e-6, 600e-6, 750e-6};
constexpr double kStudyRatio = 0.46;

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ActuatorSpec study_point(double L1, double ratio = kStudyRatio, double gap = 5e-6) {
  auto spec = default_spec();
  spec.geometry.hot_arm_length = L1;
  spec.geometry.cold_arm_length = ratio * L1;
  spec.geometry.gap = gap;
  spec.drive.voltage = 8.0;
  return spec;
}

double spread(const study::SweepTable& table) {
  const auto [lo, hi] = std::minmax_element(
      table.records.begin(), table.records.end(),
      [](const auto& a, const auto& b) { return a.tip_deflection < b.tip_deflection; });
  return hi->tip_deflection - lo->tip_deflection;
}

double relative(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

void optimal_ratio() {
  bool pass = true;
  std::string detail;
  for (double L1 : kHotArms) {
    const auto start = Clock::now();
    const auto r = study::find_optimal_ratio(study_point(L1));
    const double elapsed = seconds_since(start);
    const bool ok = r.status == study::OptimumStatus::refined && r.optimal_ratio >= 0.40 &&
                    r.optimal_ratio <= 0.52 && elapsed < 1.0;
    pass = pass && ok;
    detail += fmt("L1=%.0fum ratio=%.4f (%.3fs)  ", L1 * 1e6, r.optimal_ratio, elapsed);
  }
  report(1, pass, detail + "[0.40, 0.52], < 1 s each");
}

void gap_monotonicity() {
  const auto table = study::run_sweep(study::gap_plan(study_point(750e-6)));
  bool pass = table.records.size() == 6;
  std::string detail = "d_tip(um):";
  for (std::size_t k = 0; k < table.records.size(); ++k) {
    detail += fmt(" %.4f", table.records[k].tip_deflection * 1e6);
    if (k > 0) pass = pass && table.records[k].tip_deflection < table.records[k - 1].tip_deflection;
  }
  report(2, pass, detail + "  strictly decreasing over g = 5..10 um");
}

void hot_arm_monotonicity() {
  std::vector<double> d;
  for (double L1 : kHotArms) d.push_back(thermomech::simulate(validate(study_point(L1))).tip_deflection);
  report(3, d[0] < d[1] && d[1] < d[2],
         fmt("d_tip(500, 600, 750 um) = %.4f < %.4f < %.4f um", d[0] * 1e6, d[1] * 1e6, d[2] * 1e6));
}

void sensitivity_ordering() {
  const std::vector<study::SweepTable> ratio_tables = {
      study::run_sweep(study::ratio_plan(study_point(500e-6))),
      study::run_sweep(study::ratio_plan(study_point(750e-6)))};
  const std::vector<study::SweepTable> gap_tables = {
      study::run_sweep(study::gap_plan(study_point(500e-6))),
      study::run_sweep(study::gap_plan(study_point(750e-6)))};
  const auto r = study::sensitivity_summary(ratio_tables);
  const auto g = study::sensitivity_summary(gap_tables);
  const bool pass = r[1].spread > r[0].spread && g[1].spread > g[0].spread;
  report(4, pass,
         fmt("ratio spread 750um %.4f > 500um %.4f um; gap spread 750um %.4f > 500um %.4f um",
             r[1].spread * 1e6, r[0].spread * 1e6, g[1].spread * 1e6, g[0].spread * 1e6));
}

void optimum_gain() {
  const auto r = study::find_optimal_ratio(study_point(750e-6));
  const auto table = study::run_sweep(study::ratio_plan(study_point(750e-6)));
  const double grid_gain = [&] {
    double lo = table.records.front().tip_deflection, hi = lo;
    for (const auto& rec : table.records) {
      lo = std::min(lo, rec.tip_deflection);
      hi = std::max(hi, rec.tip_deflection);
    }
    return hi / lo;
  }();
  report(5, r.gain_over_range >= 1.8 && r.gain_over_range == grid_gain,
         fmt("gain_over_range at L1=750um = %.4f (>= 1.8)", r.gain_over_range));
}

// Every (L1, ratio, gap) combination of the study.
std::vector<ActuatorSpec> study_grid() {
  std::vector<ActuatorSpec> out;
  const auto ratios = study::linspace(study::kRatioMin, study::kRatioMax, study::kDefaultRatioGrid);
  const auto gaps = study::linspace(5e-6, 10e-6, study::kDefaultGapGrid);
  for (double L1 : kHotArms) {
    for (double ratio : ratios) {
      for (double gap : gaps) out.push_back(study_point(L1, ratio, gap));
    }
  }
  return out;
}

void thermal_oracle(const std::vector<ActuatorSpec>& grid) {
  double worst = 0.0;
  for (const auto& spec : grid) worst = std::max(worst, verification::thermal_oracle_error(validate(spec), 4097));
  auto adiabatic = default_spec();
  adiabatic.environment.convection_coefficient = 0.0;
  const double parabola = verification::thermal_oracle_error(validate(adiabatic), 4097);
  report(6, worst <= 1e-3 && parabola <= 1e-9,
         fmt("max FD error over %zu points = %.3e (<= 1e-3); beta=0 parabola error = %.3e (<= 1e-9)",
             grid.size(), worst, parabola));
}

void mechanical_oracle(const std::vector<ActuatorSpec>& grid) {
  double worst = 0.0;
  double worst_convergence = 0.0;
  for (const auto& spec : grid) {
    const auto v = validate(spec);
    const auto cmp = verification::mechanical_oracle_error(v, 64);
    worst = std::max(worst, cmp.tip_error);
    const auto coarse = thermomech::stiffness_oracle(v, 16);
    worst_convergence = std::max(worst_convergence,
                                 relative(coarse.tip_deflection, cmp.stiffness.tip_deflection));
  }
  report(7, worst <= 0.02 && worst_convergence <= 0.005,
         fmt("max force-method vs stiffness error = %.3e (<= 2e-2); 16 vs 64 elements = %.3e (<= 5e-3)", worst,
             worst_convergence));
}

void exact_scalings() {
  const auto d = [](const ActuatorSpec& s) { return thermomech::simulate(validate(s)).tip_deflection; };
  auto spec = default_spec();

  spec.drive.voltage = 2.0;
  const double d2 = d(spec);
  spec.drive.voltage = 4.0;
  const double d4 = d(spec);
  spec.drive.voltage = 8.0;
  const double d8 = d(spec);
  const double square = std::max(relative(d4, 4.0 * d2), relative(d8, 16.0 * d2));

  double modulus = 0.0;
  for (double c : {0.37, 2.5, 10.0}) {
    auto stiff = default_spec();
    stiff.material.young_modulus *= c;
    modulus = std::max(modulus, relative(d(stiff), d8));
  }

  auto equal = default_spec();
  equal.geometry.cold_arm_length = equal.geometry.hot_arm_length;
  const double symmetric = std::abs(d(equal)) / equal.geometry.hot_arm_length;

  auto off = default_spec();
  off.drive.voltage = 0.0;
  const auto z = thermomech::simulate(validate(off));
  bool all_zero = z.tip_deflection == 0.0 && z.junction_deflection == 0.0 && z.junction_rotation == 0.0 &&
                  z.thermal_load.hot_elongation == 0.0 && z.thermal_load.cold_elongation == 0.0 &&
                  z.redundants.axial == 0.0 && z.redundants.transverse == 0.0 && z.redundants.moment == 0.0 &&
                  z.peak_temperature == off.environment.ambient_temperature;
  for (const auto& m : z.moments) all_zero = all_zero && m.moment_start == 0.0 && m.moment_end == 0.0 && m.axial == 0.0;

  report(8, square <= 1e-9 && modulus <= 1e-10 && symmetric <= 1e-12 && all_zero,
         fmt("V^2 %.2e (<= 1e-9); E scaling %.2e (<= 1e-10); L1=L2 |d|/L1 %.2e (<= 1e-12); V=0 all zero: %s",
             square, modulus, symmetric, all_zero ? "yes" : "no"));
}

void flexibility_properties() {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto material = default_spec().material;
  double worst_asymmetry = 0.0;
  int indefinite = 0;
  for (int n = 0; n < 1000; ++n) {
    Geometry g;
    g.hot_arm_length = (200.0 + 1000.0 * u(rng)) * 1e-6;
    g.cold_arm_length = (0.02 + 0.98 * u(rng)) * g.hot_arm_length;
    g.gap = (1.0 + 29.0 * u(rng)) * 1e-6;
    g.beam_width = (0.5 + 9.5 * u(rng)) * 1e-6;
    g.beam_thickness = (0.5 + 4.5 * u(rng)) * 1e-6;
    g.extension_length = (5.0 + 195.0 * u(rng)) * 1e-6;
    auto spec = default_spec();
    spec.geometry = g;
    const auto v = validate(spec);
    const auto f = thermomech::flexibility_matrix(thermomech::build_frame(v.geometry(), material));
    worst_asymmetry = std::max(worst_asymmetry, f.asymmetry() / f.max_abs());
    if (!f.positive_definite()) ++indefinite;
  }
  report(9, worst_asymmetry <= 1e-12 && indefinite == 0,
         fmt("1000 random frames: max asymmetry %.2e (<= 1e-12), %d not positive definite", worst_asymmetry,
             indefinite));
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism(Clock::time_point suite_start) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("thermoact_acceptance_" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  std::vector<std::pair<std::string, std::string>> outputs;
  bool ran = true;
  for (int run = 0; run < 2; ++run) {
    const auto csv = (dir / ("run" + std::to_string(run) + ".csv")).string();
    const auto svg = (dir / ("run" + std::to_string(run) + ".svg")).string();
    std::ostringstream out, err;
    ran = ran && cli::run({"sweep", "--param", "ratio", "--from", "0.1", "--to", "0.8", "--steps", "71", "--out", csv,
                           "--svg", svg},
                          out, err) == cli::kSuccess;
    outputs.emplace_back(slurp(csv), slurp(svg));
  }
  std::error_code ec;
  std::filesystem::remove_all(dir, ec);
  const bool identical = ran && !outputs[0].first.empty() && outputs[0] == outputs[1];
  const double elapsed = seconds_since(suite_start);
  report(10, identical && elapsed < 30.0,
         fmt("repeated sweeps bit-identical: %s; suite time %.2f s (< 30 s)", identical ? "yes" : "no", elapsed));
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const auto grid = study_grid();
  const std::vector<void (*)()> simple = {optimal_ratio, gap_monotonicity, hot_arm_monotonicity,
                                          sensitivity_ordering, optimum_gain};
  try {
    for (auto* check : simple) check();
    thermal_oracle(grid);
    mechanical_oracle(grid);
    exact_scalings();
    flexibility_properties();
    determinism(start);
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
