#pragma once

// One-parameter geometry and drive studies over the simulate() pipeline.

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thermoact/model.hpp"
#include "thermoact/thermomech.hpp"

namespace thermoact::study {

enum class Parameter { voltage, ratio, gap, hot_arm_length };

std::string_view to_string(Parameter parameter);
/// Throws std::invalid_argument for unknown names.
Parameter parse_parameter(std::string_view name);

/// Copy of `base` with `parameter` set to `value` (SI). A hot-arm sweep keeps
/// the base L2/L1 ratio; a ratio sweep keeps L1.
ActuatorSpec apply(const ActuatorSpec& base, Parameter parameter, double value);

struct SweepPlan {
  ActuatorSpec base;
  Parameter parameter = Parameter::ratio;
  std::vector<double> values;  // SI, strictly increasing
};

struct SweepRecord {
  double value = 0.0;
  double tip_deflection = 0.0;
  double junction_deflection = 0.0;
  double junction_rotation = 0.0;
  double hot_elongation = 0.0;
  double cold_elongation = 0.0;
  double peak_temperature = 0.0;

  bool operator==(const SweepRecord&) const = default;
};

struct SweepTable {
  SweepPlan plan;
  std::vector<SweepRecord> records;  // one per plan value, same order
};

/// Raised before any evaluation when a plan is malformed or one of its
/// induced specs fails validation.
class PlanError : public std::invalid_argument {
 public:
  PlanError(const std::string& what, double offending_value);
  double offending_value() const noexcept { return value_; }

 private:
  double value_;
};

struct SweepOptions {
  thermomech::FrameOptions frame;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// `count` evenly spaced values from `from` to `to`; count == 1 yields {from}.
std::vector<double> linspace(double from, double to, std::size_t count);

inline constexpr double kRatioMin = 0.1;
inline constexpr double kRatioMax = 0.8;
inline constexpr std::size_t kDefaultRatioGrid = 71;
inline constexpr std::size_t kDefaultGapGrid = 6;
inline constexpr std::size_t kDefaultVoltageGrid = 17;

SweepPlan ratio_plan(const ActuatorSpec& base, std::size_t points = kDefaultRatioGrid);
SweepPlan gap_plan(const ActuatorSpec& base, std::size_t points = kDefaultGapGrid);        // 5..10 um
SweepPlan voltage_plan(const ActuatorSpec& base, std::size_t points = kDefaultVoltageGrid);  // 0..8 V

/// Throws PlanError on an invalid plan; solver errors propagate unchanged.
/// Points may be evaluated concurrently; the table order follows the plan.
SweepTable run_sweep(const SweepPlan& plan, const SweepOptions& options = {});

/// Golden-section search for the maximum of `f` on [lo, hi]; stops when the
/// bracket is narrower than `tolerance`. Returns the bracket midpoint.
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tolerance);

enum class OptimumStatus {
  refined,       // unimodal grid, golden-section refined
  flat,          // every grid sample equal; grid argmax reported
  non_unimodal,  // more than one grid peak; grid argmax reported
};

std::string_view to_string(OptimumStatus status);

struct OptimumReport {
  double hot_arm_length = 0.0;
  double optimal_ratio = 0.0;
  double optimal_tip_deflection = 0.0;
  double grid_resolution = 0.0;
  double gain_over_range = 0.0;  // max / min grid d_tip; 1 for a flat grid
  OptimumStatus status = OptimumStatus::refined;
};

inline constexpr double kRatioTolerance = 1e-4;

/// Scan L2/L1 over `grid` points of [lo, hi], then refine the grid peak by
/// golden section within its neighbouring grid interval.
/// Throws std::invalid_argument unless 0 < lo < hi < 1 and grid >= 8.
OptimumReport find_optimal_ratio(const ActuatorSpec& base, double lo = kRatioMin,
                                 double hi = kRatioMax, std::size_t grid = kDefaultRatioGrid,
                                 const thermomech::FrameOptions& options = {});

struct Spread {
  double hot_arm_length = 0.0;
  double spread = 0.0;  // max d_tip - min d_tip
};

/// Spreads ordered by hot-arm length. Throws std::invalid_argument when the
/// tables do not share the swept parameter and values.
std::vector<Spread> sensitivity_summary(std::span<const SweepTable> tables);

}  // namespace thermoact::study
