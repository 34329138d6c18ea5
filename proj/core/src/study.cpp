#include "thermoact/study.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace thermoact::study {

std::string_view to_string(Parameter parameter) {
  switch (parameter) {
    case Parameter::voltage: return "voltage";
    case Parameter::ratio: return "ratio";
    case Parameter::gap: return "gap";
    case Parameter::hot_arm_length: return "hot_arm_length";
  }
  return "unknown";
}

Parameter parse_parameter(std::string_view name) {
  for (auto p : {Parameter::voltage, Parameter::ratio, Parameter::gap, Parameter::hot_arm_length}) {
    if (to_string(p) == name) return p;
  }
  throw std::invalid_argument("unknown sweep parameter '" + std::string(name) +
                              "' (expected voltage, ratio, gap or hot_arm_length)");
}

std::string_view to_string(OptimumStatus status) {
  switch (status) {
    case OptimumStatus::refined: return "refined";
    case OptimumStatus::flat: return "flat";
    case OptimumStatus::non_unimodal: return "non_unimodal";
  }
  return "unknown";
}

ActuatorSpec apply(const ActuatorSpec& base, Parameter parameter, double value) {
  ActuatorSpec spec = base;
  auto& geo = spec.geometry;
  switch (parameter) {
    case Parameter::voltage:
      spec.drive.voltage = value;
      break;
    case Parameter::ratio:
      geo.cold_arm_length = value * geo.hot_arm_length;
      break;
    case Parameter::gap:
      geo.gap = value;
      break;
    case Parameter::hot_arm_length: {
      const double ratio = base.geometry.length_ratio();
      geo.hot_arm_length = value;
      geo.cold_arm_length = ratio * value;
      break;
    }
  }
  return spec;
}

PlanError::PlanError(const std::string& what, double offending_value)
    : std::invalid_argument(what), value_(offending_value) {}

std::vector<double> linspace(double from, double to, std::size_t count) {
  std::vector<double> out;
  if (count == 0) return out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(from);
    return out;
  }
  const double step = (to - from) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k + 1 < count; ++k) out.push_back(from + step * static_cast<double>(k));
  out.push_back(to);
  return out;
}

SweepPlan ratio_plan(const ActuatorSpec& base, std::size_t points) {
  return {base, Parameter::ratio, linspace(kRatioMin, kRatioMax, points)};
}

SweepPlan gap_plan(const ActuatorSpec& base, std::size_t points) {
  return {base, Parameter::gap, linspace(5e-6, 10e-6, points)};
}

SweepPlan voltage_plan(const ActuatorSpec& base, std::size_t points) {
  return {base, Parameter::voltage, linspace(0.0, 8.0, points)};
}

namespace {

std::vector<ValidatedSpec> induce(const SweepPlan& plan) {
  if (plan.values.empty()) {
    throw PlanError("sweep plan has no values", std::nan(""));
  }
  std::vector<ValidatedSpec> specs;
  specs.reserve(plan.values.size());
  for (std::size_t k = 0; k < plan.values.size(); ++k) {
    const double v = plan.values[k];
    if (k > 0 && !(v > plan.values[k - 1])) {
      throw PlanError("sweep values must be strictly increasing", v);
    }
    try {
      specs.push_back(validate(apply(plan.base, plan.parameter, v)));
    } catch (const ValidationError& e) {
      throw PlanError(std::string(to_string(plan.parameter)) + " = " + std::to_string(v) +
                          " induces an invalid spec: " + e.what(),
                      v);
    }
  }
  return specs;
}

SweepRecord summarize(double value, const thermomech::FrameSolution& s) {
  return {value,
          s.tip_deflection,
          s.junction_deflection,
          s.junction_rotation,
          s.thermal_load.hot_elongation,
          s.thermal_load.cold_elongation,
          s.peak_temperature};
}

}  // namespace

SweepTable run_sweep(const SweepPlan& plan, const SweepOptions& options) {
  const auto specs = induce(plan);
  const std::size_t n = specs.size();

  SweepTable table{plan, std::vector<SweepRecord>(n)};
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(n));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failure_index = n;
  std::mutex failure_mutex;

  const auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        table.records[k] = summarize(plan.values[k], thermomech::simulate(specs[k], options.frame));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        // Report the first failing point in plan order, not in finishing order.
        if (k < failure_index) {
          failure_index = k;
          failure = std::current_exception();
        }
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tolerance) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

OptimumReport find_optimal_ratio(const ActuatorSpec& base, double lo, double hi, std::size_t grid,
                                 const thermomech::FrameOptions& options) {
  if (!(lo > 0.0 && lo < hi && hi < 1.0)) {
    throw std::invalid_argument("ratio interval must satisfy 0 < lo < hi < 1");
  }
  if (grid < 8) {
    throw std::invalid_argument("ratio grid needs at least 8 points");
  }

  const auto objective = [&](double ratio) {
    return thermomech::simulate(validate(apply(base, Parameter::ratio, ratio)), options).tip_deflection;
  };

  const auto ratios = linspace(lo, hi, grid);
  std::vector<double> samples;
  samples.reserve(grid);
  for (double r : ratios) samples.push_back(objective(r));

  const auto [min_it, max_it] = std::minmax_element(samples.begin(), samples.end());
  const auto best = static_cast<std::size_t>(std::distance(samples.begin(), max_it));

  OptimumReport report;
  report.hot_arm_length = base.geometry.hot_arm_length;
  report.grid_resolution = (hi - lo) / static_cast<double>(grid - 1);
  report.optimal_ratio = ratios[best];
  report.optimal_tip_deflection = *max_it;

  if (*max_it == *min_it) {
    report.gain_over_range = 1.0;
    report.status = OptimumStatus::flat;
    return report;
  }
  report.gain_over_range = *max_it / *min_it;

  // Peaks: places where the sampled curve turns from rising to falling,
  // counting a rising edge into the last sample or a falling edge out of
  // the first as a peak at the boundary.
  int peaks = 0;
  int trend = 0;  // +1 rising, -1 falling, 0 not yet known
  for (std::size_t k = 1; k < grid; ++k) {
    const double step = samples[k] - samples[k - 1];
    if (step == 0.0) continue;
    const int dir = step > 0.0 ? 1 : -1;
    if (dir < 0 && trend >= 0) ++peaks;
    trend = dir;
  }
  if (trend > 0) ++peaks;
  if (peaks > 1) {
    report.status = OptimumStatus::non_unimodal;
    return report;
  }

  const double left = ratios[best == 0 ? 0 : best - 1];
  const double right = ratios[std::min(best + 1, grid - 1)];
  const double refined = golden_section_maximize(objective, left, right, kRatioTolerance);
  const double refined_value = objective(refined);
  if (refined_value >= *max_it) {
    report.optimal_ratio = refined;
    report.optimal_tip_deflection = refined_value;
  }
  report.status = OptimumStatus::refined;
  return report;
}

std::vector<Spread> sensitivity_summary(std::span<const SweepTable> tables) {
  std::vector<Spread> out;
  out.reserve(tables.size());
  for (const auto& table : tables) {
    const auto& first = tables.front().plan;
    if (table.plan.parameter != first.parameter || table.plan.values != first.values) {
      throw std::invalid_argument("sensitivity summary needs tables over the same swept values");
    }
    if (table.records.empty()) {
      throw std::invalid_argument("sensitivity summary given an empty table");
    }
    const auto [lo, hi] = std::minmax_element(
        table.records.begin(), table.records.end(),
        [](const SweepRecord& a, const SweepRecord& b) { return a.tip_deflection < b.tip_deflection; });
    out.push_back({table.plan.base.geometry.hot_arm_length, hi->tip_deflection - lo->tip_deflection});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Spread& a, const Spread& b) { return a.hot_arm_length < b.hot_arm_length; });
  return out;
}

}  // namespace thermoact::study
