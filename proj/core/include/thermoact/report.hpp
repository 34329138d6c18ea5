#pragma once

// Deterministic text emitters for sweep tables. Output depends only on the
// table contents: no timestamps, no locale.

#include <string>

#include "thermoact/study.hpp"

namespace thermoact::report {

/// `value` with `digits` significant digits, '.' as the decimal point and
/// negative zero folded to zero.
std::string format_significant(double value, int digits = 9);

/// Swept value in display units: micrometres for lengths, volts, bare ratio.
double display_value(study::Parameter parameter, double si_value);
double from_display(study::Parameter parameter, double display);
std::string display_unit(study::Parameter parameter);

inline constexpr const char* kCsvHeader =
    "param_name,param_value,d_tip_um,u_um,theta_mrad,dl_hot_um,dl_cold_um,t_peak_c";

/// Header plus one row per record, '\n' line endings, 9 significant digits.
std::string sweep_csv(const study::SweepTable& table);

inline constexpr int kSvgWidth = 800;
inline constexpr int kSvgHeight = 600;

/// Single-polyline SVG 1.1 chart of d_tip against the swept value.
std::string sweep_svg(const study::SweepTable& table);

}  // namespace thermoact::report
