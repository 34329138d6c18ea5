#include "thermoact/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <string_view>

namespace thermoact::report {
namespace {

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value + 0.0, std::chars_format::fixed, decimals);
  return std::string(buf.data(), ptr);
}

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string format_significant(double value, int digits) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value + 0.0, std::chars_format::general, digits);
  return std::string(buf.data(), ptr);
}

double display_value(study::Parameter parameter, double si_value) {
  switch (parameter) {
    case study::Parameter::gap:
    case study::Parameter::hot_arm_length: return si_value * 1e6;
    case study::Parameter::voltage:
    case study::Parameter::ratio: return si_value;
  }
  return si_value;
}

double from_display(study::Parameter parameter, double display) {
  switch (parameter) {
    case study::Parameter::gap:
    case study::Parameter::hot_arm_length: return display * 1e-6;
    case study::Parameter::voltage:
    case study::Parameter::ratio: return display;
  }
  return display;
}

std::string display_unit(study::Parameter parameter) {
  switch (parameter) {
    case study::Parameter::gap:
    case study::Parameter::hot_arm_length: return "um";
    case study::Parameter::voltage: return "V";
    case study::Parameter::ratio: return "";
  }
  return "";
}

std::string sweep_csv(const study::SweepTable& table) {
  const auto name = study::to_string(table.plan.parameter);
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : table.records) {
    out += name;
    for (double v : {display_value(table.plan.parameter, r.value), r.tip_deflection * 1e6,
                     r.junction_deflection * 1e6, r.junction_rotation * 1e3, r.hot_elongation * 1e6,
                     r.cold_elongation * 1e6, r.peak_temperature}) {
      out += ',';
      out += format_significant(v);
    }
    out += '\n';
  }
  return out;
}

std::string sweep_svg(const study::SweepTable& table) {
  constexpr double left = 90.0;
  constexpr double right = kSvgWidth - 40.0;
  constexpr double top = 40.0;
  constexpr double bottom = kSvgHeight - 70.0;

  const auto parameter = table.plan.parameter;
  std::vector<std::pair<double, double>> points;
  points.reserve(table.records.size());
  for (const auto& r : table.records) {
    points.emplace_back(display_value(parameter, r.value), r.tip_deflection * 1e6);
  }

  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  if (!points.empty()) {
    const auto [xlo, xhi] = std::minmax_element(points.begin(), points.end(),
                                                [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto [ylo, yhi] = std::minmax_element(points.begin(), points.end(),
                                                [](const auto& a, const auto& b) { return a.second < b.second; });
    x_min = xlo->first;
    x_max = xhi->first;
    y_min = ylo->second;
    y_max = yhi->second;
  }
  const double x_span = x_max > x_min ? x_max - x_min : 1.0;
  const double y_span = y_max > y_min ? y_max - y_min : 1.0;
  const auto sx = [&](double x) { return left + (x - x_min) / x_span * (right - left); };
  const auto sy = [&](double y) { return bottom - (y - y_min) / y_span * (bottom - top); };

  const std::string unit = display_unit(parameter);
  const std::string x_title = std::string(study::to_string(parameter)) + (unit.empty() ? "" : " (" + unit + ")");

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(kSvgWidth) +
         "\" height=\"" + std::to_string(kSvgHeight) + "\" viewBox=\"0 0 " + std::to_string(kSvgWidth) + " " +
         std::to_string(kSvgHeight) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(kSvgWidth) + "\" height=\"" +
         std::to_string(kSvgHeight) + "\" fill=\"white\"/>\n";
  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + format_fixed(left, 2) + "\" y1=\"" + format_fixed(bottom, 2) + "\" x2=\"" +
         format_fixed(right, 2) + "\" y2=\"" + format_fixed(bottom, 2) + "\"/>\n";
  out += "<line x1=\"" + format_fixed(left, 2) + "\" y1=\"" + format_fixed(bottom, 2) + "\" x2=\"" +
         format_fixed(left, 2) + "\" y2=\"" + format_fixed(top, 2) + "\"/>\n";
  out += "</g>\n";

  out += "<g font-family=\"sans-serif\" font-size=\"14\" fill=\"black\">\n";
  out += "<text x=\"" + format_fixed(left, 2) + "\" y=\"" + format_fixed(bottom + 22, 2) +
         "\" text-anchor=\"start\">" + format_significant(x_min, 6) + "</text>\n";
  out += "<text x=\"" + format_fixed(right, 2) + "\" y=\"" + format_fixed(bottom + 22, 2) +
         "\" text-anchor=\"end\">" + format_significant(x_max, 6) + "</text>\n";
  out += "<text x=\"" + format_fixed(left - 8, 2) + "\" y=\"" + format_fixed(bottom, 2) +
         "\" text-anchor=\"end\">" + format_significant(y_min, 6) + "</text>\n";
  out += "<text x=\"" + format_fixed(left - 8, 2) + "\" y=\"" + format_fixed(top + 5, 2) +
         "\" text-anchor=\"end\">" + format_significant(y_max, 6) + "</text>\n";
  out += "<text x=\"" + format_fixed(0.5 * (left + right), 2) + "\" y=\"" + format_fixed(bottom + 50, 2) +
         "\" text-anchor=\"middle\">" + escape(x_title) + "</text>\n";
  out += "<text x=\"20\" y=\"" + format_fixed(0.5 * (top + bottom), 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " + format_fixed(0.5 * (top + bottom), 2) +
         ")\">d_tip (um)</text>\n";
  out += "</g>\n";

  out += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k > 0) out += ' ';
    out += format_fixed(sx(points[k].first), 2);
    out += ',';
    out += format_fixed(sy(points[k].second), 2);
  }
  out += "\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace thermoact::report
