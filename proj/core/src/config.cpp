#include "thermoact/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

namespace thermoact::config {
namespace {

enum class Kind { si, micrometre, integer, boolean };

struct Entry {
  std::string_view key;
  Kind kind;
  double& (*real)(Config&) = nullptr;
  int& (*integer)(Config&) = nullptr;
  bool& (*flag)(Config&) = nullptr;
};

constexpr Entry real_entry(std::string_view key, Kind kind, double& (*get)(Config&)) {
  return {key, kind, get, nullptr, nullptr};
}

// clang-format off
const std::array<Entry, 23> kEntries = {{
  real_entry("material.young_modulus", Kind::si, [](Config& c) -> double& { return c.spec.material.young_modulus; }),
  real_entry("material.poisson_ratio", Kind::si, [](Config& c) -> double& { return c.spec.material.poisson_ratio; }),
  real_entry("material.density", Kind::si, [](Config& c) -> double& { return c.spec.material.density; }),
  real_entry("material.thermal_conductivity", Kind::si, [](Config& c) -> double& { return c.spec.material.thermal_conductivity; }),
  real_entry("material.expansion_coefficient", Kind::si, [](Config& c) -> double& { return c.spec.material.expansion_coefficient; }),
  real_entry("material.specific_heat", Kind::si, [](Config& c) -> double& { return c.spec.material.specific_heat; }),
  real_entry("material.resistivity", Kind::si, [](Config& c) -> double& { return c.spec.material.resistivity; }),
  real_entry("environment.convection_coefficient", Kind::si, [](Config& c) -> double& { return c.spec.environment.convection_coefficient; }),
  real_entry("environment.ambient_temperature", Kind::si, [](Config& c) -> double& { return c.spec.environment.ambient_temperature; }),
  real_entry("geometry.hot_arm_length", Kind::micrometre, [](Config& c) -> double& { return c.spec.geometry.hot_arm_length; }),
  real_entry("geometry.cold_arm_length", Kind::micrometre, [](Config& c) -> double& { return c.spec.geometry.cold_arm_length; }),
  real_entry("geometry.gap", Kind::micrometre, [](Config& c) -> double& { return c.spec.geometry.gap; }),
  real_entry("geometry.beam_width", Kind::micrometre, [](Config& c) -> double& { return c.spec.geometry.beam_width; }),
  real_entry("geometry.beam_thickness", Kind::micrometre, [](Config& c) -> double& { return c.spec.geometry.beam_thickness; }),
  real_entry("geometry.extension_length", Kind::micrometre, [](Config& c) -> double& { return c.spec.geometry.extension_length; }),
  real_entry("geometry.pad_side", Kind::micrometre, [](Config& c) -> double& { return c.spec.geometry.pad_side; }),
  real_entry("drive.voltage", Kind::si, [](Config& c) -> double& { return c.spec.drive.voltage; }),
  real_entry("study.ratio_min", Kind::si, [](Config& c) -> double& { return c.study.ratio_min; }),
  real_entry("study.ratio_max", Kind::si, [](Config& c) -> double& { return c.study.ratio_max; }),
  {"study.ratio_grid", Kind::integer, nullptr, [](Config& c) -> int& { return c.study.ratio_grid; }, nullptr},
  {"study.fd_nodes", Kind::integer, nullptr, [](Config& c) -> int& { return c.study.fd_nodes; }, nullptr},
  {"study.stiffness_elements", Kind::integer, nullptr, [](Config& c) -> int& { return c.study.stiffness_elements; }, nullptr},
  {"study.bending_only", Kind::boolean, nullptr, nullptr, [](Config& c) -> bool& { return c.study.bending_only; }},
}};
// clang-format on

const std::set<std::string_view> kSections = {"material", "environment", "geometry", "drive", "study"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double read_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw std::invalid_argument("'" + std::string(text) + "' is not a number");
  }
  return value;
}

std::string join(const std::vector<ConfigDiagnostic>& diagnostics) {
  std::ostringstream out;
  out << "invalid configuration:";
  for (const auto& d : diagnostics) {
    out << "\n  ";
    if (d.line > 0) out << "line " << d.line << ", column " << d.column << ": ";
    out << d.message;
  }
  return out.str();
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigDiagnostic> diagnostics)
    : std::invalid_argument(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::string format_exact(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_scaled(double value, int shift) {
  if (value == 0.0 || !std::isfinite(value)) return format_exact(value);
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::scientific);
  const std::string sci(buf.data(), ptr);
  const auto e_pos = sci.find('e');
  std::string mantissa = sci.substr(0, e_pos);
  const int exponent = std::stoi(sci.substr(e_pos + 1)) + shift;

  const bool negative = mantissa.front() == '-';
  if (negative) mantissa.erase(0, 1);
  std::string digits;
  for (char ch : mantissa) {
    if (ch != '.') digits.push_back(ch);
  }

  if (exponent < -6 || exponent > 15) {
    std::string out = negative ? "-" : "";
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
      out += '.';
      out += digits.substr(1);
    }
    out += 'e';
    out += std::to_string(exponent);
    return out;
  }

  // value = 0.<digits> * 10^point
  const int point = exponent + 1;
  const auto count = static_cast<int>(digits.size());
  std::string out = negative ? "-" : "";
  if (point <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-point), '0');
    out += digits;
  } else if (point >= count) {
    out += digits;
    out.append(static_cast<std::size_t>(point - count), '0');
  } else {
    out += digits.substr(0, static_cast<std::size_t>(point));
    out += '.';
    out += digits.substr(static_cast<std::size_t>(point));
  }
  return out;
}

double read_scaled(std::string_view text, int shift) {
  read_double(text);  // syntax check on the literal as written
  if (shift == 0) return read_double(text);
  const auto e_pos = text.find_first_of("eE");
  long exponent = 0;
  std::string_view mantissa = text;
  if (e_pos != std::string_view::npos) {
    mantissa = text.substr(0, e_pos);
    exponent = std::stol(std::string(text.substr(e_pos + 1)));
  }
  const std::string shifted = std::string(mantissa) + "e" + std::to_string(exponent + shift);
  return read_double(shifted);
}

Config parse_config(std::string_view text) {
  Config config;
  std::vector<ConfigDiagnostic> diagnostics;
  std::map<std::string, std::size_t> key_lines;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto newline = text.find('\n', start);
    const auto raw = text.substr(start, newline == std::string_view::npos ? text.size() - start
                                                                          : newline - start);
    start = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
    ++line_no;

    const auto hash = raw.find('#');
    const auto content = trim(raw.substr(0, hash));
    if (content.empty()) continue;
    const std::size_t content_col = static_cast<std::size_t>(content.data() - raw.data()) + 1;

    const auto eq = content.find('=');
    if (eq == std::string_view::npos) {
      diagnostics.push_back({line_no, content_col, "expected 'section.key = value'"});
      continue;
    }
    const auto key = trim(content.substr(0, eq));
    const auto value = trim(content.substr(eq + 1));
    const std::size_t value_col =
        value.empty() ? content_col + eq + 1 : static_cast<std::size_t>(value.data() - raw.data()) + 1;

    const auto dot = key.find('.');
    if (key.empty() || dot == std::string_view::npos) {
      diagnostics.push_back({line_no, content_col, "key '" + std::string(key) + "' is not of the form section.key"});
      continue;
    }
    if (!kSections.contains(key.substr(0, dot))) {
      diagnostics.push_back({line_no, content_col, "unknown section '" + std::string(key.substr(0, dot)) + "'"});
      continue;
    }
    const Entry* entry = nullptr;
    for (const auto& e : kEntries) {
      if (e.key == key) entry = &e;
    }
    if (entry == nullptr) {
      diagnostics.push_back({line_no, content_col, "unknown key '" + std::string(key) + "'"});
      continue;
    }
    if (const auto [it, inserted] = key_lines.emplace(std::string(key), line_no); !inserted) {
      diagnostics.push_back({line_no, content_col,
                             "duplicate key '" + std::string(key) + "' (first set on line " +
                                 std::to_string(it->second) + ")"});
      continue;
    }
    if (value.empty()) {
      diagnostics.push_back({line_no, value_col, "missing value for '" + std::string(key) + "'"});
      continue;
    }

    try {
      switch (entry->kind) {
        case Kind::si: entry->real(config) = read_scaled(value, 0); break;
        case Kind::micrometre: entry->real(config) = read_scaled(value, -6); break;
        case Kind::integer: {
          int v = 0;
          const auto* end = value.data() + value.size();
          const auto [ptr, ec] = std::from_chars(value.data(), end, v);
          if (ec != std::errc{} || ptr != end) {
            throw std::invalid_argument("'" + std::string(value) + "' is not an integer");
          }
          entry->integer(config) = v;
          break;
        }
        case Kind::boolean:
          if (value == "true") {
            entry->flag(config) = true;
          } else if (value == "false") {
            entry->flag(config) = false;
          } else {
            throw std::invalid_argument("'" + std::string(value) + "' is not true or false");
          }
          break;
      }
    } catch (const std::invalid_argument& e) {
      diagnostics.push_back({line_no, value_col, std::string(key) + ": " + e.what()});
    } catch (const std::out_of_range&) {
      diagnostics.push_back({line_no, value_col, std::string(key) + ": value out of range"});
    }
  }

  const auto line_of = [&](const std::string& field) -> std::pair<std::size_t, std::size_t> {
    const auto it = key_lines.find(field);
    return it == key_lines.end() ? std::pair<std::size_t, std::size_t>{0, 0}
                                 : std::pair<std::size_t, std::size_t>{it->second, 1};
  };
  for (const auto& d : check(config.spec)) {
    const auto [line, col] = line_of(d.field);
    diagnostics.push_back({line, col, d.field + ": " + d.message});
  }

  const auto& s = config.study;
  const auto study_error = [&](const std::string& field, const std::string& message) {
    const auto [line, col] = line_of(field);
    diagnostics.push_back({line, col, field + ": " + message});
  };
  if (!(s.ratio_min > 0.0 && s.ratio_min < s.ratio_max && s.ratio_max < 1.0)) {
    study_error("study.ratio_min", "ratio range must satisfy 0 < ratio_min < ratio_max < 1");
  }
  if (s.ratio_grid < 8) study_error("study.ratio_grid", "ratio_grid must be at least 8");
  if (s.fd_nodes < 3) study_error("study.fd_nodes", "fd_nodes must be at least 3");
  if (s.stiffness_elements < 1) study_error("study.stiffness_elements", "stiffness_elements must be at least 1");

  if (!diagnostics.empty()) throw ConfigError(std::move(diagnostics));
  return config;
}

std::string serialize_config(const Config& config) {
  Config copy = config;
  std::ostringstream out;
  std::string_view section;
  for (std::size_t k = 0; k < kEntries.size(); ++k) {
    const auto& e = kEntries[k];
    const auto this_section = e.key.substr(0, e.key.find('.'));
    if (this_section != section) {
      if (!section.empty()) out << '\n';
      out << "# " << this_section << (this_section == "geometry" ? " (micrometres)" : "") << '\n';
      section = this_section;
    }
    out << e.key << " = ";
    switch (e.kind) {
      case Kind::si: out << format_exact(e.real(copy)); break;
      case Kind::micrometre: out << format_scaled(e.real(copy), 6); break;
      case Kind::integer: out << e.integer(copy); break;
      case Kind::boolean: out << (e.flag(copy) ? "true" : "false"); break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace thermoact::config
