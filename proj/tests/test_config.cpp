#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "thermoact/config.hpp"

using namespace thermoact;
using namespace thermoact::config;

namespace {

std::vector<ConfigDiagnostic> diagnostics_of(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.diagnostics();
  }
  return {};
}

bool has(const std::vector<ConfigDiagnostic>& ds, std::size_t line, std::size_t column, std::string_view text) {
  return std::any_of(ds.begin(), ds.end(), [&](const ConfigDiagnostic& d) {
    return d.line == line && d.column == column && d.message.find(text) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("empty documents give the defaults") {
  const Config defaults;
  CHECK(parse_config("") == defaults);
  CHECK(parse_config("\n\n   \n# only a comment\n") == defaults);
  CHECK(parse_config("").spec == default_spec());
}

TEST_CASE("geometry is read in micrometres") {
  const auto c = parse_config("geometry.hot_arm_length = 750\n");
  CHECK(c.spec.geometry.hot_arm_length == 7.5e-4);
  CHECK(parse_config("geometry.gap = 5.5").spec.geometry.gap == 5.5e-6);
  CHECK(parse_config("geometry.beam_width = 2.8  # width").spec.geometry.beam_width == 2.8e-6);
  CHECK(parse_config("geometry.gap = 0.5e1").spec.geometry.gap == 5e-6);
}

TEST_CASE("SI sections are read as written") {
  const auto c = parse_config(
      "material.young_modulus = 160e9\n"
      "environment.convection_coefficient = 0\n"
      "drive.voltage = 4   # volts\n"
      "study.ratio_grid = 101\n"
      "study.bending_only = true\n");
  CHECK(c.spec.material.young_modulus == 160e9);
  CHECK(c.spec.environment.convection_coefficient == 0.0);
  CHECK(c.spec.drive.voltage == 4.0);
  CHECK(c.study.ratio_grid == 101);
  CHECK(c.study.bending_only);
}

TEST_CASE("spec invariants surface as diagnostics") {
  const auto ds = diagnostics_of("geometry.hot_arm_length = 750\ngeometry.cold_arm_length = 800\n");
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].line == 2);
  CHECK(ds[0].message.find("cold_arm_length exceeds hot_arm_length") != std::string::npos);
}

TEST_CASE("syntax and key errors carry line and column") {
  const auto ds = diagnostics_of(
      "drive.voltage = 8\n"
      "  geometry.hot_arm = 3\n"
      "bogus.key = 1\n"
      "drive.voltage = 9\n"
      "just some words\n"
      "material.density = 2.3.4\n"
      "study.ratio_grid = 7.5\n"
      "study.bending_only = yes\n"
      "geometry.gap =\n"
      "voltage = 8\n");
  CHECK(ds.size() == 9);
  CHECK(has(ds, 2, 3, "unknown key 'geometry.hot_arm'"));
  CHECK(has(ds, 3, 1, "unknown section 'bogus'"));
  CHECK(has(ds, 4, 1, "duplicate key 'drive.voltage' (first set on line 1)"));
  CHECK(has(ds, 5, 1, "expected 'section.key = value'"));
  CHECK(has(ds, 6, 20, "material.density"));
  CHECK(has(ds, 7, 20, "not an integer"));
  CHECK(has(ds, 8, 22, "not true or false"));
  CHECK(has(ds, 9, 15, "missing value"));
  CHECK(has(ds, 10, 1, "not of the form section.key"));
}

TEST_CASE("study settings are checked") {
  CHECK(!diagnostics_of("study.ratio_min = 0.9").empty());
  CHECK(!diagnostics_of("study.ratio_max = 1.0").empty());
  CHECK(!diagnostics_of("study.ratio_grid = 7").empty());
  CHECK(!diagnostics_of("study.fd_nodes = 2").empty());
  CHECK(!diagnostics_of("study.stiffness_elements = 0").empty());
  CHECK(diagnostics_of("study.ratio_min = 0.2\nstudy.ratio_max = 0.7").empty());
}

TEST_CASE("exact decimal formatting") {
  CHECK(format_exact(8.0) == "8");
  CHECK(format_exact(158e9) == "1.58e+11");
  CHECK(format_exact(2.7e-6) == "2.7e-06");
  CHECK(format_scaled(7.5e-4, 6) == "750");
  CHECK(format_scaled(2.8e-6, 6) == "2.8");
  CHECK(read_scaled("750", -6) == 7.5e-4);
  CHECK(read_scaled("-1.25e3", 0) == -1250.0);
  CHECK_THROWS_AS(read_scaled("abc", 0), std::invalid_argument);
  CHECK_THROWS_AS(read_scaled("1.0x", 0), std::invalid_argument);
  CHECK_THROWS_AS(read_scaled("", 0), std::invalid_argument);
}

TEST_CASE("property: scaled formatting reads back bit-exactly") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> mantissa(1.0, 10.0);
  std::uniform_int_distribution<int> exponent(-12, 12);
  for (int n = 0; n < 5000; ++n) {
    const double v = mantissa(rng) * std::pow(10.0, exponent(rng));
    for (int shift : {0, 6, -6, 3}) {
      CHECK(read_scaled(format_scaled(v, shift), -shift) == v);
    }
  }
}

TEST_CASE("serialize then parse is the identity") {
  const Config defaults;
  CHECK(parse_config(serialize_config(defaults)) == defaults);

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 500; ++n) {
    Config c;
    auto& s = c.spec;
    s.material.young_modulus = 100e9 + 100e9 * u(rng);
    s.material.poisson_ratio = 0.49 * u(rng);
    s.material.density = 1000.0 + 3000.0 * u(rng);
    s.material.thermal_conductivity = 10.0 + 100.0 * u(rng);
    s.material.expansion_coefficient = 1e-6 + 4e-6 * u(rng);
    s.material.specific_heat = 500.0 + 500.0 * u(rng);
    s.material.resistivity = 1e-5 + 1e-3 * u(rng);
    s.environment.convection_coefficient = 200.0 * u(rng);
    s.environment.ambient_temperature = -20.0 + 60.0 * u(rng);
    s.geometry.hot_arm_length = (300.0 + 700.0 * u(rng)) * 1e-6;
    s.geometry.cold_arm_length = s.geometry.hot_arm_length * (0.1 + 0.8 * u(rng));
    s.geometry.gap = (2.0 + 10.0 * u(rng)) * 1e-6;
    s.geometry.beam_width = (1.0 + 4.0 * u(rng)) * 1e-6;
    s.geometry.beam_thickness = (1.0 + 3.0 * u(rng)) * 1e-6;
    s.geometry.extension_length = (10.0 + 90.0 * u(rng)) * 1e-6;
    s.geometry.pad_side = (100.0 + 200.0 * u(rng)) * 1e-6;
    s.drive.voltage = 10.0 * u(rng);
    c.study.ratio_min = 0.05 + 0.2 * u(rng);
    c.study.ratio_max = 0.6 + 0.35 * u(rng);
    c.study.ratio_grid = 8 + static_cast<int>(200 * u(rng));
    c.study.fd_nodes = 3 + static_cast<int>(5000 * u(rng));
    c.study.stiffness_elements = 1 + static_cast<int>(100 * u(rng));
    c.study.bending_only = u(rng) < 0.5;

    const auto text = serialize_config(c);
    const auto back = parse_config(text);
    CHECK(back == c);
    CHECK(serialize_config(back) == text);
  }
}
