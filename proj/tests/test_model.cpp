#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "thermoact/model.hpp"

using namespace thermoact;

namespace {

bool mentions(const std::vector<Diagnostic>& ds, const std::string& field, const std::string& text) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) {
    return d.field == field && d.message.find(text) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("default spec carries the handbook polysilicon values") {
  const auto spec = default_spec();
  CHECK(spec.material.young_modulus == 158e9);
  CHECK(spec.material.poisson_ratio == 0.066);
  CHECK(spec.material.density == 2320.0);
  CHECK(spec.material.thermal_conductivity == 41.0);
  CHECK(spec.material.expansion_coefficient == 2.7e-6);
  CHECK(spec.material.specific_heat == 700.0);
  CHECK(spec.material.resistivity == 5e-4);
  CHECK(spec.environment.convection_coefficient == 50.0);
  CHECK(spec.environment.ambient_temperature == 20.0);
  CHECK(spec.geometry.beam_width == 2.8e-6);
  CHECK(spec.geometry.beam_thickness == 2e-6);
  CHECK(spec.geometry.extension_length == 40e-6);
  CHECK(spec.geometry.pad_side == 200e-6);
  CHECK(spec.geometry.hot_arm_length == 750e-6);
  CHECK(spec.geometry.gap == 5e-6);
  CHECK(spec.geometry.length_ratio() == doctest::Approx(0.46).epsilon(1e-15));
  CHECK(spec.drive.voltage == 8.0);
}

TEST_CASE("validate accepts the canonical point and returns it unchanged") {
  const auto spec = default_spec();
  const auto v = validate(spec);
  CHECK(v.spec() == spec);
  CHECK(check(spec).empty());
}

TEST_CASE("validate rejects a cold arm longer than the hot arm") {
  auto spec = default_spec();
  spec.geometry.cold_arm_length = 800e-6;
  const auto ds = check(spec);
  REQUIRE(ds.size() == 1);
  CHECK(mentions(ds, "geometry.cold_arm_length", "cold_arm_length exceeds hot_arm_length"));
  CHECK_THROWS_AS(validate(spec), ValidationError);
  try {
    validate(spec);
  } catch (const ValidationError& e) {
    CHECK(e.diagnostics().size() == 1);
    CHECK(std::string(e.what()).find("cold_arm_length exceeds hot_arm_length") != std::string::npos);
  }
}

TEST_CASE("zero drive and zero convection are valid operating points") {
  auto spec = default_spec();
  spec.drive.voltage = 0.0;
  spec.environment.convection_coefficient = 0.0;
  CHECK_NOTHROW(validate(spec));
}

TEST_CASE("equal arm lengths are allowed") {
  auto spec = default_spec();
  spec.geometry.cold_arm_length = spec.geometry.hot_arm_length;
  CHECK_NOTHROW(validate(spec));
}

TEST_CASE("every violated invariant is reported, naming the field") {
  ActuatorSpec spec = default_spec();
  spec.material.young_modulus = 0.0;
  spec.material.poisson_ratio = 0.5;
  spec.material.resistivity = -1.0;
  spec.environment.convection_coefficient = -1.0;
  spec.geometry.gap = 0.0;
  spec.geometry.beam_width = std::nan("");
  spec.drive.voltage = -2.0;
  const auto ds = check(spec);
  CHECK(ds.size() == 7);
  CHECK(mentions(ds, "material.young_modulus", "strictly positive"));
  CHECK(mentions(ds, "material.poisson_ratio", "[0, 0.5)"));
  CHECK(mentions(ds, "material.resistivity", "strictly positive"));
  CHECK(mentions(ds, "environment.convection_coefficient", "non-negative"));
  CHECK(mentions(ds, "geometry.gap", "strictly positive"));
  CHECK(mentions(ds, "geometry.beam_width", "strictly positive"));
  CHECK(mentions(ds, "drive.voltage", "non-negative"));
}

TEST_CASE("validate is idempotent") {
  auto spec = default_spec();
  spec.geometry.hot_arm_length = 500e-6;
  spec.geometry.cold_arm_length = 120e-6;
  const auto once = validate(spec);
  const auto twice = validate(once.spec());
  CHECK(once == twice);
  CHECK(spec == once.spec());
}
