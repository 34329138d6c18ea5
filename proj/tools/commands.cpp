#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "thermoact/config.hpp"
#include "thermoact/electrothermal.hpp"
#include "thermoact/report.hpp"
#include "thermoact/study.hpp"
#include "thermoact/thermomech.hpp"
#include "thermoact/verification.hpp"

namespace thermoact::cli {
namespace {

struct LoadFailure {
  std::string message;
};

config::Config load_config(const std::optional<std::string>& path) {
  std::string text;
  if (path) {
    std::ifstream in(*path, std::ios::binary);
    if (!in) throw LoadFailure{"cannot open config file '" + *path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return config::parse_config(text);
}

bool write_file(const std::string& path, const std::string& contents, std::ostream& err) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  if (!out) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

std::string fixed(double value, int decimals) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::fixed << std::setprecision(decimals) << value + 0.0;
  return s.str();
}

thermomech::FrameOptions frame_options(const config::Config& cfg) {
  return {cfg.study.bending_only};
}

// Runs `body`, mapping library exceptions onto the exit-code contract.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const LoadFailure& e) {
    err << "error: " << e.message << '\n';
    return kConfigError;
  } catch (const config::ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const study::PlanError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const thermomech::SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kSolverError;
  }
}

}  // namespace

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto cfg = load_config(args.config_path);
    if (args.voltage) cfg.spec.drive.voltage = *args.voltage;
    const auto spec = validate(cfg.spec);
    const auto s = thermomech::simulate(spec, frame_options(cfg));
    const auto& geo = spec.geometry();

    out << "electrothermal actuator at " << fixed(spec.drive().voltage, 3) << " V\n"
        << "  L1 = " << fixed(geo.hot_arm_length * 1e6, 3) << " um, L2 = "
        << fixed(geo.cold_arm_length * 1e6, 3) << " um (L2/L1 = " << fixed(geo.length_ratio(), 4)
        << "), g = " << fixed(geo.gap * 1e6, 3) << " um\n"
        << "  d_tip   = " << fixed(s.tip_deflection * 1e6, 3) << " um\n"
        << "  u       = " << fixed(s.junction_deflection * 1e6, 3) << " um\n"
        << "  theta   = " << fixed(s.junction_rotation * 1e3, 3) << " mrad\n"
        << "  dl_hot  = " << fixed(s.thermal_load.hot_elongation * 1e6, 5) << " um\n"
        << "  dl_cold = " << fixed(s.thermal_load.cold_elongation * 1e6, 5) << " um\n"
        << "  t_peak  = " << fixed(s.peak_temperature, 2) << " degC\n";
    // Machine-readable block, SI, shortest round-trip representation.
    out << "d_tip_m=" << config::format_exact(s.tip_deflection) << '\n'
        << "u_m=" << config::format_exact(s.junction_deflection) << '\n'
        << "theta_rad=" << config::format_exact(s.junction_rotation) << '\n'
        << "dl_hot_m=" << config::format_exact(s.thermal_load.hot_elongation) << '\n'
        << "dl_cold_m=" << config::format_exact(s.thermal_load.cold_elongation) << '\n'
        << "t_peak_c=" << config::format_exact(s.peak_temperature) << '\n';

    if (args.csv_path) {
      study::SweepTable table{{cfg.spec, study::Parameter::voltage, {spec.drive().voltage}},
                              {{spec.drive().voltage, s.tip_deflection, s.junction_deflection,
                                s.junction_rotation, s.thermal_load.hot_elongation,
                                s.thermal_load.cold_elongation, s.peak_temperature}}};
      if (!write_file(*args.csv_path, report::sweep_csv(table), err)) return int{kConfigError};
    }
    return int{kSuccess};
  });
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cfg = load_config(args.config_path);
    study::Parameter parameter;
    try {
      parameter = study::parse_parameter(args.parameter);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return int{kConfigError};
    }
    if (args.steps < 1) {
      err << "error: --steps must be at least 1\n";
      return int{kConfigError};
    }
    if (!(args.from < args.to)) {
      err << "error: invalid range: --from must be less than --to\n";
      return int{kConfigError};
    }

    study::SweepPlan plan{cfg.spec, parameter,
                          study::linspace(report::from_display(parameter, args.from),
                                          report::from_display(parameter, args.to),
                                          static_cast<std::size_t>(args.steps))};
    study::SweepOptions options;
    options.frame = frame_options(cfg);
    const auto table = study::run_sweep(plan, options);

    const auto csv = report::sweep_csv(table);
    if (args.csv_path) {
      if (!write_file(*args.csv_path, csv, err)) return int{kConfigError};
    } else {
      out << csv;
    }
    if (args.svg_path) {
      if (!write_file(*args.svg_path, report::sweep_svg(table), err)) return int{kConfigError};
    }
    return int{kSuccess};
  });
}

int cmd_optimize_ratio(const OptimizeArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cfg = load_config(args.config_path);
    const int grid = args.grid.value_or(cfg.study.ratio_grid);
    if (grid < 8) {
      err << "error: --grid must be at least 8\n";
      return int{kConfigError};
    }
    validate(cfg.spec);
    const auto r = study::find_optimal_ratio(cfg.spec, cfg.study.ratio_min, cfg.study.ratio_max,
                                             static_cast<std::size_t>(grid), frame_options(cfg));
    if (r.status != study::OptimumStatus::refined) {
      out << "warning: tip deflection is " << study::to_string(r.status)
          << " over the ratio grid; reporting the grid maximum without refinement\n";
    }
    out << "hot_arm_length_um=" << report::format_significant(r.hot_arm_length * 1e6) << '\n'
        << "optimal_ratio=" << report::format_significant(r.optimal_ratio) << '\n'
        << "optimal_d_tip_um=" << report::format_significant(r.optimal_tip_deflection * 1e6) << '\n'
        << "grid_resolution=" << report::format_significant(r.grid_resolution) << '\n'
        << "gain_over_range=" << report::format_significant(r.gain_over_range) << '\n'
        << "status=" << study::to_string(r.status) << '\n';
    return int{kSuccess};
  });
}

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cfg = load_config(args.config_path);
    const auto spec = validate(cfg.spec);
    const double thermal = verification::thermal_oracle_error(spec, cfg.study.fd_nodes);
    const auto mech = verification::mechanical_oracle_error(spec, cfg.study.stiffness_elements,
                                                            frame_options(cfg));

    out << "thermal: finite differences (" << cfg.study.fd_nodes << " nodes) vs closed form\n"
        << "  max relative error = " << report::format_significant(thermal, 6) << "  (limit "
        << report::format_significant(verification::kThermalTolerance, 6) << ")\n"
        << "mechanical: direct stiffness (" << cfg.study.stiffness_elements
        << " elements/member) vs flexibility method\n"
        << "  d_tip force method = " << report::format_significant(mech.force_method.tip_deflection * 1e6)
        << " um, stiffness = " << report::format_significant(mech.stiffness.tip_deflection * 1e6) << " um\n"
        << "  relative error     = " << report::format_significant(mech.tip_error, 6) << "  (limit "
        << report::format_significant(verification::kMechanicalTolerance, 6) << ")\n"
        << "thermal_error=" << config::format_exact(thermal) << '\n'
        << "mechanical_error=" << config::format_exact(mech.tip_error) << '\n';

    int code = kSuccess;
    if (!(thermal <= verification::kThermalTolerance)) {
      err << "validation failed: thermal error " << report::format_significant(thermal, 6) << " exceeds "
          << verification::kThermalTolerance << '\n';
      code = kValidationBreach;
    }
    if (!(mech.tip_error <= verification::kMechanicalTolerance)) {
      err << "validation failed: mechanical error " << report::format_significant(mech.tip_error, 6)
          << " exceeds " << verification::kMechanicalTolerance << '\n';
      code = kValidationBreach;
    }
    return code;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Electrothermal microactuator simulator", "thermoact"};
  app.require_subcommand(1);

  SimulateArgs simulate_args;
  auto* simulate = app.add_subcommand("simulate", "Solve one operating point");
  simulate->add_option("--config", simulate_args.config_path, "Config file");
  simulate->add_option("--voltage", simulate_args.voltage, "Override drive voltage (V)");
  simulate->add_option("--csv", simulate_args.csv_path, "Also write a one-row CSV");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and emit CSV/SVG");
  sweep->add_option("--config", sweep_args.config_path, "Config file");
  sweep->add_option("--param", sweep_args.parameter, "voltage | ratio | gap | hot_arm_length")->required();
  sweep->add_option("--from", sweep_args.from, "First value (V, ratio, or um)")->required();
  sweep->add_option("--to", sweep_args.to, "Last value (V, ratio, or um)")->required();
  sweep->add_option("--steps", sweep_args.steps, "Number of points")->required();
  sweep->add_option("--out", sweep_args.csv_path, "CSV output path (stdout if omitted)");
  sweep->add_option("--svg", sweep_args.svg_path, "SVG chart output path");

  OptimizeArgs optimize_args;
  auto* optimize = app.add_subcommand("optimize-ratio", "Locate the L2/L1 ratio of maximum tip deflection");
  optimize->add_option("--config", optimize_args.config_path, "Config file");
  optimize->add_option("--grid", optimize_args.grid, "Ratio grid points");

  ValidateArgs validate_args;
  auto* validate_cmd = app.add_subcommand("validate", "Compare the closed-form pipeline with numerical oracles");
  validate_cmd->add_option("--config", validate_args.config_path, "Config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? int{kSuccess} : int{kConfigError};
  }

  if (simulate->parsed()) return cmd_simulate(simulate_args, out, err);
  if (sweep->parsed()) return cmd_sweep(sweep_args, out, err);
  if (optimize->parsed()) return cmd_optimize_ratio(optimize_args, out, err);
  return cmd_validate(validate_args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("thermoact");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace thermoact::cli
