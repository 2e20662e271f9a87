// lambconv: command-line front end for the microwave-to-optical conversion model.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "lambconv/config.hpp"
#include "lambconv/csv.hpp"
#include "lambconv/errors.hpp"
#include "lambconv/kernels.hpp"
#include "lambconv/scenario.hpp"

namespace {

using namespace lambconv;

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 1;

// Writes to `path`, or to `fallback` when the path is empty.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    fallback.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write(out);
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Microwave-to-optical conversion in three-mode hydrogen atoms"};
  app.require_subcommand(1);
  app.fallthrough();

  bool serial = false;
  app.add_flag("--serial", serial, "Use the serial reference kernels instead of OpenMP");

  auto* constants = app.add_subcommand("constants", "Print the Gaussian-CGS constants in use");

  std::string channel_arg;
  auto* transition = app.add_subcommand("transition", "Print the transition data of a channel");
  transition->add_option("channel", channel_arg, "fine_structure or lamb_shift")->required();

  double beta_max = 20.0;
  int fig1_steps = 201;
  std::string fig1_out;
  auto* fig1 = app.add_subcommand("fig1", "Tabulate f(beta) with its two approximations");
  fig1->add_option("--beta-max", beta_max, "Upper end of the beta grid")->capture_default_str();
  fig1->add_option("--steps", fig1_steps, "Number of grid points")->capture_default_str();
  fig1->add_option("--out", fig1_out, "CSV output file (default: stdout)");

  std::string config_path;
  std::string out_path;
  std::string summary_path;
  auto* scen = app.add_subcommand("scenario", "Time series and summary for one scenario");
  scen->add_option("--config", config_path, "Scenario file")->required();
  scen->add_option("--out", out_path, "CSV output file (default: config 'output' or stdout)");
  scen->add_option("--summary", summary_path, "Summary file (default: stderr)");

  std::string sweep_param;
  std::string sweep_objective;
  double sweep_min = 0.0;
  double sweep_max = 0.0;
  int sweep_steps = 0;
  bool sweep_log = false;
  auto* sweep = app.add_subcommand("sweep", "Grid search of one parameter");
  sweep->add_option("--config", config_path, "Scenario file")->required();
  sweep->add_option("--param", sweep_param, "flux_w_cm2, rho22_0, L_cm, rho_H_g_cm3, detuning_mhz")
      ->required();
  sweep->add_option("--min", sweep_min, "Lower bound")->required();
  sweep->add_option("--max", sweep_max, "Upper bound")->required();
  sweep->add_option("--steps", sweep_steps, "Number of grid points")->required();
  sweep->add_flag("--log", sweep_log, "Geometric spacing");
  sweep->add_option("--objective", sweep_objective, "eta_max_peak, pulse_energy or tau")->required();
  sweep->add_option("--out", out_path, "CSV output file (default: config 'output' or stdout)");
  sweep->add_option("--summary", summary_path, "Summary file (default: stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  const auto exec = serial ? kernels::Exec::kSerial : kernels::Exec::kParallel;

  try {
    if (*constants) {
      csv::write_constants(std::cout);
    } else if (*transition) {
      csv::write_transitions(std::cout, scenario::parse_channel(channel_arg));
    } else if (*fig1) {
      if (fig1_steps < 2) throw ConfigError("fig1 needs --steps >= 2");
      const auto rows = kernels::fig1_table(beta_max, fig1_steps, exec);
      emit(fig1_out, std::cout, [&](std::ostream& o) { csv::write_fig1(o, rows); });
    } else if (*scen) {
      const auto cfg = config::load_config(config_path);
      const auto result = scenario::run_scenario(cfg, exec);
      emit(out_path.empty() ? cfg.output : out_path, std::cout,
           [&](std::ostream& o) { csv::write_scenario(o, result); });
      emit(summary_path, std::cerr,
           [&](std::ostream& o) { csv::write_scenario_summary(o, result.summary); });
    } else if (*sweep) {
      const auto cfg = config::load_config(config_path);
      scenario::SweepSpec spec;
      spec.parameter = scenario::parse_parameter(sweep_param);
      spec.objective = scenario::parse_objective(sweep_objective);
      spec.min = sweep_min;
      spec.max = sweep_max;
      spec.steps = sweep_steps;
      spec.log = sweep_log;
      const auto result = scenario::run_sweep(cfg, spec, exec);
      emit(out_path.empty() ? cfg.output : out_path, std::cout,
           [&](std::ostream& o) { csv::write_sweep(o, result); });
      emit(summary_path, std::cerr, [&](std::ostream& o) { csv::write_sweep_summary(o, result); });
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
