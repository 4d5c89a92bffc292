// Command-line front end for the spin-lock annealing simulator.
//
//   slqa run <config>              fidelity sweep from a config file
//   slqa preset fig3|fig4          bundled demonstration sweeps
//   slqa scan-symmetry <config>    swap-symmetry obstruction scan
//   slqa rwa-convergence <config>  lab vs rotating-frame comparison

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slqa/experiments.hpp"

namespace {

struct Overrides {
  std::string out_dir, frame, unit_convention, schedule_direction, label, method, driver_axis,
      fidelity_target;
  long workers = 0, steps_per_period = 0, samples = 0;
  double dt = 0.0, T = 0.0;
};

void add_common_flags(CLI::App* sub, Overrides& ov) {
  sub->add_option("--out-dir", ov.out_dir, "Output directory");
  sub->add_option("--workers", ov.workers, "Concurrent runs")->check(CLI::PositiveNumber);
  sub->add_option("--dt", ov.dt, "Integrator step in ns (overrides the dt policy)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--frame", ov.frame, "Simulation frame")
      ->check(CLI::IsMember({"lab", "rotating-rwa", "both"}));
  sub->add_option("--unit-convention", ov.unit_convention,
                  "How GHz coefficients enter phases")
      ->check(CLI::IsMember({"angular", "cyclic"}));
  sub->add_option("--schedule-direction", ov.schedule_direction, "Anneal ramp direction")
      ->check(CLI::IsMember({"drive-off", "drive-on"}));
  sub->add_option("--label", ov.label, "File-name prefix for outputs");
  sub->add_option("--method", ov.method, "Integrator")
      ->check(CLI::IsMember({"midpoint", "rk4"}));
  sub->add_option("--steps-per-period", ov.steps_per_period,
                  "Lab-frame steps per drive period")
      ->check(CLI::PositiveNumber);
  sub->add_option("--samples", ov.samples, "Fidelity samples per curve")
      ->check(CLI::PositiveNumber);
  sub->add_option("--fidelity-target", ov.fidelity_target,
                  "Ground space the fidelity is scored against")
      ->check(CLI::IsMember({"effective", "xxz"}));
  sub->add_option("-T,--anneal-time", ov.T, "Anneal time in ns")->check(CLI::PositiveNumber);
}

void apply_overrides(slqa::KeyValueConfig& kv, const CLI::App* sub, const Overrides& ov) {
  auto given = [&](const char* flag) {
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  auto set_if = [&](const char* flag, const std::string& key, const std::string& value) {
    if (given(flag)) kv.set(key, value);
  };
  set_if("--out-dir", "out_dir", ov.out_dir);
  set_if("--frame", "frame", ov.frame);
  set_if("--unit-convention", "unit_convention", ov.unit_convention);
  set_if("--schedule-direction", "schedule_direction", ov.schedule_direction);
  set_if("--label", "label", ov.label);
  set_if("--method", "method", ov.method);
  set_if("--fidelity-target", "fidelity_target", ov.fidelity_target);
  set_if("--driver-axis", "driver_axis", ov.driver_axis);
  if (given("--workers")) kv.set("workers", std::to_string(ov.workers));
  if (given("--steps-per-period"))
    kv.set("steps_per_period", std::to_string(ov.steps_per_period));
  if (given("--samples")) kv.set("samples", std::to_string(ov.samples));
  if (given("--dt")) kv.set("dt", slqa::format_sig(ov.dt, 17));
  if (given("-T")) kv.set("T", slqa::format_sig(ov.T, 17));
}

void print_record(const slqa::RunRecord& r) {
  std::printf("  %-9s omega=%-6s F=%.6f  (m=%d, steps=%lld, dt=%.6g ns, %.1fs)\n",
              r.lab_frame ? "lab" : "rotating", slqa::format_sig(r.omega, 10).c_str(),
              r.final_fidelity, r.target_degeneracy, static_cast<long long>(r.traj.n_steps),
              r.traj.dt, r.wall_seconds);
  std::fflush(stdout);
}

void run_and_emit(const slqa::KeyValueConfig& kv) {
  const slqa::ExperimentConfig cfg = slqa::load_experiment_config(kv);
  std::printf("%s: %dx%d lattice, J=%g, Delta=%g, T=%g ns, frame=%s\n", cfg.label.c_str(),
              cfg.rows, cfg.cols, cfg.J, cfg.Delta, cfg.T, cfg.frame.c_str());
  std::fflush(stdout);
  const slqa::SweepResult sweep = slqa::run_fidelity_sweep(cfg, print_record);
  for (const std::string& path : slqa::emit_outputs(sweep))
    std::printf("wrote %s\n", path.c_str());
}

void run_convergence(const slqa::KeyValueConfig& kv) {
  const slqa::ExperimentConfig cfg = slqa::load_experiment_config(kv);
  std::printf("%s: lab vs rotating frame, J=%g, Delta=%g, T=%g ns\n", cfg.label.c_str(), cfg.J,
              cfg.Delta, cfg.T);
  std::fflush(stdout);
  const slqa::SweepResult sweep = slqa::run_fidelity_sweep(cfg, print_record);
  const auto table = slqa::convergence_table(sweep);
  std::printf("  %-10s %-16s %-12s %s\n", "omega_ghz", "trace_distance", "lab_F", "rotating_F");
  for (const auto& pt : table)
    std::printf("  %-10s %-16.8f %-12.6f %.6f\n", slqa::format_sig(pt.omega, 10).c_str(),
                pt.distance, pt.lab_fidelity, pt.rotating_fidelity);
  for (const std::string& path : slqa::emit_outputs(sweep))
    std::printf("wrote %s\n", path.c_str());
  std::printf("wrote %s\n", slqa::emit_convergence_csv(sweep, table).c_str());
}

void run_scan(const slqa::KeyValueConfig& kv) {
  const slqa::ExperimentConfig cfg = slqa::load_experiment_config(kv);
  const slqa::ScanResult scan = slqa::run_obstruction_scan(cfg);
  std::printf("%s: %dx%d lattice, J=%g, Delta=%g, driver=%s(%s), %zu swap candidate(s)\n",
              cfg.label.c_str(), cfg.rows, cfg.cols, cfg.J, cfg.Delta, cfg.driver_mode.c_str(),
              cfg.driver_axis.c_str(), scan.reports.size());
  for (const auto& rep : scan.reports) {
    std::string pairs;
    for (const auto& [a, b] : rep.pairs)
      pairs += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    std::string init, targ;
    for (double s : rep.initial_sectors) init += (init.empty() ? "" : ",") + slqa::format_sig(s, 6);
    for (double s : rep.target_sectors) targ += (targ.empty() ? "" : ",") + slqa::format_sig(s, 6);
    std::printf("  %-22s [S,H_D]=%-9.2e [S,H_P]=%-9.2e sectors %s -> %s  %s\n", pairs.c_str(),
                rep.driver_residual, rep.problem_residual, init.c_str(), targ.c_str(),
                rep.obstructed ? "OBSTRUCTED" : "ok");
  }
  std::printf("wrote %s\n", slqa::emit_scan_json(scan).c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-lock quantum annealing of inductively coupled flux qubits"};
  app.set_version_flag("--version", SLQA_VERSION);
  app.require_subcommand(1);

  Overrides ov;
  std::string config_path, preset_name;

  CLI::App* cmd_run = app.add_subcommand("run", "Fidelity sweep from a config file");
  cmd_run->add_option("config", config_path, "Config file (key = value)")
      ->required()
      ->check(CLI::ExistingFile);
  add_common_flags(cmd_run, ov);

  CLI::App* cmd_preset = app.add_subcommand("preset", "Bundled demonstration sweeps");
  cmd_preset->add_option("name", preset_name, "fig3 (uniform drive) or fig4 (random drive)")
      ->required()
      ->check(CLI::IsMember({"fig3", "fig4"}));
  add_common_flags(cmd_preset, ov);

  CLI::App* cmd_scan = app.add_subcommand("scan-symmetry", "Swap-symmetry obstruction scan");
  cmd_scan->add_option("config", config_path, "Config file (key = value)")
      ->required()
      ->check(CLI::ExistingFile);
  add_common_flags(cmd_scan, ov);
  cmd_scan->add_option("--driver-axis", ov.driver_axis, "Conventional driver axis")
      ->check(CLI::IsMember({"x", "y"}));

  CLI::App* cmd_rwa =
      app.add_subcommand("rwa-convergence", "Lab vs rotating-frame final-state comparison");
  cmd_rwa->add_option("config", config_path, "Config file (key = value)")
      ->required()
      ->check(CLI::ExistingFile);
  add_common_flags(cmd_rwa, ov);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) {
      slqa::KeyValueConfig kv = slqa::KeyValueConfig::parse_file(config_path);
      apply_overrides(kv, cmd_run, ov);
      run_and_emit(kv);
    } else if (cmd_preset->parsed()) {
      for (slqa::KeyValueConfig kv : slqa::preset_configs(preset_name)) {
        apply_overrides(kv, cmd_preset, ov);
        run_and_emit(kv);
      }
    } else if (cmd_scan->parsed()) {
      slqa::KeyValueConfig kv = slqa::KeyValueConfig::parse_file(config_path);
      apply_overrides(kv, cmd_scan, ov);
      run_scan(kv);
    } else if (cmd_rwa->parsed()) {
      slqa::KeyValueConfig kv = slqa::KeyValueConfig::parse_file(config_path);
      apply_overrides(kv, cmd_rwa, ov);
      kv.set("frame", "both");
      run_convergence(kv);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
