#pragma once

// Experiment drivers: config resolution, fidelity sweeps over drive
// frequency, rotating-frame convergence runs, symmetry obstruction scans,
// and file outputs (CSV / SVG / JSON summary).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "slqa/device.hpp"
#include "slqa/dynamics.hpp"
#include "slqa/hamiltonians.hpp"
#include "slqa/io.hpp"
#include "slqa/lattice.hpp"
#include "slqa/pauli.hpp"
#include "slqa/schedule.hpp"
#include "slqa/symmetry.hpp"

#ifndef SLQA_VERSION
#define SLQA_VERSION "unversioned"
#endif

namespace slqa {

struct ExperimentConfig {
  int rows = 2;
  int cols = 3;
  double J = -1.0;
  double Delta = 0.7;

  double lambda0 = 1.0;
  std::vector<double> omega_list = {2.0, 5.0, 10.0, 20.0};
  std::string driver_mode = "uniform";  // uniform | random-table | random-seeded
  std::vector<double> random_coeffs;    // per-site drive scales for random-table
  long seed = 1;                        // random-seeded
  std::string driver_axis = "x";        // obstruction scans: conventional driver axis

  double T = 1000.0;
  ScheduleDirection direction = ScheduleDirection::drive_off;

  std::string frame = "lab";  // lab | rotating-rwa | both
  UnitConvention unit_convention = UnitConvention::angular;
  std::string fidelity_target = "effective";  // effective | xxz

  long steps_per_period = 40;  // lab-frame dt: drive period / this
  long rotating_steps = 2000;  // rotating-frame step count before rounding
  long samples = 400;          // fidelity samples per curve
  double dt = 0.0;             // explicit step override when > 0, ns
  Integrator method = Integrator::midpoint_exponential;
  double degeneracy_tol = kDefaultDegeneracyTol;

  std::string out_dir = "out";
  std::string label = "run";
  bool svg = true;
  int workers = 1;

  std::map<std::string, std::string> raw;  // parsed file content, echoed in the summary

  LatticeGraph graph() const { return square_lattice(rows, cols); }
  bool run_lab() const { return frame == "lab" || frame == "both"; }
  bool run_rotating() const { return frame == "rotating-rwa" || frame == "both"; }
};

namespace detail {

inline std::string require_choice(const std::string& key, const std::string& value,
                                  std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (value == a) return value;
  std::string msg = "config: " + key + " must be one of {";
  bool first = true;
  for (const char* a : allowed) {
    if (!first) msg += ", ";
    msg += a;
    first = false;
  }
  throw std::runtime_error(msg + "}, got '" + value + "'");
}

}  // namespace detail

inline ExperimentConfig load_experiment_config(const KeyValueConfig& kv) {
  ExperimentConfig c;
  c.rows = static_cast<int>(kv.get_long("rows", c.rows));
  c.cols = static_cast<int>(kv.get_long("cols", c.cols));
  c.J = kv.get_double("J", c.J);
  c.Delta = kv.get_double("Delta", c.Delta);
  c.lambda0 = kv.get_double("lambda0", c.lambda0);
  c.omega_list = kv.get_double_list("omega_list", c.omega_list);
  c.driver_mode = detail::require_choice(
      "driver_mode", kv.get_string("driver_mode", c.driver_mode),
      {"uniform", "random-table", "random-seeded"});
  c.random_coeffs = kv.get_double_list("random_coeffs", c.random_coeffs);
  c.seed = kv.get_long("seed", c.seed);
  c.driver_axis =
      detail::require_choice("driver_axis", kv.get_string("driver_axis", c.driver_axis), {"x", "y"});
  c.T = kv.get_double("T", c.T);
  const std::string dir = detail::require_choice(
      "schedule_direction", kv.get_string("schedule_direction", "drive-off"),
      {"drive-off", "drive-on"});
  c.direction =
      dir == "drive-off" ? ScheduleDirection::drive_off : ScheduleDirection::drive_on;
  c.frame = detail::require_choice("frame", kv.get_string("frame", c.frame),
                                   {"lab", "rotating-rwa", "both"});
  const std::string uc = detail::require_choice(
      "unit_convention", kv.get_string("unit_convention", "angular"), {"angular", "cyclic"});
  c.unit_convention = uc == "angular" ? UnitConvention::angular : UnitConvention::cyclic;
  c.fidelity_target = detail::require_choice(
      "fidelity_target", kv.get_string("fidelity_target", c.fidelity_target),
      {"effective", "xxz"});
  c.steps_per_period = kv.get_long("steps_per_period", c.steps_per_period);
  c.rotating_steps = kv.get_long("rotating_steps", c.rotating_steps);
  c.samples = kv.get_long("samples", c.samples);
  c.dt = kv.get_double("dt", c.dt);
  const std::string method = detail::require_choice(
      "method", kv.get_string("method", "midpoint"), {"midpoint", "rk4"});
  c.method = method == "midpoint" ? Integrator::midpoint_exponential : Integrator::rk4;
  c.degeneracy_tol = kv.get_double("degeneracy_tol", c.degeneracy_tol);
  c.out_dir = kv.get_string("out_dir", c.out_dir);
  c.label = kv.get_string("label", c.label);
  c.svg = detail::require_choice("svg", kv.get_string("svg", "true"), {"true", "false"}) == "true";
  c.workers = static_cast<int>(kv.get_long("workers", c.workers));
  c.raw = kv.raw();

  const auto unknown = kv.unused_keys();
  if (!unknown.empty()) {
    std::string msg = "config: unknown key(s):";
    for (const auto& k : unknown) msg += " " + k;
    throw std::runtime_error(msg);
  }

  if (c.rows < 1 || c.cols < 1) throw std::runtime_error("config: rows/cols must be positive");
  if (c.T <= 0.0) throw std::runtime_error("config: T must be positive");
  if (c.Delta <= 0.0) throw std::runtime_error("config: Delta must be positive");
  for (double w : c.omega_list)
    if (w <= 0.0) throw std::runtime_error("config: omega_list entries must be positive");
  if (c.steps_per_period < 4) throw std::runtime_error("config: steps_per_period < 4");
  if (c.rotating_steps < 2) throw std::runtime_error("config: rotating_steps < 2");
  if (c.samples < 2) throw std::runtime_error("config: samples < 2");
  if (c.workers < 1) throw std::runtime_error("config: workers < 1");
  if (c.dt < 0.0) throw std::runtime_error("config: dt must be positive when given");
  if (c.degeneracy_tol <= 0.0) throw std::runtime_error("config: degeneracy_tol must be positive");
  const int n = c.rows * c.cols;
  if (c.driver_mode == "random-table" && static_cast<int>(c.random_coeffs.size()) != n)
    throw std::runtime_error("config: random-table needs random_coeffs with one entry per site");
  return c;
}

// Per-site drive scales for the configured driver mode.  The seeded mode
// draws uniformly from [-2, 2] GHz with a platform-stable mapping so reruns
// reproduce the same pattern bit for bit.
inline std::vector<double> driver_coefficients(const ExperimentConfig& cfg, int n_sites) {
  if (cfg.driver_mode == "uniform") return std::vector<double>(n_sites, 1.0);
  if (cfg.driver_mode == "random-table") return cfg.random_coeffs;
  std::mt19937 gen(static_cast<std::uint32_t>(cfg.seed));
  std::vector<double> c(n_sites);
  for (double& x : c) x = -2.0 + 4.0 * (static_cast<double>(gen()) / 4294967296.0);
  return c;
}

// Precompiled rotating-frame pieces: base detuning plus unit-amplitude drive
// and coupling parts, mirroring LabFrameParts.
struct EffectiveParts {
  MatrixXcd base;
  MatrixXcd drive;
  MatrixXcd coupling;

  MatrixXcd at(double lambda_t, double g_t) const {
    return base + lambda_t * drive + g_t * coupling;
  }
};

inline EffectiveParts build_effective_parts(const DeviceParams& p,
                                            const std::vector<double>& coeffs,
                                            const LatticeGraph& graph) {
  const MatrixXcd base = compile(effective_hamiltonian(p, coeffs, graph, 0.0, 0.0));
  EffectiveParts parts;
  parts.base = base;
  parts.drive = compile(effective_hamiltonian(p, coeffs, graph, 1.0, 0.0)) - base;
  parts.coupling = compile(effective_hamiltonian(p, coeffs, graph, 0.0, 1.0)) - base;
  return parts;
}

struct RunRecord {
  double omega = 0.0;
  bool lab_frame = true;
  Trajectory traj;               // .fidelities filled against the target space
  double final_fidelity = 0.0;
  int target_degeneracy = 0;
  double target_energy = 0.0;
  VectorXcd final_rotating;      // final state mapped into the rotating frame
  std::vector<double> coeffs;
  double wall_seconds = 0.0;
};

// One anneal at fixed drive frequency.  Lab-frame runs integrate the full
// driven Hamiltonian and map each snapshot into the rotating frame before
// scoring; rotating-frame runs integrate the effective Hamiltonian directly.
inline RunRecord run_single(const ExperimentConfig& cfg, const LatticeGraph& graph,
                            const std::vector<double>& coeffs, double omega, bool lab_frame) {
  const auto t_start = std::chrono::steady_clock::now();
  DeviceParams p = map_xxz_to_device(cfg.J, cfg.Delta, omega, cfg.unit_convention);
  p.lambda0 = cfg.lambda0;
  const double kap = kappa(cfg.unit_convention);
  const Schedule sched = schedule_linear(cfg.lambda0, p.g, cfg.T, cfg.direction);
  const EffectiveParts eff = build_effective_parts(p, coeffs, graph);

  // Target: ground space of the interacting Hamiltonian the device realizes
  // at full coupling, or of the requested spin model itself.
  MatrixXcd target = cfg.fidelity_target == "xxz"
                         ? compile(xxz_hamiltonian({cfg.J, cfg.Delta, graph}))
                         : eff.at(0.0, p.g);
  const GroundSpace gs = ground_space(target, cfg.degeneracy_tol);

  // Start in the ground state of the t=0 effective Hamiltonian; lab-frame
  // runs carry it back through the frame map (the spin-locked preparation).
  const GroundSpace gs0 =
      ground_space(eff.at(sched.lambda_at(0.0), sched.g_at(0.0)), cfg.degeneracy_tol);
  VectorXcd psi0 = gs0.basis.col(0);
  if (lab_frame) psi0 = frame_map_inverse(psi0, p, 0.0);

  // Step count: resolve the drive period in the lab, a flat count in the
  // rotating frame, or the explicit override; then round up to a multiple of
  // the sample count so snapshots land on a uniform grid.
  std::int64_t n_steps;
  if (cfg.dt > 0.0) {
    n_steps = static_cast<std::int64_t>(std::ceil(cfg.T / cfg.dt - 1e-9));
  } else if (lab_frame) {
    const double period = 2.0 * M_PI / (kap * omega);
    n_steps = static_cast<std::int64_t>(
        std::ceil(cfg.T * static_cast<double>(cfg.steps_per_period) / period - 1e-9));
  } else {
    n_steps = cfg.rotating_steps;
  }
  if (n_steps < cfg.samples) n_steps = cfg.samples;
  if (n_steps % cfg.samples != 0) n_steps += cfg.samples - n_steps % cfg.samples;
  const double dt = cfg.T / static_cast<double>(n_steps);

  std::function<MatrixXcd(double)> H_of_t;
  LabFrameParts lab;
  if (lab_frame) {
    lab = build_lab_parts(p, coeffs, graph);
    H_of_t = [&](double t) -> MatrixXcd {
      return kap * lab.at(sched.lambda_at(t), sched.g_at(t), t);
    };
  } else {
    H_of_t = [&](double t) -> MatrixXcd {
      return kap * eff.at(sched.lambda_at(t), sched.g_at(t));
    };
  }

  RunRecord rec;
  rec.omega = omega;
  rec.lab_frame = lab_frame;
  rec.coeffs = coeffs;
  rec.traj = propagate(H_of_t, psi0, cfg.T, dt, cfg.method,
                       static_cast<int>(cfg.samples) + 1);
  rec.traj.fidelities.resize(rec.traj.states.size());
  for (size_t i = 0; i < rec.traj.states.size(); ++i) {
    const VectorXcd rot = lab_frame
                              ? frame_map(rec.traj.states[i], p, rec.traj.times[i])
                              : rec.traj.states[i];
    rec.traj.fidelities[i] = fidelity(rot, gs);
    if (i + 1 == rec.traj.states.size()) rec.final_rotating = rot;
  }
  rec.final_fidelity = rec.traj.fidelities.back();
  rec.target_degeneracy = gs.degeneracy;
  rec.target_energy = gs.energy;
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return rec;
}

struct SweepResult {
  ExperimentConfig cfg;
  LatticeGraph graph;
  std::vector<double> coeffs;
  std::vector<RunRecord> records;  // lab runs first (omega ascending), then rotating
};

// on_complete (optional) fires as each run finishes, serialized by a mutex,
// so callers can report progress during long sweeps.
inline SweepResult run_fidelity_sweep(
    const ExperimentConfig& cfg,
    const std::function<void(const RunRecord&)>& on_complete = nullptr) {
  SweepResult result;
  result.cfg = cfg;
  result.graph = cfg.graph();
  result.graph.validate();
  result.coeffs = driver_coefficients(cfg, result.graph.n_sites);

  struct Task {
    double omega;
    bool lab;
  };
  std::vector<Task> tasks;
  std::vector<double> omegas = cfg.omega_list;
  std::sort(omegas.begin(), omegas.end());
  if (cfg.run_lab())
    for (double w : omegas) tasks.push_back({w, true});
  if (cfg.run_rotating())
    for (double w : omegas) tasks.push_back({w, false});

  result.records.resize(tasks.size());
  std::atomic<size_t> next{0};
  std::mutex shared_mutex;  // guards first_error and on_complete
  std::exception_ptr first_error;
  auto worker = [&]() {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      try {
        result.records[i] =
            run_single(cfg, result.graph, result.coeffs, tasks[i].omega, tasks[i].lab);
        if (on_complete) {
          std::lock_guard<std::mutex> lock(shared_mutex);
          on_complete(result.records[i]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(shared_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  const int n_workers = std::max(1, std::min<int>(cfg.workers, static_cast<int>(tasks.size())));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return result;
}

struct ConvergencePoint {
  double omega = 0.0;
  double distance = 0.0;  // trace distance between the frame-mapped finals
  double lab_fidelity = 0.0;
  double rotating_fidelity = 0.0;
};

// Pairs lab and rotating records at equal omega; requires frame=both runs.
inline std::vector<ConvergencePoint> convergence_table(const SweepResult& sweep) {
  std::vector<ConvergencePoint> table;
  for (const auto& lab : sweep.records) {
    if (!lab.lab_frame) continue;
    for (const auto& rot : sweep.records) {
      if (rot.lab_frame || rot.omega != lab.omega) continue;
      ConvergencePoint pt;
      pt.omega = lab.omega;
      pt.distance = trace_distance(lab.final_rotating, rot.final_rotating);
      pt.lab_fidelity = lab.final_fidelity;
      pt.rotating_fidelity = rot.final_fidelity;
      table.push_back(pt);
    }
  }
  std::sort(table.begin(), table.end(),
            [](const ConvergencePoint& a, const ConvergencePoint& b) { return a.omega < b.omega; });
  return table;
}

struct ScanResult {
  ExperimentConfig cfg;
  LatticeGraph graph;
  std::vector<double> coeffs;
  std::vector<SymmetryReport> reports;  // one per swap candidate
};

// Enumerates bond-preserving swap products on the lattice and diagnoses each
// against the configured driver and the spin-model Hamiltonian.
inline ScanResult run_obstruction_scan(const ExperimentConfig& cfg) {
  ScanResult result;
  result.cfg = cfg;
  result.graph = cfg.graph();
  result.graph.validate();
  result.coeffs = driver_coefficients(cfg, result.graph.n_sites);

  std::vector<double> scaled = result.coeffs;
  for (double& c : scaled) c *= cfg.lambda0;
  const Axis axis = cfg.driver_axis == "x" ? Axis::X : Axis::Y;
  const OperatorSum H_D = driver_hamiltonian(scaled, axis);
  const OperatorSum H_P = xxz_hamiltonian({cfg.J, cfg.Delta, result.graph});

  for (const auto& cand : swap_candidates(result.graph)) {
    SymmetryReport rep = obstruction_report(H_D, H_P, cand.op);
    rep.pairs = cand.pairs;
    result.reports.push_back(rep);
  }
  return result;
}

namespace detail {

inline std::string frame_name(bool lab) { return lab ? "lab" : "rotating"; }

inline std::string curve_filename(const std::string& label, bool lab, double omega) {
  return label + "_" + frame_name(lab) + "_w" + format_sig(omega, 10) + ".csv";
}

inline nlohmann::json run_json(const RunRecord& r) {
  nlohmann::json j;
  j["omega_ghz"] = r.omega;
  j["frame"] = frame_name(r.lab_frame);
  j["final_fidelity"] = r.final_fidelity;
  j["target_degeneracy"] = r.target_degeneracy;
  j["target_energy_ghz"] = r.target_energy;
  j["n_steps"] = r.traj.n_steps;
  j["dt_ns"] = r.traj.dt;
  j["final_norm_error"] = r.traj.final_norm_error;
  j["max_step_phase"] = r.traj.max_step_phase;
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

}  // namespace detail

// Writes per-run curves, the run index, optional plots, and a JSON summary.
// Returns the paths written.  Curve CSVs are deterministic: identical
// configs reproduce them byte for byte.
inline std::vector<std::string> emit_outputs(const SweepResult& sweep) {
  const ExperimentConfig& cfg = sweep.cfg;
  ensure_dir(cfg.out_dir);
  std::vector<std::string> written;

  for (const auto& rec : sweep.records) {
    const std::string path =
        cfg.out_dir + "/" + detail::curve_filename(cfg.label, rec.lab_frame, rec.omega);
    write_curve_csv(path, rec.traj.times, rec.traj.fidelities);
    written.push_back(path);
  }

  {
    const std::string path = cfg.out_dir + "/" + cfg.label + "_runs.csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "frame,omega_ghz,final_fidelity,target_degeneracy,n_steps,dt_ns\n";
    for (const auto& rec : sweep.records)
      out << detail::frame_name(rec.lab_frame) << ',' << format_sig(rec.omega) << ','
          << format_sig(rec.final_fidelity) << ',' << rec.target_degeneracy << ','
          << rec.traj.n_steps << ',' << format_sig(rec.traj.dt) << '\n';
    written.push_back(path);
  }

  if (cfg.svg) {
    for (bool lab : {true, false}) {
      std::vector<SvgSeries> series;
      for (const auto& rec : sweep.records) {
        if (rec.lab_frame != lab) continue;
        series.push_back({"omega = " + format_sig(rec.omega, 10) + " GHz", rec.traj.times,
                          rec.traj.fidelities});
      }
      if (series.empty()) continue;
      const std::string path =
          cfg.out_dir + "/" + cfg.label + "_" + detail::frame_name(lab) + ".svg";
      write_svg_plot(path, series, cfg.label + " (" + detail::frame_name(lab) + " frame)",
                     "time, ns", "fidelity");
      written.push_back(path);
    }
  }

  {
    nlohmann::json j;
    j["version"] = SLQA_VERSION;
    j["config"] = cfg.raw;
    j["resolved"]["rows"] = cfg.rows;
    j["resolved"]["cols"] = cfg.cols;
    j["resolved"]["J"] = cfg.J;
    j["resolved"]["Delta"] = cfg.Delta;
    j["resolved"]["lambda0"] = cfg.lambda0;
    j["resolved"]["T"] = cfg.T;
    j["resolved"]["frame"] = cfg.frame;
    j["resolved"]["driver_mode"] = cfg.driver_mode;
    j["resolved"]["unit_convention"] =
        cfg.unit_convention == UnitConvention::angular ? "angular" : "cyclic";
    j["resolved"]["schedule_direction"] =
        cfg.direction == ScheduleDirection::drive_off ? "drive-off" : "drive-on";
    j["resolved"]["fidelity_target"] = cfg.fidelity_target;
    j["resolved"]["method"] = cfg.method == Integrator::midpoint_exponential ? "midpoint" : "rk4";
    j["resolved"]["steps_per_period"] = cfg.steps_per_period;
    j["resolved"]["rotating_steps"] = cfg.rotating_steps;
    j["resolved"]["samples"] = cfg.samples;
    j["resolved"]["omega_list"] = cfg.omega_list;
    j["driver_coefficients"] = sweep.coeffs;
    if (cfg.driver_mode == "random-seeded") j["seed"] = cfg.seed;
    j["tolerances"]["degeneracy_tol"] = cfg.degeneracy_tol;
    j["tolerances"]["norm_error_warn"] = 1e-9;
    j["tolerances"]["step_phase_warn"] = 0.5;
    j["runs"] = nlohmann::json::array();
    for (const auto& rec : sweep.records) j["runs"].push_back(detail::run_json(rec));
    const std::string path = cfg.out_dir + "/" + cfg.label + "_summary.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
    written.push_back(path);
  }
  return written;
}

inline std::string emit_convergence_csv(const SweepResult& sweep,
                                        const std::vector<ConvergencePoint>& table) {
  ensure_dir(sweep.cfg.out_dir);
  const std::string path = sweep.cfg.out_dir + "/" + sweep.cfg.label + "_convergence.csv";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "omega_ghz,trace_distance,lab_final_fidelity,rotating_final_fidelity\n";
  for (const auto& pt : table)
    out << format_sig(pt.omega) << ',' << format_sig(pt.distance) << ','
        << format_sig(pt.lab_fidelity) << ',' << format_sig(pt.rotating_fidelity) << '\n';
  return path;
}

inline std::string emit_scan_json(const ScanResult& scan) {
  ensure_dir(scan.cfg.out_dir);
  nlohmann::json j;
  j["version"] = SLQA_VERSION;
  j["config"] = scan.cfg.raw;
  j["n_sites"] = scan.graph.n_sites;
  j["driver_coefficients"] = scan.coeffs;
  j["candidates"] = nlohmann::json::array();
  for (const auto& rep : scan.reports) {
    nlohmann::json c;
    c["pairs"] = rep.pairs;
    c["driver_residual"] = rep.driver_residual;
    c["problem_residual"] = rep.problem_residual;
    c["commutes_with_driver"] = rep.commutes_with_driver;
    c["commutes_with_problem"] = rep.commutes_with_problem;
    c["initial_sectors"] = rep.initial_sectors;
    c["target_sectors"] = rep.target_sectors;
    c["obstructed"] = rep.obstructed;
    j["candidates"].push_back(c);
  }
  const std::string path = scan.cfg.out_dir + "/" + scan.cfg.label + "_scan.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
  return path;
}

// Fixed six-site random drive pattern bundled with the demonstration presets,
// in GHz, listed in row-major site order on the 2x3 grid.
inline const std::vector<double>& preset_drive_pattern() {
  static const std::vector<double> pattern = {
      -0.9052919617126958, -1.931378367720707,    -1.259154537693434,
      0.2500243810835503,  -0.007622719480759765, -1.261510983981174};
  return pattern;
}

// Bundled demonstration presets.  fig3: uniform drive on the 2x3 grid for
// the four (J, Delta) cases.  fig4: the two antiferromagnetic cases rescued
// by the per-site random drive pattern above.  Both use the cyclic unit
// convention (coefficients quoted in GHz enter phases through 2*pi*f).
inline std::vector<KeyValueConfig> preset_configs(const std::string& name) {
  struct Case {
    const char* label;
    double J;
    double Delta;
    bool random;
  };
  std::vector<Case> cases;
  if (name == "fig3") {
    cases = {{"fig3_ferro_d07", -1.0, 0.7, false},
             {"fig3_ferro_d17", -1.0, 1.7, false},
             {"fig3_af_d07", 1.0, 0.7, false},
             {"fig3_af_d17", 1.0, 1.7, false}};
  } else if (name == "fig4") {
    cases = {{"fig4_af_d07", 1.0, 0.7, true}, {"fig4_af_d17", 1.0, 1.7, true}};
  } else {
    throw std::runtime_error("unknown preset '" + name + "' (expected fig3 or fig4)");
  }
  std::vector<KeyValueConfig> configs;
  for (const auto& cs : cases) {
    std::string text;
    text += "label = " + std::string(cs.label) + "\n";
    text += "rows = 2\ncols = 3\n";
    text += "J = " + format_sig(cs.J) + "\n";
    text += "Delta = " + format_sig(cs.Delta) + "\n";
    text += "lambda0 = 1\nT = 1000\nomega_list = 2,5,10,20\n";
    text += "unit_convention = cyclic\nframe = lab\n";
    if (cs.random) {
      text += "driver_mode = random-table\nrandom_coeffs = ";
      const auto& pat = preset_drive_pattern();
      for (size_t i = 0; i < pat.size(); ++i)
        text += (i ? "," : "") + format_sig(pat[i], 17);
      text += "\n";
    } else {
      text += "driver_mode = uniform\n";
    }
    configs.push_back(KeyValueConfig::parse_string(text, std::string("preset:") + cs.label));
  }
  return configs;
}

}  // namespace slqa
