// Propagation, ground spaces, fidelity, frame maps, spectral flow, and the
// Rabi cross-check against the closed form.

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "slqa/device.hpp"
#include "slqa/dynamics.hpp"
#include "slqa/hamiltonians.hpp"
#include "slqa/schedule.hpp"
#include "slqa/symmetry.hpp"

using namespace slqa;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

TEST_CASE("midpoint propagation is exact for constant Hamiltonians", "[dynamics]") {
  auto& gen = oracles::test_rng();
  const MatrixXcd H = oracles::random_hermitian(8, gen);
  const VectorXcd psi0 = oracles::random_state(8, gen);
  const double T = 1.7;
  const Trajectory traj = propagate([&](double) { return H; }, psi0, T, T / 64.0);
  const VectorXcd want = oracles::dense_expm_reference(complexd(0, -1) * T * H) * psi0;
  REQUIRE((traj.states.back() - want).cwiseAbs().maxCoeff() < 1e-10);
  REQUIRE(traj.final_norm_error < 1e-12);
}

TEST_CASE("propagate validates the step size and samples uniformly", "[dynamics]") {
  const MatrixXcd H = MatrixXcd::Identity(2, 2);
  const VectorXcd psi0 = VectorXcd::Unit(2, 0);
  REQUIRE_THROWS(propagate([&](double) { return H; }, psi0, 1.0, 0.3));
  REQUIRE_THROWS(propagate([&](double) { return H; }, psi0, -1.0, 0.1));

  const Trajectory traj =
      propagate([&](double) { return H; }, psi0, 1.0, 1.0 / 400, Integrator::midpoint_exponential, 101);
  REQUIRE(traj.n_steps == 400);
  REQUIRE(traj.times.size() == 101);
  for (size_t i = 1; i < traj.times.size(); ++i)
    REQUIRE(traj.times[i] - traj.times[i - 1] == Catch::Approx(0.01).margin(1e-12));
}

TEST_CASE("rk4 agrees with the midpoint exponential on smooth drives", "[dynamics]") {
  const MatrixXcd H0 = compile([] {
    OperatorSum op(1);
    op.add(0.5, {{0, Axis::Z}});
    return op;
  }());
  const MatrixXcd V = compile([] {
    OperatorSum op(1);
    op.add(0.4, {{0, Axis::X}});
    return op;
  }());
  auto H = [&](double t) -> MatrixXcd { return H0 + std::sin(0.3 * t) * V; };
  VectorXcd psi0(2);
  psi0 << 1, 0;
  const Trajectory a = propagate(H, psi0, 10.0, 0.002, Integrator::midpoint_exponential);
  const Trajectory b = propagate(H, psi0, 10.0, 0.002, Integrator::rk4);
  REQUIRE((a.states.back() - b.states.back()).cwiseAbs().maxCoeff() < 1e-7);
  REQUIRE(b.norm_drift < 1e-8);
}

TEST_CASE("rk4 rejects steps that lose the norm", "[dynamics]") {
  auto& gen = oracles::test_rng();
  const MatrixXcd H = 20.0 * oracles::random_hermitian(4, gen);
  const VectorXcd psi0 = oracles::random_state(4, gen);
  REQUIRE_THROWS(propagate([&](double) { return H; }, psi0, 10.0, 0.5, Integrator::rk4));
}

TEST_CASE("ground space: degeneracy counting and projector fidelity", "[dynamics]") {
  MatrixXcd D = MatrixXcd::Zero(4, 4);
  D.diagonal() << 0.0, 1e-8, 1.0, 2.0;
  const GroundSpace gs = ground_space(D, 1e-6);
  REQUIRE(gs.degeneracy == 2);
  REQUIRE(gs.energy == Catch::Approx(0.0).margin(1e-12));

  auto& gen = oracles::test_rng();
  std::normal_distribution<double> dist(0.0, 1.0);
  VectorXcd combo = VectorXcd::Zero(4);
  combo(0) = complexd(dist(gen), dist(gen));
  combo(1) = complexd(dist(gen), dist(gen));
  combo /= combo.norm();
  REQUIRE(fidelity(combo, gs) == Catch::Approx(1.0).margin(1e-10));

  // fidelity is a projector property: any unitary remix of the degenerate
  // basis gives the same value
  const double phi = 0.77;
  GroundSpace rotated = gs;
  Eigen::Matrix2cd R;
  R << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  rotated.basis = gs.basis * R;
  const VectorXcd psi = oracles::random_state(4, gen);
  REQUIRE(fidelity(psi, rotated) == Catch::Approx(fidelity(psi, gs)).margin(1e-10));
}

TEST_CASE("trace distance basics", "[dynamics]") {
  auto& gen = oracles::test_rng();
  const VectorXcd a = oracles::random_state(6, gen);
  REQUIRE(trace_distance(a, a) < 1e-12);
  const VectorXcd b = std::polar(1.0, 0.9) * a;
  REQUIRE(trace_distance(a, b) < 1e-7);
  VectorXcd e0 = VectorXcd::Zero(6), e1 = VectorXcd::Zero(6);
  e0(0) = 1;
  e1(1) = 1;
  REQUIRE(trace_distance(e0, e1) == Catch::Approx(1.0));
}

TEST_CASE("frame map round trip and t=0 form", "[dynamics]") {
  const DeviceParams p = map_xxz_to_device(-1.0, 1.7, 7.0, UnitConvention::cyclic);
  auto& gen = oracles::test_rng();
  const VectorXcd psi = oracles::random_state(64, gen);
  for (double t : {0.0, 0.123, 4.56}) {
    const VectorXcd back = frame_map_inverse(frame_map(psi, p, t), p, t);
    REQUIRE((back - psi).cwiseAbs().maxCoeff() < 1e-12);
  }
  const MatrixXcd Uy = bias_rotation(p, 6);
  REQUIRE((frame_map(psi, p, 0.0) - Uy.adjoint() * psi).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("swap sector expectation is frame invariant", "[dynamics]") {
  const DeviceParams p = map_xxz_to_device(1.0, 0.7, 11.0, UnitConvention::cyclic);
  const MatrixXcd S = compile(swap_product({{0, 3}, {1, 4}, {2, 5}}, 6));
  auto& gen = oracles::test_rng();
  const VectorXcd psi = oracles::random_state(64, gen);
  const double lab = expectation(psi, S);
  for (double t : {0.0, 0.37, 2.1}) {
    const double rot = expectation(frame_map(psi, p, t), S);
    REQUIRE(rot == Catch::Approx(lab).margin(1e-10));
  }
}

TEST_CASE("spectral flow matches the single-qubit closed form", "[dynamics]") {
  const double B = 0.8, C = 1.3;
  auto H = [&](double s) -> MatrixXcd {
    OperatorSum op(1);
    op.add((1.0 - s) * B, {{0, Axis::X}});
    op.add(s * C, {{0, Axis::Z}});
    return compile(op);
  };
  const SpectralFlow flow = spectral_flow(H, 11, 2);
  for (int i = 0; i < 11; ++i) {
    const double s = flow.s_values[i];
    const double r = std::hypot((1.0 - s) * B, s * C);
    REQUIRE(flow.levels(i, 0) == Catch::Approx(-r).margin(1e-12));
    REQUIRE(flow.levels(i, 1) == Catch::Approx(r).margin(1e-12));
  }
}

TEST_CASE("conventional anneal: sector-resolved ground levels cross", "[dynamics]") {
  // Uniform-driver interpolation to the antiferromagnetic model on the 2x3
  // grid: the swap-symmetric and antisymmetric ground levels trade places,
  // which is the level crossing behind the vanishing fidelity.
  const OperatorSum H_P = xxz_hamiltonian({1.0, 1.7, square_lattice(2, 3)});
  const MatrixXcd S = compile(swap_product({{0, 3}, {1, 4}, {2, 5}}, 6));
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(S);
  std::vector<int> plus, minus;
  for (int i = 0; i < 64; ++i) (es.eigenvalues()(i) > 0 ? plus : minus).push_back(i);
  REQUIRE(plus.size() == 36);
  REQUIRE(minus.size() == 28);
  MatrixXcd Bp(64, plus.size()), Bm(64, minus.size());
  for (size_t c = 0; c < plus.size(); ++c) Bp.col(c) = es.eigenvectors().col(plus[c]);
  for (size_t c = 0; c < minus.size(); ++c) Bm.col(c) = es.eigenvectors().col(minus[c]);

  int sign_changes = 0;
  double prev = 0.0;
  for (int i = 0; i < 201; ++i) {
    const double s = i / 200.0;
    const MatrixXcd H = compile(conventional_qa_hamiltonian(H_P, 1.0, s));
    const double ep = hermitian_eigenvalues((Bp.adjoint() * H * Bp).eval())(0);
    const double em = hermitian_eigenvalues((Bm.adjoint() * H * Bm).eval())(0);
    const double diff = ep - em;
    if (i == 0) REQUIRE(diff < -1e-6);        // driver ground is symmetric
    if (i == 200) REQUIRE(diff > 1e-6);       // target ground is antisymmetric
    if (i > 0 && diff * prev < 0) ++sign_changes;
    prev = diff;
  }
  // the levels trade places an odd number of times between the endpoints
  REQUIRE(sign_changes % 2 == 1);
}

TEST_CASE("rotating-frame Rabi flop follows the closed form exactly", "[dynamics]") {
  // Single resonant qubit: the effective Hamiltonian is (lambda/2) Y, so the
  // excited population is sin^2(lambda t / 2) with no approximation.
  const double lambda = 0.8, T = 9.0;
  const DeviceParams p = map_xxz_to_device(1.0, 1.0, 25.0);
  const LatticeGraph single = square_lattice(1, 1);
  const MatrixXcd Heff = compile(effective_hamiltonian(p, {1.0}, single, lambda, 0.0));
  VectorXcd down(2);
  down << 0, 1;
  const Trajectory traj = propagate([&](double) { return Heff; }, down, T, T / 400,
                                    Integrator::midpoint_exponential, 401);
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const double want = oracles::rabi_excited_population(lambda, traj.times[i]);
    const double got = std::norm(traj.states[i](0));
    REQUIRE(got == Catch::Approx(want).margin(1e-9));
  }
}

TEST_CASE("lab-frame Rabi flop converges to the closed form in omega", "[dynamics]") {
  // Full cosine drive at resonance, starting from the dressed ground state;
  // the population follows the closed form up to counter-rotating error that
  // shrinks with the drive frequency.
  const double lambda = 1.0;
  const LatticeGraph single = square_lattice(1, 1);
  auto peak_error = [&](double omega) {
    const DeviceParams p = map_xxz_to_device(1.0, 1.0, omega, UnitConvention::cyclic);
    const double kap = kappa(p.unit_convention);
    const LabFrameParts parts = build_lab_parts(p, {1.0}, single);
    const MatrixXcd Uy = bias_rotation(p, 1);
    VectorXcd down(2);
    down << 0, 1;
    const VectorXcd psi0 = Uy * down;  // dressed ground
    const double t_peak = M_PI / (kap * lambda);
    const double dt = (2.0 * M_PI / (kap * omega)) / 40.0;
    const std::int64_t n = static_cast<std::int64_t>(std::ceil(t_peak / dt));
    const double T = n * dt;  // first population maximum, rounded to a step
    const Trajectory traj = propagate(
        [&](double t) -> MatrixXcd { return kap * parts.at(lambda, 0.0, t); }, psi0, T, dt);
    const VectorXcd dressed = Uy.adjoint() * traj.states.back();
    const double p_exc = std::norm(dressed(0));
    const double want =
        oracles::rabi_excited_population(lambda, traj.times.back(), kap);
    return std::abs(p_exc - want);
  };
  const double err20 = peak_error(20.0);
  const double err100 = peak_error(100.0);
  REQUIRE(err20 < 5e-4);
  REQUIRE(err100 < 5e-5);
  REQUIRE(err100 < err20);
}

TEST_CASE("longer anneals reach higher fidelity in the rotating frame", "[dynamics]") {
  const LatticeGraph pair = square_lattice(1, 2);
  const DeviceParams p = map_xxz_to_device(-1.0, 1.0, 20.0);
  const std::vector<double> ones(2, 1.0);
  const MatrixXcd base = compile(effective_hamiltonian(p, ones, pair, 0.0, 0.0));
  const MatrixXcd drive = compile(effective_hamiltonian(p, ones, pair, 1.0, 0.0)) - base;
  const MatrixXcd coup = compile(effective_hamiltonian(p, ones, pair, 0.0, 1.0)) - base;
  const GroundSpace target = ground_space((base + p.g * coup).eval());

  auto final_fidelity = [&](double T) {
    const Schedule sched = schedule_linear(1.0, p.g, T);
    auto H = [&](double t) -> MatrixXcd {
      return base + sched.lambda_at(t) * drive + sched.g_at(t) * coup;
    };
    const GroundSpace init = ground_space((base + 1.0 * drive).eval());
    const Trajectory traj = propagate(H, init.basis.col(0), T, T / 2000);
    return fidelity(traj.states.back(), target);
  };
  const double f10 = final_fidelity(10.0);
  const double f100 = final_fidelity(100.0);
  const double f1000 = final_fidelity(1000.0);
  REQUIRE(f10 < f100);
  REQUIRE(f100 < f1000);
  REQUIRE(f1000 > 0.999);
}

TEST_CASE("step halving leaves the final fidelity unchanged", "[dynamics]") {
  const LatticeGraph pair = square_lattice(1, 2);
  const DeviceParams p = map_xxz_to_device(-1.0, 1.0, 20.0);
  const std::vector<double> ones(2, 1.0);
  const MatrixXcd base = compile(effective_hamiltonian(p, ones, pair, 0.0, 0.0));
  const MatrixXcd drive = compile(effective_hamiltonian(p, ones, pair, 1.0, 0.0)) - base;
  const MatrixXcd coup = compile(effective_hamiltonian(p, ones, pair, 0.0, 1.0)) - base;
  const double T = 100.0;
  const Schedule sched = schedule_linear(1.0, p.g, T);
  auto H = [&](double t) -> MatrixXcd {
    return base + sched.lambda_at(t) * drive + sched.g_at(t) * coup;
  };
  const GroundSpace init = ground_space((base + drive).eval());
  const GroundSpace target = ground_space((base + p.g * coup).eval());
  const double f1 =
      fidelity(propagate(H, init.basis.col(0), T, T / 2000).states.back(), target);
  const double f2 =
      fidelity(propagate(H, init.basis.col(0), T, T / 4000).states.back(), target);
  REQUIRE(std::abs(f1 - f2) < 1e-5);
}
