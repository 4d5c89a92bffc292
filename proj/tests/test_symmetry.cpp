// Swap symmetries of the lattice, sector structure, and the obstruction
// analysis that separates uniform from site-resolved drives.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "slqa/dynamics.hpp"
#include "slqa/hamiltonians.hpp"
#include "slqa/symmetry.hpp"

using namespace slqa;
using Eigen::MatrixXcd;

namespace {

std::vector<std::vector<std::pair<int, int>>> sorted_swaps(
    const std::vector<SwapCandidate>& cands) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& c : cands) {
    auto sw = c.pairs;
    std::sort(sw.begin(), sw.end());
    out.push_back(sw);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("commutator residual distinguishes symmetries from non-symmetries",
          "[symmetry]") {
  const MatrixXcd H = compile(xxz_hamiltonian({1.0, 0.7, square_lattice(1, 2)}));
  const MatrixXcd S = compile(swap_product({{0, 1}}, 2));
  REQUIRE(commutator_residual(S, H) < 1e-13);

  OperatorSum skew(2);
  skew.add(1.0, {{0, Axis::X}});
  REQUIRE(commutator_residual(S, compile(skew)) > 0.1);
}

TEST_CASE("swap candidate enumeration matches brute force on small graphs",
          "[symmetry]") {
  const LatticeGraph chain = square_lattice(1, 3);
  const auto got3 = sorted_swaps(swap_candidates(chain));
  const auto want3 = oracles::brute_force_involutions(chain);
  REQUIRE(got3 == want3);
  REQUIRE(got3.size() == 1);
  REQUIRE(got3[0] == std::vector<std::pair<int, int>>{{0, 2}});

  const LatticeGraph grid22 = square_lattice(2, 2);
  REQUIRE(sorted_swaps(swap_candidates(grid22)) ==
          oracles::brute_force_involutions(grid22));
}

TEST_CASE("the 2x3 grid has exactly three swap symmetries", "[symmetry]") {
  const LatticeGraph grid = square_lattice(2, 3);
  const auto got = sorted_swaps(swap_candidates(grid));
  REQUIRE(got == oracles::brute_force_involutions(grid));
  const std::vector<std::vector<std::pair<int, int>>> want = {
      {{0, 2}, {3, 5}},          // mirror across the middle column
      {{0, 3}, {1, 4}, {2, 5}},  // swap the two rows
      {{0, 5}, {1, 4}, {2, 3}},  // half turn
  };
  REQUIRE(got == want);
}

TEST_CASE("enumeration refuses lattices that are too large", "[symmetry]") {
  REQUIRE_THROWS(swap_candidates(square_lattice(3, 3)));
}

TEST_CASE("uniform transverse drive is obstructed on the antiferromagnet",
          "[symmetry]") {
  const LatticeGraph grid = square_lattice(2, 3);
  const std::vector<double> ones(6, 1.0);
  const OperatorSum H_D = driver_hamiltonian(ones, Axis::X);
  const OperatorSum S = swap_product({{0, 3}, {1, 4}, {2, 5}}, 6);

  for (double delta : {0.7, 1.7}) {
    const OperatorSum H_P = xxz_hamiltonian({1.0, delta, grid});
    const SymmetryReport rep = obstruction_report(H_D, H_P, S);
    REQUIRE(rep.commutes_with_driver);
    REQUIRE(rep.commutes_with_problem);
    REQUIRE(rep.initial_sector == Catch::Approx(1.0).margin(1e-6));
    REQUIRE(rep.target_sector == Catch::Approx(-1.0).margin(1e-6));
    REQUIRE(rep.obstructed);

    const auto check = oracles::exhaustive_sector_check(compile(H_P), compile(S));
    REQUIRE(check.commutator < 1e-12);
    REQUIRE(check.spectrum_mismatch < 1e-8);
    REQUIRE(check.dim_plus == 36);
    REQUIRE(check.dim_minus == 28);
  }
}

TEST_CASE("the ferromagnet is not obstructed by the row swap", "[symmetry]") {
  const LatticeGraph grid = square_lattice(2, 3);
  const std::vector<double> ones(6, 1.0);
  const OperatorSum H_D = driver_hamiltonian(ones, Axis::X);
  const OperatorSum S = swap_product({{0, 3}, {1, 4}, {2, 5}}, 6);
  const OperatorSum H_P = xxz_hamiltonian({-1.0, 1.7, grid});
  const SymmetryReport rep = obstruction_report(H_D, H_P, S);
  REQUIRE(rep.commutes_with_driver);
  REQUIRE(rep.commutes_with_problem);
  REQUIRE(rep.initial_sector == Catch::Approx(1.0).margin(1e-6));
  REQUIRE(rep.target_sector == Catch::Approx(1.0).margin(1e-6));
  REQUIRE_FALSE(rep.obstructed);
}

TEST_CASE("site-resolved drive amplitudes break the swap symmetry", "[symmetry]") {
  const LatticeGraph grid = square_lattice(2, 3);
  // any pattern that is not row-swap symmetric lifts the obstruction
  const std::vector<double> pattern = {0.3, -1.1, 0.8, 1.9, 0.2, -0.6};
  const OperatorSum H_D = driver_hamiltonian(pattern, Axis::X);
  const OperatorSum H_P = xxz_hamiltonian({1.0, 1.7, grid});
  const OperatorSum S = swap_product({{0, 3}, {1, 4}, {2, 5}}, 6);
  const SymmetryReport rep = obstruction_report(H_D, H_P, S);
  REQUIRE_FALSE(rep.commutes_with_driver);
  REQUIRE(rep.commutes_with_problem);
  REQUIRE_FALSE(rep.obstructed);
}

TEST_CASE("obstruction analysis works for the y drive axis too", "[symmetry]") {
  const LatticeGraph grid = square_lattice(2, 3);
  const std::vector<double> ones(6, 1.0);
  const OperatorSum H_D = driver_hamiltonian(ones, Axis::Y);
  const OperatorSum H_P = xxz_hamiltonian({1.0, 0.7, grid});
  const OperatorSum S = swap_product({{0, 3}, {1, 4}, {2, 5}}, 6);
  const SymmetryReport rep = obstruction_report(H_D, H_P, S);
  REQUIRE(rep.commutes_with_driver);
  REQUIRE(rep.obstructed);
}

TEST_CASE("mirror swap does not obstruct the antiferromagnet", "[symmetry]") {
  const LatticeGraph grid = square_lattice(2, 3);
  const std::vector<double> ones(6, 1.0);
  const OperatorSum H_D = driver_hamiltonian(ones, Axis::X);
  const OperatorSum H_P = xxz_hamiltonian({1.0, 1.7, grid});
  const OperatorSum S = swap_product({{0, 2}, {3, 5}}, 6);
  const SymmetryReport rep = obstruction_report(H_D, H_P, S);
  REQUIRE(rep.initial_sector == Catch::Approx(1.0).margin(1e-6));
  REQUIRE(rep.target_sector == Catch::Approx(1.0).margin(1e-6));
  REQUIRE_FALSE(rep.obstructed);
}

TEST_CASE("sector expectation is conserved along a symmetric evolution",
          "[symmetry]") {
  const LatticeGraph pair = square_lattice(1, 2);
  const MatrixXcd H_P = compile(xxz_hamiltonian({1.0, 0.7, pair}));
  const MatrixXcd H_D = compile(driver_hamiltonian({1.0, 1.0}, Axis::X));
  const MatrixXcd S = compile(swap_product({{0, 1}}, 2));
  auto H = [&](double t) -> MatrixXcd {
    const double s = t / 10.0;
    return (1.0 - s) * H_D + s * H_P;
  };
  const GroundSpace init = ground_space(H_D);
  const Trajectory traj = propagate(H, init.basis.col(0), 10.0, 0.01);
  REQUIRE(sector_drift(traj.states, S) < 1e-9);
}
