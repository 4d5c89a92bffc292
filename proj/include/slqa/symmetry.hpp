#pragma once

// Conserved-operator detection and sector analysis: find swap products that
// commute with both driver and problem Hamiltonians, compare the sectors of
// the initial and target ground states, and flag obstructed anneals.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slqa/dynamics.hpp"
#include "slqa/lattice.hpp"
#include "slqa/pauli.hpp"

namespace slqa {

inline double commutator_residual(const MatrixXcd& A, const MatrixXcd& H) {
  if (A.rows() != H.rows() || A.cols() != H.cols())
    throw std::invalid_argument("commutator_residual: dimension mismatch");
  return (A * H - H * A).norm();
}

inline double sector_expectation(const VectorXcd& psi, const OperatorSum& S) {
  const MatrixXcd Sm = compile(S);
  if (hermiticity_residual(Sm) > 1e-10)
    throw std::invalid_argument("sector_expectation: operator is not Hermitian");
  return expectation(psi, Sm);
}

struct SymmetryReport {
  OperatorSum op;
  std::vector<std::pair<int, int>> pairs;  // transpositions when op is a swap product

  double driver_residual = 0.0;
  double problem_residual = 0.0;
  bool commutes_with_driver = false;
  bool commutes_with_problem = false;

  // Sector values of the operator restricted to each ground space: for a
  // nondegenerate space a single expectation, otherwise the eigenvalues of
  // the restriction (a sector-adapted basis of the degenerate space).
  std::vector<double> initial_sectors;
  std::vector<double> target_sectors;
  double initial_sector = 0.0;  // mean over the space
  double target_sector = 0.0;
  bool initial_mixes_sectors = false;
  bool target_mixes_sectors = false;

  bool obstructed = false;
};

namespace detail {

// Eigenvalues of S restricted to the span of the (orthonormal) basis columns.
inline std::vector<double> restricted_sectors(const MatrixXcd& S, const GroundSpace& gs) {
  const MatrixXcd R = gs.basis.adjoint() * S * gs.basis;
  const VectorXd w = hermitian_eigenvalues((R + R.adjoint()) / 2.0);
  return std::vector<double>(w.data(), w.data() + w.size());
}

inline double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

}  // namespace detail

inline constexpr double kSectorGapThreshold = 1.0;  // sectors +-1 differ by 2

// Sector diagnosis for an anneal from the ground space of H_D to that of H_P.
// Obstructed: S commutes with both ends (residuals <= tol) and every sector
// value of the target space is farther than the threshold from every sector
// value of the initial space.
inline SymmetryReport obstruction_report(const OperatorSum& H_D, const OperatorSum& H_P,
                                         const OperatorSum& S, double tol = 1e-9) {
  const MatrixXcd Sm = compile(S);
  const MatrixXcd Hd = compile(H_D);
  const MatrixXcd Hp = compile(H_P);
  SymmetryReport rep;
  rep.op = S;
  rep.driver_residual = commutator_residual(Sm, Hd);
  rep.problem_residual = commutator_residual(Sm, Hp);
  rep.commutes_with_driver = rep.driver_residual <= tol;
  rep.commutes_with_problem = rep.problem_residual <= tol;

  const GroundSpace gs_d = ground_space(Hd);
  const GroundSpace gs_p = ground_space(Hp);
  rep.initial_sectors = detail::restricted_sectors(Sm, gs_d);
  rep.target_sectors = detail::restricted_sectors(Sm, gs_p);
  rep.initial_sector = detail::mean(rep.initial_sectors);
  rep.target_sector = detail::mean(rep.target_sectors);
  auto spread = [](const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
  };
  rep.initial_mixes_sectors = spread(rep.initial_sectors) > kSectorGapThreshold;
  rep.target_mixes_sectors = spread(rep.target_sectors) > kSectorGapThreshold;

  bool separated = true;
  for (double si : rep.initial_sectors)
    for (double st : rep.target_sectors)
      if (std::abs(si - st) <= kSectorGapThreshold) separated = false;
  rep.obstructed = rep.commutes_with_driver && rep.commutes_with_problem && separated;
  return rep;
}

struct SwapCandidate {
  std::vector<std::pair<int, int>> pairs;
  OperatorSum op;
};

namespace detail {

inline void enumerate_involutions(int n, int from, std::vector<int>& perm,
                                  std::vector<std::pair<int, int>>& pairs,
                                  const std::function<void(const std::vector<int>&,
                                                           const std::vector<std::pair<int, int>>&)>& emit) {
  int j = from;
  while (j < n && perm[j] != -1) ++j;
  if (j == n) {
    if (!pairs.empty()) {
      std::vector<int> p = perm;
      for (int i = 0; i < n; ++i)
        if (p[i] == -1) p[i] = i;
      emit(p, pairs);
    }
    return;
  }
  // site j stays fixed
  enumerate_involutions(n, j + 1, perm, pairs, emit);
  // site j paired with a later site k
  for (int k = j + 1; k < n; ++k) {
    if (perm[k] != -1) continue;
    perm[j] = k;
    perm[k] = j;
    pairs.emplace_back(j, k);
    enumerate_involutions(n, j + 1, perm, pairs, emit);
    pairs.pop_back();
    perm[j] = perm[k] = -1;
  }
}

inline bool preserves_bonds(const std::vector<int>& perm, const LatticeGraph& g) {
  auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::vector<std::pair<int, int>> bonds;
  for (const auto& [j, k] : g.bonds) bonds.push_back(norm(j, k));
  std::sort(bonds.begin(), bonds.end());
  for (const auto& [j, k] : g.bonds) {
    const auto mapped = norm(perm[j], perm[k]);
    if (!std::binary_search(bonds.begin(), bonds.end(), mapped)) return false;
  }
  return true;
}

}  // namespace detail

inline constexpr int kSwapEnumerationCap = 8;

// All non-identity products of disjoint transpositions whose permutation maps
// the bond set onto itself (lattice automorphism involutions).
inline std::vector<SwapCandidate> swap_candidates(const LatticeGraph& graph) {
  if (graph.n_sites > kSwapEnumerationCap)
    throw std::invalid_argument("swap_candidates: enumeration capped at 8 sites");
  graph.validate();
  std::vector<SwapCandidate> out;
  std::vector<int> perm(graph.n_sites, -1);
  std::vector<std::pair<int, int>> pairs;
  detail::enumerate_involutions(
      graph.n_sites, 0, perm, pairs,
      [&](const std::vector<int>& p, const std::vector<std::pair<int, int>>& pr) {
        if (detail::preserves_bonds(p, graph))
          out.push_back({pr, swap_product(pr, graph.n_sites)});
      });
  return out;
}

// Max drift of <S> over stored trajectory snapshots (conservation check).
inline double sector_drift(const std::vector<VectorXcd>& states, const MatrixXcd& S) {
  if (states.empty()) return 0.0;
  const double first = expectation(states.front(), S, 1e-8);
  double drift = 0.0;
  for (const auto& psi : states)
    drift = std::max(drift, std::abs(expectation(psi, S, 1e-8) - first));
  return drift;
}

}  // namespace slqa
