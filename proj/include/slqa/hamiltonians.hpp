#pragma once

// Hamiltonian builders: XXZ problem, transverse drivers, conventional QA
// interpolation, the lab-frame flux-qubit Hamiltonian, its bias-rotated
// form, and the rotating-frame effective Hamiltonian.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "slqa/device.hpp"
#include "slqa/lattice.hpp"
#include "slqa/pauli.hpp"
#include "slqa/schedule.hpp"

namespace slqa {

// J * sum_<jk> (XjXk + YjYk + Delta*ZjZk)
inline OperatorSum xxz_hamiltonian(const XXZParams& p) {
  p.graph.validate();
  OperatorSum op(p.graph.n_sites);
  for (const auto& [j, k] : p.graph.bonds) {
    op.add(p.J, {{j, Axis::X}, {k, Axis::X}});
    op.add(p.J, {{j, Axis::Y}, {k, Axis::Y}});
    op.add(p.J * p.Delta, {{j, Axis::Z}, {k, Axis::Z}});
  }
  return op;
}

// -sum_j coeff_j * sigma_j^axis  (driver sign convention: the interpolated
// annealing driver carries the minus sign; rotating-frame drive terms are
// built with positive sign inside effective_hamiltonian).
inline OperatorSum driver_hamiltonian(const std::vector<double>& coeffs, Axis axis) {
  OperatorSum op(static_cast<int>(coeffs.size()));
  for (int j = 0; j < op.n_qubits; ++j)
    op.add(-coeffs[j], {{j, axis}});
  return op;
}

// s*H_P + (1-s)*(-B*sum_j X_j)
inline OperatorSum conventional_qa_hamiltonian(const OperatorSum& H_P, double B, double s) {
  if (s < 0.0 || s > 1.0)
    throw std::invalid_argument("conventional_qa_hamiltonian: s outside [0,1]");
  OperatorSum op(H_P.n_qubits);
  op = s * OperatorSum(H_P);
  std::vector<double> b(H_P.n_qubits, B);
  op += (1.0 - s) * driver_hamiltonian(b, Axis::X);
  return op;
}

// Precompiled pieces of the lab-frame Hamiltonian
//   H(t) = (eps/2) sum Z + (dg/2) sum X + lambda(t) cos(kappa*omega*t) sum_j c_j Y_j
//          + g(t) sum_<jk> Z_j Z_k
// so sweeps can evaluate it per step without recompiling Pauli sums.
struct LabFrameParts {
  MatrixXcd static_part;    // bias + gap
  MatrixXcd drive_part;     // sum_j c_j Y_j (unit drive amplitude)
  MatrixXcd coupling_part;  // sum_bonds ZZ (unit coupling)
  double omega = 0.0;
  double kap = 1.0;

  MatrixXcd at(double lambda_t, double g_t, double t) const {
    return static_part + (lambda_t * std::cos(kap * omega * t)) * drive_part +
           g_t * coupling_part;
  }
};

inline LabFrameParts build_lab_parts(const DeviceParams& p, const std::vector<double>& coeffs,
                                     const LatticeGraph& graph) {
  p.validate();
  graph.validate();
  const int n = graph.n_sites;
  if (static_cast<int>(coeffs.size()) != n)
    throw std::invalid_argument("build_lab_parts: coeffs length != n_sites");
  OperatorSum stat(n), drive(n), coup(n);
  for (int j = 0; j < n; ++j) {
    stat.add(0.5 * p.epsilon, {{j, Axis::Z}});
    stat.add(0.5 * p.delta_g, {{j, Axis::X}});
    drive.add(coeffs[j], {{j, Axis::Y}});
  }
  for (const auto& [j, k] : graph.bonds) coup.add(1.0, {{j, Axis::Z}, {k, Axis::Z}});
  LabFrameParts parts;
  parts.static_part = compile(stat);
  parts.drive_part = compile(drive);
  parts.coupling_part = compile(coup);
  parts.omega = p.omega;
  parts.kap = kappa(p.unit_convention);
  return parts;
}

inline MatrixXcd lab_frame_hamiltonian(const DeviceParams& p, const std::vector<double>& coeffs,
                                       const LatticeGraph& graph, double lambda_t, double g_t,
                                       double t) {
  return build_lab_parts(p, coeffs, graph).at(lambda_t, g_t, t);
}

// Unitary removing the X field from the static part: conjugation by
// exp(-i*(theta/2)*sum Y) with theta = atan2(delta_g, epsilon) rotates each
// qubit's (Z, X) pair by theta.
inline MatrixXcd bias_rotation(const DeviceParams& p, int n) {
  return rotation_unitary(Axis::Y, 0.5 * p.theta(), n);
}

// Lab-frame Hamiltonian conjugated into the rotated basis where the static
// single-qubit part is diagonal.
inline MatrixXcd rotated_hamiltonian(const DeviceParams& p, const std::vector<double>& coeffs,
                                     const LatticeGraph& graph, double lambda_t, double g_t,
                                     double t) {
  const MatrixXcd H = lab_frame_hamiltonian(p, coeffs, graph, lambda_t, g_t, t);
  const MatrixXcd U = bias_rotation(p, graph.n_sites);
  return U.adjoint() * H * U;
}

// Rotating-wave effective Hamiltonian with instantaneous schedule values:
//   (lambda_t/2) sum_j c_j Y_j + detuning * sum_j Z_j
//   + g_t * sum_<jk> [cos^2(theta) Z_j Z_k + sin^2(theta) (XX + YY)/2]
// The detuning term is always included as computed (zero on resonance).
inline OperatorSum effective_hamiltonian(const DeviceParams& p, const std::vector<double>& coeffs,
                                         const LatticeGraph& graph, double lambda_t,
                                         double g_t) {
  p.validate();
  graph.validate();
  const int n = graph.n_sites;
  if (static_cast<int>(coeffs.size()) != n)
    throw std::invalid_argument("effective_hamiltonian: coeffs length != n_sites");
  const double gap2 = p.epsilon * p.epsilon + p.delta_g * p.delta_g;
  const double cos2 = p.epsilon * p.epsilon / gap2;
  const double sin2 = p.delta_g * p.delta_g / gap2;
  const double dw = p.detuning();
  OperatorSum op(n);
  for (int j = 0; j < n; ++j) op.add(0.5 * lambda_t * coeffs[j], {{j, Axis::Y}});
  for (int j = 0; j < n; ++j) op.add(dw, {{j, Axis::Z}});
  for (const auto& [j, k] : graph.bonds) {
    op.add(g_t * cos2, {{j, Axis::Z}, {k, Axis::Z}});
    op.add(0.5 * g_t * sin2, {{j, Axis::X}, {k, Axis::X}});
    op.add(0.5 * g_t * sin2, {{j, Axis::Y}, {k, Axis::Y}});
  }
  return op;
}

}  // namespace slqa
