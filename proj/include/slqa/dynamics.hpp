#pragma once

// Schrodinger propagation, spectra, ground spaces, fidelity, frame maps.
//
// All propagation here is convention-agnostic pure math: the supplied
// Hamiltonian callable must already be scaled to rad/ns (callers multiply
// GHz-valued builders by kappa(unit_convention)).

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef SLQA_WITH_LAPACKE
#include <lapacke.h>
#endif

#include "slqa/device.hpp"
#include "slqa/pauli.hpp"

namespace slqa {

// Hermitian eigendecomposition, eigenvalues ascending.  V's columns are the
// eigenvectors.  zheevd when available, Eigen otherwise; both are
// deterministic for a fixed input.
inline void hermitian_eig(const MatrixXcd& H, VectorXd& w, MatrixXcd& V) {
#ifdef SLQA_WITH_LAPACKE
  const int d = static_cast<int>(H.rows());
  V = H;
  w.resize(d);
  const int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', d,
                                  reinterpret_cast<lapack_complex_double*>(V.data()), d,
                                  w.data());
  if (info != 0)
    throw std::runtime_error("hermitian_eig: zheevd failed with info=" + std::to_string(info));
#else
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver failed");
  w = es.eigenvalues();
  V = es.eigenvectors();
#endif
}

inline VectorXd hermitian_eigenvalues(const MatrixXcd& H) {
#ifdef SLQA_WITH_LAPACKE
  const int d = static_cast<int>(H.rows());
  MatrixXcd A = H;
  VectorXd w(d);
  const int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', d,
                                  reinterpret_cast<lapack_complex_double*>(A.data()), d,
                                  w.data());
  if (info != 0)
    throw std::runtime_error("hermitian_eigenvalues: zheevd failed");
  return w;
#else
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
#endif
}

struct GroundSpace {
  double energy = 0.0;       // lowest eigenvalue
  MatrixXcd basis;           // orthonormal columns spanning the ground space
  int degeneracy = 0;
  double tolerance = 0.0;    // degeneracy tolerance used
};

inline constexpr double kDefaultDegeneracyTol = 1e-6;

inline GroundSpace ground_space(const MatrixXcd& H, double degeneracy_tol = kDefaultDegeneracyTol) {
  VectorXd w;
  MatrixXcd V;
  hermitian_eig(H, w, V);
  const double e0 = w(0);
  int m = 1;
  while (m < w.size() && w(m) - e0 <= degeneracy_tol) ++m;
  GroundSpace gs;
  gs.energy = e0;
  gs.basis = V.leftCols(m);
  gs.degeneracy = m;
  gs.tolerance = degeneracy_tol;
  return gs;
}

// F = sum_n |<g_n|psi>|^2  (pure-state ground-space projector weight)
inline double fidelity(const VectorXcd& psi, const GroundSpace& gs) {
  if (psi.size() != gs.basis.rows())
    throw std::invalid_argument("fidelity: dimension mismatch");
  return (gs.basis.adjoint() * psi).squaredNorm();
}

inline double trace_distance(const VectorXcd& psi, const VectorXcd& phi) {
  const double overlap = std::norm(psi.dot(phi));
  return std::sqrt(std::max(0.0, 1.0 - overlap));
}

enum class Integrator { midpoint_exponential, rk4 };

struct Trajectory {
  std::vector<double> times;        // snapshot times, ns
  std::vector<VectorXcd> states;    // decimated snapshots (<= max_snapshots)
  std::vector<double> fidelities;   // filled by experiment drivers

  // solver metadata
  std::int64_t n_steps = 0;
  double dt = 0.0;
  Integrator method = Integrator::midpoint_exponential;
  double max_step_phase = 0.0;      // max over steps of dt * max|eigenvalue|
  bool step_phase_warning = false;  // set when the above reached 0.5
  double norm_drift = 0.0;          // rk4 only: max |norm - 1| before renormalizing
  double final_norm_error = 0.0;    // | ||psi(T)|| - 1 |
};

inline constexpr int kMaxSnapshots = 512;

// Midpoint-exponential (default): per step applies exp(-i*H(t+dt/2)*dt) via
// Hermitian eigendecomposition.  RK4 integrates the Schrodinger equation and
// renormalizes each step, tracking the drift.
inline Trajectory propagate(const std::function<MatrixXcd(double)>& H_of_t,
                            const VectorXcd& psi0, double T, double dt,
                            Integrator method = Integrator::midpoint_exponential,
                            int max_snapshots = kMaxSnapshots) {
  if (T <= 0.0 || dt <= 0.0) throw std::invalid_argument("propagate: T and dt must be positive");
  const std::int64_t n_steps = std::llround(T / dt);
  if (n_steps < 1 || std::abs(n_steps * dt - T) > 1e-9 * T)
    throw std::invalid_argument("propagate: dt must divide T");
  const double h = T / static_cast<double>(n_steps);  // exact uniform step

  Trajectory traj;
  traj.n_steps = n_steps;
  traj.dt = h;
  traj.method = method;

  // Prefer a stride dividing n_steps so snapshots form a uniform grid.
  std::int64_t stride = (n_steps + max_snapshots - 2) / (max_snapshots - 1);
  while (stride < n_steps && n_steps % stride != 0) ++stride;

  VectorXcd psi = psi0;
  const complexd iu(0.0, 1.0);
  auto snapshot = [&](std::int64_t k) {
    traj.times.push_back(k * h);
    traj.states.push_back(psi);
  };
  snapshot(0);

  VectorXd w;
  MatrixXcd V;
  VectorXcd tmp;
  for (std::int64_t k = 0; k < n_steps; ++k) {
    const double tmid = (static_cast<double>(k) + 0.5) * h;
    if (method == Integrator::midpoint_exponential) {
      hermitian_eig(H_of_t(tmid), w, V);
      const double phase = h * std::max(std::abs(w(0)), std::abs(w(w.size() - 1)));
      traj.max_step_phase = std::max(traj.max_step_phase, phase);
      tmp.noalias() = V.adjoint() * psi;
      tmp.array() *= (-iu * h * w.array()).exp();
      psi.noalias() = V * tmp;
    } else {
      const double t = static_cast<double>(k) * h;
      const MatrixXcd Ha = H_of_t(t);
      const MatrixXcd Hm = H_of_t(tmid);
      const MatrixXcd Hb = H_of_t(t + h);
      const VectorXcd k1 = -iu * (Ha * psi);
      const VectorXcd k2 = -iu * (Hm * (psi + 0.5 * h * k1));
      const VectorXcd k3 = -iu * (Hm * (psi + 0.5 * h * k2));
      const VectorXcd k4 = -iu * (Hb * (psi + h * k3));
      psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      const double nrm = psi.norm();
      traj.norm_drift = std::max(traj.norm_drift, std::abs(nrm - 1.0));
      if (traj.norm_drift > 1e-6)
        throw std::runtime_error("propagate: rk4 norm drift exceeded 1e-6; reduce dt");
      psi /= nrm;
    }
    if (!psi.allFinite()) throw std::runtime_error("propagate: non-finite amplitudes");
    if ((k + 1) % stride == 0 || k + 1 == n_steps) snapshot(k + 1);
  }
  if (traj.max_step_phase >= 0.5) traj.step_phase_warning = true;
  traj.final_norm_error = std::abs(psi.norm() - 1.0);
  return traj;
}

struct SpectralFlow {
  std::vector<double> s_values;
  Eigen::MatrixXd levels;  // n_points x k_levels, ascending per row
};

inline SpectralFlow spectral_flow(const std::function<MatrixXcd(double)>& H_of_s, int n_points,
                                  int k_levels) {
  if (n_points < 2) throw std::invalid_argument("spectral_flow: need at least 2 points");
  SpectralFlow flow;
  flow.s_values.resize(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double s = static_cast<double>(i) / (n_points - 1);
    flow.s_values[i] = s;
    const VectorXd w = hermitian_eigenvalues(H_of_s(s));
    if (i == 0) {
      const int k = std::min<int>(k_levels, static_cast<int>(w.size()));
      flow.levels.resize(n_points, k);
    }
    for (int j = 0; j < flow.levels.cols(); ++j) flow.levels(i, j) = w(j);
  }
  return flow;
}

// Diagonal frame unitary U(t) = exp(-i*kappa*(omega*t/2)*sum_j Z_j) applied as
// phases; sign > 0 applies U(t), sign < 0 applies its inverse.
inline VectorXcd z_frame_phases(const VectorXcd& psi, double omega_t_half, int sign) {
  const int dim = static_cast<int>(psi.size());
  int n = 0;
  while ((1 << n) < dim) ++n;
  VectorXcd out(dim);
  const complexd iu(0.0, 1.0);
  for (int b = 0; b < dim; ++b) {
    const int mz = n - 2 * std::popcount(static_cast<unsigned>(b));
    out(b) = psi(b) * std::exp(-iu * (sign * omega_t_half * mz));
  }
  return out;
}

// Lab frame -> rotating frame: psi_rot = U(t)^dag * U_y^dag * psi_lab, with
// U_y the bias rotation and U(t) the drive-frequency Z frame.
inline VectorXcd frame_map(const VectorXcd& psi_lab, const DeviceParams& p, double t) {
  const int dim = static_cast<int>(psi_lab.size());
  int n = 0;
  while ((1 << n) < dim) ++n;
  const MatrixXcd Uy = rotation_unitary(Axis::Y, 0.5 * p.theta(), n);
  const VectorXcd rotated = Uy.adjoint() * psi_lab;
  const double half = 0.5 * kappa(p.unit_convention) * p.omega * t;
  return z_frame_phases(rotated, half, -1);
}

inline VectorXcd frame_map_inverse(const VectorXcd& psi_rot, const DeviceParams& p, double t) {
  const int dim = static_cast<int>(psi_rot.size());
  int n = 0;
  while ((1 << n) < dim) ++n;
  const double half = 0.5 * kappa(p.unit_convention) * p.omega * t;
  const VectorXcd dephased = z_frame_phases(psi_rot, half, +1);
  const MatrixXcd Uy = rotation_unitary(Axis::Y, 0.5 * p.theta(), n);
  return Uy * dephased;
}

inline double expectation(const VectorXcd& psi, const MatrixXcd& M, double imag_tol = 1e-10) {
  const complexd val = psi.dot(M * psi);
  if (std::abs(val.imag()) > imag_tol)
    throw std::runtime_error("expectation: imaginary residual above tolerance");
  return val.real();
}

}  // namespace slqa
