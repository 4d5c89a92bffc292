#pragma once

// Flux-qubit device parameters and the XXZ -> device mapping.

#include <cmath>
#include <stdexcept>

#include "slqa/lattice.hpp"

namespace slqa {

// How a coefficient quoted in GHz enters phases: angular treats it as rad/ns
// directly (kappa = 1); cyclic multiplies by 2*pi (kappa = 2*pi).
enum class UnitConvention { angular, cyclic };

inline double kappa(UnitConvention uc) {
  return uc == UnitConvention::angular ? 1.0 : 2.0 * M_PI;
}

struct DeviceParams {
  double epsilon = 0.0;   // energy bias, GHz
  double delta_g = 0.0;   // tunnel gap, GHz
  double g = 0.0;         // inductive coupling, GHz
  double lambda0 = 0.0;   // drive amplitude at full schedule, GHz
  double omega = 0.0;     // drive frequency, GHz
  UnitConvention unit_convention = UnitConvention::angular;

  double qubit_gap() const { return std::hypot(epsilon, delta_g); }

  // Half the difference between qubit gap and drive frequency; zero on resonance.
  double detuning() const { return 0.5 * (qubit_gap() - omega); }

  // Mixing angle of the bias/gap rotation that removes the X field.
  double theta() const { return std::atan2(delta_g, epsilon); }

  void validate() const {
    if (epsilon * epsilon + delta_g * delta_g <= 0.0)
      throw std::invalid_argument("DeviceParams: epsilon and delta_g both zero");
  }
};

struct XXZParams {
  double J = 0.0;       // coupling, GHz
  double Delta = 0.0;   // anisotropy, dimensionless
  LatticeGraph graph;
};

// Resonant device realizing target couplings (J, Delta) at drive frequency
// omega: Delta = delta_g^2/epsilon^2, J = g*epsilon^2/(epsilon^2+delta_g^2),
// and qubit gap = omega so the detuning vanishes.
inline DeviceParams map_xxz_to_device(double J, double Delta, double omega,
                                      UnitConvention uc = UnitConvention::angular) {
  if (Delta <= 0.0) throw std::invalid_argument("map_xxz_to_device: Delta must be > 0");
  if (omega <= 0.0) throw std::invalid_argument("map_xxz_to_device: omega must be > 0");
  DeviceParams p;
  const double root = std::sqrt(1.0 + Delta);
  p.epsilon = omega / root;
  p.delta_g = omega * std::sqrt(Delta) / root;
  p.g = J * (1.0 + Delta);
  p.omega = omega;
  p.unit_convention = uc;
  return p;
}

}  // namespace slqa
