#pragma once

// Annealing schedules: time-dependent drive amplitude lambda(t) and coupling
// strength g(t) over [0, T].

#include <functional>
#include <stdexcept>

namespace slqa {

// drive_off: lambda ramps down while g ramps up (standard annealing towards
// the interacting Hamiltonian).  drive_on is the reversed ramp, kept for
// comparison runs.
enum class ScheduleDirection { drive_off, drive_on };

struct Schedule {
  double T = 0.0;  // ns
  std::function<double(double)> lambda_ramp;
  std::function<double(double)> g_ramp;
  ScheduleDirection direction = ScheduleDirection::drive_off;

  double lambda_at(double t) const { return lambda_ramp(t); }
  double g_at(double t) const { return g_ramp(t); }
};

inline Schedule schedule_linear(double lambda0, double g0, double T,
                                ScheduleDirection dir = ScheduleDirection::drive_off) {
  if (T <= 0.0) throw std::invalid_argument("schedule_linear: T must be positive");
  Schedule s;
  s.T = T;
  s.direction = dir;
  if (dir == ScheduleDirection::drive_off) {
    s.lambda_ramp = [lambda0, T](double t) { return lambda0 * (1.0 - t / T); };
    s.g_ramp = [g0, T](double t) { return g0 * (t / T); };
  } else {
    s.lambda_ramp = [lambda0, T](double t) { return lambda0 * (t / T); };
    s.g_ramp = [g0, T](double t) { return g0 * (1.0 - t / T); };
  }
  return s;
}

}  // namespace slqa
