#pragma once

#include <vector>

namespace qosc {

/// Isotonic trajectory x(t) = (1/(omega A)) sqrt((omega^2 A^4 - g) sin^2(omega t + phi) + g).
struct TrajectoryParams {
  double omega = 1.0;
  double amplitude = 1.0;  ///< A, the outer turning point
  double g = 1.0;
  double phi = 0.0;

  /// Requires omega, A, g > 0 and omega^2 A^4 >= g.
  void validate() const;
};

double closed_form_x(const TrajectoryParams& p, double t);
/// Analytic time derivative of closed_form_x.
double closed_form_v(const TrajectoryParams& p, double t);

/// 1/2 v^2 + 1/2 omega^2 x^2 + g/(2x^2)
double classical_energy(const TrajectoryParams& p, double x, double v);

struct TrajectoryPoint {
  double t = 0.0;
  double x = 0.0;
  double v = 0.0;
  double energy = 0.0;
};
using Trajectory = std::vector<TrajectoryPoint>;

/// pi / omega / 2000
double default_time_step(double omega);

/// Fixed-step RK4 for x'' + omega^2 x - g/x^3 = 0 from the closed form's x(0), v(0).
/// dt <= 0 selects default_time_step.
Trajectory ode_oracle(const TrajectoryParams& p, double t_max, double dt = 0.0);

/// Mean spacing of successive maxima of x(t), each refined by a parabola
/// through the three samples around it. Throws std::runtime_error with fewer
/// than two maxima.
double measure_period(const Trajectory& trajectory);

}  // namespace qosc
