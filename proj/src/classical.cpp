#include "qosc/classical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qosc {

void TrajectoryParams::validate() const {
  if (!(omega > 0) || !(amplitude > 0) || !(g > 0)) {
    throw std::invalid_argument("trajectory: omega, amplitude and g must be > 0");
  }
  if (omega * omega * std::pow(amplitude, 4) < g) {
    throw std::invalid_argument("trajectory: omega^2 A^4 < g has no real oscillating solution");
  }
}

double closed_form_x(const TrajectoryParams& p, double t) {
  p.validate();
  const double s = std::sin(p.omega * t + p.phi);
  const double k = p.omega * p.omega * std::pow(p.amplitude, 4) - p.g;
  return std::sqrt(k * s * s + p.g) / (p.omega * p.amplitude);
}

double closed_form_v(const TrajectoryParams& p, double t) {
  p.validate();
  const double s = std::sin(p.omega * t + p.phi);
  const double c = std::cos(p.omega * t + p.phi);
  const double k = p.omega * p.omega * std::pow(p.amplitude, 4) - p.g;
  // d/dt sqrt(k s^2 + g) / (omega A) = k s c / (A sqrt(k s^2 + g))
  return k * s * c / (p.amplitude * std::sqrt(k * s * s + p.g));
}

double classical_energy(const TrajectoryParams& p, double x, double v) {
  return 0.5 * v * v + 0.5 * p.omega * p.omega * x * x + p.g / (2 * x * x);
}

double default_time_step(double omega) { return std::numbers::pi / omega / 2000.0; }

Trajectory ode_oracle(const TrajectoryParams& p, double t_max, double dt) {
  p.validate();
  if (dt <= 0) dt = default_time_step(p.omega);
  if (!(t_max > 0)) throw std::invalid_argument("ode_oracle: t_max must be > 0");
  const double w2 = p.omega * p.omega;
  auto accel = [&](double x) { return -w2 * x + p.g / (x * x * x); };

  const auto steps = static_cast<long>(std::llround(t_max / dt));
  Trajectory out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  double x = closed_form_x(p, 0.0);
  double v = closed_form_v(p, 0.0);
  const double floor = 1e-6 * std::sqrt(p.g) / (p.omega * p.amplitude);
  out.push_back({0.0, x, v, classical_energy(p, x, v)});
  for (long i = 1; i <= steps; ++i) {
    const double k1x = v;
    const double k1v = accel(x);
    const double k2x = v + 0.5 * dt * k1v;
    const double k2v = accel(x + 0.5 * dt * k1x);
    const double k3x = v + 0.5 * dt * k2v;
    const double k3v = accel(x + 0.5 * dt * k2x);
    const double k4x = v + dt * k3v;
    const double k4v = accel(x + dt * k3x);
    x += dt / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
    v += dt / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    if (!(x > floor) || !std::isfinite(v)) {
      throw std::runtime_error("ode_oracle: trajectory approached the pole at step " + std::to_string(i));
    }
    out.push_back({static_cast<double>(i) * dt, x, v, classical_energy(p, x, v)});
  }
  return out;
}

double measure_period(const Trajectory& tr) {
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < tr.size(); ++i) {
    const double a = tr[i - 1].x;
    const double b = tr[i].x;
    const double c = tr[i + 1].x;
    if (!(a < b && b >= c)) continue;
    const double curvature = a - 2 * b + c;
    const double h = tr[i + 1].t - tr[i].t;
    const double offset = curvature != 0 ? 0.5 * h * (a - c) / curvature : 0.0;
    peaks.push_back(tr[i].t + offset);
  }
  if (peaks.size() < 2) throw std::runtime_error("measure_period: fewer than two maxima in the trajectory");
  return (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
}

}  // namespace qosc
