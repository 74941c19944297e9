#include "qosc/spectra.hpp"

#include <cmath>

#include "qosc/tridiagonal.hpp"

namespace qosc {

const char* to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::harmonic: return "harmonic";
    case PotentialKind::isotonic: return "isotonic";
    case PotentialKind::nonlinear: return "nonlinear";
  }
  return "?";
}

PotentialKind parse_potential_kind(const std::string& name) {
  if (name == "harmonic") return PotentialKind::harmonic;
  if (name == "isotonic") return PotentialKind::isotonic;
  if (name == "nonlinear") return PotentialKind::nonlinear;
  throw std::invalid_argument("unknown potential '" + name + "'");
}

PotentialSpec PotentialSpec::harmonic(double omega) { return {PotentialKind::harmonic, omega, 0.0, 0.0}; }
PotentialSpec PotentialSpec::isotonic(double m, double omega) { return {PotentialKind::isotonic, omega, 0.0, m}; }
PotentialSpec PotentialSpec::nonlinear(double a, double omega) { return {PotentialKind::nonlinear, omega, a, 0.0}; }

void PotentialSpec::validate() const {
  if (!(omega > 0)) throw std::invalid_argument("potential: omega must be > 0");
  if (kind == PotentialKind::nonlinear && !(a > 0)) throw std::invalid_argument("potential: a must be > 0");
  if (kind == PotentialKind::isotonic && !(m >= 0)) throw std::invalid_argument("potential: m must be >= 0");
}

double PotentialSpec::coupling() const {
  switch (kind) {
    case PotentialKind::harmonic: return 0.0;
    case PotentialKind::isotonic: return m * (m + 1);
    case PotentialKind::nonlinear: {
      const double ma = 2 * omega * a * a;
      return ma * (1 + ma);
    }
  }
  return 0.0;
}

double potential_value(const PotentialSpec& spec, double x) {
  const double harmonic = 0.5 * spec.omega * spec.omega * x * x;
  switch (spec.kind) {
    case PotentialKind::harmonic: return harmonic;
    case PotentialKind::isotonic:
      if (x == 0.0) throw std::domain_error("isotonic potential has a pole at x = 0");
      return harmonic + 0.5 * spec.coupling() / (x * x);
    case PotentialKind::nonlinear: {
      const double a2 = spec.a * spec.a;
      const double s = x * x + a2;
      return harmonic + spec.coupling() * (x * x - a2) / (s * s);
    }
  }
  return harmonic;
}

double default_half_width(const PotentialSpec& spec) {
  return (spec.half_line() ? 14.0 : 12.0) / std::sqrt(spec.omega);
}

std::optional<double> analytic_energy(const PotentialSpec& spec, int k) {
  const double w = spec.omega;
  switch (spec.kind) {
    case PotentialKind::harmonic: return (k + 0.5) * w;
    case PotentialKind::isotonic: return (1.5 + spec.m + 2.0 * k) * w;
    case PotentialKind::nonlinear: {
      if (k == 0) return 0.5 * w - 4 * w * w * spec.a * spec.a;
      // The excited spectrum is known for omega a^2 = 1/2; the potential then
      // scales with omega to the a^2 = 1/2, omega = 1 case.
      if (std::abs(w * spec.a * spec.a - 0.5) > 1e-12) return std::nullopt;
      return (k + 2 - 1.5) * w;
    }
  }
  return std::nullopt;
}

namespace {

struct Discretization {
  SymmetricTridiagonal<double> matrix;
  Eigen::VectorXd x;
  GridInfo grid;
};

Discretization discretize(const PotentialSpec& spec, double L, int N) {
  spec.validate();
  if (N < 500) throw std::invalid_argument("eigen_spectrum: N must be >= 500");
  if (!(L > 0)) throw std::invalid_argument("eigen_spectrum: L must be > 0");
  GridInfo grid{L, N, spec.half_line() ? L / N : 2 * L / N};
  const double start = spec.half_line() ? 0.0 : -L;
  const Eigen::Index n = N - 1;
  Eigen::VectorXd x(n);
  Eigen::VectorXd d(n);
  const double kinetic = 1.0 / (grid.step * grid.step);
  for (Eigen::Index j = 0; j < n; ++j) {
    x[j] = start + (j + 1) * grid.step;
    d[j] = kinetic + potential_value(spec, x[j]);
  }
  Eigen::VectorXd e = Eigen::VectorXd::Constant(n - 1, -0.5 * kinetic);
  return {SymmetricTridiagonal<double>(std::move(d), std::move(e)), std::move(x), grid};
}

}  // namespace

int count_nodes(const Eigen::VectorXd& psi) {
  const Eigen::Index n = psi.size();
  const Eigen::Index skip = static_cast<Eigen::Index>(std::ceil(0.05 * n));
  const double floor = 1e-10 * psi.cwiseAbs().maxCoeff();
  int nodes = 0;
  int last = 0;
  for (Eigen::Index j = skip; j < n - skip; ++j) {
    if (std::abs(psi[j]) <= floor) continue;
    const int s = psi[j] > 0 ? 1 : -1;
    if (last != 0 && s != last) ++nodes;
    last = s;
  }
  return nodes;
}

std::vector<EigenResult> eigen_spectrum(const PotentialSpec& spec, double L, int N, int k) {
  if (k < 1) throw std::invalid_argument("eigen_spectrum: k must be >= 1");
  auto disc = discretize(spec, L, N);
  if (k > disc.matrix.size()) throw std::invalid_argument("eigen_spectrum: k exceeds the grid size");
  const double edge = spec.half_line() ? potential_value(spec, L)
                                       : std::min(potential_value(spec, -L), potential_value(spec, L));
  std::vector<EigenResult> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    EigenResult r;
    r.energy = disc.matrix.eigenvalue(j);
    // A level at or above the boundary potential is not confined by the domain.
    if (r.energy >= 0.5 * edge) {
      throw std::invalid_argument("eigen_spectrum: level " + std::to_string(j) +
                                  " is not reliably bound on this domain; increase L");
    }
    r.x = disc.x;
    r.eigenvector = disc.matrix.eigenvector(r.energy) / std::sqrt(disc.grid.step);
    r.nodes = count_nodes(r.eigenvector);
    r.grid = disc.grid;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RichardsonLevel> richardson_pair(const PotentialSpec& spec, double L, int N, int k,
                                             double coarse_threshold) {
  const auto coarse = eigen_spectrum(spec, L, N, k);
  const auto fine = eigen_spectrum(spec, L, 2 * N, k);
  std::vector<RichardsonLevel> out;
  for (int j = 0; j < k; ++j) {
    RichardsonLevel r{(4 * fine[j].energy - coarse[j].energy) / 3, coarse[j].energy, fine[j].energy, fine[j].nodes};
    if (std::abs(r.fine - r.coarse) > coarse_threshold * std::max(1.0, std::abs(r.improved))) {
      throw GridTooCoarse("richardson_pair: level " + std::to_string(j) + " changes by " +
                          std::to_string(r.fine - r.coarse) + " between N and 2N");
    }
    out.push_back(r);
  }
  return out;
}

double observed_order(const PotentialSpec& spec, double L, int N, int level, double exact) {
  const auto r = richardson_pair(spec, L, N, level + 1);
  return std::log2((r[level].coarse - exact) / (r[level].fine - exact));
}

GroundState general_a_ground(double omega, double a, double L, int N) {
  const auto spec = PotentialSpec::nonlinear(a, omega);
  const auto r = richardson_pair(spec, L, N, 1);
  return {r[0].improved, *analytic_energy(spec, 0), r[0].nodes};
}

std::vector<double> spectral_gap_scan(const PotentialSpec& spec, double lo, double hi, double L, int N) {
  auto disc = discretize(spec, L, N);
  auto values = disc.matrix.eigenvalues_in(lo, hi);
  std::erase_if(values, [&](double v) { return !(v > lo && v < hi); });
  return values;
}

}  // namespace qosc
