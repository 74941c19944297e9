#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qosc {

enum class PotentialKind { harmonic, isotonic, nonlinear };

const char* to_string(PotentialKind kind);
PotentialKind parse_potential_kind(const std::string& name);

/// Which oscillator, with its parameters. The nonlinear coupling is always
/// the solvable one, g_a = 2 omega a^2 (1 + 2 omega a^2).
struct PotentialSpec {
  PotentialKind kind = PotentialKind::nonlinear;
  double omega = 1.0;
  double a = 0.7071067811865476;  ///< nonlinear only
  double m = 0.0;                 ///< isotonic only, g = m(m+1)

  static PotentialSpec harmonic(double omega = 1.0);
  static PotentialSpec isotonic(double m, double omega = 1.0);
  static PotentialSpec nonlinear(double a, double omega = 1.0);

  /// Throws std::invalid_argument for omega <= 0, a <= 0 or m < 0.
  void validate() const;
  /// g_a for nonlinear, m(m+1) for isotonic, 0 for harmonic.
  double coupling() const;
  /// Half-line (0, L] problem?
  bool half_line() const { return kind == PotentialKind::isotonic; }
};

/// U(x) with hbar = 1. Throws std::domain_error at the isotonic pole x = 0.
double potential_value(const PotentialSpec& spec, double x);

/// Default domain half-width: 12/sqrt(omega) on the line, 14/sqrt(omega) on the half-line.
double default_half_width(const PotentialSpec& spec);

/// Analytic energy of level k (0-based), where one is known.
std::optional<double> analytic_energy(const PotentialSpec& spec, int k);

struct GridInfo {
  double half_width = 0.0;  ///< L
  int points = 0;           ///< N: the step is 2L/N on the line, L/N on the half-line
  double step = 0.0;
};

/// One finite-difference bound state. `eigenvector` holds psi at `x` with
/// h * sum psi^2 = 1.
struct EigenResult {
  double energy = 0.0;
  Eigen::VectorXd x;
  Eigen::VectorXd eigenvector;
  int nodes = 0;
  GridInfo grid;
};

class GridTooCoarse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lowest k eigenpairs of -1/2 d^2/dx^2 + U with Dirichlet boundaries and
/// second-order central differences on [-L, L] (or (0, L] for isotonic).
std::vector<EigenResult> eigen_spectrum(const PotentialSpec& spec, double L, int N, int k);

/// Sign changes of psi inside the inner 90% of the domain, skipping
/// entries below 1e-10 of the peak.
int count_nodes(const Eigen::VectorXd& psi);

struct RichardsonLevel {
  double improved = 0.0;  ///< (4 E_{2N} - E_N) / 3
  double coarse = 0.0;    ///< E_N
  double fine = 0.0;      ///< E_{2N}
  int nodes = 0;          ///< node count on the fine grid
};

/// Runs the solver at N and 2N. Throws GridTooCoarse when the two disagree by
/// more than coarse_threshold * max(1, |E|).
std::vector<RichardsonLevel> richardson_pair(const PotentialSpec& spec, double L, int N, int k,
                                             double coarse_threshold = 1e-2);

/// log2((E_N - exact) / (E_{2N} - exact)) for level `level`.
double observed_order(const PotentialSpec& spec, double L, int N, int level, double exact);

struct GroundState {
  double energy = 0.0;  ///< Richardson-improved
  double target = 0.0;  ///< omega/2 - (2 omega a)^2
  int nodes = 0;
};

GroundState general_a_ground(double omega, double a, double L, int N);

/// All raw finite-difference eigenvalues inside (lo, hi).
std::vector<double> spectral_gap_scan(const PotentialSpec& spec, double lo, double hi, double L, int N);

}  // namespace qosc
