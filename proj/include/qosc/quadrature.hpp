#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <vector>

#include "qosc/polynomial.hpp"

namespace qosc {

enum class RuleKind { gauss_hermite, adaptive_panel };

/// Nodes strictly increasing. For gauss_hermite rules `weights` include the
/// factor e^{-x^2} (the rule integrates f(x) e^{-x^2} as sum w_i f(x_i));
/// `scaled_weights` are w_i e^{x_i^2} and never underflow. For panel rules
/// the two coincide and integrate f(x) directly.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  Eigen::VectorXd scaled_weights;
  RuleKind kind = RuleKind::gauss_hermite;

  Eigen::Index size() const { return nodes.size(); }
};

/// n-point Gauss-Hermite rule. Rules are computed once per size and shared.
const QuadratureRule& gauss_hermite_rule(int n);

/// Composite Gauss-Legendre rule on [-half_width, half_width].
QuadratureRule panel_rule(double half_width, int panels, int order);

/// Integrates f over [-half_width, half_width] with panel rules, doubling the
/// panel count until two successive estimates agree within tol (relative to
/// the integral of |f|).
double adaptive_panel_integral(const std::function<double(double)>& f, double half_width, double tol,
                               int max_panels = 1 << 14);

enum class WeightMode {
  hermite,   ///< e^{-x^2}
  modified,  ///< e^{-x^2} / (1+2x^2)^2
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(double previous, double last);
  double previous() const { return previous_; }
  double last() const { return last_; }

 private:
  double previous_;
  double last_;
};

struct InnerProductOptions {
  double tol = 1e-10;   ///< agreement of successive doublings, relative to the integral of |f g| w
  int max_size = 512;   ///< size cap for the modified weight
};

/// Integral of f g w over the real line for the selected weight.
double weighted_inner_product(const RationalPolynomial& f, const RationalPolynomial& g, WeightMode mode,
                              const InnerProductOptions& options = {});

struct OrthogonalityReport {
  std::vector<long> indices;
  Eigen::MatrixXd gram;
  Eigen::VectorXd expected_diagonal;  ///< exact norms (converted to double)
  double max_offdiag = 0.0;           ///< max |G_ij| / sqrt(G_ii G_jj), i != j
  double max_diagonal_error = 0.0;    ///< max |G_ii - norm_i| / norm_i
  bool pass = false;
};

/// Gram matrix of script P_n under the modified weight. Off-diagonal entries
/// are flagged against tol * sqrt(G_ii G_jj); diagonal entries against the
/// exact norm with relative tolerance tol.
OrthogonalityReport orthogonality_matrix(const std::vector<long>& indices, double tol,
                                         const InnerProductOptions& options = {});

}  // namespace qosc
