#include "qosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "qosc/hermite_family.hpp"

namespace qosc {

namespace {

constexpr double kPiQuarter = 0.7511255444649425;  // pi^{-1/4}

// Newton step data at z for the orthonormal Hermite functions
// psi_k(z) = H_k(z) e^{-z^2/2} / sqrt(2^k k! sqrt(pi)).
struct HermiteFunctionValues {
  double psi_n;       // psi_n(z)
  double derivative;  // sqrt(2n) psi_{n-1}(z): derivative of the polynomial part times the gaussian factor
};

HermiteFunctionValues hermite_function(int n, double z) {
  double p1 = kPiQuarter * std::exp(-0.5 * z * z);
  double p2 = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt(static_cast<double>(j - 1) / j) * p3;
  }
  return {p1, std::sqrt(2.0 * n) * p2};
}

// Sign of H_n(x) computed exactly: with x = p / 2^s, G_k = 2^{ks} H_k(x) obeys
// G_{k+1} = 2p G_k - 2k 4^s G_{k-1}.
int exact_hermite_sign(int n, double x) {
  int exp2 = 0;
  const double frac = std::frexp(x, &exp2);
  mpz_class p(std::ldexp(frac, 53));
  long e = exp2 - 53;
  unsigned long s = 0;
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  } else {
    s = static_cast<unsigned long>(-e);
  }
  mpz_class prev = 1;
  mpz_class cur = 2 * p;
  mpz_class tmp;
  for (int k = 1; k < n; ++k) {
    tmp = prev * (2 * k);
    mpz_mul_2exp(tmp.get_mpz_t(), tmp.get_mpz_t(), 2 * s);
    prev = cur * (2 * p) - tmp;
    std::swap(prev, cur);
  }
  return n == 0 ? 1 : sgn(cur);
}

QuadratureRule compute_gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite_rule: n must be >= 1");
  const int half = (n + 1) / 2;
  std::vector<double> positive;
  std::vector<double> scaled;
  positive.reserve(half);
  // Roots of H_n lie in (-sqrt(2n+1), sqrt(2n+1)) and are at least ~pi/sqrt(2n+1)
  // apart; scan the positive axis well below that spacing.
  const double limit = std::sqrt(2.0 * n + 1.0) + 1.0;
  const double step = 0.1 * std::numbers::pi / std::sqrt(2.0 * n + 1.0);
  auto add_root = [&](double z) {
    positive.push_back(z);
    const auto v = hermite_function(n, z);
    scaled.push_back(2.0 / (v.derivative * v.derivative));
  };
  if (n % 2 == 1) add_root(0.0);
  double lo = n % 2 == 1 ? 0.5 * step : 0.0;
  double f_lo = hermite_function(n, lo).psi_n;
  while (lo < limit && static_cast<int>(positive.size()) < half) {
    const double hi = lo + step;
    const double f_hi = hermite_function(n, hi).psi_n;
    if ((f_lo < 0) != (f_hi < 0)) {
      double a = lo;
      double b = hi;
      const bool neg_at_a = f_lo < 0;
      for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (a + b);
        if ((hermite_function(n, mid).psi_n < 0) == neg_at_a) a = mid; else b = mid;
      }
      double z = 0.5 * (a + b);
      for (int it = 0; it < 3; ++it) {
        const auto v = hermite_function(n, z);
        const double next = z - v.psi_n / v.derivative;
        if (!(next > lo && next < hi)) break;
        z = next;
      }
      add_root(z);
    }
    lo = hi;
    f_lo = f_hi;
  }
  if (static_cast<int>(positive.size()) != half) {
    throw std::logic_error("gauss_hermite_rule: found " + std::to_string(positive.size()) + " of " +
                           std::to_string(half) + " positive roots at n=" + std::to_string(n));
  }
  // Store largest first to match the layout below.
  std::reverse(positive.begin(), positive.end());
  std::reverse(scaled.begin(), scaled.end());

  QuadratureRule rule;
  rule.kind = RuleKind::gauss_hermite;
  rule.nodes.resize(n);
  rule.scaled_weights.resize(n);
  for (int i = 0; i < half; ++i) {
    rule.nodes[i] = -positive[i];
    rule.nodes[n - 1 - i] = positive[i];
    rule.scaled_weights[i] = scaled[i];
    rule.scaled_weights[n - 1 - i] = scaled[i];
  }
  rule.weights = (rule.scaled_weights.array() * (-rule.nodes.array().square()).exp()).matrix();

  // Certify brackets: exact signs at separating points must alternate.
  std::vector<double> separators;
  separators.push_back(rule.nodes[0] - 1.0);
  for (int i = 0; i + 1 < n; ++i) {
    if (!(rule.nodes[i] < rule.nodes[i + 1])) {
      throw std::logic_error("gauss_hermite_rule: nodes not strictly increasing at n=" + std::to_string(n));
    }
    separators.push_back(0.5 * (rule.nodes[i] + rule.nodes[i + 1]));
  }
  separators.push_back(rule.nodes[n - 1] + 1.0);
  int last = exact_hermite_sign(n, separators[0]);
  for (std::size_t j = 1; j < separators.size(); ++j) {
    const int s = exact_hermite_sign(n, separators[j]);
    if (s == 0 || s == last) {
      throw std::logic_error("gauss_hermite_rule: root bracketing failed at n=" + std::to_string(n));
    }
    last = s;
  }
  return rule;
}

std::vector<std::pair<double, double>> gauss_legendre(int order) {
  std::vector<std::pair<double, double>> out(order);
  for (int i = 0; i < order; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = order * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    out[order - 1 - i] = {z, 2.0 / ((1.0 - z * z) * dp * dp)};
  }
  return out;
}

}  // namespace

const QuadratureRule& gauss_hermite_rule(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const QuadratureRule>(compute_gauss_hermite(n));
  return *slot;
}

QuadratureRule panel_rule(double half_width, int panels, int order) {
  if (panels < 1 || order < 1 || !(half_width > 0)) throw std::invalid_argument("panel_rule: bad arguments");
  const auto gl = gauss_legendre(order);
  QuadratureRule rule;
  rule.kind = RuleKind::adaptive_panel;
  rule.nodes.resize(static_cast<Eigen::Index>(panels) * order);
  rule.weights.resize(rule.nodes.size());
  const double width = 2.0 * half_width / panels;
  Eigen::Index k = 0;
  for (int p = 0; p < panels; ++p) {
    const double mid = -half_width + (p + 0.5) * width;
    for (const auto& [t, w] : gl) {
      rule.nodes[k] = mid + 0.5 * width * t;
      rule.weights[k] = 0.5 * width * w;
      ++k;
    }
  }
  rule.scaled_weights = rule.weights;
  return rule;
}

double adaptive_panel_integral(const std::function<double(double)>& f, double half_width, double tol,
                               int max_panels) {
  constexpr int order = 10;
  auto apply = [&](int panels, double& abs_sum) {
    const auto rule = panel_rule(half_width, panels, order);
    double sum = 0.0;
    abs_sum = 0.0;
    for (Eigen::Index i = 0; i < rule.size(); ++i) {
      const double v = rule.weights[i] * f(rule.nodes[i]);
      sum += v;
      abs_sum += std::abs(v);
    }
    return sum;
  };
  double scale = 0.0;
  int panels = 8;
  double prev = apply(panels, scale);
  while (panels < max_panels) {
    panels *= 2;
    const double cur = apply(panels, scale);
    if (std::abs(cur - prev) <= tol * scale) return cur;
    prev = cur;
  }
  throw NonConvergence(prev, apply(panels, scale));
}

NonConvergence::NonConvergence(double previous, double last)
    : std::runtime_error("quadrature did not converge: last two estimates " + std::to_string(previous) + ", " +
                         std::to_string(last)),
      previous_(previous),
      last_(last) {}

namespace {

struct Sums {
  double value = 0.0;
  double magnitude = 0.0;
};

Sums apply_rule(const QuadratureRule& rule, const ExactEvaluator& f, const ExactEvaluator& g, WeightMode mode) {
  Sums s;
  for (Eigen::Index i = 0; i < rule.size(); ++i) {
    const double w = rule.weights[i];
    if (w == 0.0) continue;
    const double x = rule.nodes[i];
    double v = w * f(x) * g(x);
    if (mode == WeightMode::modified) {
      const double b = 1.0 + 2.0 * x * x;
      v /= b * b;
    }
    s.value += v;
    s.magnitude += std::abs(v);
  }
  return s;
}

}  // namespace

double weighted_inner_product(const RationalPolynomial& f, const RationalPolynomial& g, WeightMode mode,
                              const InnerProductOptions& options) {
  const ExactEvaluator fe(f);
  const ExactEvaluator ge(g);
  const int degree = std::max(f.degree(), 0) + std::max(g.degree(), 0);
  const int exact_size = degree / 2 + 2;
  if (mode == WeightMode::hermite) return apply_rule(gauss_hermite_rule(exact_size), fe, ge, mode).value;

  int size = 16;
  while (size < exact_size) size *= 2;
  Sums prev = apply_rule(gauss_hermite_rule(size), fe, ge, mode);
  Sums cur = prev;
  while (size < options.max_size) {
    size = std::min(2 * size, options.max_size);
    cur = apply_rule(gauss_hermite_rule(size), fe, ge, mode);
    if (std::abs(cur.value - prev.value) <= options.tol * cur.magnitude) return cur.value;
    if (size < options.max_size) prev = cur;
  }
  throw NonConvergence(prev.value, cur.value);
}

OrthogonalityReport orthogonality_matrix(const std::vector<long>& indices, double tol,
                                         const InnerProductOptions& options) {
  OrthogonalityReport r;
  r.indices = indices;
  const auto n = static_cast<Eigen::Index>(indices.size());
  std::vector<RationalPolynomial> polys;
  polys.reserve(indices.size());
  for (long k : indices) {
    if (!is_family_index(k)) throw std::invalid_argument("orthogonality_matrix: invalid index " + std::to_string(k));
    polys.push_back(script_p_dense(k));
  }
  r.gram.resize(n, n);
  r.expected_diagonal.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    r.expected_diagonal[i] = norm_squared(indices[i]).value();
    for (Eigen::Index j = i; j < n; ++j) {
      r.gram(i, j) = weighted_inner_product(polys[i], polys[j], WeightMode::modified, options);
      r.gram(j, i) = r.gram(i, j);
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    r.max_diagonal_error =
        std::max(r.max_diagonal_error, std::abs(r.gram(i, i) - r.expected_diagonal[i]) / r.expected_diagonal[i]);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      r.max_offdiag = std::max(r.max_offdiag, std::abs(r.gram(i, j)) / std::sqrt(r.gram(i, i) * r.gram(j, j)));
    }
  }
  r.pass = r.max_offdiag < tol && r.max_diagonal_error < tol;
  return r;
}

}  // namespace qosc
