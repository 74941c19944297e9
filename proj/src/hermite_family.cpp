#include "qosc/hermite_family.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qosc/gaussian_form.hpp"
#include "qosc/series.hpp"

namespace qosc {

namespace {

void require_family_index(long n, const char* what) {
  if (n == 1 || n == 2) throw NoPolynomialSolution(n);
  if (!is_family_index(n)) throw std::invalid_argument(std::string(what) + ": invalid index " + std::to_string(n));
}

void require_excited(long n, const char* what) {
  if (n < 3) throw std::invalid_argument(std::string(what) + ": requires n >= 3, got " + std::to_string(n));
}

const RationalPolynomial& H(long k) { return hermite(static_cast<unsigned>(k)); }

}  // namespace

HermiteCombo::HermiteCombo(std::map<unsigned, Rational> terms) {
  for (auto& [k, c] : terms) add(k, c);
}

Rational HermiteCombo::coefficient(unsigned degree) const {
  const auto it = terms_.find(degree);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HermiteCombo::add(unsigned degree, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(degree, 0);
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RationalPolynomial HermiteCombo::dense() const {
  RationalPolynomial p;
  for (const auto& [k, c] : terms_) p += hermite(k) * c;
  return p;
}

double NormValue::value() const { return sqrt_pi_coefficient.to_double() * std::sqrt(std::numbers::pi); }

HermiteCombo script_p(long n) {
  require_family_index(n, "script_p");
  if (n == 0) return HermiteCombo({{0u, Rational(1)}});
  HermiteCombo c;
  const auto un = static_cast<unsigned>(n);
  c.add(un, Rational(1));
  c.add(un - 2, Rational(4 * n));
  if (n >= 4) c.add(un - 4, Rational(4 * n * (n - 3)));
  return c;
}

HermiteCombo hermite_decompose(const RationalPolynomial& p) {
  HermiteCombo combo;
  RationalPolynomial rest = p;
  while (!rest.is_zero()) {
    const auto d = static_cast<unsigned>(rest.degree());
    const Rational c = rest.leading() / hermite(d).leading();
    combo.add(d, c);
    rest -= hermite(d) * c;
  }
  return combo;
}

Rational proportionality_constant(long n) {
  require_excited(n, "proportionality_constant");
  const auto script = script_p_dense(n);
  const auto series = polynomial_solution(n);
  const Rational c = script.leading() / series.leading();
  if (!(series * c == script)) {
    throw std::logic_error("proportionality_constant: script P_" + std::to_string(n) +
                           " is not a scalar multiple of P_" + std::to_string(n));
  }
  return c;
}

DerivativeIdentityCheck verify_derivative_identity(long n) {
  require_excited(n, "verify_derivative_identity");
  DerivativeIdentityCheck out;
  const auto d = derivative(script_p_dense(n));
  const auto factored = barrier_polynomial() * H(n - 3);
  out.scalar = d.leading() / factored.leading();
  out.factored_residual = d - factored * out.scalar;

  RationalPolynomial expanded = H(n - 1) + H(n - 3) * Rational(4 * (n - 2));
  if (n >= 5) expanded += H(n - 5) * Rational(4 * (n - 3) * (n - 4));
  out.expanded_residual = d - expanded * Rational(2 * n);
  out.pass = out.factored_residual.is_zero() && out.expanded_residual.is_zero();
  return out;
}

PropositionCheck verify_proposition(long n) {
  require_excited(n, "verify_proposition");
  PropositionCheck out;
  const auto& h = H(n - 3);
  const auto x = identity_polynomial<Rational>();
  const RationalPolynomial inner = (x * h * Rational(2) - derivative(h)) * barrier_polynomial() + x * h * Rational(4);
  out.lhs = script_p_dense(n);
  out.rhs = inner * Rational(2);
  out.residual = out.lhs - out.rhs;
  out.pass = out.residual.is_zero();
  return out;
}

RationalPolynomial rodrigues_script_p(long n) {
  require_excited(n, "rodrigues_script_p");
  // q_k with D^k e^{-x^2} = q_k e^{-x^2}
  std::vector<RationalPolynomial> q;
  GaussianForm g{RationalPolynomial{1}, 0, Rational(-1)};
  q.push_back(g.numerator);
  for (long k = 1; k <= n; ++k) {
    g = differentiate(g);
    q.push_back(g.numerator);
  }
  RationalPolynomial sum = q[n] + q[n - 2] * Rational(4 * n);
  if (n >= 4) sum += q[n - 4] * Rational(4 * n * (n - 3));
  return (n % 2 == 0) ? sum : -sum;
}

Rational energy_level(long n) {
  require_family_index(n, "energy_level");
  return Rational(n) - Rational(3, 2);
}

RationalPolynomial schrodinger_residual(long n) {
  require_family_index(n, "schrodinger_residual");
  const auto q = script_p_dense(n);
  const GaussianForm psi{q, 1, Rational(-1, 2)};
  const auto second = differentiate(differentiate(psi));  // over (1+2x^2)^3
  const auto b2 = barrier_power(2);
  const RationalPolynomial x2 = RationalPolynomial::monomial(2);
  const RationalPolynomial well{-1, 0, 2};  // 2x^2 - 1
  RationalPolynomial r = numerator_over(second, 3);
  r -= x2 * q * b2;
  r -= well * q * Rational(8);
  r += q * b2 * (Rational(2) * energy_level(n));
  return r;
}

NormValue norm_squared(long n) {
  require_family_index(n, "norm_squared");
  const Rational pow2 = pow(Rational(2), static_cast<unsigned>(n));
  return {pow2 * factorial(static_cast<unsigned>(n)) / Rational((n - 1) * (n - 2))};
}

NormValue norm_squared_hermite_route(long n) {
  require_excited(n, "norm_squared_hermite_route");
  return {Rational(8 * n) * pow(Rational(2), static_cast<unsigned>(n - 3)) * factorial(static_cast<unsigned>(n - 3))};
}

double normalization_constant(long n) { return 1.0 / std::sqrt(norm_squared(n).value()); }

double wavefunction(long n, double x) {
  const ExactEvaluator p(script_p_dense(n));
  return normalization_constant(n) * p(x) / (1.0 + 2.0 * x * x) * std::exp(-0.5 * x * x);
}

double harmonic_wavefunction(unsigned k, double x) {
  const double g = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  double prev = g;
  if (k == 0) return prev;
  double cur = std::sqrt(2.0) * x * g;
  for (unsigned j = 1; j < k; ++j) {
    const double next = std::sqrt(2.0 / (j + 1)) * x * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace qosc
