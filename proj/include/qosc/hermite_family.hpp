#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "qosc/polynomial.hpp"
#include "qosc/rational.hpp"

namespace qosc {

/// Finite combination sum_k c_k H_k; zero coefficients are never stored.
class HermiteCombo {
 public:
  HermiteCombo() = default;
  explicit HermiteCombo(std::map<unsigned, Rational> terms);

  const std::map<unsigned, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(unsigned degree) const;
  void add(unsigned degree, const Rational& c);

  RationalPolynomial dense() const;

  friend bool operator==(const HermiteCombo&, const HermiteCombo&) = default;

 private:
  std::map<unsigned, Rational> terms_;
};

/// Exact factor multiplying sqrt(pi).
struct NormValue {
  Rational sqrt_pi_coefficient;
  double value() const;
};

/// True for the indices of the family: 0, 3, 4, 5, ...
inline bool is_family_index(long n) { return n == 0 || n >= 3; }

/// H_n + 4n H_{n-2} + 4n(n-3) H_{n-4}; the ground state is adjoined as H_0.
HermiteCombo script_p(long n);
inline RationalPolynomial script_p_dense(long n) { return script_p(n).dense(); }

HermiteCombo hermite_decompose(const RationalPolynomial& p);

/// c_n with script_p(n) = c_n * polynomial_solution(n). Throws
/// std::logic_error if the two are not proportional.
Rational proportionality_constant(long n);

struct DerivativeIdentityCheck {
  bool pass = false;
  Rational scalar;                      ///< s with P' = s (1+2x^2) H_{n-3}
  RationalPolynomial factored_residual;  ///< P' - s (1+2x^2) H_{n-3}
  RationalPolynomial expanded_residual;  ///< P' - 2n [H_{n-1} + 4(n-2)H_{n-3} + 4(n-3)(n-4)H_{n-5}]
};
DerivativeIdentityCheck verify_derivative_identity(long n);

struct PropositionCheck {
  bool pass = false;
  RationalPolynomial lhs;       ///< script P_n
  RationalPolynomial rhs;       ///< 2[(2x H - H')(1+2x^2) + 4x H], H = H_{n-3}
  RationalPolynomial residual;  ///< lhs - rhs
};
PropositionCheck verify_proposition(long n);

/// (-1)^n e^{x^2} [D^n + 4n D^{n-2} + 4n(n-3) D^{n-4}] e^{-x^2}, by symbolic
/// differentiation.
RationalPolynomial rodrigues_script_p(long n);

/// Energy of level n: n - 3/2 (also -3/2 for the ground state n = 0).
Rational energy_level(long n);

/// Psi_n = script P_n/(1+2x^2) e^{-x^2/2} substituted into
/// Psi'' - [x^2 + 8(2x^2-1)/(2x^2+1)^2] Psi + 2 E_n Psi and multiplied by
/// (1+2x^2)^3 e^{x^2/2}. Zero iff Psi_n is an exact eigenfunction.
RationalPolynomial schrodinger_residual(long n);

/// Integral of script P_n^2 e^{-x^2}/(1+2x^2)^2 = 2^n n! sqrt(pi) / ((n-1)(n-2)).
NormValue norm_squared(long n);
/// The same integral through the Hermite-side route 8n 2^{n-3} (n-3)! sqrt(pi), n >= 3.
NormValue norm_squared_hermite_route(long n);

/// N_n = [(n-1)(n-2)/(2^n n! sqrt(pi))]^{1/2}
double normalization_constant(long n);

/// N_n script P_n(x)/(1+2x^2) e^{-x^2/2}; the polynomial is evaluated exactly.
double wavefunction(long n, double x);

/// Normalized harmonic-oscillator eigenfunction (2^k k! sqrt(pi))^{-1/2} H_k e^{-x^2/2}.
double harmonic_wavefunction(unsigned k, double x);

}  // namespace qosc
