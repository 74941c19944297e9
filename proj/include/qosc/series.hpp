#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qosc/polynomial.hpp"
#include "qosc/rational.hpp"

namespace qosc {

enum class Parity { even, odd };

inline Parity parity_of(long n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }
const char* to_string(Parity p);

/// Thrown for the levels n = 1, 2 where the F-equation has no polynomial
/// solution.
class NoPolynomialSolution : public std::invalid_argument {
 public:
  explicit NoPolynomialSolution(long n);
  long n() const { return n_; }

 private:
  long n_;
};

/// Power-series solution F(x) = sum p_k x^k of
///   (1+2x^2) F'' - 2x(5+2x^2) F' + 2e(1+2x^2) F = 0,
/// normalized by p0 = 1 (even) or p1 = 1 (odd).
struct SeriesSolution {
  Rational e;
  Parity parity = Parity::even;
  std::vector<Rational> coefficients;  ///< p_0 .. p_count
  std::optional<int> terminated_at;    ///< degree, when termination is certified

  /// Radius of convergence of the non-terminating series.
  static double radius_of_convergence();

  RationalPolynomial polynomial() const { return RationalPolynomial(coefficients); }
};

/// Exact coefficients p_0 .. p_count from the seed relations and the general
/// three-term recursion. Requires count >= 4.
SeriesSolution series_coefficients(const Rational& e, Parity parity, int count);

/// Termination degree if the series is a polynomial, certified within the
/// horizon (requires horizon >= 12).
std::optional<int> is_polynomial_mode(const Rational& e, Parity parity, int horizon);

/// Default horizon used to detect termination at energy e = n.
inline int default_horizon(long n) { return static_cast<int>(2 * n + 16); }

/// P_n for n = 0 or n >= 3. Throws NoPolynomialSolution for n = 1, 2.
RationalPolynomial polynomial_solution(long n);

/// (1+2x^2) F'' - 2x(5+2x^2) F' + 2e(1+2x^2) F, as a polynomial.
RationalPolynomial f_equation_residual(const RationalPolynomial& f, const Rational& e);

}  // namespace qosc
