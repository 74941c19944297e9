#include "qosc/series.hpp"

#include <cmath>
#include <string>

namespace qosc {

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

NoPolynomialSolution::NoPolynomialSolution(long n)
    : std::invalid_argument("no polynomial solution exists for n=" + std::to_string(n)), n_(n) {}

double SeriesSolution::radius_of_convergence() { return 1.0 / std::sqrt(2.0); }

namespace {

// Two consecutive vanishing coefficients of the active parity force every
// later coefficient to vanish (the recursion only reaches back two steps).
std::optional<int> certified_termination(const std::vector<Rational>& p, Parity parity) {
  const int start = parity == Parity::even ? 0 : 1;
  const int last = static_cast<int>(p.size()) - 1;
  int highest_nonzero = -1;
  for (int k = start; k <= last; k += 2) {
    if (!p[k].is_zero()) highest_nonzero = k;
  }
  if (highest_nonzero < 0) return std::nullopt;
  if (highest_nonzero + 4 > last) return std::nullopt;
  return highest_nonzero;
}

}  // namespace

SeriesSolution series_coefficients(const Rational& e, Parity parity, int count) {
  if (count < 4) throw std::invalid_argument("series_coefficients: count must be >= 4");
  std::vector<Rational> p(static_cast<std::size_t>(count) + 1, Rational(0));
  if (parity == Parity::even) {
    p[0] = 1;
    p[2] = -e * p[0];
  } else {
    p[1] = 1;
    p[3] = -(e - Rational(5)) * p[1] / Rational(3);
  }
  // (m+4)(m+3) p_{m+4} + 2[(m+2)(m-4) + e] p_{m+2} + 4(e - m) p_m = 0
  for (long m = 0; m + 4 <= count; ++m) {
    const Rational mid = Rational(2) * (Rational((m + 2) * (m - 4)) + e);
    const Rational low = Rational(4) * (e - Rational(m));
    p[m + 4] = -(mid * p[m + 2] + low * p[m]) / Rational((m + 4) * (m + 3));
  }
  SeriesSolution s{e, parity, std::move(p), std::nullopt};
  s.terminated_at = certified_termination(s.coefficients, parity);
  return s;
}

std::optional<int> is_polynomial_mode(const Rational& e, Parity parity, int horizon) {
  if (horizon < 12) throw std::invalid_argument("is_polynomial_mode: horizon must be >= 12");
  return series_coefficients(e, parity, horizon).terminated_at;
}

RationalPolynomial polynomial_solution(long n) {
  if (n == 1 || n == 2) throw NoPolynomialSolution(n);
  if (n < 0) throw std::invalid_argument("polynomial_solution: n must be 0 or >= 3");
  const auto s = series_coefficients(Rational(n), parity_of(n), default_horizon(n));
  if (!s.terminated_at || *s.terminated_at != n) {
    throw std::logic_error("polynomial_solution: series at e=" + std::to_string(n) +
                           " did not terminate at degree n");
  }
  return s.polynomial();
}

RationalPolynomial f_equation_residual(const RationalPolynomial& f, const Rational& e) {
  const RationalPolynomial a0{1, 0, 2};         // 1 + 2x^2
  const RationalPolynomial a1{0, -10, 0, -4};   // -2x(5 + 2x^2)
  const auto d1 = derivative(f);
  const auto d2 = derivative(d1);
  return a0 * d2 + a1 * d1 + a0 * f * (Rational(2) * e);
}

}  // namespace qosc
