#pragma once

#include "qosc/polynomial.hpp"
#include "qosc/rational.hpp"

namespace qosc {

/// f(x) = Q(x) / (1+2x^2)^k * exp(c x^2), with the exponent coefficient c
/// fixed per value. Differentiation stays inside the family.
struct GaussianForm {
  RationalPolynomial numerator;
  unsigned denominator_power = 0;
  Rational exp_coefficient;
};

/// 1 + 2x^2
inline const RationalPolynomial& barrier_polynomial() {
  static const RationalPolynomial b{1, 0, 2};
  return b;
}

inline RationalPolynomial barrier_power(unsigned k) {
  RationalPolynomial r{1};
  for (unsigned i = 0; i < k; ++i) r = r * barrier_polynomial();
  return r;
}

/// d/dx of a GaussianForm:
///   k = 0:  (Q' + 2cxQ) e^{cx^2}
///   k > 0:  [Q'(1+2x^2) - 4kxQ + 2cxQ(1+2x^2)] / (1+2x^2)^{k+1} e^{cx^2}
inline GaussianForm differentiate(const GaussianForm& f) {
  const auto& q = f.numerator;
  const RationalPolynomial xq2c = shift_up(q) * (Rational(2) * f.exp_coefficient);
  if (f.denominator_power == 0) {
    return {derivative(q) + xq2c, 0, f.exp_coefficient};
  }
  const auto& b = barrier_polynomial();
  RationalPolynomial num = derivative(q) * b;
  num -= shift_up(q) * Rational(4 * static_cast<long>(f.denominator_power));
  num += xq2c * b;
  return {std::move(num), f.denominator_power + 1, f.exp_coefficient};
}

/// Numerator after bringing the form over (1+2x^2)^target (target >= k).
inline RationalPolynomial numerator_over(const GaussianForm& f, unsigned target) {
  return f.numerator * barrier_power(target - f.denominator_power);
}

}  // namespace qosc
