#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qosc/rational.hpp"

namespace qosc {

namespace detail {
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
}  // namespace detail

/// Dense univariate polynomial, coefficients indexed by power (lowest first).
/// The zero polynomial has no stored coefficients; otherwise the last stored
/// coefficient is nonzero.
template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  /// c * x^power
  static Polynomial monomial(std::size_t power, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(power + 1, Scalar(0));
    v[power] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Index of the leading coefficient; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  /// Coefficient of x^power (zero past the degree).
  Scalar operator[](std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Scalar(0);
  }
  const Scalar& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& c) {
    if (detail::is_zero(c)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

/// The polynomial x.
template <typename Scalar>
Polynomial<Scalar> identity_polynomial() {
  return Polynomial<Scalar>::monomial(1);
}

/// Multiplies by x^shift.
template <typename Scalar>
Polynomial<Scalar> shift_up(const Polynomial<Scalar>& p, std::size_t shift = 1) {
  if (p.is_zero()) return p;
  std::vector<Scalar> v(shift, Scalar(0));
  v.insert(v.end(), p.coefficients().begin(), p.coefficients().end());
  return Polynomial<Scalar>(std::move(v));
}

/// Term-by-term derivative.
template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> v;
  v.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) v.push_back(p.coefficients()[i] * Scalar(static_cast<long>(i)));
  return Polynomial<Scalar>(std::move(v));
}

/// Horner evaluation in the polynomial's scalar type.
template <typename Scalar, typename Arg>
Scalar evaluate(const Polynomial<Scalar>& p, const Arg& x) {
  Scalar acc(0);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Euclidean division over a field: returns (quotient, remainder).
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divide(const Polynomial<Scalar>& num,
                                                         const Polynomial<Scalar>& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {Polynomial<Scalar>{}, num};
  std::vector<Scalar> rem = num.coefficients();
  const int dd = den.degree();
  std::vector<Scalar> quot(static_cast<std::size_t>(num.degree() - dd + 1), Scalar(0));
  const Scalar& lead = den.leading();
  for (int k = num.degree(); k >= dd; --k) {
    const Scalar q = rem[k] / lead;
    quot[k - dd] = q;
    if (detail::is_zero(q)) continue;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * den.coefficients()[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// Converts coefficients to double.
inline Polynomial<double> to_double(const RationalPolynomial& p) {
  std::vector<double> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.push_back(c.to_double());
  return Polynomial<double>(std::move(v));
}

/// Evaluates a rational polynomial exactly at the (dyadic) value of a double
/// and converts once at the end. Write p = (1/D) * sum n_k x^k with integer
/// n_k; evaluation is then pure integer Horner.
class ExactEvaluator {
 public:
  explicit ExactEvaluator(const RationalPolynomial& p);
  double operator()(double x) const;

 private:
  std::vector<mpz_class> numerators_;
  mpz_class denominator_{1};
};

inline double evaluate_exact(const RationalPolynomial& p, double x) { return ExactEvaluator(p)(x); }

/// Number of distinct real roots, by a Sturm sequence over the rationals.
/// Throws std::domain_error for the zero polynomial.
std::size_t real_root_count(const RationalPolynomial& p);

/// Physicists' Hermite polynomial H_n (leading coefficient 2^n).
const RationalPolynomial& hermite(unsigned n);

}  // namespace qosc
