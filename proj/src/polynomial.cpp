#include "qosc/polynomial.hpp"

#include <cmath>
#include <deque>
#include <mutex>

namespace qosc {

ExactEvaluator::ExactEvaluator(const RationalPolynomial& p) {
  for (const auto& c : p.coefficients()) mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), c.gmp().get_den_mpz_t());
  numerators_.reserve(p.size());
  for (const auto& c : p.coefficients()) numerators_.push_back(c.numerator() * (denominator_ / c.denominator()));
}

double ExactEvaluator::operator()(double x) const {
  if (numerators_.empty()) return 0.0;
  if (!std::isfinite(x)) throw std::domain_error("ExactEvaluator: non-finite argument");
  // x = mant * 2^exp with integer mant.
  int exp2 = 0;
  const double frac = std::frexp(x, &exp2);
  const mpz_class mant(std::ldexp(frac, 53));
  exp2 -= 53;
  // Work with x = mant / 2^s, s >= 0 (fold positive exponents into mant).
  mpz_class a = mant;
  unsigned long s = 0;
  if (exp2 >= 0) {
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(exp2));
  } else {
    s = static_cast<unsigned long>(-exp2);
  }
  const std::size_t d = numerators_.size() - 1;
  mpz_class acc = numerators_[d];
  mpz_class term;
  for (std::size_t k = d; k-- > 0;) {
    acc *= a;
    mpz_mul_2exp(term.get_mpz_t(), numerators_[k].get_mpz_t(), s * (d - k));
    acc += term;
  }
  mpz_class den = denominator_;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), s * d);
  mpq_class q(acc, den);
  q.canonicalize();
  return q.get_d();
}

namespace {

int sign_at_plus_infinity(const RationalPolynomial& p) { return p.leading().sign(); }

int sign_at_minus_infinity(const RationalPolynomial& p) {
  const int s = p.leading().sign();
  return (p.degree() % 2 == 0) ? s : -s;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t real_root_count(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("real_root_count: zero polynomial");
  if (p.degree() == 0) return 0;
  std::vector<RationalPolynomial> chain{p, derivative(p)};
  while (chain.back().degree() > 0) {
    auto rem = divide(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;
    // Positive rescaling keeps signs and curbs coefficient growth.
    rem *= Rational(1) / abs(rem.leading());
    chain.push_back(-rem);
  }
  std::vector<int> at_minus;
  std::vector<int> at_plus;
  for (const auto& q : chain) {
    at_minus.push_back(sign_at_minus_infinity(q));
    at_plus.push_back(sign_at_plus_infinity(q));
  }
  return static_cast<std::size_t>(sign_changes(at_minus) - sign_changes(at_plus));
}

const RationalPolynomial& hermite(unsigned n) {
  static std::mutex mutex;
  static std::deque<RationalPolynomial> cache{RationalPolynomial{1}, RationalPolynomial{0, 2}};
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    const std::size_t m = cache.size() - 1;
    // H_{m+1} = 2x H_m - 2m H_{m-1}
    RationalPolynomial next = shift_up(cache[m]) * Rational(2);
    next -= cache[m - 1] * Rational(static_cast<long>(2 * m));
    cache.push_back(std::move(next));
  }
  return cache[n];
}

}  // namespace qosc
