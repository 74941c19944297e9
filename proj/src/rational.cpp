#include "qosc/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qosc {

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational::from_double: non-finite value");
  // mpq_set_d is exact for finite doubles.
  mpq_class q(x);
  return Rational(q);
}

Rational Rational::parse(std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.gmp().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.gmp().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace qosc
