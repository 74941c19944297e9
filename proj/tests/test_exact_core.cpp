#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qosc/polynomial.hpp"
#include "qosc/rational.hpp"
#include "qosc/series.hpp"

using qosc::Rational;
using qosc::RationalPolynomial;

namespace {

RationalPolynomial x_poly() { return qosc::identity_polynomial<Rational>(); }

// Sign-change scan on a fine grid over the Cauchy bound, each bracket then
// bisected to confirm a root. Only valid for polynomials with simple roots.
std::size_t brute_force_root_count(const RationalPolynomial& p) {
  const auto pd = qosc::to_double(p);
  double bound = 0;
  for (const auto& c : p.coefficients()) bound = std::max(bound, std::abs((c / p.leading()).to_double()));
  bound += 1.0;
  const int samples = 200001;
  std::size_t roots = 0;
  double prev_x = -bound;
  double prev = qosc::evaluate(pd, prev_x);
  for (int i = 1; i < samples; ++i) {
    const double x = -bound + 2 * bound * i / (samples - 1);
    const double v = qosc::evaluate(pd, x);
    if (v == 0.0) {
      ++roots;
    } else if (prev != 0.0 && (v > 0) != (prev > 0)) {
      double lo = prev_x;
      double hi = x;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double vm = qosc::evaluate(pd, mid);
        if ((vm > 0) == (prev > 0)) lo = mid; else hi = mid;
      }
      if (std::abs(qosc::evaluate(pd, 0.5 * (lo + hi))) < 1e-6 * (1 + std::abs(prev) + std::abs(v))) ++roots;
    }
    prev = v;
    prev_x = x;
  }
  return roots;
}

}  // namespace

TEST_CASE("Rational stays in lowest terms with positive denominator") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
}

TEST_CASE("Rational addition round-trips for random inputs") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational c(num(rng), den(rng));
    CHECK((a + c) - c == a);
    if (!c.is_zero()) CHECK((a * c) / c == a);
  }
}

TEST_CASE("hermite base cases and H_4") {
  CHECK(qosc::hermite(0) == RationalPolynomial{1});
  CHECK(qosc::hermite(1) == RationalPolynomial{0, 2});
  // H_2 = 4x^2 - 2, H_3 = 8x^3 - 12x, H_4 = 2x H_3 - 6 H_2 by hand.
  CHECK(qosc::hermite(4) == RationalPolynomial{12, 0, -48, 0, 16});
  CHECK(qosc::hermite(7).leading() == Rational(128));
  CHECK(qosc::hermite(30) == qosc::hermite(30));
}

TEST_CASE("Hermite three-term relation and derivative rule for m <= 60") {
  for (unsigned m = 1; m <= 60; ++m) {
    const auto& hm = qosc::hermite(m);
    CHECK(x_poly() * hm * Rational(2) == qosc::hermite(m + 1) + qosc::hermite(m - 1) * Rational(2 * static_cast<long>(m)));
    CHECK(qosc::derivative(hm) == qosc::hermite(m - 1) * Rational(2 * static_cast<long>(m)));
  }
}

TEST_CASE("poly_diff examples") {
  CHECK(qosc::derivative(RationalPolynomial{1}).is_zero());
  CHECK(qosc::derivative(qosc::hermite(4)) == qosc::hermite(3) * Rational(8));
  const RationalPolynomial p3{0, 1, 0, Rational(2, 3)};
  CHECK(qosc::derivative(p3) == RationalPolynomial{1, 0, 2});
}

TEST_CASE("poly_eval examples") {
  CHECK(qosc::evaluate(RationalPolynomial::monomial(2), Rational(3)) == Rational(9));
  CHECK(qosc::evaluate(RationalPolynomial{1, 0, -4, 0, -4}, Rational(0)) == Rational(1));
  CHECK(qosc::evaluate(qosc::hermite(3), Rational(1)) == Rational(-4));
}

TEST_CASE("exact evaluation at a double agrees with rational Horner") {
  const auto& h = qosc::hermite(20);
  for (double x : {0.0, 0.1, -1.7, 3.25, 1e-3, 12.5}) {
    const double expect = qosc::evaluate(h, Rational::from_double(x)).to_double();
    CHECK(qosc::evaluate_exact(h, x) == doctest::Approx(expect).epsilon(1e-15));
  }
  CHECK(qosc::evaluate_exact(RationalPolynomial{}, 2.0) == 0.0);
}

TEST_CASE("polynomial division") {
  const RationalPolynomial num{-1, 0, 0, 1};  // x^3 - 1
  const RationalPolynomial den{-1, 1};        // x - 1
  const auto [q, r] = qosc::divide(num, den);
  CHECK(q == RationalPolynomial{1, 1, 1});
  CHECK(r.is_zero());
  CHECK_THROWS_AS(qosc::divide(num, RationalPolynomial{}), std::domain_error);
}

TEST_CASE("real_root_count examples") {
  CHECK(qosc::real_root_count(RationalPolynomial{1, 0, 1}) == 0);
  CHECK(qosc::real_root_count(RationalPolynomial{0, 1, 0, Rational(2, 3)}) == 1);
  CHECK(qosc::real_root_count(RationalPolynomial{1, 0, -4, 0, -4}) == 2);
  CHECK(qosc::real_root_count(RationalPolynomial{5}) == 0);
  // (x-1)^2 (x+2): distinct roots only.
  CHECK(qosc::real_root_count(RationalPolynomial{2, -3, 0, 1}) == 2);
  CHECK_THROWS_AS(qosc::real_root_count(RationalPolynomial{}), std::domain_error);
}

TEST_CASE("real_root_count agrees with a brute-force scan on the corpus") {
  std::vector<RationalPolynomial> corpus;
  for (unsigned n = 1; n <= 10; ++n) corpus.push_back(qosc::hermite(n));
  for (long n : {0L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 10L}) corpus.push_back(qosc::polynomial_solution(n));
  corpus.push_back(RationalPolynomial{1, 0, 1});
  corpus.push_back(RationalPolynomial{-2, 0, 1});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> root(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    // Products of distinct integer-root factors, times an irreducible quadratic.
    RationalPolynomial p{1, 0, 1};
    std::vector<int> used;
    const int k = 1 + trial % 8;
    while (static_cast<int>(used.size()) < k) {
      const int r = root(rng);
      if (std::find(used.begin(), used.end(), r) != used.end()) continue;
      used.push_back(r);
      p = p * RationalPolynomial{Rational(-r), 1};
    }
    corpus.push_back(p * Rational(1, 3 + trial));
  }
  for (const auto& p : corpus) {
    REQUIRE(p.degree() <= 10);
    CHECK(qosc::real_root_count(p) == brute_force_root_count(p));
  }
}
