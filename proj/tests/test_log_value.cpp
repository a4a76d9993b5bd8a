#include <doctest.h>

#include <random>

#include "toric/log_value.hpp"

using namespace toric;

namespace {

LogValue random_logvalue(std::mt19937_64& rng) {
  static const long primes[] = {2, 3, 5, 7};
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  LogValue v;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    if (c != 0)
      v += LogValue::log_prime(Integer(primes[rng() % 4]), c);
  }
  return v;
}

}  // namespace

TEST_CASE("canonical form") {
  LogValue v = LogValue::log_prime(2, Rational(3));
  v += LogValue::log_prime(2, Rational(-3));
  CHECK(v.is_zero());
  CHECK(v.coefficients().empty());
  CHECK(v.symbolic() == "0");

  const LogValue w = LogValue::log_abs(Rational(12, 5));
  CHECK(w.coefficients().at(2) == 2);
  CHECK(w.coefficients().at(3) == 1);
  CHECK(w.coefficients().at(5) == -1);
  CHECK_THROWS_AS(LogValue::log_prime(Integer(6)), ValidationError);
}

TEST_CASE("signs") {
  CHECK(LogValue().sign() == 0);
  CHECK(LogValue::log_prime(2).sign() == 1);
  CHECK(LogValue::log_prime(2, Rational(-1, 7)).sign() == -1);
  // log 9 - log 8 > 0, log 8 - log 9 < 0: forces cancellation across primes.
  const LogValue v =
      LogValue::log_prime(3, 2) - LogValue::log_prime(2, 3);
  CHECK(v.sign() == 1);
  CHECK((-v).sign() == -1);
  CHECK(LogValue::compare(LogValue::log_prime(2), LogValue::log_prime(3)) < 0);
}

TEST_CASE("sign needs the precision ladder on near-ties") {
  // log(1 + 2^-60) ~ 8.7e-19 is far below what the double filter resolves
  // against terms of size ~40.
  Rational close(Integer(1) << 60);
  close += 1;
  close /= Rational(Integer(1) << 60);
  const LogValue v = LogValue::log_abs(close);
  CHECK(v.sign() == 1);
  CHECK((-v).sign() == -1);
}

TEST_CASE("precision cap exhaustion") {
  // 6189245291 log 3 - 9809721694 log 2 ~ 9.6e-11 (a continued-fraction
  // convergent of log3/log2): the 64-bit rung cannot separate it from zero,
  // the 128-bit rung can.
  const LogValue v = LogValue::log_prime(3, Rational("6189245291")) -
                     LogValue::log_prime(2, Rational("9809721694"));
  CHECK(v.sign() == 1);
  CHECK((-v).sign() == -1);
  LogValue::set_precision_cap(64);
  CHECK_THROWS_AS(v.sign(), PrecisionExhausted);
  LogValue::set_precision_cap(16384);
  CHECK(v.sign() == 1);
}

TEST_CASE("algebraic laws on random values") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const LogValue a = random_logvalue(rng);
    const LogValue b = random_logvalue(rng);
    const LogValue c = random_logvalue(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + (-a) == LogValue());
    CHECK(a - b == -(b - a));
    CHECK((a + b) * Rational(3, 2) == a * Rational(3, 2) + b * Rational(3, 2));
  }
}

TEST_CASE("decimal output") {
  const LogValue v = LogValue::log_prime(2, 2);
  CHECK(v.symbolic() == "2*log(2)");
  CHECK(v.decimal(10).substr(0, 11) == "1.386294361");
  const LogValue w = LogValue::log_prime(2) - LogValue::log_prime(3, Rational(3, 2));
  CHECK(w.symbolic() == "log(2) - 3/2*log(3)");
  CHECK(LogValue().decimal(10) == "0");
}
