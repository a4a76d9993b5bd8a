#pragma once

#include <map>
#include <string>

#include "toric/rational.hpp"

namespace toric {

// An exact element of the Q-vector space spanned by { log p : p prime }.
//
// Every height, weight and roof value in this library is such a combination,
// so equality is decidable by comparing coefficient maps, and the sign of a
// nonzero value is decidable by interval evaluation at growing precision
// (the logs of distinct primes are linearly independent over Q).
class LogValue {
 public:
  LogValue() = default;

  static LogValue log_prime(const Integer& p, const Rational& coeff = 1);

  // log|q| of a nonzero rational, expanded through its prime factorization.
  static LogValue log_abs(const Rational& q);

  bool is_zero() const { return coeff_.empty(); }

  LogValue& operator+=(const LogValue& o);
  LogValue& operator-=(const LogValue& o);
  LogValue operator+(const LogValue& o) const;
  LogValue operator-(const LogValue& o) const;
  LogValue operator-() const;
  LogValue& operator*=(const Rational& s);
  LogValue operator*(const Rational& s) const;
  friend LogValue operator*(const Rational& s, const LogValue& v) {
    return v * s;
  }

  bool operator==(const LogValue& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const LogValue& o) const { return !(*this == o); }

  // Exact sign in {-1, 0, +1}. Zero is detected from the coefficient map;
  // nonzero values are resolved by interval arithmetic, doubling precision
  // until the interval excludes zero or the cap is reached (then throws
  // PrecisionExhausted).
  int sign() const;

  static int compare(const LogValue& a, const LogValue& b) {
    return (a - b).sign();
  }

  // Non-rigorous double approximation, for display and Monte-Carlo use.
  double approx() const;

  // "2*log(2) - 3/2*log(5)", or "0".
  std::string symbolic() const;

  // Decimal approximation with the given number of significant digits.
  std::string decimal(unsigned digits) const;

  const std::map<Integer, Rational>& coefficients() const { return coeff_; }

  static void set_precision_cap(unsigned bits);
  static unsigned precision_cap();

 private:
  std::map<Integer, Rational> coeff_;

  void add_term(const Integer& p, const Rational& c);
};

}  // namespace toric
