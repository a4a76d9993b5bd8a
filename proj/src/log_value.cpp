#include "toric/log_value.hpp"

#include <mpfr.h>

#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>

namespace toric {

namespace {

std::atomic<unsigned> g_precision_cap{16384};

// Rigorous double enclosure of log p, cached per prime. MPFR rounds the
// 53-bit results in the requested directions, so [lo, hi] always brackets
// the true value.
std::pair<double, double> log_prime_interval(const Integer& p) {
  static std::map<Integer, std::pair<double, double>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_z(t, p.get_mpz_t(), MPFR_RNDD);
  mpfr_log(t, t, MPFR_RNDD);
  const double lo = mpfr_get_d(t, MPFR_RNDD);
  mpfr_set_z(t, p.get_mpz_t(), MPFR_RNDU);
  mpfr_log(t, t, MPFR_RNDU);
  const double hi = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  cache.emplace(p, std::make_pair(lo, hi));
  return {lo, hi};
}

std::pair<double, double> rational_interval(const Rational& q) {
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDD);
  const double lo = mpfr_get_d(t, MPFR_RNDD);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDU);
  const double hi = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return {lo, hi};
}

inline double down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Fast filter: evaluate with double intervals widened by one ulp per
// operation. Returns 0 when the interval still straddles zero.
int double_filter_sign(const std::map<Integer, Rational>& coeff) {
  double lo = 0.0, hi = 0.0;
  for (const auto& [p, q] : coeff) {
    const auto [llo, lhi] = log_prime_interval(p);
    const auto [qlo, qhi] = rational_interval(q);
    // log p > 0, so the product interval follows the sign of q.
    double tlo, thi;
    if (qlo >= 0.0) {
      tlo = down(qlo * llo);
      thi = up(qhi * lhi);
    } else if (qhi <= 0.0) {
      tlo = down(qlo * lhi);
      thi = up(qhi * llo);
    } else {
      tlo = down(qlo * lhi);
      thi = up(qhi * lhi);
    }
    lo = down(lo + tlo);
    hi = up(hi + thi);
    if (!std::isfinite(lo) || !std::isfinite(hi)) return 0;
  }
  if (lo > 0.0) return 1;
  if (hi < 0.0) return -1;
  return 0;
}

int mpfr_ladder_sign(const std::map<Integer, Rational>& coeff,
                     unsigned cap_bits) {
  for (unsigned prec = 64;; prec *= 2) {
    if (prec > cap_bits)
      throw PrecisionExhausted(
          "precision exhausted: sign of log-linear value not separated from "
          "zero at " +
          std::to_string(cap_bits) + " bits");
    mpfr_t lo, hi, t;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_init2(t, prec);
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    for (const auto& [p, q] : coeff) {
      const int qs = sgn(q);
      // log p rounded toward the safe side for each bound.
      mpfr_set_z(t, p.get_mpz_t(), qs > 0 ? MPFR_RNDD : MPFR_RNDU);
      mpfr_log(t, t, qs > 0 ? MPFR_RNDD : MPFR_RNDU);
      mpfr_mul_q(t, t, q.get_mpq_t(), MPFR_RNDD);
      mpfr_add(lo, lo, t, MPFR_RNDD);
      mpfr_set_z(t, p.get_mpz_t(), qs > 0 ? MPFR_RNDU : MPFR_RNDD);
      mpfr_log(t, t, qs > 0 ? MPFR_RNDU : MPFR_RNDD);
      mpfr_mul_q(t, t, q.get_mpq_t(), MPFR_RNDU);
      mpfr_add(hi, hi, t, MPFR_RNDU);
    }
    const int slo = mpfr_sgn(lo);
    const int shi = mpfr_sgn(hi);
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(t);
    if (slo > 0) return 1;
    if (shi < 0) return -1;
  }
}

}  // namespace

LogValue LogValue::log_prime(const Integer& p, const Rational& coeff) {
  if (!is_prime(p))
    throw ValidationError("log_prime: " + p.get_str() + " is not prime");
  Rational c = coeff;
  c.canonicalize();  // callers may pass a raw two-argument mpq
  LogValue v;
  v.add_term(p, c);
  return v;
}

LogValue LogValue::log_abs(const Rational& q) {
  if (q == 0) throw ValidationError("log_abs of zero");
  LogValue v;
  for (const auto& [p, e] : factor_rational(q)) v.add_term(p, Rational(e));
  return v;
}

void LogValue::add_term(const Integer& p, const Rational& c) {
  if (c == 0) return;
  auto it = coeff_.find(p);
  if (it == coeff_.end()) {
    coeff_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeff_.erase(it);
}

LogValue& LogValue::operator+=(const LogValue& o) {
  for (const auto& [p, c] : o.coeff_) add_term(p, c);
  return *this;
}

LogValue& LogValue::operator-=(const LogValue& o) {
  for (const auto& [p, c] : o.coeff_) add_term(p, -c);
  return *this;
}

LogValue LogValue::operator+(const LogValue& o) const {
  LogValue r = *this;
  r += o;
  return r;
}

LogValue LogValue::operator-(const LogValue& o) const {
  LogValue r = *this;
  r -= o;
  return r;
}

LogValue LogValue::operator-() const {
  LogValue r;
  for (const auto& [p, c] : coeff_) r.coeff_.emplace(p, -c);
  return r;
}

LogValue& LogValue::operator*=(const Rational& s) {
  if (s == 0) {
    coeff_.clear();
    return *this;
  }
  for (auto& [p, c] : coeff_) c *= s;
  return *this;
}

LogValue LogValue::operator*(const Rational& s) const {
  LogValue r = *this;
  r *= s;
  return r;
}

int LogValue::sign() const {
  if (coeff_.empty()) return 0;
  if (coeff_.size() == 1) return sgn(coeff_.begin()->second);
  const int fast = double_filter_sign(coeff_);
  if (fast != 0) return fast;
  return mpfr_ladder_sign(coeff_, g_precision_cap.load());
}

double LogValue::approx() const {
  double s = 0.0;
  for (const auto& [p, q] : coeff_) s += q.get_d() * std::log(p.get_d());
  return s;
}

std::string LogValue::symbolic() const {
  if (coeff_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, q] : coeff_) {
    const bool neg = q < 0;
    Rational a = abs(q);
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (a != 1) out << a.get_str() << "*";
    out << "log(" << p.get_str() << ")";
  }
  return out.str();
}

std::string LogValue::decimal(unsigned digits) const {
  if (digits == 0) digits = 1;
  if (coeff_.empty()) return "0";
  const unsigned prec =
      std::max<unsigned>(64, static_cast<unsigned>(digits * 4 + 32));
  mpfr_t acc, t;
  mpfr_init2(acc, prec);
  mpfr_init2(t, prec);
  mpfr_set_zero(acc, 1);
  for (const auto& [p, q] : coeff_) {
    mpfr_set_z(t, p.get_mpz_t(), MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_mul_q(t, t, q.get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rf", static_cast<int>(digits), acc);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(acc);
  mpfr_clear(t);
  return out;
}

void LogValue::set_precision_cap(unsigned bits) {
  g_precision_cap.store(bits < 64 ? 64 : bits);
}

unsigned LogValue::precision_cap() { return g_precision_cap.load(); }

}  // namespace toric
