#include "toric/places.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

bool all_zero(const std::vector<LogValue>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const LogValue& x) { return x.is_zero(); });
}

}  // namespace

PlaceWeights weights_from_point(const std::vector<Coordinate>& coords) {
  if (coords.empty()) throw ValidationError("weights_from_point: no coordinates");

  std::optional<Rational> shared_base;
  for (const auto& c : coords) {
    if (c.q == 0) throw ValidationError("zero coordinate");
    if (c.base <= 0)
      throw ValidationError("radical base must be a positive rational");
    if (c.is_rational()) continue;
    if (shared_base && !(*shared_base == c.base))
      throw ValidationError("mixed radical bases");
    shared_base = c.base;
  }

  // All primes dividing any numerator, denominator, or the base.
  std::set<Integer> primes;
  for (const auto& c : coords) {
    for (const auto& [p, e] : factor_rational(c.q)) primes.insert(p);
    if (!c.is_rational())
      for (const auto& [p, e] : factor_rational(c.base)) primes.insert(p);
  }

  PlaceWeights out;
  const std::size_t count = coords.size();
  for (const Integer& p : primes) {
    PlaceEntry entry;
    entry.place = Place{p};
    entry.multiplicity = 1;
    entry.tau.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      // log |q r^e|_p = -(v_p(q) + e v_p(r)) log p
      Rational exp(valuation(coords[i].q, p));
      if (!coords[i].is_rational())
        exp += coords[i].exponent * Rational(valuation(coords[i].base, p));
      if (exp != 0) entry.tau[i] = LogValue::log_prime(p, -exp);
    }
    if (!all_zero(entry.tau)) out.entries.push_back(std::move(entry));
  }

  {
    PlaceEntry inf;
    inf.place = Place{};
    inf.multiplicity = 1;
    inf.tau.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      // log |q r^e| = log|q| + e log r, expanded over the prime basis.
      LogValue v = LogValue::log_abs(coords[i].q);
      if (!coords[i].is_rational())
        v += LogValue::log_abs(coords[i].base) * coords[i].exponent;
      inf.tau[i] = std::move(v);
    }
    if (!all_zero(inf.tau)) out.entries.push_back(std::move(inf));
  }
  return out;
}

ProductFormulaReport product_formula_check(const PlaceWeights& w) {
  ProductFormulaReport report;
  report.sums.assign(w.coordinate_count(), LogValue{});
  for (const auto& entry : w.entries)
    for (std::size_t i = 0; i < entry.tau.size(); ++i)
      report.sums[i] += entry.tau[i] * entry.multiplicity;
  report.pass = std::all_of(report.sums.begin(), report.sums.end(),
                            [](const LogValue& v) { return v.is_zero(); });
  return report;
}

std::vector<std::pair<Place, std::vector<LogValue>>> log_vectors_of_point(
    const QVec& t) {
  std::set<Integer> primes;
  for (const Rational& x : t) {
    if (x == 0) throw ValidationError("zero entry in torus point");
    for (const auto& [p, e] : factor_rational(x)) primes.insert(p);
  }
  std::vector<std::pair<Place, std::vector<LogValue>>> out;
  for (const Integer& p : primes) {
    std::vector<LogValue> sigma(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
      const long v = valuation(t[j], p);
      if (v != 0) sigma[j] = LogValue::log_prime(p, Rational(-v));
    }
    out.emplace_back(Place{p}, std::move(sigma));
  }
  {
    std::vector<LogValue> sigma(t.size());
    bool nontrivial = false;
    for (std::size_t j = 0; j < t.size(); ++j) {
      sigma[j] = LogValue::log_abs(t[j]);
      nontrivial = nontrivial || !sigma[j].is_zero();
    }
    if (nontrivial) out.emplace_back(Place{}, std::move(sigma));
  }
  return out;
}

}  // namespace toric
