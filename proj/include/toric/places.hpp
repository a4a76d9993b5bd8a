#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/log_value.hpp"

namespace toric {

// A nonzero algebraic number q * base^exponent with rational q, positive
// rational base and rational exponent. base = 1 (or exponent = 0) gives a
// plain rational; a shared base covers Kummer-type coordinates.
struct Coordinate {
  Rational q;
  Rational base = 1;
  Rational exponent = 0;

  bool is_rational() const { return base == 1 || exponent == 0; }
};

// A place of Q: a finite prime or the archimedean place.
struct Place {
  std::optional<Integer> prime;  // empty = infinite place

  bool is_infinite() const { return !prime.has_value(); }
  std::string str() const { return prime ? prime->get_str() : "inf"; }
  bool operator==(const Place& o) const { return prime == o.prime; }
};

struct PlaceEntry {
  Place place;
  Rational multiplicity;       // lambda_v > 0
  std::vector<LogValue> tau;   // one weight per configuration point
};

// Per-place weight vectors; places are pairwise distinct and trivial places
// (all-zero tau) are omitted, so torsion data has an empty entry list.
struct PlaceWeights {
  std::vector<PlaceEntry> entries;

  std::size_t coordinate_count() const {
    return entries.empty() ? 0 : entries.front().tau.size();
  }
};

// Derives per-place weights (log |alpha_i|_v as LogValues) from coordinates,
// with multiplicity 1 at every emitted place. All radical coordinates must
// share one base.
PlaceWeights weights_from_point(const std::vector<Coordinate>& coords);

struct ProductFormulaReport {
  std::vector<LogValue> sums;  // per coordinate: sum_v lambda_v * tau_{i,v}
  bool pass = true;
};

ProductFormulaReport product_formula_check(const PlaceWeights& w);

// Per-place log-vector of a rational point with nonzero entries, on the
// union of the given base places and the places where t has content.
// Used for orbit point heights.
std::vector<std::pair<Place, std::vector<LogValue>>> log_vectors_of_point(
    const QVec& t);

}  // namespace toric
