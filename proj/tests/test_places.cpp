#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "toric/places.hpp"

using namespace toric;
using namespace toric::testgen;

namespace {

Coordinate rat(long num, long den = 1) {
  Coordinate c;
  c.q = Rational(num, den);
  c.q.canonicalize();
  return c;
}

const PlaceEntry* find_place(const PlaceWeights& w, const Place& p) {
  for (const auto& e : w.entries)
    if (e.place == p) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("weights of (1, 2, 1)") {
  const PlaceWeights w = weights_from_point({rat(1), rat(2), rat(1)});
  REQUIRE(w.entries.size() == 2);
  const auto* p2 = find_place(w, Place{Integer(2)});
  const auto* pinf = find_place(w, Place{});
  REQUIRE(p2);
  REQUIRE(pinf);
  CHECK(p2->tau[0].is_zero());
  CHECK(p2->tau[1] == LogValue::log_prime(2, -1));
  CHECK(p2->tau[2].is_zero());
  CHECK(pinf->tau[1] == LogValue::log_prime(2));
  CHECK(p2->multiplicity == 1);
  CHECK(product_formula_check(w).pass);
}

TEST_CASE("torsion coordinates emit no places") {
  const PlaceWeights w = weights_from_point({rat(1), rat(-1)});
  CHECK(w.entries.empty());
  CHECK(product_formula_check(w).pass);
}

TEST_CASE("weights of (1/3, 1)") {
  const PlaceWeights w = weights_from_point({rat(1, 3), rat(1)});
  const auto* p3 = find_place(w, Place{Integer(3)});
  const auto* pinf = find_place(w, Place{});
  REQUIRE(p3);
  REQUIRE(pinf);
  CHECK(p3->tau[0] == LogValue::log_prime(3));  // |1/3|_3 = 3
  CHECK(p3->tau[1].is_zero());
  CHECK(pinf->tau[0] == LogValue::log_prime(3, -1));
}

TEST_CASE("radical coordinates") {
  // (1/3, 5, 2^{1/3}).
  Coordinate radical;
  radical.q = 1;
  radical.base = 2;
  radical.exponent = Rational(1, 3);
  const PlaceWeights w = weights_from_point({rat(1, 3), rat(5), radical});
  CHECK(product_formula_check(w).pass);
  const auto* p2 = find_place(w, Place{Integer(2)});
  REQUIRE(p2);
  CHECK(p2->tau[2] == LogValue::log_prime(2, Rational(-1, 3)));
  const auto* pinf = find_place(w, Place{});
  REQUIRE(pinf);
  CHECK(pinf->tau[2] == LogValue::log_prime(2, Rational(1, 3)));

  // Integer-power radical exponents agree with plain rationals:
  // 4 * 2^{3} = 32 and (32) directly.
  Coordinate as_radical;
  as_radical.q = 4;
  as_radical.base = 2;
  as_radical.exponent = 3;
  const PlaceWeights a = weights_from_point({as_radical, rat(3)});
  const PlaceWeights b = weights_from_point({rat(32), rat(3)});
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].place == b.entries[i].place);
    CHECK(a.entries[i].tau == b.entries[i].tau);
  }
}

TEST_CASE("mixed radical bases rejected") {
  Coordinate r2, r3;
  r2.q = 1;
  r2.base = 2;
  r2.exponent = Rational(1, 2);
  r3.q = 1;
  r3.base = 3;
  r3.exponent = Rational(1, 2);
  CHECK_THROWS_AS(weights_from_point({r2, r3}), ValidationError);
  CHECK_THROWS_AS(weights_from_point({rat(1), rat(0)}), ValidationError);
  Coordinate bad_base;
  bad_base.q = 1;
  bad_base.base = -2;
  bad_base.exponent = Rational(1, 2);
  CHECK_THROWS_AS(weights_from_point({bad_base}), ValidationError);
}

TEST_CASE("product formula check on hand-made weights") {
  PlaceWeights w;
  PlaceEntry inf;
  inf.place = Place{};
  inf.multiplicity = 1;
  inf.tau = {LogValue(), LogValue::log_prime(2)};
  w.entries.push_back(inf);
  const auto report = product_formula_check(w);
  CHECK_FALSE(report.pass);
  CHECK(report.sums[0].is_zero());
  CHECK(report.sums[1] == LogValue::log_prime(2));
}

TEST_CASE("derived weights always satisfy the product formula") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto coords =
        random_coordinates(rng, 2 + static_cast<std::size_t>(rng() % 6));
    const PlaceWeights w = weights_from_point(coords);
    CHECK(product_formula_check(w).pass);
    for (const auto& e : w.entries) CHECK(e.multiplicity == 1);
  }
}

TEST_CASE("scaling all coordinates shifts each place by a constant") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    auto coords = random_coordinates(rng, 3);
    const Rational s = random_coordinate_value(rng, 12);
    auto scaled = coords;
    for (auto& c : scaled) c.q *= s;
    const PlaceWeights w = weights_from_point(coords);
    const PlaceWeights ws = weights_from_point(scaled);
    // tau'_{i,v} - tau_{i,v} is independent of i at every place v of either
    // weight system.
    std::vector<Place> places;
    for (const auto& e : w.entries) places.push_back(e.place);
    for (const auto& e : ws.entries)
      if (!find_place(w, e.place)) places.push_back(e.place);
    for (const Place& p : places) {
      const auto* before = find_place(w, p);
      const auto* after = find_place(ws, p);
      LogValue expected_shift;
      bool first = true;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        const LogValue b = before ? before->tau[i] : LogValue();
        const LogValue a = after ? after->tau[i] : LogValue();
        if (first) {
          expected_shift = a - b;
          first = false;
        } else {
          CHECK(a - b == expected_shift);
        }
      }
    }
  }
}

TEST_CASE("log vectors of a rational torus point") {
  const auto vecs = log_vectors_of_point({Rational(2), Rational(1, 3)});
  // Places 2, 3 and infinity.
  CHECK(vecs.size() == 3);
  for (const auto& [place, sigma] : vecs) {
    if (place.is_infinite()) {
      CHECK(sigma[0] == LogValue::log_prime(2));
      CHECK(sigma[1] == LogValue::log_prime(3, -1));
    }
  }
  CHECK_THROWS_AS(log_vectors_of_point({Rational(0)}), ValidationError);
}
