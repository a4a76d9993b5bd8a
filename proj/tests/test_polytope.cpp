#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "toric/polytope.hpp"

using namespace toric;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

std::vector<QVec> random_points(std::mt19937_64& rng, int n, int count) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<QVec> pts;
  for (int i = 0; i < count; ++i) {
    QVec p(n);
    for (int j = 0; j < n; ++j) {
      p[j] = Rational(num(rng), den(rng));
      p[j].canonicalize();
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

TEST_CASE("hull of collinear points in R^1") {
  const Polytope p = convex_hull({qv({0}), qv({1}), qv({2})});
  CHECK(p.dim() == 1);
  REQUIRE(p.vertices().size() == 2);
  CHECK(p.vertices()[0][0] + p.vertices()[1][0] == 2);  // {0, 2}
  CHECK(p.facets().size() == 2);
  CHECK(volume(p) == 2);
}

TEST_CASE("convex combination eliminated") {
  const Polytope p =
      convex_hull({qv({0, 0}), qv({2, 0}), qv({0, 2}), qv({1, 1})});
  CHECK(p.dim() == 2);
  CHECK(p.vertices().size() == 3);  // (1,1) is an edge midpoint
  CHECK(p.facets().size() == 3);
  CHECK(volume(p) == 2);
}

TEST_CASE("unit square") {
  const Polytope p =
      convex_hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
  CHECK(p.dim() == 2);
  CHECK(p.vertices().size() == 4);
  CHECK(p.facets().size() == 4);
  CHECK(volume(p) == 1);
  for (const Facet& f : p.facets()) CHECK(f.vertices.size() == 2);
}

TEST_CASE("standard simplex volume") {
  const Polytope p = convex_hull({qv({0, 0}), qv({1, 0}), qv({0, 1})});
  CHECK(volume(p) == Rational(1, 2));
}

TEST_CASE("degenerate hull is flagged and has zero ambient volume") {
  const Polytope p = convex_hull({qv({0, 0}), qv({1, 1}), qv({2, 2})});
  CHECK(p.dim() == 1);
  CHECK(p.ambient() == 2);
  CHECK(volume(p) == 0);
  CHECK(p.vertices().size() == 2);
  CHECK(p.equations().size() == 1);
  CHECK(p.contains(qv({1, 1})));
  CHECK_FALSE(p.contains(qv({1, 0})));
  const Polytope point = convex_hull({qv({3, 4})});
  CHECK(point.dim() == 0);
  CHECK(point.contains(qv({3, 4})));
  CHECK_FALSE(point.contains(qv({3, 5})));
}

TEST_CASE("3d cube") {
  std::vector<QVec> corners;
  for (int i = 0; i < 8; ++i)
    corners.push_back(qv({i & 1, (i >> 1) & 1, (i >> 2) & 1}));
  const Polytope p = convex_hull(corners);
  CHECK(p.dim() == 3);
  CHECK(p.vertices().size() == 8);
  CHECK(p.facets().size() == 6);
  CHECK(volume(p) == 1);
  for (const Facet& f : p.facets()) CHECK(f.vertices.size() == 4);
}

TEST_CASE("4-dimensional hypercube") {
  std::vector<QVec> corners;
  for (int i = 0; i < 16; ++i)
    corners.push_back(qv({i & 1, (i >> 1) & 1, (i >> 2) & 1, (i >> 3) & 1}));
  const Polytope p = convex_hull(corners);
  CHECK(p.dim() == 4);
  CHECK(p.vertices().size() == 16);
  CHECK(p.facets().size() == 8);
  CHECK(volume(p) == 1);
  for (const Facet& f : p.facets()) CHECK(f.vertices.size() == 8);
}

TEST_CASE("minkowski sums") {
  const Polytope square =
      convex_hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
  SUBCASE("translation by a point") {
    const Polytope pt = convex_hull({qv({5, 7})});
    const Polytope sum = minkowski_sum(square, pt);
    CHECK(volume(sum) == 1);
    CHECK(sum.contains(qv({5, 7})));
    CHECK(sum.contains(qv({6, 8})));
    CHECK_FALSE(sum.contains(qv({0, 0})));
  }
  SUBCASE("segment plus segment") {
    const Polytope a = convex_hull({qv({0}), qv({1})});
    const Polytope sum = minkowski_sum(a, a);
    CHECK(sum.dim() == 1);
    CHECK(volume(sum) == 2);
  }
  SUBCASE("square plus diagonal segment is a hexagon") {
    const Polytope diag = convex_hull({qv({0, 0}), qv({1, 1})});
    const Polytope sum = minkowski_sum(square, diag);
    CHECK(sum.vertices().size() == 6);
    // Shoelace oracle over the sweep region {0<=x,y<=2, |x-y|<=1}:
    // 4 - 1/2 - 1/2 = 3.
    CHECK(volume(sum) == 3);
  }
  SUBCASE("dimension mismatch") {
    const Polytope seg = convex_hull({qv({0}), qv({1})});
    CHECK_THROWS_AS(minkowski_sum(square, seg), ValidationError);
  }
}

TEST_CASE("hull properties on random points") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto pts = random_points(rng, n, 3 + static_cast<int>(rng() % 8));
    const Polytope p = convex_hull(pts);
    // Every input point satisfies every facet inequality and equation.
    for (const QVec& x : pts) CHECK(p.contains(x));
    // Facets are tight at >= dim affinely independent vertices.
    for (const Facet& f : p.facets()) {
      REQUIRE(!f.vertices.empty());
      QMat diffs;
      for (std::size_t k = 1; k < f.vertices.size(); ++k)
        diffs.push_back(q_sub(p.vertices()[f.vertices[k]],
                              p.vertices()[f.vertices[0]]));
      CHECK(rational_rank(diffs) == p.dim() - 1);
      for (int id : f.vertices)
        CHECK(q_dot(f.normal, p.vertices()[id]) == f.offset);
    }
    // No vertex is a convex combination of the others: rebuilding the hull
    // from the vertex list returns the same vertex count.
    const Polytope q = convex_hull(p.vertices());
    CHECK(q.vertices().size() == p.vertices().size());

    // Completeness of the facet description: pushing any vertex away from
    // the centroid leaves the hull, so some inequality must reject it.
    if (p.dim() >= 1) {
      const QVec c = centroid(p);
      for (const QVec& v : p.vertices()) {
        const QVec outside =
            q_add(v, q_scale(Rational(1, 8), q_sub(v, c)));
        CHECK_FALSE(p.contains(outside));
      }
    }
  }
}

TEST_CASE("vertex sets match the brute-force extreme point test") {
  // A point is a vertex exactly when it is not a convex combination of the
  // others; feasibility is decided by the barycentric solver on a
  // zero-height lift, fully independent of the hull code.
  std::mt19937_64 rng(777111);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int count = 1 + static_cast<int>(rng() % 9);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<QVec> pts;
    for (int i = 0; i < count; ++i) {
      QVec p(n);
      for (int j = 0; j < n; ++j) {
        p[j] = Rational(num(rng), den(rng));
        p[j].canonicalize();
      }
      pts.push_back(std::move(p));
    }
    const Polytope hull = convex_hull(pts);
    std::vector<QVec> uniq = pts;
    std::sort(uniq.begin(), uniq.end(), QVecLess{});
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::size_t extreme = 0;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
      std::vector<QVec> others;
      for (std::size_t j = 0; j < uniq.size(); ++j)
        if (j != i) others.push_back(uniq[j]);
      bool in_conv = false;
      if (!others.empty()) {
        const std::vector<LogValue> zeros(others.size());
        in_conv =
            testgen::brute_force_roof_value(others, zeros, uniq[i]).has_value();
      }
      if (!in_conv) ++extreme;
    }
    CHECK(extreme == hull.vertices().size());
  }
}

TEST_CASE("volume scaling and translation invariance") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto pts = random_points(rng, n, n + 2 + static_cast<int>(rng() % 5));
    const Polytope p = convex_hull(pts);
    if (!p.is_full_dimensional()) continue;
    const Rational vol = volume(p);

    // vol(P + P) = 2^n vol(P).
    const Polytope doubled = minkowski_sum(p, p);
    Rational expected = vol;
    for (int k = 0; k < n; ++k) expected *= 2;
    CHECK(volume(doubled) == expected);

    // Translation invariance.
    std::vector<QVec> shifted;
    const QVec t = random_points(rng, n, 1)[0];
    for (const QVec& x : pts) shifted.push_back(q_add(x, t));
    CHECK(volume(convex_hull(shifted)) == vol);

    // Dilation by k scales by k^n.
    std::vector<QVec> dilated;
    for (const QVec& x : pts) dilated.push_back(q_scale(Rational(3), x));
    Rational dil_expected = vol;
    for (int k = 0; k < n; ++k) dil_expected *= 3;
    CHECK(volume(convex_hull(dilated)) == dil_expected);
  }
}

TEST_CASE("triangulation partitions the volume") {
  const Polytope p = convex_hull({qv({0, 0}), qv({3, 0}), qv({0, 3}),
                                  qv({3, 3}), qv({1, 4})});
  Rational total = 0;
  for (const auto& s : triangulate(p)) {
    QMat m;
    for (std::size_t i = 1; i < s.size(); ++i) m.push_back(q_sub(s[i], s[0]));
    total += abs(rational_det(m)) / 2;
  }
  CHECK(total == volume(p));
}

TEST_CASE("centroid of known shapes") {
  const Polytope sq =
      convex_hull({qv({0, 0}), qv({2, 0}), qv({0, 2}), qv({2, 2})});
  const QVec c = centroid(sq);
  CHECK(c[0] == 1);
  CHECK(c[1] == 1);
  const Polytope seg = convex_hull({qv({0, 0}), qv({2, 2})});
  const QVec cs = centroid(seg);
  CHECK(cs[0] == 1);
  CHECK(cs[1] == 1);
}

TEST_CASE("hull input validation") {
  CHECK_THROWS_AS(convex_hull({}), ValidationError);
  CHECK_THROWS_AS(convex_hull({qv({0, 0}), qv({1})}), ValidationError);
}
