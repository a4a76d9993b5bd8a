#pragma once

#include <vector>

#include "toric/rational.hpp"

namespace toric {

// One inequality <normal, x> <= offset of the facet description, tight at
// the listed vertex ids.
struct Facet {
  QVec normal;
  Rational offset;
  std::vector<int> vertices;
};

// Affine-hull equation <normal, x> = offset.
struct LinearEquation {
  QVec normal;
  Rational offset;
};

// A rational polytope of dimension dim() inside R^ambient(), described by a
// minimal vertex set, the facet inequalities of its affine hull, and the
// equations cutting out that affine hull. All data is exact.
class Polytope {
 public:
  Polytope() = default;

  int ambient() const { return ambient_; }
  int dim() const { return dim_; }
  bool is_full_dimensional() const { return dim_ == ambient_; }

  const std::vector<QVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<LinearEquation>& equations() const { return equations_; }

  bool contains(const QVec& x) const;

 private:
  int ambient_ = 0;
  int dim_ = -1;
  std::vector<QVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<LinearEquation> equations_;

  friend Polytope convex_hull(const std::vector<QVec>&);
};

// Exact coordinates on the affine hull of a point set: x = origin + B y with
// y = P (x - origin). B has the basis directions as rows of basis(); P is the
// pseudo-inverse projection, so to_local is a left inverse of to_ambient.
struct AffineChart {
  QVec origin;
  QMat basis;  // dim rows, each of length ambient
  QMat proj;   // dim rows, each of length ambient
  int ambient = 0;
  int dim = 0;

  QVec to_local(const QVec& x) const;
  QVec to_ambient(const QVec& y) const;
};

AffineChart affine_hull_chart(const std::vector<QVec>& pts);

// Exact convex hull; n <= 6 desk scale. Vertices are minimal, facets cover
// the boundary within the affine hull, and no epsilon comparison is used
// anywhere.
Polytope convex_hull(const std::vector<QVec>& pts);

// Lebesgue volume in the ambient space; 0 for degenerate polytopes (their
// dimension is reported by dim()).
Rational volume(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

// Partition into dim()+1-point simplices (each returned as its vertex list).
std::vector<std::vector<QVec>> triangulate(const Polytope& p);

QVec centroid(const Polytope& p);

}  // namespace toric
