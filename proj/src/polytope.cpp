#include "toric/polytope.hpp"

#include <algorithm>
#include <map>

#include "toric/envelope_core.hpp"

namespace toric {

bool Polytope::contains(const QVec& x) const {
  if (dim_ < 0) return false;
  if (static_cast<int>(x.size()) != ambient_)
    throw ValidationError("contains: dimension mismatch");
  for (const auto& eq : equations_)
    if (q_dot(eq.normal, x) != eq.offset) return false;
  for (const auto& f : facets_)
    if (q_dot(f.normal, x) > f.offset) return false;
  if (dim_ == 0) return x == vertices_[0];
  return true;
}

QVec AffineChart::to_local(const QVec& x) const {
  const QVec shifted = q_sub(x, origin);
  QVec y(dim);
  for (int k = 0; k < dim; ++k) y[k] = q_dot(proj[k], shifted);
  return y;
}

QVec AffineChart::to_ambient(const QVec& y) const {
  QVec x = origin;
  for (int k = 0; k < dim; ++k)
    for (int j = 0; j < ambient; ++j) x[j] += y[k] * basis[k][j];
  return x;
}

AffineChart affine_hull_chart(const std::vector<QVec>& pts) {
  if (pts.empty()) throw ValidationError("affine_hull_chart: no points");
  AffineChart chart;
  chart.origin = pts[0];
  chart.ambient = static_cast<int>(pts[0].size());
  // Greedy affinely independent directions.
  QMat echelon_rows;
  for (const QVec& p : pts) {
    QVec v = q_sub(p, chart.origin);
    QMat trial = echelon_rows;
    trial.push_back(v);
    if (rational_rank(trial) > static_cast<int>(echelon_rows.size())) {
      echelon_rows.push_back(v);
      chart.basis.push_back(std::move(v));
    }
  }
  chart.dim = static_cast<int>(chart.basis.size());
  // proj = (B B^T)^{-1} B, so that to_local inverts to_ambient exactly.
  const int d = chart.dim;
  if (d > 0) {
    QMat gram(d, QVec(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) gram[i][j] = q_dot(chart.basis[i], chart.basis[j]);
    chart.proj.assign(d, QVec(chart.ambient, Rational(0)));
    for (int col = 0; col < d; ++col) {
      QVec e(d, Rational(0));
      e[col] = 1;
      const auto x = solve_square(gram, e);
      if (!x) throw ComputationError("affine chart: singular Gram matrix");
      for (int j = 0; j < chart.ambient; ++j) {
        Rational s = 0;
        for (int i = 0; i < d; ++i) s += (*x)[i] * chart.basis[i][j];
        chart.proj[col][j] = s;
      }
    }
  }
  return chart;
}

namespace {

struct CoreFacet {
  QVec normal;
  Rational offset;
  std::vector<int> tight;  // indices into the (deduplicated) point list
};

struct CoreHull {
  std::vector<CoreFacet> facets;
  std::vector<int> vertices;
};

// Facets and vertices of the hull of pts, which must affinely span R^d.
CoreHull hull_fulldim(const std::vector<QVec>& pts, int d) {
  CoreHull out;
  const int npts = static_cast<int>(pts.size());
  if (d == 1) {
    int imin = 0, imax = 0;
    for (int i = 1; i < npts; ++i) {
      if (pts[i][0] < pts[imin][0]) imin = i;
      if (pts[i][0] > pts[imax][0]) imax = i;
    }
    CoreFacet lo{{Rational(-1)}, -pts[imin][0], {}};
    CoreFacet hi{{Rational(1)}, pts[imax][0], {}};
    for (int i = 0; i < npts; ++i) {
      if (pts[i][0] == pts[imin][0]) lo.tight.push_back(i);
      if (pts[i][0] == pts[imax][0]) hi.tight.push_back(i);
    }
    out.facets = {std::move(lo), std::move(hi)};
    out.vertices = {imin, imax};
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
  }

  // Split off the last coordinate as a height: the upper and lower
  // envelopes over the shadow give the non-vertical facets, and the facets
  // of the shadow give the vertical ones.
  std::vector<QVec> shadow(npts);
  std::vector<Rational> height(npts), neg_height(npts);
  for (int i = 0; i < npts; ++i) {
    shadow[i] = QVec(pts[i].begin(), pts[i].end() - 1);
    height[i] = pts[i][d - 1];
    neg_height[i] = -height[i];
  }

  const auto upper =
      detail::upper_envelope_cells<Rational>(shadow, height, d - 1);
  const auto lower =
      detail::upper_envelope_cells<Rational>(shadow, neg_height, d - 1);

  for (const auto& cell : upper) {
    // x_d <= <g, x'> + c
    QVec normal(d);
    for (int j = 0; j < d - 1; ++j) normal[j] = -cell.fn.gradient[j];
    normal[d - 1] = 1;
    out.facets.push_back({std::move(normal), cell.fn.constant, cell.tight});
  }
  for (const auto& cell : lower) {
    // -x_d <= <g, x'> + c
    QVec normal(d);
    for (int j = 0; j < d - 1; ++j) normal[j] = -cell.fn.gradient[j];
    normal[d - 1] = -1;
    out.facets.push_back({std::move(normal), cell.fn.constant, cell.tight});
  }

  const Polytope base = convex_hull(shadow);
  for (const Facet& f : base.facets()) {
    std::vector<int> tight;
    QMat diffs;
    for (int i = 0; i < npts; ++i)
      if (q_dot(f.normal, shadow[i]) == f.offset) tight.push_back(i);
    for (std::size_t j = 1; j < tight.size(); ++j)
      diffs.push_back(q_sub(pts[tight[j]], pts[tight[0]]));
    if (tight.empty() || rational_rank(diffs) != d - 1) continue;
    QVec normal(d, Rational(0));
    for (int j = 0; j < d - 1; ++j) normal[j] = f.normal[j];
    out.facets.push_back({std::move(normal), f.offset, std::move(tight)});
  }

  // A point is a vertex exactly when its active facet normals span R^d.
  for (int i = 0; i < npts; ++i) {
    QMat active;
    for (const auto& f : out.facets)
      if (q_dot(f.normal, pts[i]) == f.offset) active.push_back(f.normal);
    if (!active.empty() && rational_rank(active) == d)
      out.vertices.push_back(i);
  }
  return out;
}

}  // namespace

Polytope convex_hull(const std::vector<QVec>& pts_in) {
  if (pts_in.empty()) throw ValidationError("convex_hull: no points");
  const std::size_t n = pts_in[0].size();
  for (const QVec& p : pts_in)
    if (p.size() != n)
      throw ValidationError("convex_hull: dimension mismatch among points");

  std::vector<QVec> pts;
  {
    std::map<QVec, bool, QVecLess> seen;
    for (const QVec& p : pts_in)
      if (seen.emplace(p, true).second) pts.push_back(p);
  }

  const AffineChart chart = affine_hull_chart(pts);
  const int d = chart.dim;

  Polytope out;
  out.ambient_ = static_cast<int>(n);
  out.dim_ = d;
  for (const QVec& u : nullspace(chart.basis))
    out.equations_.push_back({u, q_dot(u, chart.origin)});

  if (d == 0) {
    out.vertices_ = {pts[0]};
    return out;
  }

  const bool full = (d == static_cast<int>(n));
  std::vector<QVec> local;
  if (full) {
    local = pts;
  } else {
    local.reserve(pts.size());
    for (const QVec& p : pts) local.push_back(chart.to_local(p));
  }

  const CoreHull core = hull_fulldim(local, d);

  std::vector<int> vertex_pos(pts.size(), -1);
  for (int id : core.vertices) {
    vertex_pos[id] = static_cast<int>(out.vertices_.size());
    out.vertices_.push_back(pts[id]);
  }

  for (const CoreFacet& f : core.facets) {
    Facet facet;
    if (full) {
      facet.normal = f.normal;
      facet.offset = f.offset;
    } else {
      // <u, y> <= c with y = proj (x - origin) becomes an ambient inequality.
      facet.normal.assign(n, Rational(0));
      for (int k = 0; k < d; ++k)
        for (std::size_t j = 0; j < n; ++j)
          facet.normal[j] += f.normal[k] * chart.proj[k][j];
      facet.offset = f.offset + q_dot(facet.normal, chart.origin);
    }
    for (int id : f.tight)
      if (vertex_pos[id] >= 0) facet.vertices.push_back(vertex_pos[id]);
    std::sort(facet.vertices.begin(), facet.vertices.end());
    out.facets_.push_back(std::move(facet));
  }
  return out;
}

std::vector<std::vector<QVec>> triangulate(const Polytope& p) {
  std::vector<std::vector<QVec>> simplices;
  if (p.dim() <= 0) return simplices;
  if (p.dim() == 1) {
    simplices.push_back({p.vertices()[0], p.vertices()[1]});
    return simplices;
  }
  const QVec& apex = p.vertices()[0];
  for (const Facet& f : p.facets()) {
    if (std::find(f.vertices.begin(), f.vertices.end(), 0) != f.vertices.end())
      continue;  // cone over this facet is flat
    std::vector<QVec> fpts;
    fpts.reserve(f.vertices.size());
    for (int id : f.vertices) fpts.push_back(p.vertices()[id]);
    for (auto& s : triangulate(convex_hull(fpts))) {
      s.push_back(apex);
      simplices.push_back(std::move(s));
    }
  }
  return simplices;
}

namespace {

// Determinant of the edge matrix of a simplex in local coordinates.
Rational simplex_det_local(const std::vector<QVec>& simplex,
                           const AffineChart* chart) {
  QMat m;
  const QVec base = chart ? chart->to_local(simplex[0]) : simplex[0];
  for (std::size_t i = 1; i < simplex.size(); ++i) {
    const QVec v = chart ? chart->to_local(simplex[i]) : simplex[i];
    m.push_back(q_sub(v, base));
  }
  return rational_det(m);
}

}  // namespace

Rational volume(const Polytope& p) {
  if (p.dim() < p.ambient()) return 0;
  Rational total = 0;
  for (const auto& s : triangulate(p)) total += abs(simplex_det_local(s, nullptr));
  return total / Rational(factorial(static_cast<unsigned>(p.dim())));
}

QVec centroid(const Polytope& p) {
  if (p.dim() < 0) throw ValidationError("centroid of empty polytope");
  if (p.dim() == 0) return p.vertices()[0];
  const bool full = p.is_full_dimensional();
  AffineChart chart;
  if (!full) chart = affine_hull_chart(p.vertices());
  Rational total = 0;
  QVec acc(p.ambient(), Rational(0));
  for (const auto& s : triangulate(p)) {
    const Rational w = abs(simplex_det_local(s, full ? nullptr : &chart));
    total += w;
    const Rational frac = w / Rational(static_cast<long>(s.size()));
    for (const QVec& v : s)
      for (int j = 0; j < p.ambient(); ++j) acc[j] += frac * v[j];
  }
  if (total == 0) throw ComputationError("centroid: degenerate triangulation");
  for (auto& c : acc) c /= total;
  return acc;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient() != q.ambient())
    throw ValidationError("minkowski_sum: dimension mismatch");
  std::vector<QVec> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const QVec& a : p.vertices())
    for (const QVec& b : q.vertices()) sums.push_back(q_add(a, b));
  return convex_hull(sums);
}

}  // namespace toric
