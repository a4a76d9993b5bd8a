#pragma once

// Upper-envelope engine shared by the convex hull (rational heights: the
// upper/lower facets of a hull are envelopes over its shadow) and by the
// roof construction (LogValue heights). Cells are found by gift wrapping:
// starting from one facet and pivoting across ridges through the pencil of
// hyperplanes containing the ridge. Every predicate reduces to an exact
// sign, ties produce a single non-simplicial cell with its full tight set,
// and no facet is ever triangulated arbitrarily.

#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "toric/log_value.hpp"
#include "toric/polytope.hpp"

namespace toric::detail {

inline bool h_is_zero(const Rational& a) { return a == 0; }
inline bool h_is_zero(const LogValue& a) { return a.is_zero(); }
inline int h_sign(const Rational& a) { return sgn(a); }
inline int h_sign(const LogValue& a) { return a.sign(); }

template <class H>
struct AffineFn {
  std::vector<H> gradient;
  H constant{};

  H eval(const QVec& x) const {
    H r = constant;
    for (std::size_t i = 0; i < gradient.size(); ++i) r += gradient[i] * x[i];
    return r;
  }
};

// A facet of the upper hull of the lifted configuration: the set of input
// indices lying on its hyperplane, and the affine function of that
// hyperplane in base coordinates.
template <class H>
struct EnvCell {
  std::vector<int> tight;
  AffineFn<H> fn;
};

// The configuration must affinely span R^dim; duplicate base points (with
// any heights) are allowed.
template <class H>
class EnvelopeEngine {
 public:
  EnvelopeEngine(std::vector<QVec> pts, std::vector<H> hts, int dim)
      : pts_(std::move(pts)), hts_(std::move(hts)), m_(dim) {}

  std::vector<EnvCell<H>> run() const {
    std::vector<EnvCell<H>> out;
    std::set<std::vector<int>> seen;
    std::deque<EnvCell<H>> queue;
    queue.push_back(first_cell());
    while (!queue.empty()) {
      EnvCell<H> cell = std::move(queue.front());
      queue.pop_front();
      if (!seen.insert(cell.tight).second) continue;
      if (m_ > 0) {
        std::vector<QVec> cpts;
        cpts.reserve(cell.tight.size());
        for (int i : cell.tight) cpts.push_back(pts_[i]);
        const Polytope cp = convex_hull(cpts);
        for (const Facet& f : cp.facets()) {
          // Unexplored side of this ridge: <normal, x> > offset.
          auto nb = pivot(cell.fn, f.normal, -f.offset);
          if (nb && !seen.count(nb->tight)) queue.push_back(std::move(*nb));
        }
      }
      out.push_back(std::move(cell));
    }
    return out;
  }

  // One cell of the envelope, used both to seed run() and by the recursion
  // below (a cell over a boundary facet is a ridge of the level above).
  EnvCell<H> first_cell() const {
    if (m_ == 0) {
      EnvCell<H> cell;
      std::size_t best = 0;
      for (std::size_t j = 1; j < hts_.size(); ++j)
        if (h_sign(hts_[j] - hts_[best]) > 0) best = j;
      for (std::size_t i = 0; i < hts_.size(); ++i)
        if (h_is_zero(hts_[i] - hts_[best]))
          cell.tight.push_back(static_cast<int>(i));
      cell.fn.constant = hts_[best];
      return cell;
    }

    const Polytope hull = convex_hull(pts_);
    const Facet& g = hull.facets().front();

    std::vector<int> ridge_idx;
    std::vector<QVec> ridge_pts;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (q_dot(g.normal, pts_[i]) == g.offset) {
        ridge_idx.push_back(static_cast<int>(i));
        ridge_pts.push_back(pts_[i]);
      }
    }
    const AffineChart chart = affine_hull_chart(ridge_pts);

    std::vector<QVec> loc(ridge_pts.size());
    std::vector<H> loc_hts(ridge_pts.size());
    for (std::size_t j = 0; j < ridge_pts.size(); ++j) {
      loc[j] = chart.to_local(ridge_pts[j]);
      loc_hts[j] = hts_[ridge_idx[j]];
    }
    const EnvelopeEngine<H> sub(std::move(loc), std::move(loc_hts), chart.dim);
    const EnvCell<H> boundary = sub.first_cell();

    // Compose the boundary cell function with the chart projection to get an
    // affine function through the lifted ridge in this level's coordinates.
    AffineFn<H> fn0;
    fn0.gradient.assign(m_, H{});
    fn0.constant = boundary.fn.constant;
    for (int k = 0; k < chart.dim; ++k) {
      for (int j = 0; j < m_; ++j)
        fn0.gradient[j] += boundary.fn.gradient[k] * chart.proj[k][j];
      fn0.constant -=
          boundary.fn.gradient[k] * q_dot(chart.proj[k], chart.origin);
    }

    // delta(x) = offset - <normal, x> is positive strictly inside the hull.
    QVec w(m_);
    for (int j = 0; j < m_; ++j) w[j] = -g.normal[j];
    auto cell = pivot(fn0, w, g.offset);
    if (!cell) throw ComputationError("envelope: interior pivot found no cell");
    return *cell;
  }

 private:
  std::vector<QVec> pts_;
  std::vector<H> hts_;
  int m_;

  // The pencil of hyperplanes through a lifted ridge is fn0 + t * delta,
  // where fn0 passes through the ridge and delta(x) = w0 + <w, x> vanishes
  // on its projection and is positive on the unexplored side. The upper
  // facet on that side is the pencil member maximizing t over the lifted
  // points beyond the ridge; equal maximizers share one hyperplane, so the
  // resulting cell is canonical whatever the tie order.
  std::optional<EnvCell<H>> pivot(const AffineFn<H>& fn0, const QVec& w,
                                  const Rational& w0) const {
    int best = -1;
    H best_t{};
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      Rational d = w0 + q_dot(w, pts_[i]);
      if (sgn(d) <= 0) continue;
      H t = (hts_[i] - fn0.eval(pts_[i])) * (1 / d);
      if (best < 0 || h_sign(t - best_t) > 0) {
        best = static_cast<int>(i);
        best_t = std::move(t);
      }
    }
    if (best < 0) return std::nullopt;  // ridge lies over the domain boundary
    EnvCell<H> cell;
    cell.fn = fn0;
    for (int k = 0; k < m_; ++k) cell.fn.gradient[k] += best_t * w[k];
    cell.fn.constant += best_t * w0;
    for (std::size_t i = 0; i < pts_.size(); ++i)
      if (h_is_zero(cell.fn.eval(pts_[i]) - hts_[i]))
        cell.tight.push_back(static_cast<int>(i));
    return cell;
  }
};

// Cells of the upper envelope of the lifted points (pts[i], hts[i]).
template <class H>
std::vector<EnvCell<H>> upper_envelope_cells(std::vector<QVec> pts,
                                             std::vector<H> hts, int dim) {
  const EnvelopeEngine<H> engine(std::move(pts), std::move(hts), dim);
  return engine.run();
}

}  // namespace toric::detail
