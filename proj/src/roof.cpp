#include "toric/roof.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "toric/envelope_core.hpp"

namespace toric {

LogValue RoofCell::value_at(const QVec& x) const {
  LogValue v = constant;
  for (std::size_t j = 0; j < gradient.size(); ++j) v += gradient[j] * x[j];
  return v;
}

LogValue RoofFunction::evaluate(const QVec& x) const {
  if (static_cast<int>(x.size()) != ambient())
    throw ValidationError("evaluate: dimension mismatch");
  if (!domain_.contains(x))
    throw ValidationError("evaluate: point outside the domain");
  for (const RoofCell& c : cells_)
    if (c.cell.contains(x)) return c.value_at(x);
  throw ComputationError("evaluate: subdivision does not cover the domain");
}

LogValue RoofFunction::evaluate_in_cell(std::size_t cell_id,
                                        const QVec& x) const {
  if (cell_id >= cells_.size()) throw ValidationError("no such cell");
  return cells_[cell_id].value_at(x);
}

LogValue RoofFunction::integrate() const {
  LogValue total;
  if (domain_.dim() < domain_.ambient()) return total;
  const unsigned n = static_cast<unsigned>(domain_.ambient());
  const Rational nfact(factorial(n));
  for (const RoofCell& c : cells_) {
    for (const auto& simplex : triangulate(c.cell)) {
      QMat edges;
      for (std::size_t i = 1; i < simplex.size(); ++i)
        edges.push_back(q_sub(simplex[i], simplex[0]));
      const Rational vol = abs(rational_det(edges)) / nfact;
      if (vol == 0) continue;
      LogValue mean;
      for (const QVec& v : simplex) mean += c.value_at(v);
      total += mean * (vol / Rational(static_cast<long>(simplex.size())));
    }
  }
  return total;
}

std::vector<std::pair<QVec, LogValue>> RoofFunction::graph_vertices() const {
  std::map<QVec, LogValue, QVecLess> best;
  for (const RoofCell& c : cells_) {
    for (const QVec& v : c.cell.vertices()) {
      const LogValue val = c.value_at(v);
      auto [it, inserted] = best.emplace(v, val);
      if (!inserted && !(it->second == val))
        throw ComputationError("roof cells disagree on a shared vertex");
    }
  }
  return {best.begin(), best.end()};
}

RoofFunction upper_envelope_points(std::vector<QVec> pts,
                                   std::vector<LogValue> weights) {
  if (pts.empty() || pts.size() != weights.size())
    throw ValidationError("upper_envelope: |points| and |weights| must match");
  const int n = static_cast<int>(pts[0].size());
  for (const QVec& p : pts)
    if (static_cast<int>(p.size()) != n)
      throw ValidationError("upper_envelope: dimension mismatch");

  Polytope domain = convex_hull(pts);
  const AffineChart chart = affine_hull_chart(pts);
  const int d = chart.dim;
  const bool full = (d == n);

  std::vector<QVec> local;
  if (full) {
    local = pts;
  } else {
    local.reserve(pts.size());
    for (const QVec& p : pts) local.push_back(chart.to_local(p));
  }

  const auto core = detail::upper_envelope_cells<LogValue>(local, weights, d);

  std::vector<RoofCell> cells;
  std::vector<bool> on_roof(pts.size(), false);
  cells.reserve(core.size());
  for (const auto& cc : core) {
    RoofCell cell;
    if (full) {
      cell.gradient = cc.fn.gradient;
      cell.constant = cc.fn.constant;
    } else {
      // Extend the local affine function along the chart projection.
      cell.gradient.assign(n, LogValue{});
      cell.constant = cc.fn.constant;
      for (int k = 0; k < d; ++k) {
        for (int j = 0; j < n; ++j)
          cell.gradient[j] += cc.fn.gradient[k] * chart.proj[k][j];
        cell.constant -= cc.fn.gradient[k] * q_dot(chart.proj[k], chart.origin);
      }
    }
    std::vector<QVec> tight_pts;
    tight_pts.reserve(cc.tight.size());
    for (int i : cc.tight) {
      tight_pts.push_back(pts[i]);
      on_roof[i] = true;
    }
    cell.cell = convex_hull(tight_pts);
    cell.support = cc.tight;
    cells.push_back(std::move(cell));
  }
  return RoofFunction(std::move(domain), std::move(cells), std::move(pts),
                      std::move(weights), std::move(on_roof));
}

RoofFunction upper_envelope(const WeightedConfig& w) {
  std::vector<QVec> pts;
  pts.reserve(w.points.size());
  for (const ZVec& p : w.points) pts.push_back(q_from_z(p));
  return upper_envelope_points(std::move(pts), w.weights);
}

RoofFunction sup_convolution(const RoofFunction& f, const RoofFunction& g) {
  if (f.ambient() != g.ambient())
    throw ValidationError("sup_convolution: dimension mismatch");
  // Summed graph vertices, keeping the highest lift over each base point.
  const auto fv = f.graph_vertices();
  const auto gv = g.graph_vertices();
  std::map<QVec, LogValue, QVecLess> best;
  for (const auto& [p, hp] : fv) {
    for (const auto& [q, hq] : gv) {
      const QVec s = q_add(p, q);
      const LogValue h = hp + hq;
      auto [it, inserted] = best.emplace(s, h);
      if (!inserted && LogValue::compare(h, it->second) > 0) it->second = h;
    }
  }
  std::vector<QVec> pts;
  std::vector<LogValue> hts;
  pts.reserve(best.size());
  hts.reserve(best.size());
  for (auto& [p, h] : best) {
    pts.push_back(p);
    hts.push_back(h);
  }
  return upper_envelope_points(std::move(pts), std::move(hts));
}

LogValue mixed_integral(const std::vector<RoofFunction>& fs) {
  if (fs.empty()) throw ValidationError("mixed_integral: no arguments");
  const int n = fs[0].ambient();
  if (static_cast<int>(fs.size()) != n + 1)
    throw ValidationError("mixed_integral: expected " + std::to_string(n + 1) +
                          " functions on ambient dimension " +
                          std::to_string(n));
  for (const auto& f : fs)
    if (f.ambient() != n)
      throw ValidationError("mixed_integral: dimension mismatch");

  const unsigned k = static_cast<unsigned>(fs.size());
  std::vector<std::optional<RoofFunction>> conv(1u << k);
  LogValue total;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    const unsigned low = mask & (mask - 1);  // mask without its lowest bit
    const unsigned bit = __builtin_ctz(mask);
    if (low == 0)
      conv[mask] = fs[bit];
    else
      conv[mask] = sup_convolution(*conv[low], fs[bit]);
    const int parity = (n + 1 - __builtin_popcount(mask)) % 2;
    LogValue piece = conv[mask]->integrate();
    if (parity) piece *= Rational(-1);
    total += piece;
  }
  return total;
}

}  // namespace toric
