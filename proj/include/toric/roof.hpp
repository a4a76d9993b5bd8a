#pragma once

#include <utility>
#include <vector>

#include "toric/log_value.hpp"
#include "toric/polytope.hpp"

namespace toric {

// A lattice configuration together with one weight per point.
struct WeightedConfig {
  std::vector<ZVec> points;
  std::vector<LogValue> weights;
};

// One cell of the coherent subdivision induced by the upper envelope, with
// the affine function x -> <gradient, x> + constant of its lifted facet.
struct RoofCell {
  Polytope cell;
  std::vector<LogValue> gradient;
  LogValue constant;
  std::vector<int> support;  // configuration indices lifted onto this facet

  LogValue value_at(const QVec& x) const;
};

// The concave piecewise-affine parametrization of the upper envelope of a
// lifted configuration. Immutable after construction; cells cover the
// domain and agree on shared faces.
class RoofFunction {
 public:
  RoofFunction(Polytope domain, std::vector<RoofCell> cells,
               std::vector<QVec> points, std::vector<LogValue> weights,
               std::vector<bool> on_roof)
      : domain_(std::move(domain)),
        cells_(std::move(cells)),
        points_(std::move(points)),
        weights_(std::move(weights)),
        on_roof_(std::move(on_roof)) {}

  int ambient() const { return domain_.ambient(); }
  const Polytope& domain() const { return domain_; }
  const std::vector<RoofCell>& cells() const { return cells_; }
  const std::vector<QVec>& points() const { return points_; }
  const std::vector<LogValue>& weights() const { return weights_; }
  const std::vector<bool>& on_roof() const { return on_roof_; }

  // Value at x in the domain (errors outside it).
  LogValue evaluate(const QVec& x) const;

  // The cell's affine function extended to all of R^n.
  LogValue evaluate_in_cell(std::size_t cell_id, const QVec& x) const;

  // Exact integral over the domain with respect to Lebesgue measure of the
  // ambient space; zero when the domain is lower-dimensional.
  LogValue integrate() const;

  // Vertices of the subdivision with their envelope values.
  std::vector<std::pair<QVec, LogValue>> graph_vertices() const;

 private:
  Polytope domain_;
  std::vector<RoofCell> cells_;
  std::vector<QVec> points_;
  std::vector<LogValue> weights_;
  std::vector<bool> on_roof_;
};

RoofFunction upper_envelope(const WeightedConfig& w);
RoofFunction upper_envelope_points(std::vector<QVec> pts,
                                   std::vector<LogValue> weights);

// (f [+] g)(x) = max{ f(y) + g(z) : y + z = x } on the Minkowski sum of the
// domains, computed as the envelope of summed subdivision vertices.
RoofFunction sup_convolution(const RoofFunction& f, const RoofFunction& g);

// Inclusion-exclusion multilinearization of the integral over the
// sup-convolution semigroup; takes exactly ambient()+1 functions.
LogValue mixed_integral(const std::vector<RoofFunction>& fs);

}  // namespace toric
