#include "toric/oracle.hpp"

#include <cmath>
#include <random>

namespace toric {

OracleCheck monte_carlo_integral_check(const RoofFunction& roof,
                                       std::size_t samples,
                                       std::uint64_t seed) {
  OracleCheck out;
  out.samples = samples;
  out.exact = roof.integrate().approx();

  const Polytope& dom = roof.domain();
  if (!dom.is_full_dimensional()) {
    out.pass = (out.exact == 0.0);
    return out;
  }
  const int n = dom.ambient();

  // Double-precision copies of the cell functions; the concave envelope is
  // the minimum of its affine pieces, which avoids point location.
  struct Piece {
    std::vector<double> g;
    double c;
  };
  std::vector<Piece> pieces;
  for (const RoofCell& cell : roof.cells()) {
    Piece p;
    p.c = cell.constant.approx();
    for (const LogValue& gj : cell.gradient) p.g.push_back(gj.approx());
    pieces.push_back(std::move(p));
  }

  std::vector<double> lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    Rational a = dom.vertices()[0][j], b = a;
    for (const QVec& v : dom.vertices()) {
      if (v[j] < a) a = v[j];
      if (v[j] > b) b = v[j];
    }
    lo[j] = a.get_d();
    hi[j] = b.get_d();
  }

  struct DFacet {
    std::vector<double> normal;
    double offset;
  };
  std::vector<DFacet> dfacets;
  for (const Facet& f : dom.facets()) {
    DFacet df;
    df.offset = f.offset.get_d();
    for (const Rational& c : f.normal) df.normal.push_back(c.get_d());
    dfacets.push_back(std::move(df));
  }

  const double vol = volume(dom).get_d();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  double sum = 0.0, sumsq = 0.0;
  std::size_t accepted = 0;
  std::vector<double> x(n);
  while (accepted < samples) {
    for (int j = 0; j < n; ++j) x[j] = lo[j] + (hi[j] - lo[j]) * unif(rng);
    bool inside = true;
    for (const DFacet& f : dfacets) {
      double s = -f.offset;
      for (int j = 0; j < n; ++j) s += f.normal[j] * x[j];
      if (s > 0.0) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    double val = std::numeric_limits<double>::infinity();
    for (const Piece& p : pieces) {
      double s = p.c;
      for (int j = 0; j < n; ++j) s += p.g[j] * x[j];
      val = std::min(val, s);
    }
    sum += val;
    sumsq += val * val;
    ++accepted;
  }

  const double mean = sum / static_cast<double>(samples);
  const double var =
      std::max(0.0, sumsq / static_cast<double>(samples) - mean * mean);
  out.estimate = vol * mean;
  out.standard_error = vol * std::sqrt(var / static_cast<double>(samples));
  // Constant roofs have zero sampling variance; only double rounding noise
  // separates the estimate from the exact value then.
  const double noise = 1e-9 * (1.0 + std::abs(out.exact));
  const double gap = std::abs(out.estimate - out.exact);
  out.zscore = (out.standard_error > 0.0)
                   ? (out.estimate - out.exact) / out.standard_error
                   : (gap <= noise ? 0.0
                                   : std::numeric_limits<double>::infinity());
  out.pass = gap <= 3.0 * out.standard_error + noise;
  return out;
}

}  // namespace toric
