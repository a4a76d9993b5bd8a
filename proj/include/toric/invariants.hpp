#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/places.hpp"
#include "toric/polytope.hpp"
#include "toric/roof.hpp"

namespace toric {

// One projective toric variety: a configuration of N+1 lattice points in
// Z^n together with per-place weights. The standing hypothesis L_A = Z^n is
// enforced unless normalized mode is requested, in which case volumes are
// taken with respect to the difference lattice.
class ToricInstance {
 public:
  ToricInstance(std::vector<ZVec> config, PlaceWeights weights,
                bool normalized_mode = false, bool waive_product_formula = false);

  int dimension() const { return n_; }
  const std::vector<ZVec>& config() const { return config_; }
  const PlaceWeights& weights() const { return weights_; }
  const LatticeData& lattice() const { return lattice_; }
  const Polytope& hull() const { return hull_; }
  bool normalized_mode() const { return normalized_mode_; }
  bool product_formula_waived() const { return waive_pf_; }

  // Roof of this configuration at one place.
  RoofFunction roof(const PlaceEntry& entry) const;

 private:
  std::vector<ZVec> config_;
  PlaceWeights weights_;
  LatticeData lattice_;
  Polytope hull_;
  int n_ = 0;
  bool normalized_mode_ = false;
  bool waive_pf_ = false;
};

// Multiprojective data: blocks in a common dimension with an index vector c
// summing to n+1 and 0 <= c_i <= N_i; the joint difference lattice must be
// Z^n (or normalized mode divides by its index).
class MultiInstance {
 public:
  MultiInstance(std::vector<ToricInstance> blocks, std::vector<long> index_c,
                bool normalized_mode = false);

  const std::vector<ToricInstance>& blocks() const { return blocks_; }
  const std::vector<long>& index_c() const { return index_c_; }
  int dimension() const { return n_; }
  const LatticeData& joint_lattice() const { return joint_; }
  bool normalized_mode() const { return normalized_mode_; }

 private:
  std::vector<ToricInstance> blocks_;
  std::vector<long> index_c_;
  LatticeData joint_;
  int n_ = 0;
  bool normalized_mode_ = false;
};

// Kushnirenko degree n! Vol(Q_A), an exact positive integer.
Integer degree(const ToricInstance& inst);

// Chow weight (n+1)! * integral of the roof of (A, tau).
LogValue chow_weight(const std::vector<ZVec>& config,
                     const std::vector<LogValue>& tau,
                     bool normalized_mode = false);

// Normalized height: sum over places of lambda_v times the Chow weight of
// the per-place roof. Requires the product formula unless waived.
LogValue normalized_height(const ToricInstance& inst);

// Per-place mixed integrals MI_c of the block roofs (the summands of the
// multiheight).
struct MultiheightPlaceRow {
  Place place;
  Rational multiplicity;
  LogValue mixed_integral;
};

std::vector<MultiheightPlaceRow> multiheight_table(const MultiInstance& inst);

// Normalized multiheight of index c via per-place mixed integrals.
LogValue normalized_multiheight(const MultiInstance& inst);

struct BezoutCellRow {
  Place place;
  std::size_t cell_id = 0;
  Rational cell_volume;
  LogValue value_at_a;    // cell function extended to R^n, evaluated at a
  LogValue bezout_value;  // sum_j b_j * (cell function at a_j): enters the sum
  Integer lattice_index;  // [L_{A cap S} : L_A], diagnostic only
};

struct BezoutReport {
  LogValue height;        // h(X . div(x^b))
  LogValue base_height;   // h(X)
  LogValue correction;    // n! sum_v lambda_v sum_S sum_j b_j theta_S(a_j) Vol(S)
  long divisor_degree = 0;  // D = sum_j b_j
  ZVec exponent_point;      // a = sum_j b_j a_j
  std::vector<BezoutCellRow> cells;
  bool effective = false;         // b componentwise nonnegative, b != 0
  bool inequality_holds = false;  // height <= D * base_height (effective case)
  bool trivial = false;           // b = 0: empty divisor, height 0
};

BezoutReport monomial_bezout(const ToricInstance& inst, const ZVec& b);

// Weil height of the orbit point t *_A alpha for a rational torus point t.
LogValue orbit_point_height(const ToricInstance& inst, const QVec& t);

struct MinimaSample {
  QVec point;
  LogValue height;
};

struct MinimaReport {
  Integer deg;
  LogValue height;
  LogValue height_over_degree;
  std::vector<MinimaSample> samples;
  std::optional<LogValue> sample_minimum;
  // Display-only reference interval for the essential minimum from the
  // successive-minima inequalities: [height/((n+1) deg), height/deg].
  LogValue zhang_lower;
  LogValue zhang_upper;
};

MinimaReport minima_report(const ToricInstance& inst,
                           const std::vector<QVec>& samples);

}  // namespace toric
