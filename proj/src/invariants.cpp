#include "toric/invariants.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

std::string lattice_error(const LatticeData& lat) {
  return "difference lattice is not Z^n (rank " + std::to_string(lat.rank) +
         " of " + std::to_string(lat.ambient) + ", index " +
         lat.index.get_str() +
         "); pass normalized mode to divide volumes by the index";
}

void require_full_dimensional(const Polytope& hull) {
  if (!hull.is_full_dimensional())
    throw ValidationError("Q_A is not full-dimensional (dimension " +
                          std::to_string(hull.dim()) + " in R^" +
                          std::to_string(hull.ambient()) + ")");
}

std::vector<QVec> to_qvecs(const std::vector<ZVec>& config) {
  std::vector<QVec> pts;
  pts.reserve(config.size());
  for (const ZVec& p : config) pts.push_back(q_from_z(p));
  return pts;
}

}  // namespace

ToricInstance::ToricInstance(std::vector<ZVec> config, PlaceWeights weights,
                             bool normalized_mode, bool waive_product_formula)
    : config_(std::move(config)),
      weights_(std::move(weights)),
      normalized_mode_(normalized_mode),
      waive_pf_(waive_product_formula) {
  if (config_.empty()) throw ValidationError("empty configuration");
  n_ = static_cast<int>(config_[0].size());
  for (const ZVec& p : config_)
    if (static_cast<int>(p.size()) != n_)
      throw ValidationError("configuration points of unequal dimension");
  if (!weights_.entries.empty() &&
      weights_.coordinate_count() != config_.size())
    throw ValidationError("weights and configuration sizes differ");
  lattice_ = lattice_data(config_);
  if (!lattice_.is_standard() && !normalized_mode_)
    throw ValidationError(lattice_error(lattice_));
  hull_ = convex_hull(to_qvecs(config_));
}

RoofFunction ToricInstance::roof(const PlaceEntry& entry) const {
  return upper_envelope(WeightedConfig{config_, entry.tau});
}

MultiInstance::MultiInstance(std::vector<ToricInstance> blocks,
                             std::vector<long> index_c, bool normalized_mode)
    : blocks_(std::move(blocks)),
      index_c_(std::move(index_c)),
      normalized_mode_(normalized_mode) {
  if (blocks_.empty()) throw ValidationError("multi-instance without blocks");
  n_ = blocks_[0].dimension();
  for (const auto& b : blocks_)
    if (b.dimension() != n_)
      throw ValidationError("blocks live in different ambient dimensions");
  if (index_c_.size() != blocks_.size())
    throw ValidationError("index vector c must list one entry per block");
  long sum = 0;
  for (std::size_t i = 0; i < index_c_.size(); ++i) {
    const long ci = index_c_[i];
    const long ni = static_cast<long>(blocks_[i].config().size()) - 1;
    if (ci < 0 || ci > ni)
      throw ValidationError("index c_" + std::to_string(i) +
                            " must lie in [0, N_" + std::to_string(i) + " = " +
                            std::to_string(ni) + "]");
    sum += ci;
  }
  if (sum != n_ + 1)
    throw ValidationError("index vector c must sum to n+1 = " +
                          std::to_string(n_ + 1));
  std::vector<std::vector<ZVec>> configs;
  configs.reserve(blocks_.size());
  for (const auto& b : blocks_) configs.push_back(b.config());
  joint_ = joint_lattice_data(configs);
  if (!joint_.is_standard() && !normalized_mode_)
    throw ValidationError("joint " + lattice_error(joint_));
}

Integer degree(const ToricInstance& inst) {
  require_full_dimensional(inst.hull());
  Rational v = volume(inst.hull()) * Rational(factorial(inst.dimension()));
  if (inst.normalized_mode()) v /= Rational(inst.lattice().index);
  if (v.get_den() != 1)
    throw ComputationError("normalized volume is not an integer");
  return v.get_num();
}

LogValue chow_weight(const std::vector<ZVec>& config,
                     const std::vector<LogValue>& tau, bool normalized_mode) {
  const LatticeData lat = lattice_data(config);
  if (!lat.is_standard() && !normalized_mode)
    throw ValidationError(lattice_error(lat));
  const RoofFunction roof = upper_envelope(WeightedConfig{config, tau});
  require_full_dimensional(roof.domain());
  const unsigned n = static_cast<unsigned>(roof.ambient());
  LogValue value = roof.integrate() * Rational(factorial(n + 1));
  if (normalized_mode) value *= Rational(1) / Rational(lat.index);
  return value;
}

namespace {

void gate_product_formula(const ToricInstance& inst) {
  if (inst.product_formula_waived()) return;
  const auto report = product_formula_check(inst.weights());
  if (!report.pass)
    throw ValidationError(
        "supplied weights violate the product formula; waive the check to "
        "proceed");
}

}  // namespace

LogValue normalized_height(const ToricInstance& inst) {
  require_full_dimensional(inst.hull());
  gate_product_formula(inst);
  LogValue h;
  for (const auto& entry : inst.weights().entries)
    h += chow_weight(inst.config(), entry.tau, inst.normalized_mode()) *
         entry.multiplicity;
  return h;
}

std::vector<MultiheightPlaceRow> multiheight_table(const MultiInstance& inst) {
  const int n = inst.dimension();
  for (const auto& block : inst.blocks()) gate_product_formula(block);

  // Union of places over the blocks; multiplicities must agree where shared.
  std::vector<Place> places;
  std::vector<Rational> lambdas;
  for (const auto& block : inst.blocks()) {
    for (const auto& entry : block.weights().entries) {
      auto it = std::find(places.begin(), places.end(), entry.place);
      if (it == places.end()) {
        places.push_back(entry.place);
        lambdas.push_back(entry.multiplicity);
      } else if (!(lambdas[it - places.begin()] == entry.multiplicity)) {
        throw ValidationError("place " + entry.place.str() +
                              " has conflicting multiplicities across blocks");
      }
    }
  }

  std::vector<MultiheightPlaceRow> table;
  for (std::size_t v = 0; v < places.size(); ++v) {
    std::vector<RoofFunction> roofs;
    roofs.reserve(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < inst.blocks().size(); ++i) {
      if (inst.index_c()[i] == 0) continue;
      const auto& block = inst.blocks()[i];
      const auto& entries = block.weights().entries;
      auto it = std::find_if(entries.begin(), entries.end(),
                             [&](const PlaceEntry& e) {
                               return e.place == places[v];
                             });
      std::vector<LogValue> tau(block.config().size());
      if (it != entries.end()) tau = it->tau;
      RoofFunction roof = upper_envelope(WeightedConfig{block.config(), tau});
      for (long rep = 0; rep < inst.index_c()[i]; ++rep) roofs.push_back(roof);
    }
    LogValue mi = mixed_integral(roofs);
    if (inst.normalized_mode())
      mi *= Rational(1) / Rational(inst.joint_lattice().index);
    table.push_back({places[v], lambdas[v], std::move(mi)});
  }
  return table;
}

LogValue normalized_multiheight(const MultiInstance& inst) {
  LogValue total;
  for (const auto& row : multiheight_table(inst))
    total += row.mixed_integral * row.multiplicity;
  return total;
}

BezoutReport monomial_bezout(const ToricInstance& inst, const ZVec& b) {
  if (b.size() != inst.config().size())
    throw ValidationError("exponent vector b must have one entry per point");
  require_full_dimensional(inst.hull());

  BezoutReport report;
  report.exponent_point.assign(inst.dimension(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    report.divisor_degree += b[i];
    for (int j = 0; j < inst.dimension(); ++j)
      report.exponent_point[j] += b[i] * inst.config()[i][j];
  }
  report.effective =
      std::all_of(b.begin(), b.end(), [](long x) { return x >= 0; }) &&
      std::any_of(b.begin(), b.end(), [](long x) { return x != 0; });

  if (std::all_of(b.begin(), b.end(), [](long x) { return x == 0; })) {
    // div(x^0) is the empty divisor; the intersection formula does not
    // apply and the height of the empty cycle is zero.
    report.trivial = true;
    report.base_height = normalized_height(inst);
    return report;
  }

  report.base_height = normalized_height(inst);
  const QVec a = q_from_z(report.exponent_point);
  Rational scale(factorial(inst.dimension()));
  if (inst.normalized_mode()) scale /= Rational(inst.lattice().index);

  for (const auto& entry : inst.weights().entries) {
    const RoofFunction roof = inst.roof(entry);
    LogValue place_sum;
    for (std::size_t s = 0; s < roof.cells().size(); ++s) {
      const RoofCell& cell = roof.cells()[s];
      BezoutCellRow row;
      row.place = entry.place;
      row.cell_id = s;
      row.cell_volume = volume(cell.cell);
      row.value_at_a = roof.evaluate_in_cell(s, a);
      // The term entering the intersection sum is linear in b, matching the
      // additivity of div(x^b) in its exponents; it agrees with the cell
      // function at a whenever the b_j sum to one.
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        row.bezout_value +=
            roof.evaluate_in_cell(s, q_from_z(inst.config()[j])) *
            Rational(b[j]);
      }
      // A cap S: all configuration points lying in the cell.
      std::vector<ZVec> cell_config;
      for (std::size_t i = 0; i < inst.config().size(); ++i)
        if (cell.cell.contains(q_from_z(inst.config()[i])))
          cell_config.push_back(inst.config()[i]);
      const LatticeData cell_lat = lattice_data(cell_config);
      // [L_{A cap S} : L_A]: both lattices are full rank here.
      row.lattice_index = cell_lat.index / inst.lattice().index;
      place_sum += row.bezout_value * row.cell_volume;
      report.cells.push_back(std::move(row));
    }
    report.correction += place_sum * (entry.multiplicity * scale);
  }

  report.height = report.base_height * Rational(report.divisor_degree);
  report.height -= report.correction;
  if (report.effective)
    report.inequality_holds = (report.correction.sign() >= 0);
  return report;
}

LogValue orbit_point_height(const ToricInstance& inst, const QVec& t) {
  if (static_cast<int>(t.size()) != inst.dimension())
    throw ValidationError("torus point of wrong dimension");
  for (const Rational& x : t)
    if (x == 0) throw ValidationError("zero entry in torus point");

  // Union of the instance's places and the places where t has content.
  std::vector<Place> places;
  std::vector<Rational> lambdas;
  std::vector<std::vector<LogValue>> taus;     // instance weights per place
  std::vector<std::vector<LogValue>> sigmas;   // log-vectors of t per place
  const std::size_t npts = inst.config().size();
  const std::size_t dim = static_cast<std::size_t>(inst.dimension());

  for (const auto& entry : inst.weights().entries) {
    places.push_back(entry.place);
    lambdas.push_back(entry.multiplicity);
    taus.push_back(entry.tau);
    sigmas.emplace_back(dim);
  }
  for (auto& [place, sigma] : log_vectors_of_point(t)) {
    auto it = std::find(places.begin(), places.end(), place);
    if (it == places.end()) {
      places.push_back(place);
      lambdas.push_back(1);
      taus.emplace_back(npts);
      sigmas.push_back(std::move(sigma));
    } else {
      sigmas[it - places.begin()] = std::move(sigma);
    }
  }

  LogValue height;
  for (std::size_t v = 0; v < places.size(); ++v) {
    LogValue best;
    bool have = false;
    for (std::size_t i = 0; i < npts; ++i) {
      LogValue val = taus[v][i];
      for (std::size_t j = 0; j < dim; ++j)
        val += sigmas[v][j] * Rational(inst.config()[i][j]);
      if (!have || LogValue::compare(val, best) > 0) {
        best = std::move(val);
        have = true;
      }
    }
    height += best * lambdas[v];
  }
  return height;
}

MinimaReport minima_report(const ToricInstance& inst,
                           const std::vector<QVec>& samples) {
  MinimaReport report;
  report.deg = degree(inst);
  report.height = normalized_height(inst);
  const Rational inv_deg = Rational(1) / Rational(report.deg);
  report.height_over_degree = report.height * inv_deg;
  report.zhang_upper = report.height_over_degree;
  report.zhang_lower =
      report.height_over_degree * Rational(1, inst.dimension() + 1);
  for (const QVec& t : samples) {
    MinimaSample row{t, orbit_point_height(inst, t)};
    if (!report.sample_minimum ||
        LogValue::compare(row.height, *report.sample_minimum) < 0)
      report.sample_minimum = row.height;
    report.samples.push_back(std::move(row));
  }
  return report;
}

}  // namespace toric
