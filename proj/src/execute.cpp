#include "toric/execute.hpp"

#include <sstream>

#include "toric/oracle.hpp"

namespace toric {

using nlohmann::json;

std::string logvalue_human(const LogValue& v, unsigned digits) {
  if (v.is_zero()) return "0";
  return v.symbolic() + " ≈ " + v.decimal(digits);
}

json logvalue_json(const LogValue& v, unsigned digits) {
  json coeffs = json::object();
  for (const auto& [p, c] : v.coefficients()) coeffs[p.get_str()] = c.get_str();
  return json{{"symbolic", v.symbolic()},
              {"coefficients", coeffs},
              {"decimal", v.decimal(digits)},
              {"digits", digits}};
}

namespace {

json rational_json(const Rational& q) { return rational_str(q); }

json qvec_json(const QVec& v) {
  json j = json::array();
  for (const Rational& x : v) j.push_back(rational_str(x));
  return j;
}

std::string qvec_human(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rational_str(v[i]);
  }
  return s + ")";
}

void require_single_block(const Instance& inst, const std::string& command) {
  if (inst.blocks.size() != 1)
    throw ValidationError("command '" + command +
                          "' needs exactly one block (got " +
                          std::to_string(inst.blocks.size()) + ")");
}

struct ReportBuilder {
  std::ostringstream human;
  json machine;
  int exit_code = 0;

  ReportBuilder(const std::string& command, const Instance& inst) {
    machine["command"] = command;
    machine["status"] = "ok";
    if (!inst.warnings.empty()) {
      machine["warnings"] = inst.warnings;
      for (const auto& w : inst.warnings) human << "warning: " << w << "\n";
    }
  }

  ExecutionResult finish() {
    return ExecutionResult{std::move(machine), human.str(), exit_code};
  }
};

ExecutionResult run_degree(const Instance& inst, const ExecOptions&) {
  require_single_block(inst, "degree");
  ReportBuilder rb("degree", inst);
  const Integer deg = degree(inst.toric());
  rb.human << "degree: " << deg.get_str() << "\n";
  rb.machine["degree"] = deg.get_str();
  return rb.finish();
}

ExecutionResult run_chow_weight(const Instance& inst, const ExecOptions& opts) {
  require_single_block(inst, "chow-weight");
  ReportBuilder rb("chow-weight", inst);
  const ToricInstance ti = inst.toric();
  json table = json::array();
  LogValue weighted_sum;
  for (const auto& entry : ti.weights().entries) {
    const LogValue e =
        chow_weight(ti.config(), entry.tau, ti.normalized_mode());
    weighted_sum += e * entry.multiplicity;
    rb.human << "place " << entry.place.str() << ": chow weight "
             << logvalue_human(e, opts.digits) << "\n";
    table.push_back({{"place", entry.place.str()},
                     {"multiplicity", rational_str(entry.multiplicity)},
                     {"chow_weight", logvalue_json(e, opts.digits)}});
  }
  rb.human << "weighted sum (= height): "
           << logvalue_human(weighted_sum, opts.digits) << "\n";
  rb.machine["places"] = table;
  rb.machine["weighted_sum"] = logvalue_json(weighted_sum, opts.digits);
  return rb.finish();
}

ExecutionResult run_height(const Instance& inst, const ExecOptions& opts) {
  require_single_block(inst, "height");
  ReportBuilder rb("height", inst);
  const ToricInstance ti = inst.toric();
  const Integer deg = degree(ti);
  const LogValue h = normalized_height(ti);
  rb.human << "degree: " << deg.get_str() << "\n";
  rb.human << "height: " << logvalue_human(h, opts.digits) << "\n";
  rb.machine["degree"] = deg.get_str();
  rb.machine["height"] = logvalue_json(h, opts.digits);
  return rb.finish();
}

ExecutionResult run_multiheight(const Instance& inst, const ExecOptions& opts) {
  ReportBuilder rb("multiheight", inst);
  const MultiInstance mi = inst.multi();
  const LogValue h = normalized_multiheight(mi);
  rb.human << "blocks: " << mi.blocks().size() << ", c = (";
  for (std::size_t i = 0; i < mi.index_c().size(); ++i)
    rb.human << (i ? ", " : "") << mi.index_c()[i];
  rb.human << ")\n";
  rb.human << "multiheight: " << logvalue_human(h, opts.digits) << "\n";
  rb.machine["multiheight"] = logvalue_json(h, opts.digits);
  return rb.finish();
}

ExecutionResult run_mixed_integral(const Instance& inst,
                                   const ExecOptions& opts) {
  ReportBuilder rb("mixed-integral", inst);
  const MultiInstance mi = inst.multi();
  json table = json::array();
  LogValue total;
  for (const auto& row : multiheight_table(mi)) {
    total += row.mixed_integral * row.multiplicity;
    rb.human << "place " << row.place.str() << ": MI_c = "
             << logvalue_human(row.mixed_integral, opts.digits) << "\n";
    table.push_back(
        {{"place", row.place.str()},
         {"multiplicity", rational_str(row.multiplicity)},
         {"mixed_integral", logvalue_json(row.mixed_integral, opts.digits)}});
  }
  rb.human << "weighted sum (= multiheight): "
           << logvalue_human(total, opts.digits) << "\n";
  rb.machine["places"] = table;
  rb.machine["weighted_sum"] = logvalue_json(total, opts.digits);
  return rb.finish();
}

ExecutionResult run_bezout(const Instance& inst, const ExecOptions& opts) {
  require_single_block(inst, "bezout");
  if (!inst.b)
    throw ValidationError("command 'bezout' needs the exponent vector 'b'");
  ReportBuilder rb("bezout", inst);
  const BezoutReport rep = monomial_bezout(inst.toric(), *inst.b);

  rb.human << "D = " << rep.divisor_degree << ", a = ";
  rb.human << "(";
  for (std::size_t j = 0; j < rep.exponent_point.size(); ++j)
    rb.human << (j ? ", " : "") << rep.exponent_point[j];
  rb.human << ")\n";
  if (rep.trivial) {
    rb.human << "b = 0: empty divisor, height 0\n";
  } else {
    rb.human << "height of X: " << logvalue_human(rep.base_height, opts.digits)
             << "\n";
    rb.human << "correction: " << logvalue_human(rep.correction, opts.digits)
             << "\n";
    for (const auto& row : rep.cells)
      rb.human << "  place " << row.place.str() << " cell " << row.cell_id
               << ": vol " << rational_str(row.cell_volume) << ", value at a "
               << logvalue_human(row.value_at_a, opts.digits) << ", term "
               << logvalue_human(row.bezout_value, opts.digits)
               << ", lattice index " << row.lattice_index.get_str() << "\n";
  }
  rb.human << "height of X.div(x^b): " << logvalue_human(rep.height, opts.digits)
           << "\n";
  if (rep.effective)
    rb.human << "effective divisor: inequality h(X.div) <= D*h(X) "
             << (rep.inequality_holds ? "holds" : "FAILS") << "\n";

  rb.machine["D"] = rep.divisor_degree;
  rb.machine["a"] = rep.exponent_point;
  rb.machine["trivial"] = rep.trivial;
  rb.machine["height"] = logvalue_json(rep.height, opts.digits);
  rb.machine["base_height"] = logvalue_json(rep.base_height, opts.digits);
  rb.machine["correction"] = logvalue_json(rep.correction, opts.digits);
  rb.machine["effective"] = rep.effective;
  if (rep.effective) rb.machine["inequality_holds"] = rep.inequality_holds;
  json cells = json::array();
  for (const auto& row : rep.cells)
    cells.push_back(
        {{"place", row.place.str()},
         {"cell", row.cell_id},
         {"volume", rational_json(row.cell_volume)},
         {"value_at_a", logvalue_json(row.value_at_a, opts.digits)},
         {"bezout_value", logvalue_json(row.bezout_value, opts.digits)},
         {"lattice_index", row.lattice_index.get_str()}});
  rb.machine["cells"] = cells;
  return rb.finish();
}

ExecutionResult run_envelope(const Instance& inst, const ExecOptions& opts) {
  require_single_block(inst, "envelope");
  ReportBuilder rb("envelope", inst);
  const ToricInstance ti = inst.toric();
  json places = json::array();
  for (const auto& entry : ti.weights().entries) {
    const RoofFunction roof = ti.roof(entry);
    rb.human << "place " << entry.place.str() << " (multiplicity "
             << rational_str(entry.multiplicity) << "): " << roof.cells().size()
             << " cell(s)\n";
    json jcells = json::array();
    for (std::size_t s = 0; s < roof.cells().size(); ++s) {
      const RoofCell& cell = roof.cells()[s];
      rb.human << "  cell " << s << ": support {";
      for (std::size_t k = 0; k < cell.support.size(); ++k)
        rb.human << (k ? "," : "") << cell.support[k];
      rb.human << "}, vol " << rational_str(volume(cell.cell))
               << ", theta(x) = [";
      for (std::size_t j = 0; j < cell.gradient.size(); ++j)
        rb.human << (j ? "; " : "") << cell.gradient[j].symbolic();
      rb.human << "].x + " << cell.constant.symbolic() << "\n";
      json jc;
      jc["support"] = cell.support;
      jc["volume"] = rational_json(volume(cell.cell));
      jc["vertices"] = json::array();
      for (const QVec& v : cell.cell.vertices())
        jc["vertices"].push_back(qvec_json(v));
      jc["gradient"] = json::array();
      for (const LogValue& g : cell.gradient)
        jc["gradient"].push_back(logvalue_json(g, opts.digits));
      jc["constant"] = logvalue_json(cell.constant, opts.digits);
      jcells.push_back(std::move(jc));
    }
    json on_roof = json::array();
    for (bool f : roof.on_roof()) on_roof.push_back(f);
    rb.human << "  on roof:";
    for (std::size_t i = 0; i < roof.on_roof().size(); ++i)
      rb.human << " " << (roof.on_roof()[i] ? "yes" : "no");
    rb.human << "\n";
    places.push_back({{"place", entry.place.str()},
                      {"multiplicity", rational_str(entry.multiplicity)},
                      {"cells", std::move(jcells)},
                      {"on_roof", std::move(on_roof)},
                      {"integral", logvalue_json(roof.integrate(), opts.digits)}});
  }
  if (ti.weights().entries.empty())
    rb.human << "no places (torsion data): all roofs are zero\n";
  json domain;
  domain["dimension"] = ti.hull().dim();
  domain["volume"] = rational_json(volume(ti.hull()));
  domain["vertices"] = json::array();
  for (const QVec& v : ti.hull().vertices())
    domain["vertices"].push_back(qvec_json(v));
  rb.machine["domain"] = std::move(domain);
  rb.machine["places"] = places;
  return rb.finish();
}

ExecutionResult run_check(const Instance& inst, const ExecOptions&) {
  ReportBuilder rb("check", inst);
  bool ok = true;
  json checks = json::array();
  auto note = [&](const std::string& name, bool pass, const std::string& info) {
    rb.human << (pass ? "PASS " : "FAIL ") << name;
    if (!info.empty()) rb.human << " (" << info << ")";
    rb.human << "\n";
    checks.push_back({{"name", name}, {"pass", pass}, {"info", info}});
    ok = ok && pass;
  };

  if (inst.blocks.size() > 1) {
    // Only the joint lattice is constrained for multiprojective data.
    std::vector<std::vector<ZVec>> configs;
    for (const auto& blk : inst.blocks) configs.push_back(blk.config);
    const LatticeData joint = joint_lattice_data(configs);
    note("joint lattice", joint.is_standard() || inst.options.normalized_mode,
         "rank " + std::to_string(joint.rank) + ", index " +
             joint.index.get_str());
  }

  for (std::size_t bi = 0; bi < inst.blocks.size(); ++bi) {
    const auto& blk = inst.blocks[bi];
    const std::string tag = "block " + std::to_string(bi);
    const LatticeData lat = lattice_data(blk.config);
    note(tag + ": lattice",
         lat.is_standard() || inst.options.normalized_mode ||
             inst.blocks.size() > 1,
         "rank " + std::to_string(lat.rank) + ", index " + lat.index.get_str());

    const auto pf = product_formula_check(blk.weights);
    note(tag + ": product formula",
         pf.pass || inst.options.waive_product_formula,
         pf.pass ? "exact zero sums" : "nonzero coordinate sums");

    std::vector<QVec> pts;
    for (const ZVec& p : blk.config) pts.push_back(q_from_z(p));
    const Polytope hull = convex_hull(pts);

    if (hull.is_full_dimensional()) {
      Rational nvol = volume(hull) * Rational(factorial(inst.n));
      if (inst.options.normalized_mode) nvol /= Rational(lat.index);
      note(tag + ": normalized volume is an integer", nvol.get_den() == 1,
           rational_str(nvol));
    }

    bool hull_ok = true;
    for (const QVec& p : pts) hull_ok = hull_ok && hull.contains(p);
    for (const Facet& f : hull.facets()) {
      for (const QVec& v : hull.vertices())
        hull_ok = hull_ok && (q_dot(f.normal, v) <= f.offset);
      QMat tight;
      for (int id : f.vertices)
        tight.push_back(q_sub(hull.vertices()[id], hull.vertices()[f.vertices[0]]));
      hull_ok = hull_ok && (rational_rank(tight) >= hull.dim() - 1);
    }
    note(tag + ": hull invariants", hull_ok,
         std::to_string(hull.vertices().size()) + " vertices, " +
             std::to_string(hull.facets().size()) + " facets");

    const Rational hull_vol = volume(hull);
    for (const auto& entry : blk.weights.entries) {
      const RoofFunction roof =
          upper_envelope(WeightedConfig{blk.config, entry.tau});
      Rational cell_vol_sum = 0;
      for (const RoofCell& c : roof.cells()) cell_vol_sum += volume(c.cell);
      note(tag + ": cell volumes sum, place " + entry.place.str(),
           cell_vol_sum == hull_vol,
           rational_str(cell_vol_sum) + " vs " + rational_str(hull_vol));

      bool roof_ok = true;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const LogValue val = roof.evaluate(pts[i]);
        const int cmp = LogValue::compare(val, entry.tau[i]);
        roof_ok = roof_ok && (cmp >= 0) && ((cmp == 0) == roof.on_roof()[i]);
      }
      note(tag + ": lift flags, place " + entry.place.str(), roof_ok, "");

      bool concave_ok = true;
      for (std::size_t i = 0; i < pts.size() && concave_ok; ++i) {
        for (std::size_t j = i + 1; j < pts.size() && concave_ok; ++j) {
          QVec mid = q_scale(Rational(1, 2), q_add(pts[i], pts[j]));
          const LogValue lhs = roof.evaluate(mid) * Rational(2);
          const LogValue rhs = roof.evaluate(pts[i]) + roof.evaluate(pts[j]);
          concave_ok = LogValue::compare(lhs, rhs) >= 0;
        }
      }
      note(tag + ": concavity midpoints, place " + entry.place.str(),
           concave_ok, "");

      bool continuous = true;
      try {
        roof.graph_vertices();  // throws if cells disagree on a shared vertex
      } catch (const ComputationError&) {
        continuous = false;
      }
      note(tag + ": cell continuity, place " + entry.place.str(), continuous,
           "");
    }
  }

  rb.machine["checks"] = checks;
  rb.machine["pass"] = ok;
  rb.human << (ok ? "all checks passed\n" : "CHECK FAILURES\n");
  if (!ok) {
    rb.machine["status"] = "check-failed";
    rb.exit_code = 3;
  }
  return rb.finish();
}

ExecutionResult run_oracle(const Instance& inst, const ExecOptions& opts) {
  require_single_block(inst, "oracle");
  ReportBuilder rb("oracle", inst);
  const ToricInstance ti = inst.toric();
  bool all_pass = true;
  json table = json::array();
  std::uint64_t seed = opts.seed;
  for (const auto& entry : ti.weights().entries) {
    const RoofFunction roof = ti.roof(entry);
    const OracleCheck check =
        monte_carlo_integral_check(roof, opts.samples, seed++);
    all_pass = all_pass && check.pass;
    rb.human << "place " << entry.place.str() << ": exact " << check.exact
             << ", estimate " << check.estimate << ", stderr "
             << check.standard_error << ", z " << check.zscore << " -> "
             << (check.pass ? "ok" : "DISAGREES") << "\n";
    table.push_back({{"place", entry.place.str()},
                     {"exact", check.exact},
                     {"estimate", check.estimate},
                     {"standard_error", check.standard_error},
                     {"zscore", check.zscore},
                     {"samples", check.samples},
                     {"pass", check.pass}});
  }
  if (ti.weights().entries.empty())
    rb.human << "no places (torsion data): exact integral 0, nothing to "
                "estimate\n";
  rb.human << (all_pass ? "oracle agrees\n" : "ORACLE DISAGREEMENT\n");
  rb.machine["places"] = table;
  rb.machine["pass"] = all_pass;
  if (!all_pass) {
    rb.machine["status"] = "oracle-disagreement";
    rb.exit_code = 4;
  }
  return rb.finish();
}

ExecutionResult run_minima_report(const Instance& inst,
                                  const ExecOptions& opts) {
  require_single_block(inst, "minima-report");
  ReportBuilder rb("minima-report", inst);
  const MinimaReport rep = minima_report(inst.toric(), inst.samples);
  rb.human << "degree: " << rep.deg.get_str() << "\n";
  rb.human << "height: " << logvalue_human(rep.height, opts.digits) << "\n";
  rb.human << "height/degree: "
           << logvalue_human(rep.height_over_degree, opts.digits) << "\n";
  rb.human << "reference interval for the essential minimum (display only): ["
           << logvalue_human(rep.zhang_lower, opts.digits) << ", "
           << logvalue_human(rep.zhang_upper, opts.digits) << "]\n";
  json rows = json::array();
  for (const auto& s : rep.samples) {
    rb.human << "  sample " << qvec_human(s.point) << ": height "
             << logvalue_human(s.height, opts.digits) << "\n";
    rows.push_back({{"point", qvec_json(s.point)},
                    {"height", logvalue_json(s.height, opts.digits)}});
  }
  if (rep.sample_minimum)
    rb.human << "minimum sampled height: "
             << logvalue_human(*rep.sample_minimum, opts.digits) << "\n";
  else
    rb.human << "no samples\n";
  rb.machine["degree"] = rep.deg.get_str();
  rb.machine["height"] = logvalue_json(rep.height, opts.digits);
  rb.machine["height_over_degree"] =
      logvalue_json(rep.height_over_degree, opts.digits);
  rb.machine["zhang_lower"] = logvalue_json(rep.zhang_lower, opts.digits);
  rb.machine["zhang_upper"] = logvalue_json(rep.zhang_upper, opts.digits);
  rb.machine["samples"] = rows;
  if (rep.sample_minimum)
    rb.machine["sample_minimum"] =
        logvalue_json(*rep.sample_minimum, opts.digits);
  return rb.finish();
}

}  // namespace

ExecutionResult execute(const std::string& command, const Instance& inst,
                        const ExecOptions& opts) {
  LogValue::set_precision_cap(inst.options.precision_cap_bits);
  if (command == "degree") return run_degree(inst, opts);
  if (command == "chow-weight") return run_chow_weight(inst, opts);
  if (command == "height") return run_height(inst, opts);
  if (command == "multiheight") return run_multiheight(inst, opts);
  if (command == "mixed-integral") return run_mixed_integral(inst, opts);
  if (command == "bezout") return run_bezout(inst, opts);
  if (command == "envelope") return run_envelope(inst, opts);
  if (command == "check") return run_check(inst, opts);
  if (command == "oracle") return run_oracle(inst, opts);
  if (command == "minima-report") return run_minima_report(inst, opts);
  throw ValidationError("unknown command '" + command + "'");
}

}  // namespace toric
