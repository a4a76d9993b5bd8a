#include "toric/instance.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace toric {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

Rational parse_rational_field(const json& j, const std::string& where) {
  if (j.is_number_integer())
    return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(where, "expected a rational as string or integer");
}

long parse_long_field(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return static_cast<long>(j.get<long long>());
}

Coordinate parse_coordinate(const json& j, const std::string& where) {
  Coordinate c;
  if (j.is_string() || j.is_number_integer()) {
    c.q = parse_rational_field(j, where);
  } else if (j.is_object()) {
    if (!j.contains("q")) fail(where, "coordinate object needs field 'q'");
    c.q = parse_rational_field(j.at("q"), where + ".q");
    if (j.contains("base"))
      c.base = parse_rational_field(j.at("base"), where + ".base");
    if (j.contains("exponent"))
      c.exponent = parse_rational_field(j.at("exponent"), where + ".exponent");
  } else {
    fail(where, "coordinate must be a string or an object");
  }
  if (c.q == 0) fail(where, "zero coordinate");
  if (c.base <= 0) fail(where, "radical base must be positive");
  if (c.base == 1 || c.exponent == 0) {  // canonical rational form
    c.base = 1;
    c.exponent = 0;
  }
  return c;
}

LogValue parse_logvalue(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "tau entry must map primes to rationals");
  LogValue v;
  for (const auto& [key, val] : j.items()) {
    Integer p;
    try {
      p = Integer(key);
    } catch (const std::exception&) {
      fail(where, "bad prime key '" + key + "'");
    }
    if (!is_prime(p)) fail(where, "key '" + key + "' is not prime");
    const Rational c = parse_rational_field(val, where + "." + key);
    v += LogValue::log_prime(p, c);
  }
  return v;
}

Place parse_place(const json& j, const std::string& where) {
  if (!j.is_string() && !j.is_number_integer())
    fail(where, "place must be a prime or \"inf\"");
  if (j.is_string() && j.get<std::string>() == "inf") return Place{};
  Integer p;
  try {
    p = j.is_string() ? Integer(j.get<std::string>())
                      : Integer(static_cast<long>(j.get<long long>()));
  } catch (const std::exception&) {
    fail(where, "bad place literal");
  }
  if (!is_prime(p)) fail(where, "finite place must be prime");
  return Place{p};
}

InstanceBlock parse_block(const json& j, int n, const std::string& where,
                          std::vector<std::string>& warnings) {
  if (!j.is_object()) fail(where, "block must be an object");
  InstanceBlock block;

  if (!j.contains("A")) fail(where, "missing configuration field 'A'");
  const json& ja = j.at("A");
  if (!ja.is_array() || ja.empty()) fail(where, "'A' must be a nonempty array");
  for (std::size_t i = 0; i < ja.size(); ++i) {
    const json& jp = ja.at(i);
    if (!jp.is_array() || static_cast<int>(jp.size()) != n)
      fail(where, "point A[" + std::to_string(i) + "] must have " +
                      std::to_string(n) + " integer entries");
    ZVec p(n);
    for (int k = 0; k < n; ++k)
      p[k] = parse_long_field(jp.at(k), where + ".A[" + std::to_string(i) + "]");
    block.config.push_back(std::move(p));
  }

  const bool has_alpha = j.contains("alpha");
  const bool has_weights = j.contains("weights");
  if (has_alpha == has_weights)
    fail(where, "exactly one of 'alpha' or 'weights' is required");

  if (has_alpha) {
    const json& jal = j.at("alpha");
    if (!jal.is_array() || jal.size() != block.config.size())
      fail(where, "'alpha' must list one coordinate per point of A");
    std::vector<Coordinate> coords;
    for (std::size_t i = 0; i < jal.size(); ++i)
      coords.push_back(
          parse_coordinate(jal.at(i), where + ".alpha[" + std::to_string(i) + "]"));
    block.weights = weights_from_point(coords);
    block.alpha = std::move(coords);
  } else {
    const json& jw = j.at("weights");
    if (!jw.is_array()) fail(where, "'weights' must be an array");
    std::set<std::string> seen_places;
    for (std::size_t v = 0; v < jw.size(); ++v) {
      const std::string wv = where + ".weights[" + std::to_string(v) + "]";
      const json& je = jw.at(v);
      if (!je.is_object() || !je.contains("place") || !je.contains("tau"))
        fail(wv, "weight entries need 'place' and 'tau'");
      PlaceEntry entry;
      entry.place = parse_place(je.at("place"), wv + ".place");
      entry.multiplicity =
          je.contains("multiplicity")
              ? parse_rational_field(je.at("multiplicity"), wv + ".multiplicity")
              : Rational(1);
      if (entry.multiplicity <= 0) fail(wv, "multiplicity must be positive");
      if (!seen_places.insert(entry.place.str()).second)
        fail(wv, "duplicate place " + entry.place.str());
      const json& jt = je.at("tau");
      if (!jt.is_array() || jt.size() != block.config.size())
        fail(wv, "'tau' must list one value per point of A");
      for (std::size_t i = 0; i < jt.size(); ++i)
        entry.tau.push_back(
            parse_logvalue(jt.at(i), wv + ".tau[" + std::to_string(i) + "]"));
      if (std::all_of(entry.tau.begin(), entry.tau.end(),
                      [](const LogValue& t) { return t.is_zero(); })) {
        warnings.push_back(wv + ": trivial place dropped");
        continue;
      }
      block.weights.entries.push_back(std::move(entry));
    }
  }
  return block;
}

json logvalue_to_json(const LogValue& v) {
  json j = json::object();
  for (const auto& [p, c] : v.coefficients()) j[p.get_str()] = c.get_str();
  return j;
}

json coordinate_to_json(const Coordinate& c) {
  if (c.is_rational()) return rational_str(c.q);
  json j;
  j["q"] = rational_str(c.q);
  j["base"] = rational_str(c.base);
  j["exponent"] = rational_str(c.exponent);
  return j;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("instance parse error: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("instance must be a JSON object");

  Instance inst;
  if (!j.contains("version") || !j.at("version").is_string() ||
      j.at("version").get<std::string>() != "1")
    throw ValidationError("instance: missing or unsupported version (want \"1\")");

  if (!j.contains("n")) throw ValidationError("instance: missing dimension 'n'");
  inst.n = static_cast<int>(parse_long_field(j.at("n"), "n"));
  if (inst.n < 1) throw ValidationError("instance: n must be at least 1");

  if (j.contains("options")) {
    const json& jo = j.at("options");
    if (!jo.is_object()) throw ValidationError("options must be an object");
    if (jo.contains("normalized_mode"))
      inst.options.normalized_mode = jo.at("normalized_mode").get<bool>();
    if (jo.contains("waive_product_formula"))
      inst.options.waive_product_formula =
          jo.at("waive_product_formula").get<bool>();
    if (jo.contains("precision_cap_bits")) {
      const long bits = parse_long_field(jo.at("precision_cap_bits"),
                                         "options.precision_cap_bits");
      if (bits < 64)
        throw ValidationError("precision_cap_bits must be at least 64");
      inst.options.precision_cap_bits = static_cast<unsigned>(bits);
    }
  }

  if (!j.contains("blocks") || !j.at("blocks").is_array() ||
      j.at("blocks").empty())
    throw ValidationError("instance: at least one block is required");
  for (std::size_t i = 0; i < j.at("blocks").size(); ++i)
    inst.blocks.push_back(parse_block(j.at("blocks").at(i), inst.n,
                                      "blocks[" + std::to_string(i) + "]",
                                      inst.warnings));

  if (j.contains("b")) {
    const json& jb = j.at("b");
    if (!jb.is_array() || jb.size() != inst.blocks[0].config.size())
      throw ValidationError(
          "'b' must list one integer per point of the first block");
    ZVec b(jb.size());
    for (std::size_t i = 0; i < jb.size(); ++i)
      b[i] = parse_long_field(jb.at(i), "b[" + std::to_string(i) + "]");
    inst.b = std::move(b);
  }

  if (j.contains("c")) {
    const json& jc = j.at("c");
    if (!jc.is_array() || jc.size() != inst.blocks.size())
      throw ValidationError("'c' must list one integer per block");
    std::vector<long> c(jc.size());
    long sum = 0;
    for (std::size_t i = 0; i < jc.size(); ++i) {
      c[i] = parse_long_field(jc.at(i), "c[" + std::to_string(i) + "]");
      const long ni = static_cast<long>(inst.blocks[i].config.size()) - 1;
      if (c[i] < 0 || c[i] > ni)
        throw ValidationError("c[" + std::to_string(i) + "] must lie in [0, " +
                              std::to_string(ni) + "]");
      sum += c[i];
    }
    if (sum != inst.n + 1)
      throw ValidationError("entries of 'c' must sum to n+1 = " +
                            std::to_string(inst.n + 1));
    inst.c = std::move(c);
  }

  if (j.contains("samples")) {
    const json& js = j.at("samples");
    if (!js.is_array()) throw ValidationError("'samples' must be an array");
    for (std::size_t i = 0; i < js.size(); ++i) {
      const json& jt = js.at(i);
      const std::string where = "samples[" + std::to_string(i) + "]";
      if (!jt.is_array() || static_cast<int>(jt.size()) != inst.n)
        throw ValidationError(where + " must have n entries");
      QVec t(inst.n);
      for (int k = 0; k < inst.n; ++k) {
        t[k] = parse_rational_field(jt.at(k), where);
        if (t[k] == 0) throw ValidationError(where + ": zero entry");
      }
      inst.samples.push_back(std::move(t));
    }
  }

  // Eager module invariants: lattice hypotheses and the product formula.
  if (inst.blocks.size() == 1) {
    const LatticeData lat = lattice_data(inst.blocks[0].config);
    if (!lat.is_standard() && !inst.options.normalized_mode)
      throw ValidationError(
          "difference lattice is not Z^n (rank " + std::to_string(lat.rank) +
          ", index " + lat.index.get_str() +
          "); enable normalized_mode to proceed");
  } else {
    std::vector<std::vector<ZVec>> configs;
    for (const auto& blk : inst.blocks) configs.push_back(blk.config);
    const LatticeData lat = joint_lattice_data(configs);
    if (!lat.is_standard() && !inst.options.normalized_mode)
      throw ValidationError(
          "joint difference lattice is not Z^n (rank " +
          std::to_string(lat.rank) + ", index " + lat.index.get_str() +
          "); enable normalized_mode to proceed");
  }

  for (std::size_t i = 0; i < inst.blocks.size(); ++i) {
    const auto& blk = inst.blocks[i];
    const auto pf = product_formula_check(blk.weights);
    if (pf.pass) continue;
    if (blk.alpha.has_value())
      throw ComputationError("derived weights violate the product formula");
    if (!inst.options.waive_product_formula)
      throw ValidationError("blocks[" + std::to_string(i) +
                            "]: supplied weights violate the product formula; "
                            "set waive_product_formula to proceed");
    inst.warnings.push_back("blocks[" + std::to_string(i) +
                            "]: product formula fails (waived); heights are "
                            "not guaranteed nonnegative");
  }

  return inst;
}

std::string render_instance(const Instance& inst) {
  json j;
  j["version"] = "1";
  j["n"] = inst.n;
  j["blocks"] = json::array();
  for (const auto& blk : inst.blocks) {
    json jb;
    jb["A"] = json::array();
    for (const ZVec& p : blk.config) jb["A"].push_back(p);
    if (blk.alpha) {
      jb["alpha"] = json::array();
      for (const Coordinate& c : *blk.alpha)
        jb["alpha"].push_back(coordinate_to_json(c));
    } else {
      jb["weights"] = json::array();
      for (const PlaceEntry& e : blk.weights.entries) {
        json je;
        je["place"] = e.place.str();
        je["multiplicity"] = rational_str(e.multiplicity);
        je["tau"] = json::array();
        for (const LogValue& t : e.tau) je["tau"].push_back(logvalue_to_json(t));
        jb["weights"].push_back(std::move(je));
      }
    }
    j["blocks"].push_back(std::move(jb));
  }
  if (inst.b) j["b"] = *inst.b;
  if (inst.c) j["c"] = *inst.c;
  if (!inst.samples.empty()) {
    j["samples"] = json::array();
    for (const QVec& t : inst.samples) {
      json jt = json::array();
      for (const Rational& x : t) jt.push_back(rational_str(x));
      j["samples"].push_back(std::move(jt));
    }
  }
  j["options"] = {{"normalized_mode", inst.options.normalized_mode},
                  {"waive_product_formula", inst.options.waive_product_formula},
                  {"precision_cap_bits", inst.options.precision_cap_bits}};
  return j.dump(2);
}

ToricInstance Instance::toric(std::size_t block) const {
  if (block >= blocks.size()) throw ValidationError("no such block");
  return ToricInstance(blocks[block].config, blocks[block].weights,
                       options.normalized_mode,
                       options.waive_product_formula);
}

MultiInstance Instance::multi() const {
  if (!c)
    throw ValidationError(
        "this command needs the multiprojective index vector 'c'");
  std::vector<ToricInstance> parts;
  for (const auto& blk : blocks) {
    // Block lattices need not individually be Z^n, only the joint lattice
    // (validated at parse time), so the per-block gate is bypassed here.
    parts.emplace_back(blk.config, blk.weights, true,
                       options.waive_product_formula);
  }
  return MultiInstance(std::move(parts), *c, options.normalized_mode);
}

}  // namespace toric
