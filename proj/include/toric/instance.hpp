#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/invariants.hpp"
#include "toric/places.hpp"

namespace toric {

struct InstanceOptions {
  bool normalized_mode = false;
  bool waive_product_formula = false;
  unsigned precision_cap_bits = 16384;

  bool operator==(const InstanceOptions&) const = default;
};

struct InstanceBlock {
  std::vector<ZVec> config;
  // Exactly one source: coordinates (weights derived) or explicit weights.
  std::optional<std::vector<Coordinate>> alpha;
  PlaceWeights weights;
};

// A parsed and validated problem instance: one or more blocks, optional
// monomial exponent vector b, optional multiprojective index c, optional
// torus sample points.
struct Instance {
  int n = 0;
  std::vector<InstanceBlock> blocks;
  std::optional<ZVec> b;
  std::optional<std::vector<long>> c;
  std::vector<QVec> samples;
  InstanceOptions options;
  std::vector<std::string> warnings;

  ToricInstance toric(std::size_t block = 0) const;
  MultiInstance multi() const;
};

Instance parse_instance(const std::string& text);
std::string render_instance(const Instance& inst);

}  // namespace toric
