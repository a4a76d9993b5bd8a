#pragma once

#include <cstdint>

#include "toric/roof.hpp"

namespace toric {

// Monte-Carlo cross-check of an exact roof integral: uniform samples over
// the domain (rejection from the bounding box), estimate compared to the
// exact value at three standard errors.
struct OracleCheck {
  double exact = 0.0;
  double estimate = 0.0;
  double standard_error = 0.0;
  double zscore = 0.0;
  std::size_t samples = 0;
  bool pass = true;
};

OracleCheck monte_carlo_integral_check(const RoofFunction& roof,
                                       std::size_t samples, std::uint64_t seed);

}  // namespace toric
