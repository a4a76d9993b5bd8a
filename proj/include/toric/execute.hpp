#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

#include "toric/instance.hpp"

namespace toric {

struct ExecOptions {
  unsigned digits = 10;
  std::uint64_t seed = 12345;
  std::size_t samples = 100000;
};

struct ExecutionResult {
  nlohmann::json machine;
  std::string human;
  int exit_code = 0;
};

// Dispatches one of: degree, chow-weight, height, multiheight,
// mixed-integral, bezout, envelope, check, oracle, minima-report.
ExecutionResult execute(const std::string& command, const Instance& inst,
                        const ExecOptions& opts = {});

// "2*log(2) = 1.3862943611" rendering used across reports.
std::string logvalue_human(const LogValue& v, unsigned digits);
nlohmann::json logvalue_json(const LogValue& v, unsigned digits);

}  // namespace toric
