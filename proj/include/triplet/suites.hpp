#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triplet/report.hpp"

// Named verification suites composing the analysis operations. Check order
// within a suite is fixed, so two runs with the same spec produce identical
// report bodies.

namespace triplet {

struct SuiteSpec {
  std::string suite = "all";
  std::optional<int> n_lo;
  std::optional<int> n_hi;
  std::vector<std::uint32_t> primes = {5, 7};
  int depth = 8;
  int cap = 10000;
};

bool suite_name_valid(const std::string& name);

VerificationReport run_suite(const SuiteSpec& spec);

}  // namespace triplet
