#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "triplet/analysis.hpp"

// Structured verification records and their JSON serialization. Reports are
// deterministic: field order is fixed and no timestamps are embedded.

namespace triplet {

inline constexpr const char* kVersion = "0.1.0";

struct CheckRecord {
  std::string check_name;
  std::string parameters;
  std::string status;  // "pass" | "fail" | "error"
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool all_passed() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

CheckRecord make_record(const std::string& name, const std::string& parameters,
                        bool passed,
                        nlohmann::ordered_json data = nlohmann::ordered_json::object());

nlohmann::ordered_json census_to_json(const ClassificationCensus& census);

std::string render_word(const GroupWord& w);

}  // namespace triplet
