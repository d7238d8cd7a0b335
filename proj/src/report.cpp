#include "triplet/report.hpp"

namespace triplet {

bool VerificationReport::all_passed() const {
  for (const CheckRecord& c : checks)
    if (c.status != "pass") return false;
  return true;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["version"] = kVersion;
  out["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : checks) {
    nlohmann::ordered_json rec;
    rec["checkName"] = c.check_name;
    rec["parameters"] = c.parameters;
    rec["status"] = c.status;
    rec["data"] = c.data;
    out["checks"].push_back(rec);
  }
  return out;
}

std::string VerificationReport::to_text() const { return to_json().dump(2) + "\n"; }

CheckRecord make_record(const std::string& name, const std::string& parameters,
                        bool passed, nlohmann::ordered_json data) {
  return {name, parameters, passed ? "pass" : "fail", std::move(data)};
}

nlohmann::ordered_json census_to_json(const ClassificationCensus& census) {
  nlohmann::ordered_json out;
  out["censusKind"] = census.census_kind;
  out["p"] = census.p;
  out["domainSize"] = census.domain_size;
  out["solutionCount"] = census.solutions.size();
  std::map<std::string, int> family_counts;
  for (const CensusSolution& s : census.solutions) ++family_counts[s.family];
  nlohmann::ordered_json fc = nlohmann::ordered_json::object();
  for (const auto& [family, count] : family_counts) fc[family] = count;
  out["familyCounts"] = fc;
  nlohmann::ordered_json unmatched = nlohmann::ordered_json::array();
  for (const CensusSolution* s : census.unmatched()) unmatched.push_back(s->tuple);
  out["unmatched"] = unmatched;
  return out;
}

std::string render_word(const GroupWord& w) { return w.to_string(); }

}  // namespace triplet
