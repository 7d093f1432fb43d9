#include "qbundle/report.hpp"

#include <algorithm>

namespace qbundle {

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j{{"check", check}, {"instance", instance}, {"degree", degree}, {"status", passed ? "pass" : "fail"}};
  if (witness) j["witness"] = *witness;
  if (!details.empty()) j["details"] = details;
  return j;
}

std::string CheckReport::summary() const {
  std::string s = std::string(passed ? "PASS " : "FAIL ") + check + "[" + instance + "] d=" + std::to_string(degree);
  if (witness) s += ": " + *witness;
  return s;
}

CheckReport make_report(std::string check, std::string instance, int degree, bool passed,
                        std::optional<std::string> witness, nlohmann::json details) {
  return CheckReport{std::move(check), std::move(instance), degree, passed, std::move(witness), std::move(details)};
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

const CheckReport* first_failure(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return &r;
  return nullptr;
}

nlohmann::json to_json(const std::vector<CheckReport>& reports) {
  auto j = nlohmann::json::array();
  for (const auto& r : reports) j.push_back(r.to_json());
  return j;
}

}  // namespace qbundle
