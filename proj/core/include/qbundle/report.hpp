#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qbundle {

/// Outcome of one machine check: {check, instance, degree, status, witness?}.
struct CheckReport {
  std::string check;
  std::string instance;
  int degree = 0;
  bool passed = false;
  /// Counterexample or offending identity when the check fails.
  std::optional<std::string> witness;
  /// Dimensions, counts and other check-specific data.
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json() const;
  /// "PASS check[instance] d=3" followed by the witness on failure.
  std::string summary() const;
};

CheckReport make_report(std::string check, std::string instance, int degree, bool passed,
                        std::optional<std::string> witness = std::nullopt,
                        nlohmann::json details = nlohmann::json::object());

bool all_passed(const std::vector<CheckReport>& reports);
const CheckReport* first_failure(const std::vector<CheckReport>& reports);
nlohmann::json to_json(const std::vector<CheckReport>& reports);

}  // namespace qbundle
