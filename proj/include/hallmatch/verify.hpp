#pragma once

// Exhaustive identity checks over parameter ranges, reported case by case.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hallmatch {

struct CaseResult {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string identity;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CaseResult> cases;
  double seconds = 0.0;

  bool pass() const noexcept;
  std::optional<CaseResult> first_counterexample() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::size_t max_kn = 0;
  std::size_t min_n = 1;
  std::size_t max_n = 0;
  std::size_t max_d = 0;
  std::size_t max_count_d = 0;
};

/// Identity names accepted by run_verification.
const std::vector<std::string>& verification_names();

/// Fills unset (zero) ranges with the per-identity defaults.
VerifyOptions with_defaults(const std::string& identity, VerifyOptions opts);

/// Throws Error(kInvalidArgument) for an unknown name or an empty range.
VerificationReport run_verification(const std::string& identity, const VerifyOptions& opts);

}  // namespace hallmatch
