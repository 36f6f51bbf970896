#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hallmatch {

enum class Errc {
  kNotDivisible,
  kDivisionByZero,
  kZeroPolynomial,
  kInvalidGraph,
  kDomainMismatch,
  kNotAMorphism,
  kNotDisjointCycles,
  kHypothesesViolated,
  kBudgetExceeded,
  kUnsupportedSize,
  kMalformedString,
  kNotBad,
  kNotAMatching,
  kInvalidArgument,
  kParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above. Broken internal invariants use std::logic_error.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hallmatch
