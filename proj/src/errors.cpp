#include "hallmatch/errors.hpp"

namespace hallmatch {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kNotDivisible: return "NotDivisible";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kZeroPolynomial: return "ZeroPolynomial";
    case Errc::kInvalidGraph: return "InvalidGraph";
    case Errc::kDomainMismatch: return "DomainMismatch";
    case Errc::kNotAMorphism: return "NotAMorphism";
    case Errc::kNotDisjointCycles: return "NotDisjointCycles";
    case Errc::kHypothesesViolated: return "HypothesesViolated";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kUnsupportedSize: return "UnsupportedSize";
    case Errc::kMalformedString: return "MalformedString";
    case Errc::kNotBad: return "NotBad";
    case Errc::kNotAMatching: return "NotAMatching";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace hallmatch
