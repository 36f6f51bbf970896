#pragma once

// The d-matching polynomial of the cycle C_n, by five independent routes:
//
//   labelings     average of M(C_{n,lambda}) over all (d!)^n labelings
//   permutations  (1/d!) sum over S_d of prod_{cycles of sigma} C_{n*len}
//   cycle-types   the same sum grouped by conjugacy class
//   closed-form   P_d(C_n(x))
//   hall-quotient P_{nd+n-1} / P_{n-1}
//
// All divisions are exact or throw kNotDivisible.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hallmatch/bigint.hpp"
#include "hallmatch/permutation.hpp"
#include "hallmatch/poly.hpp"

namespace hallmatch {

/// A partition of d, parts in non-increasing order.
struct CycleType {
  std::size_t d = 0;
  std::vector<std::size_t> lengths;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// Disjoint-cycle lengths of p, fixed points included.
CycleType cycle_type_of(const Permutation& p);

/// All partitions of d in reverse lexicographic order: {d}, {d-1,1}, ...,
/// {1,...,1}. partitions(0) is the single empty partition.
std::vector<CycleType> partitions(std::size_t d);

/// d! / prod_i (i^m_i m_i!), the size of the conjugacy class.
BigInt perms_with_type(const CycleType& t);

/// prod over the parts l of t of cycle_poly(n * l): the matching polynomial
/// of the cover of C_n attached to any permutation of type t.
Polynomial cover_polynomial(std::size_t n, const CycleType& t);

struct EnumerationConfig {
  /// Cap on enumerated labelings or permutations.
  std::uint64_t budget = 1'000'000;
  /// Worker threads; 0 means one per hardware thread.
  unsigned jobs = 1;
};

/// Throws kBudgetExceeded when (d!)^n > budget.
Polynomial dmatch_bruteforce(std::size_t n, std::size_t d, const EnumerationConfig& cfg = {});

/// Throws kBudgetExceeded when d! > budget.
Polynomial dmatch_permutation_sum(std::size_t n, std::size_t d, const EnumerationConfig& cfg = {});

Polynomial dmatch_cycle_type(std::size_t n, std::size_t d);
Polynomial dmatch_closed_form(std::size_t n, std::size_t d);
Polynomial hall_quotient(std::size_t n, std::size_t d);

enum class DmatchMethod { kLabelings, kPermutations, kCycleTypes, kClosedForm, kHallQuotient };

std::string_view method_name(DmatchMethod m) noexcept;
std::optional<DmatchMethod> parse_method(std::string_view name) noexcept;
const std::vector<DmatchMethod>& all_methods();

Polynomial dmatch(DmatchMethod method, std::size_t n, std::size_t d, const EnumerationConfig& cfg = {});

/// Number of labelings (d!)^n, or nullopt past 2^64.
std::optional<std::uint64_t> labeling_count(std::size_t n, std::size_t d);

}  // namespace hallmatch
