#pragma once

// Metacycle matchings of (C_k, C_n) and their relation to matchings of C_kn.
//
// Layout of C_kn: vertex r*n + c is row r, column c (both 0-based); cycle edge
// p joins p and p+1 mod kn. Edge r*n + c with c <= n-2 lies inside row r; edge
// r*n + n-1 is the zag from row r to row r+1 mod k. A matching of C_kn is a
// bit mask over its kn edges.
//
// An inner matching of C_n is a mask over its n edges: bit c (c <= n-2) joins
// c and c+1, bit n-1 is the hop joining n-1 and 0. Outer edge e of C_k joins
// outer vertices e and e+1 mod k.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hallmatch/bigint.hpp"

namespace hallmatch {

struct MetacycleMatching {
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t outer = 0;
  /// nullopt exactly for outer vertices covered by `outer`.
  std::vector<std::optional<std::uint32_t>> inner;

  friend bool operator==(const MetacycleMatching&, const MetacycleMatching&) = default;
};

/// Throws kUnsupportedSize unless k >= 3, n >= 3 and kn <= 63.
void check_metacycle_size(std::size_t k, std::size_t n);

/// Every matching of the simple cycle C_len (len >= 3) as an edge mask, in
/// increasing order.
std::vector<std::uint64_t> cycle_matching_masks(std::size_t len);

bool is_valid(const MetacycleMatching& m);

/// Visits every metacycle matching exactly once.
void for_each_metacycle(std::size_t k, std::size_t n, const std::function<void(const MetacycleMatching&)>& visit);
std::vector<MetacycleMatching> enumerate_metacycle(std::size_t k, std::size_t n);

/// e_n + n e_k.
std::size_t weight(const MetacycleMatching& m);

/// (-1)^((1-n) e_k).
int sign(const MetacycleMatching& m);

/// Signed counts indexed by weight 0 .. floor(kn/2).
std::vector<BigInt> signed_counts(std::size_t k, std::size_t n);
BigInt signed_count(std::size_t k, std::size_t n, std::size_t m);

/// sum_i (-1)^(i(1-n)) a(C_k, i) a((k-2i) C_n, m - in), with a(0 C_n, j) = [j = 0]
/// and a(l C_n, .) the l-fold convolution of a(C_n, .). Valid for k, n >= 1.
BigInt star_coefficient(std::size_t k, std::size_t n, std::size_t m);

/// The metacycle matching assigned to a matching of C_kn by its zag
/// components. Throws kNotAMatching when `cycle_edges` is not a matching.
MetacycleMatching project_matching(std::size_t k, std::size_t n, std::uint64_t cycle_edges);

/// Inverse of project_matching; nullopt when m is not in its image.
std::optional<std::uint64_t> lift_metacycle(const MetacycleMatching& m);

enum class Symbol { kHop, kRest, kMuOpen, kMuClose };

struct CycleString {
  std::vector<Symbol> symbols;

  /// Reads H, r and μ (or m). μ runs are paired from the symbol after the
  /// preceding non-μ; a string made only of μ is paired from position 0.
  /// Throws kMalformedString on unknown characters or an odd μ run.
  static CycleString from_string(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const CycleString&, const CycleString&) = default;
};

/// μ on covered vertices (opening at the lower end of the outer edge), H where
/// the inner matching uses the hop, r elsewhere.
CycleString string_label(const MetacycleMatching& m);

struct Generator {
  enum class Kind { kHopsRest, kHopsPair, kAllHops };
  Kind kind;
  std::size_t hops;
  /// Outer vertex carrying the first symbol.
  std::size_t start;

  std::size_t length() const noexcept { return kind == Kind::kHopsRest ? hops + 1 : kind == Kind::kHopsPair ? hops + 2 : hops; }
  std::string to_string() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Splits s into blocks H^a r and H^a μμ, reading from the smallest rotation
/// whose last symbol is r or a closing μ; an all-H string is the single
/// block H^k. Throws kMalformedString when the μ symbols do not pair.
std::vector<Generator> decode_generators(const CycleString& s);

/// For even n: an outer edge is present, or some H^a r block (a >= 1) has
/// its last H vertex perfectly matched with the hop and its r vertex
/// perfectly matched without it. Always false for odd n.
bool classify_bad(const MetacycleMatching& m);

/// Toggles the bad block with the smallest end vertex between H^a μμ and
/// H^(a+1) r with the perfect pattern. Throws kNotBad otherwise.
MetacycleMatching involution_f(const MetacycleMatching& m);

/// Exhaustive comparison of project_matching, lift_metacycle, classify_bad
/// and involution_f for one (k, n).
struct MetacycleAudit {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t metacycle_matchings = 0;
  std::size_t cycle_matchings = 0;
  std::size_t image_size = 0;
  std::size_t bad = 0;
  /// Matchings of C_kn whose projection collides with an earlier one or
  /// changes the weight.
  std::size_t projection_violations = 0;
  /// Metacycle matchings where "bad" disagrees with "outside the image", or
  /// where lifting does not invert the projection.
  std::size_t image_violations = 0;
  /// Bad matchings where f is not a fixed-point-free, weight-preserving,
  /// sign-reversing involution of the bad set.
  std::size_t involution_violations = 0;
  /// Sum of signs over the bad set, per weight; all zero when f works.
  std::vector<BigInt> bad_signed_counts;

  bool ok() const noexcept { return projection_violations == 0 && image_violations == 0 && involution_violations == 0; }
};

MetacycleAudit audit_metacycle(std::size_t k, std::size_t n);

}  // namespace hallmatch
