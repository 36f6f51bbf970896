#pragma once

// Permutations of {0, ..., d-1} acting on the right.
//
// Points are 0-based in memory; to_cycle_string() prints them 1-based to
// match the usual [d] = {1, ..., d}. The product a * b means "apply a, then
// b": i^(a*b) = (i^a)^b. This is the order in which labelings are multiplied
// along a cycle.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hallmatch/simd/kernels.hpp"

namespace hallmatch {

class Permutation {
 public:
  static constexpr std::size_t kMaxDegree = 16;

  Permutation() : Permutation(0) {}
  explicit Permutation(std::size_t degree);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Throws kInvalidArgument unless `images` is a bijection of {0..d-1}.
  static Permutation from_images(std::span<const std::size_t> images);
  static Permutation from_images(std::initializer_list<std::size_t> images);

  /// Builds a permutation from 0-based disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<std::size_t>> cycles);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t operator()(std::size_t point) const { return lanes_.lanes[point]; }
  std::vector<std::size_t> images() const;

  Permutation inverse() const;
  Permutation then(const Permutation& next) const;
  bool is_identity() const noexcept;

  /// All cycles, fixed points included, each starting at its smallest point,
  /// ordered by that point.
  std::vector<std::vector<std::size_t>> cycles() const;

  std::string to_cycle_string() const;

  const simd::Perm16& lanes() const noexcept { return lanes_; }

  friend Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }
  friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
    return a.degree_ == b.degree_ && a.lanes_ == b.lanes_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept;

 private:
  std::size_t degree_ = 0;
  simd::Perm16 lanes_;
};

/// Every permutation of degree d in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t degree);

/// Product of a sequence under the right action: p[0] * p[1] * ... .
/// Empty input gives the identity of `degree`.
Permutation product(std::span<const Permutation> perms, std::size_t degree);

}  // namespace hallmatch
