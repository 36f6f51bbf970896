#pragma once

// Hot enumeration kernels with a scalar reference and vector variants.
//
// Two loops dominate the exhaustive checks:
//   * composing permutations of at most 16 points, which is one byte shuffle
//     (pshufb / tbl) per permutation, and
//   * counting the entries of a table of vertex bitmasks that avoid a query
//     mask, the inner step of the meet-in-the-middle matching counter.
//
// The scalar namespace is the reference. The isa-specific namespaces must
// agree with it bit for bit; the dispatching entry points pick the best
// variant the running CPU supports.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace hallmatch::simd {

/// A permutation of {0..15} as byte lanes: lane i holds the image of i.
/// Points past the permutation's degree are fixed.
struct alignas(16) Perm16 {
  std::array<std::uint8_t, 16> lanes;

  friend bool operator==(const Perm16&, const Perm16&) = default;
};

Perm16 identity_perm16() noexcept;

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa) noexcept;

/// The best instruction set compiled in and supported by this CPU.
Isa detected_isa() noexcept;

/// The instruction set used by the dispatching kernels below.
Isa active_isa() noexcept;

/// Restricts dispatch to `isa`. Returns false (and changes nothing) when the
/// build or the CPU lacks it.
bool force_isa(Isa isa) noexcept;

bool isa_available(Isa isa) noexcept;

/// out[i] = first[i] followed by second[i]: lane j becomes
/// second[i].lanes[first[i].lanes[j]]. All three spans have the same length.
void compose(std::span<const Perm16> first, std::span<const Perm16> second, std::span<Perm16> out);

Perm16 compose(const Perm16& first, const Perm16& second) noexcept;

/// Number of entries m in `masks` with (m & query) == 0.
std::uint64_t count_disjoint(std::span<const std::uint64_t> masks, std::uint64_t query) noexcept;

namespace scalar {
void compose(const Perm16* first, const Perm16* second, Perm16* out, std::size_t count) noexcept;
std::uint64_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::uint64_t query) noexcept;
}  // namespace scalar

namespace avx2 {
void compose(const Perm16* first, const Perm16* second, Perm16* out, std::size_t count) noexcept;
std::uint64_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::uint64_t query) noexcept;
}  // namespace avx2

namespace neon {
void compose(const Perm16* first, const Perm16* second, Perm16* out, std::size_t count) noexcept;
std::uint64_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::uint64_t query) noexcept;
}  // namespace neon

}  // namespace hallmatch::simd
