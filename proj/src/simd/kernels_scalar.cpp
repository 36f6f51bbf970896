#include "hallmatch/simd/kernels.hpp"

namespace hallmatch::simd::scalar {

void compose(const Perm16* first, const Perm16* second, Perm16* out, std::size_t count) noexcept {
  for (std::size_t i = 0; i < count; ++i) {
    Perm16 result;
    for (std::size_t lane = 0; lane < 16; ++lane) {
      result.lanes[lane] = second[i].lanes[first[i].lanes[lane] & 0x0f];
    }
    out[i] = result;
  }
}

std::uint64_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::uint64_t query) noexcept {
  std::uint64_t hits = 0;
  for (std::size_t i = 0; i < count; ++i) hits += (masks[i] & query) == 0 ? 1 : 0;
  return hits;
}

}  // namespace hallmatch::simd::scalar
