#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include "hallmatch/simd/kernels.hpp"

namespace hallmatch::simd::neon {

void compose(const Perm16* first, const Perm16* second, Perm16* out, std::size_t count) noexcept {
  const uint8x16_t low_nibble = vdupq_n_u8(0x0f);
  for (std::size_t i = 0; i < count; ++i) {
    uint8x16_t idx = vandq_u8(vld1q_u8(first[i].lanes.data()), low_nibble);
    uint8x16_t table = vld1q_u8(second[i].lanes.data());
    vst1q_u8(out[i].lanes.data(), vqtbl1q_u8(table, idx));
  }
}

std::uint64_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::uint64_t query) noexcept {
  const uint64x2_t q = vdupq_n_u64(query);
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    uint64x2_t m = vld1q_u64(masks + i);
    uint64x2_t hit = vceqzq_u64(vandq_u64(m, q));
    acc = vsubq_u64(acc, hit);
  }
  std::uint64_t hits = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < count; ++i) hits += (masks[i] & query) == 0 ? 1 : 0;
  return hits;
}

}  // namespace hallmatch::simd::neon

#endif
