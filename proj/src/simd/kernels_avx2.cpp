#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__) || defined(_M_IX86)

#include <immintrin.h>

#include "hallmatch/simd/kernels.hpp"

namespace hallmatch::simd::avx2 {

// _mm256_shuffle_epi8 shuffles within each 128-bit half, so one instruction
// composes two independent 16-point permutations.
void compose(const Perm16* first, const Perm16* second, Perm16* out, std::size_t count) noexcept {
  const __m256i low_nibble = _mm256_set1_epi8(0x0f);
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&first[i]));
    __m256i table = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&second[i]));
    __m256i res = _mm256_shuffle_epi8(table, _mm256_and_si256(idx, low_nibble));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&out[i]), res);
  }
  for (; i < count; ++i) {
    __m128i idx = _mm_load_si128(reinterpret_cast<const __m128i*>(&first[i]));
    __m128i table = _mm_load_si128(reinterpret_cast<const __m128i*>(&second[i]));
    __m128i res = _mm_shuffle_epi8(table, _mm_and_si128(idx, _mm_set1_epi8(0x0f)));
    _mm_store_si128(reinterpret_cast<__m128i*>(&out[i]), res);
  }
}

std::uint64_t count_disjoint(const std::uint64_t* masks, std::size_t count, std::uint64_t query) noexcept {
  const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query));
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
    __m256i hit = _mm256_cmpeq_epi64(_mm256_and_si256(m, q), zero);
    acc = _mm256_sub_epi64(acc, hit);  // hit lanes are all-ones, i.e. -1
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t hits = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < count; ++i) hits += (masks[i] & query) == 0 ? 1 : 0;
  return hits;
}

}  // namespace hallmatch::simd::avx2

#endif
