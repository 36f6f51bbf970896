#include <atomic>
#include <cstdlib>
#include <numeric>
#include <string_view>

#include "hallmatch/errors.hpp"
#include "hallmatch/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__) || defined(_M_IX86)
#define HALLMATCH_BUILD_AVX2 1
#else
#define HALLMATCH_BUILD_AVX2 0
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define HALLMATCH_BUILD_NEON 1
#else
#define HALLMATCH_BUILD_NEON 0
#endif

namespace hallmatch::simd {

namespace {

Isa probe() noexcept {
#if HALLMATCH_BUILD_AVX2 && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("avx2")) return Isa::kAvx2;
#endif
#if HALLMATCH_BUILD_NEON
  return Isa::kNeon;
#endif
  return Isa::kScalar;
}

// HALLMATCH_SIMD=scalar pins the reference kernels for a whole process.
Isa initial_isa() noexcept {
  const char* env = std::getenv("HALLMATCH_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return Isa::kScalar;
  return probe();
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Perm16 identity_perm16() noexcept {
  Perm16 p;
  std::iota(p.lanes.begin(), p.lanes.end(), std::uint8_t{0});
  return p;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

Isa detected_isa() noexcept { return probe(); }

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2: return probe() == Isa::kAvx2;
    case Isa::kNeon: return probe() == Isa::kNeon;
  }
  return false;
}

bool force_isa(Isa isa) noexcept {
  if (!isa_available(isa)) return false;
  active().store(isa, std::memory_order_relaxed);
  return true;
}

void compose(std::span<const Perm16> first, std::span<const Perm16> second, std::span<Perm16> out) {
  if (first.size() != out.size() || second.size() != out.size()) {
    throw Error(Errc::kDomainMismatch, "compose needs equally sized batches");
  }
  const std::size_t n = out.size();
  switch (active_isa()) {
#if HALLMATCH_BUILD_AVX2
    case Isa::kAvx2: avx2::compose(first.data(), second.data(), out.data(), n); return;
#endif
#if HALLMATCH_BUILD_NEON
    case Isa::kNeon: neon::compose(first.data(), second.data(), out.data(), n); return;
#endif
    default: scalar::compose(first.data(), second.data(), out.data(), n); return;
  }
}

Perm16 compose(const Perm16& first, const Perm16& second) noexcept {
  Perm16 out;
  switch (active_isa()) {
#if HALLMATCH_BUILD_AVX2
    case Isa::kAvx2: avx2::compose(&first, &second, &out, 1); break;
#endif
#if HALLMATCH_BUILD_NEON
    case Isa::kNeon: neon::compose(&first, &second, &out, 1); break;
#endif
    default: scalar::compose(&first, &second, &out, 1); break;
  }
  return out;
}

std::uint64_t count_disjoint(std::span<const std::uint64_t> masks, std::uint64_t query) noexcept {
  switch (active_isa()) {
#if HALLMATCH_BUILD_AVX2
    case Isa::kAvx2: return avx2::count_disjoint(masks.data(), masks.size(), query);
#endif
#if HALLMATCH_BUILD_NEON
    case Isa::kNeon: return neon::count_disjoint(masks.data(), masks.size(), query);
#endif
    default: return scalar::count_disjoint(masks.data(), masks.size(), query);
  }
}

}  // namespace hallmatch::simd
