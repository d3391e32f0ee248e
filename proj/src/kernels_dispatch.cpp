#include <atomic>
#include <cstdlib>
#include <cstring>

#include "stokeswim/kernels.hpp"
#include "stokeswim/pack.hpp"

namespace stokeswim {

namespace simd {

Tier detected_tier() {
#if defined(STOKESWIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("avx2")) return Tier::avx2;
#endif
#if defined(__ARM_NEON) && defined(__aarch64__)
  return Tier::neon;
#endif
  return Tier::scalar;
}

namespace {

Tier sanitize(Tier t) {
  const Tier best = detected_tier();
  if (t == Tier::avx2 && best != Tier::avx2) return Tier::scalar;
  if (t == Tier::neon && best != Tier::neon) return Tier::scalar;
  return t;
}

Tier initial_tier() {
  if (const char* env = std::getenv("STOKESWIM_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Tier::scalar;
    if (std::strcmp(env, "avx2") == 0) return sanitize(Tier::avx2);
    if (std::strcmp(env, "neon") == 0) return sanitize(Tier::neon);
  }
  return detected_tier();
}

std::atomic<Tier>& tier_slot() {
  static std::atomic<Tier> t{initial_tier()};
  return t;
}

}  // namespace

Tier active_tier() { return tier_slot().load(std::memory_order_relaxed); }

void force_tier(Tier t) { tier_slot().store(sanitize(t), std::memory_order_relaxed); }

const char* tier_name(Tier t) {
  switch (t) {
    case Tier::avx2: return "avx2";
    case Tier::neon: return "neon";
    default: return "scalar";
  }
}

}  // namespace simd

std::array<double, 6> reduced_angular_sums(const RadialContext& ctx, const AngularGrid& grid) {
  std::array<double, 6> acc{};
  const std::size_t n = grid.size();
  detail::BatchFn fn = detail::reduced_batch_scalar;
  switch (simd::active_tier()) {
#if defined(STOKESWIM_HAVE_AVX2)
    case simd::Tier::avx2: fn = detail::reduced_batch_avx2; break;
#endif
#if defined(__ARM_NEON) && defined(__aarch64__)
    case simd::Tier::neon: fn = detail::reduced_batch_neon; break;
#endif
    default: break;
  }
  fn(ctx, grid.sx.data(), grid.sy.data(), grid.sz.data(), grid.w.data(), n, acc);
  return acc;
}

}  // namespace stokeswim
