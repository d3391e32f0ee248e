#ifndef STOKESWIM_PACK_NEON_HPP
#define STOKESWIM_PACK_NEON_HPP

// 2-lane double pack on AArch64 NEON.

#include <arm_neon.h>

namespace stokeswim::simd {

struct NeonPack {
  static constexpr int lanes = 2;
  float64x2_t v;

  NeonPack() : v(vdupq_n_f64(0.0)) {}
  NeonPack(double x) : v(vdupq_n_f64(x)) {}  // NOLINT: implicit broadcast
  explicit NeonPack(float64x2_t x) : v(x) {}

  static NeonPack load(const double* p) { return NeonPack{vld1q_f64(p)}; }
  void store(double* p) const { vst1q_f64(p, v); }
  double hsum() const { return vaddvq_f64(v); }

  friend NeonPack operator+(NeonPack a, NeonPack b) { return NeonPack{vaddq_f64(a.v, b.v)}; }
  friend NeonPack operator-(NeonPack a, NeonPack b) { return NeonPack{vsubq_f64(a.v, b.v)}; }
  friend NeonPack operator*(NeonPack a, NeonPack b) { return NeonPack{vmulq_f64(a.v, b.v)}; }
  NeonPack operator-() const { return NeonPack{vnegq_f64(v)}; }
  NeonPack& operator+=(NeonPack o) { v = vaddq_f64(v, o.v); return *this; }
  NeonPack& operator-=(NeonPack o) { v = vsubq_f64(v, o.v); return *this; }
};

}  // namespace stokeswim::simd

#endif
