#ifndef STOKESWIM_PACK_HPP
#define STOKESWIM_PACK_HPP

#include <cstddef>

// Lane abstraction for the data-parallel quadrature kernels.  Kernels are
// written once as templates over a pack type; ScalarPack is the reference
// instantiation, and per-ISA packs (AVX2, NEON) live in pack_avx2.hpp /
// pack_neon.hpp and are compiled only in their own translation units.  The
// active implementation is chosen at runtime (see kernels.hpp).

namespace stokeswim::simd {

struct ScalarPack {
  static constexpr int lanes = 1;
  double v = 0;

  ScalarPack() = default;
  ScalarPack(double x) : v(x) {}  // NOLINT: implicit broadcast is the point

  static ScalarPack load(const double* p) { return {*p}; }
  void store(double* p) const { *p = v; }
  double hsum() const { return v; }

  friend ScalarPack operator+(ScalarPack a, ScalarPack b) { return {a.v + b.v}; }
  friend ScalarPack operator-(ScalarPack a, ScalarPack b) { return {a.v - b.v}; }
  friend ScalarPack operator*(ScalarPack a, ScalarPack b) { return {a.v * b.v}; }
  ScalarPack operator-() const { return {-v}; }
  ScalarPack& operator+=(ScalarPack o) { v += o.v; return *this; }
  ScalarPack& operator-=(ScalarPack o) { v -= o.v; return *this; }
};

enum class Tier { scalar, avx2, neon };

/// Best tier supported by the running CPU (and compiled into this binary).
Tier detected_tier();

/// Tier currently used by the dispatched kernels.  Defaults to
/// detected_tier(); the STOKESWIM_SIMD environment variable ("scalar",
/// "avx2", "neon") or force_tier() override it.
Tier active_tier();

/// Force a tier (tests use this to compare variants).  Requesting an
/// unsupported tier falls back to scalar.
void force_tier(Tier t);

const char* tier_name(Tier t);

}  // namespace stokeswim::simd

#endif
