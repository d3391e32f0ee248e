#ifndef STOKESWIM_PACK_AVX2_HPP
#define STOKESWIM_PACK_AVX2_HPP

// 4-lane double pack on AVX2.  Include only from translation units compiled
// with AVX2 enabled.

#include <immintrin.h>

namespace stokeswim::simd {

struct Avx2Pack {
  static constexpr int lanes = 4;
  __m256d v;

  Avx2Pack() : v(_mm256_setzero_pd()) {}
  Avx2Pack(double x) : v(_mm256_set1_pd(x)) {}  // NOLINT: implicit broadcast
  explicit Avx2Pack(__m256d x) : v(x) {}

  static Avx2Pack load(const double* p) { return Avx2Pack{_mm256_loadu_pd(p)}; }
  void store(double* p) const { _mm256_storeu_pd(p, v); }

  double hsum() const {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
  }

  friend Avx2Pack operator+(Avx2Pack a, Avx2Pack b) { return Avx2Pack{_mm256_add_pd(a.v, b.v)}; }
  friend Avx2Pack operator-(Avx2Pack a, Avx2Pack b) { return Avx2Pack{_mm256_sub_pd(a.v, b.v)}; }
  friend Avx2Pack operator*(Avx2Pack a, Avx2Pack b) { return Avx2Pack{_mm256_mul_pd(a.v, b.v)}; }
  Avx2Pack operator-() const { return Avx2Pack{_mm256_sub_pd(_mm256_setzero_pd(), v)}; }
  Avx2Pack& operator+=(Avx2Pack o) { v = _mm256_add_pd(v, o.v); return *this; }
  Avx2Pack& operator-=(Avx2Pack o) { v = _mm256_sub_pd(v, o.v); return *this; }
};

}  // namespace stokeswim::simd

#endif
