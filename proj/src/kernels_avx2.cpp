// Compiled with AVX2/FMA enabled; see src/CMakeLists.txt.

#include "stokeswim/kernels.hpp"

#if defined(STOKESWIM_HAVE_AVX2)

#include "stokeswim/pack_avx2.hpp"

namespace stokeswim::detail {

void reduced_batch_avx2(const RadialContext& c, const double* sx, const double* sy,
                        const double* sz, const double* w, std::size_t n,
                        std::array<double, 6>& acc) {
  const std::size_t done = reduced_batch_packed<simd::Avx2Pack>(c, sx, sy, sz, w, n, acc);
  if (done < n) {
    reduced_batch_packed<simd::ScalarPack>(c, sx + done, sy + done, sz + done, w + done,
                                           n - done, acc);
  }
}

}  // namespace stokeswim::detail

#endif
