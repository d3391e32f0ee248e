#include "stokeswim/kernels.hpp"

#if defined(__ARM_NEON) && defined(__aarch64__)

#include "stokeswim/pack_neon.hpp"

namespace stokeswim::detail {

void reduced_batch_neon(const RadialContext& c, const double* sx, const double* sy,
                        const double* sz, const double* w, std::size_t n,
                        std::array<double, 6>& acc) {
  const std::size_t done = reduced_batch_packed<simd::NeonPack>(c, sx, sy, sz, w, n, acc);
  if (done < n) {
    reduced_batch_packed<simd::ScalarPack>(c, sx + done, sy + done, sz + done, w + done,
                                           n - done, acc);
  }
}

}  // namespace stokeswim::detail

#endif
