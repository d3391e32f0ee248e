#include "stokeswim/kernels.hpp"

#include "stokeswim/fields.hpp"

namespace stokeswim {

RadialContext make_radial_context(double r, double h) {
  const double ir = 1.0 / r;
  const double ir2 = ir * ir;

  RadialContext c;
  c.r = r;
  c.h2 = h * h;
  c.ir3 = ir2 * ir;
  c.ir5 = c.ir3 * ir2;
  c.ir7 = c.ir5 * ir2;

  c.A = 0.75 * (c.ir3 - c.ir5);
  c.B = 0.25 * (3.0 * ir + c.ir3);
  c.dA = 0.75 * (-3.0 * ir2 * ir2 + 5.0 * c.ir3 * c.ir3);
  c.dB = 0.25 * (-3.0 * ir2 - 3.0 * ir2 * ir2);

  const TorsionProfiles t = torsion_profiles(r, h);
  c.W1 = t.G1 * ir;
  c.W2 = t.G2 * ir;
  c.cW1 = (t.dG1 * ir - t.G1 * ir2) * ir;
  c.cW2 = (t.dG2 * ir - t.G2 * ir2) * ir;
  return c;
}

namespace detail {

void reduced_batch_scalar(const RadialContext& c, const double* sx, const double* sy,
                          const double* sz, const double* w, std::size_t n,
                          std::array<double, 6>& acc) {
  reduced_batch_packed<simd::ScalarPack>(c, sx, sy, sz, w, n, acc);
}

}  // namespace detail

}  // namespace stokeswim
