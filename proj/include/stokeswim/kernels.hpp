#ifndef STOKESWIM_KERNELS_HPP
#define STOKESWIM_KERNELS_HPP

#include <array>
#include <cstddef>

#include "stokeswim/pack.hpp"
#include "stokeswim/quadrature.hpp"
#include "stokeswim/tensor.hpp"

// Batch evaluation of the reduced thrust kernel over an angular grid at a
// fixed radius.  This is the hot loop of the h-sweep: everything radial
// (torsional envelopes, their derivatives, powers of 1/r) is precomputed
// into a RadialContext, and the per-node work is pure polynomial arithmetic
// in the direction cosines, written once as a template over a SIMD pack.
//
// Index conventions (gradients are (grad v)_ik = d v_k / d x_i):
//
//   main kernel, component i:
//     grad a : (grad G1 . grad h(i))           = S_jl (gG1 . H_i)_jl
//     D(G1)  : (grad a . grad h(i))            = sym(gG1)_jl (S . H_i)_jl
//     1/2 [S . K1 - K1 . S] : D(h(i)),  K1 = gG1 - gG1^T
//     h^2 * h(i) . grad G2 . a                 = h^2 h(i)_k (gG2)_kl a_l
//   combined with signs  +, -, +, -  respectively;
//
//   interaction remainder, component i:
//     D(G2) : (gG1 . H_i) - D(G1) : (gG2 . H_i)
//     + 1/2 [gG1.gG2 + (gG1.gG2)^T - gG2.gG1 - (gG2.gG1)^T] : D(h(i)).
//
// The remainder is accumulated separately so its vanishing can be checked
// rather than assumed.

namespace stokeswim {

/// Radius- and h-dependent scalars consumed by the batch kernels.
struct RadialContext {
  double r = 1;
  double h2 = 0;  // squared Stokes number
  double ir3 = 1, ir5 = 1, ir7 = 1;
  double A = 0, B = 0, dA = 0, dB = 0;       // translation-flow coefficients
  double W1 = 0, W2 = 0, cW1 = 0, cW2 = 0;   // torsional coefficients G/r and (G/r)'/r
};

RadialContext make_radial_context(double r, double h);

/// Angular sums of the six kernel components (main i = 1..3, remainder
/// i = 1..3) at the context radius, using whatever SIMD tier is active.
/// Multiply by r^2 for the shell integrand.
std::array<double, 6> reduced_angular_sums(const RadialContext& ctx, const AngularGrid& grid);

namespace detail {

using BatchFn = void (*)(const RadialContext&, const double*, const double*, const double*,
                         const double*, std::size_t, std::array<double, 6>&);

void reduced_batch_scalar(const RadialContext&, const double* sx, const double* sy,
                          const double* sz, const double* w, std::size_t n,
                          std::array<double, 6>& acc);
#if defined(STOKESWIM_HAVE_AVX2)
void reduced_batch_avx2(const RadialContext&, const double* sx, const double* sy,
                        const double* sz, const double* w, std::size_t n,
                        std::array<double, 6>& acc);
#endif
#if defined(__ARM_NEON) && defined(__aarch64__)
void reduced_batch_neon(const RadialContext&, const double* sx, const double* sy,
                        const double* sz, const double* w, std::size_t n,
                        std::array<double, 6>& acc);
#endif

/// Kernel body shared by every instantiation.  Processes floor(n / lanes)
/// nodes in packs and leaves the remainder to the caller.
template <class P>
inline std::size_t reduced_batch_packed(const RadialContext& c, const double* sx,
                                        const double* sy, const double* sz, const double* w,
                                        std::size_t n, std::array<double, 6>& acc) {
  using V = Vec3<P>;
  using M = Mat3<P>;

  const P r(c.r), h2(c.h2);
  const P ir3(c.ir3), ir5(c.ir5), ir7(c.ir7);
  const P A(c.A), B(c.B), dA(c.dA), dB(c.dB);
  const P W1(c.W1), W2(c.W2), cW1(c.cW1), cW2(c.cW2);
  const P half(0.5), three(3.0), fifteen(15.0);

  std::array<P, 6> accp{};

  std::size_t j = 0;
  for (; j + P::lanes <= n; j += P::lanes) {
    const V s{P::load(sx + j), P::load(sy + j), P::load(sz + j)};
    const P wj = P::load(w + j);
    const V x = s * r;
    const V u{-x.y, x.x, P(0.0)};

    // dipole gradient and Hessian
    const P c1 = three * x.x * ir5;
    V a_val = x * (-c1);
    a_val.x += ir3;

    M S;
    {
      const P c5 = -three * ir5;
      const P c7 = fifteen * x.x * ir7;
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
          P v = c7 * x[i] * x[k];
          if (k == 0) v += c5 * x[i];
          if (i == 0) v += c5 * x[k];
          if (i == k) v += c5 * x.x;
          S[i][k] = v;
        }
    }

    // torsional gradients
    M gG1 = M::outer(x, u) * cW1;
    gG1[0][1] += W1;
    gG1[1][0] -= W1;
    M gG2 = M::outer(x, u) * cW2;
    gG2[0][1] += W2;
    gG2[1][0] -= W2;

    const M D1 = sym(gG1);
    const M D2 = sym(gG2);
    const M K1 = gG1 - transpose(gG1);
    const M comm = S * K1 - K1 * S;
    const M C12 = gG1 * gG2;
    const M C21 = gG2 * gG1;
    const M Rmat = C12 + transpose(C12) - C21 - transpose(C21);
    const V gG2_a = mat_vec(gG2, a_val);

    for (int i = 0; i < 3; ++i) {
      // translating-sphere flow along axis i
      V hv = x * (A * x[i]);
      hv[i] += B;
      M Hi;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          P v = dA * s[k] * x[i] * x[l];
          if (k == i) v += A * x[l];
          if (k == l) v += A * x[i];
          if (l == i) v += dB * s[k];
          Hi[k][l] = v;
        }
      const M Di = sym(Hi);

      const M M1 = gG1 * Hi;
      const P main = ddot(S, M1) - ddot(D1, S * Hi) + half * ddot(comm, Di) -
                     h2 * dot(hv, gG2_a);
      const P rem = ddot(D2, M1) - ddot(D1, gG2 * Hi) + half * ddot(Rmat, Di);

      accp[i] += wj * main;
      accp[3 + i] += wj * rem;
    }
  }

  for (int k = 0; k < 6; ++k) acc[k] += accp[k].hsum();
  return j;
}

}  // namespace detail

}  // namespace stokeswim

#endif
