#ifndef STOKESWIM_THRUST_HPP
#define STOKESWIM_THRUST_HPP

#include <cstdint>

#include "stokeswim/model.hpp"
#include "stokeswim/quadrature.hpp"

// The central computation: the stroke-averaged self-propulsion thrust G(h)
// and the propulsion velocity gamma1 = G / (6 pi).
//
// Two independent evaluation routes are kept side by side:
//
//   * thrust_reduced integrates the closed-form volume kernels (see
//     kernels.hpp); it is the fast production path and is defined for every
//     h >= 0.
//
//   * thrust_raw time-averages the full stress-based functionals term by
//     term - including the inertial term that vanishes pointwise and the
//     surface traction term - using the first-harmonic product rule, with
//     second derivatives obtained by Richardson-extrapolated differences of
//     the exact Jacobians.  It is deliberately literal and serves as the
//     correctness oracle for the reduced path; it requires h > 0 and carries
//     the oscillatory-pressure sign toggle.
//
// The torsional self-interaction remainder R is integrated and reported
// separately on the reduced path; its vanishing is checked, never assumed.

namespace stokeswim {

enum class ThrustPath { reduced, raw };

struct ThrustResult {
  double stokes_number = 0;
  ThrustPath path = ThrustPath::reduced;
  PressureSign pressure_sign = PressureSign::negative;  // raw path only

  Vec3d G{};        // total thrust
  Vec3d G0{};       // bulk + surface part
  Vec3d G1_vec{};   // pressure-weighted functional (vanishes identically)
  Vec3d R{};        // torsional self-interaction remainder (reduced path)
  Vec3d gamma1{};   // G / (6 pi), exact arithmetic identity

  double error_estimate = 0;
  std::int64_t n_evals = 0;
  bool converged = false;
};

/// Pointwise reduced volume kernel for one thrust component; `main` carries
/// the stretch-torsion interaction terms (including the h^2 pressure term),
/// `remainder` the torsional self-interaction.  Independent of the batched
/// kernel implementation; used for audits and tests.
struct ReducedKernelValue {
  double main = 0;
  double remainder = 0;
};
ReducedKernelValue reduced_integrand(int axis, const SpacePoint& p, const ModelParams& params);

/// Integrate the reduced kernels over the exterior domain.
ThrustResult thrust_reduced(const ModelParams& params, const VolumeRule& rule);

/// Time-average and integrate the stress-based functionals directly.
ThrustResult thrust_raw(const ModelParams& params, const VolumeRule& volume_rule,
                        const SurfaceRule& surface_rule,
                        PressureSign sign = PressureSign::negative);

/// gamma1 = G / (6 pi).
Vec3d propulsion_velocity(const Vec3d& G);

namespace detail {

/// Volume integrand of the direct-averaging path: components 0..2 are the
/// bulk thrust integrand per axis (sign included), components 3..5 the
/// pressure-weighted functional integrand.
std::array<double, 6> raw_volume_integrand(const ModelBundle& m, const SpacePoint& p);

/// Surface integrand (time-averaged stress dotted into the displacement
/// tensor and the inward normal); subtracted from the volume part.
std::array<double, 3> raw_surface_integrand(const ModelBundle& m, const SpacePoint& p);

/// d_l d_j f_k obtained by Richardson-extrapolated central differences of
/// the exact Jacobian; hessian[l] holds the matrix (j, k) -> d_l d_j f_k.
std::array<Mat3d, 3> mix_hessian(const FieldMix& mix, const Vec3d& x, double h);

}  // namespace detail

}  // namespace stokeswim

#endif
