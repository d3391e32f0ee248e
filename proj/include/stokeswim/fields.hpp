#ifndef STOKESWIM_FIELDS_HPP
#define STOKESWIM_FIELDS_HPP

#include "stokeswim/geometry.hpp"
#include "stokeswim/tensor.hpp"

// Closed-form catalog of the steady building-block fields on the exterior of
// the unit sphere, with exact first derivatives.
//
// Gradient layout everywhere: (grad v)_ik = d v_k / d x_i  (see tensor.hpp).
//
// Catalog:
//   * psi(x) = sin(theta) cos(phi) / r^2 = x_1 / r^3, a harmonic dipole
//     potential; its gradient `a` is the stretch part of the deformation.
//   * G1, G2: azimuthal oscillation envelopes G(r) sin(theta) e_phi of a
//     sphere twisting about e_3 at Stokes number h.  In Cartesian form
//     G(r)/r * (-x_2, x_1, 0), which is smooth across the polar axis.
//   * h_axis, p_axis: steady Stokes flow past the unit sphere translating
//     along a coordinate axis (velocity scaled to 1, pressure by nu/a).
//
// All fields are divergence free; `a` has a symmetric, traceless gradient.

namespace stokeswim {

struct VecJac {
  Vec3d value{};
  Mat3d jacobian{};  // (jacobian)_ik = d value_k / d x_i
};

/// Velocity, exact Jacobian, pressure and pressure gradient of a steady
/// Stokes solution.
struct StokesFlow {
  Vec3d velocity{};
  Mat3d jacobian{};
  double pressure = 0;
  Vec3d pressure_gradient{};
};

/// Radial profile bundle of the torsional envelopes at one (r, h).
/// g1, g2 are the rational parts; G1, G2 the full envelope values
/// (G1 multiplies sin(theta) e_phi for the cosine-phase envelope, G2 for the
/// sine phase); dG1, dG2 their exact r-derivatives.
struct TorsionProfiles {
  double g1 = 0, g2 = 0;
  double G1 = 0, G2 = 0;
  double dG1 = 0, dG2 = 0;
};

/// Which torsional envelope: the cosine-phase field (value 1/r^2 * ... at
/// h = 0) or the sine-phase field (identically zero at h = 0).
enum class TorsionPart { cos_phase, sin_phase };

/// psi(p) = x_1 / r^3.  Requires p.r >= 1 (throws std::domain_error inside
/// the body).
double dipole_potential(const SpacePoint& p);

/// a = grad psi and its (symmetric, traceless) Jacobian.  Requires p.r >= 1.
VecJac dipole_field(const SpacePoint& p);

/// Evaluate the torsional radial profiles at radius r >= 1, Stokes number
/// h >= 0.  g1(1) = 1, g2(1) = 0, G2(1) = 0 for every h; at h = 0 the
/// profiles reduce to G1 = 1/r^2, G2 = 0.
TorsionProfiles torsion_profiles(double r, double h);

/// Cartesian value and exact Jacobian of G(r) sin(theta) e_phi.
VecJac torsion_field(TorsionPart part, const SpacePoint& p, double h);

/// Steady Stokes flow past the unit sphere translating along axis
/// (0, 1 or 2); equals the corresponding basis vector on r = 1.
StokesFlow stokes_translation(int axis, const SpacePoint& p);

namespace detail {

// Unchecked inner evaluators used by the quadrature kernels and by the
// finite-difference stencils of the direct-averaging path (whose steps may
// probe marginally inside r = 1, where the closed forms are still analytic).
// Only r > 0 is required.
double dipole_potential_raw(const Vec3d& x, double r);
VecJac dipole_field_raw(const Vec3d& x, double r);
TorsionProfiles torsion_profiles_raw(double r, double h);
VecJac torsion_field_raw(const Vec3d& x, double r, double envelope, double envelope_deriv);
StokesFlow stokes_translation_raw(int axis, const Vec3d& x, double r);

}  // namespace detail

}  // namespace stokeswim

#endif
