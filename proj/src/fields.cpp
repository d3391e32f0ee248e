#include "stokeswim/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace stokeswim {

namespace {

void require_exterior(const SpacePoint& p) {
  // Surface points assembled from unit directions may sit a few ulp below 1.
  if (!(p.r >= 1.0 - 1e-9)) {
    throw std::domain_error("field evaluated inside the body (r < 1)");
  }
}

}  // namespace

namespace detail {

double dipole_potential_raw(const Vec3d& x, double r) {
  const double ir = 1.0 / r;
  const double ir3 = ir * ir * ir;
  return x.x * ir3;
}

VecJac dipole_field_raw(const Vec3d& x, double r) {
  const double ir = 1.0 / r;
  const double ir2 = ir * ir;
  const double ir3 = ir2 * ir;
  const double ir5 = ir3 * ir2;
  const double ir7 = ir5 * ir2;

  VecJac f;
  // grad(x_1 / r^3) = e_1 / r^3 - 3 x_1 x / r^5
  f.value = Vec3d{ir3, 0.0, 0.0} - (3.0 * x.x * ir5) * x;

  // Hessian of x_1 / r^3:
  //   H_ik = -3 (d_k1 x_i + d_i1 x_k + x_1 d_ik) / r^5 + 15 x_1 x_i x_k / r^7
  const double c5 = -3.0 * ir5;
  const double c7 = 15.0 * x.x * ir7;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      double v = c7 * x[i] * x[k];
      if (k == 0) v += c5 * x[i];
      if (i == 0) v += c5 * x[k];
      if (i == k) v += c5 * x.x;
      f.jacobian[i][k] = v;
    }
  }
  return f;
}

VecJac torsion_field_raw(const Vec3d& x, double r, double envelope, double envelope_deriv) {
  // Field W(r) * (-x_2, x_1, 0) with W = G(r)/r; its divergence vanishes
  // identically because x . (-x_2, x_1, 0) = 0.
  const double ir = 1.0 / r;
  const double W = envelope * ir;
  const double dW = envelope_deriv * ir - envelope * ir * ir;

  const Vec3d u{-x.y, x.x, 0.0};
  VecJac f;
  f.value = W * u;

  const double s = dW * ir;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) f.jacobian[i][k] = s * x[i] * u[k];
  f.jacobian[0][1] += W;
  f.jacobian[1][0] -= W;
  return f;
}

TorsionProfiles torsion_profiles_raw(double r, double h) {
  const double den = 1.0 + 2.0 * h + 2.0 * h * h;
  const double rm1 = r - 1.0;

  TorsionProfiles t;
  t.g1 = (1.0 + h * (r + 1.0) + 2.0 * h * h * r) / den;
  t.g2 = h * rm1 / den;
  const double dg1 = (h + 2.0 * h * h) / den;
  const double dg2 = h / den;

  const double decay = std::exp(-h * rm1);
  const double c = std::cos(h * rm1);
  const double s = std::sin(h * rm1);

  const double ir = 1.0 / r;
  const double ir2 = ir * ir;

  const double P = t.g1 * c + t.g2 * s;
  const double Q = t.g1 * s - t.g2 * c;
  const double dP = (dg1 + h * t.g2) * c + (dg2 - h * t.g1) * s;
  const double dQ = (dg1 + h * t.g2) * s - (dg2 - h * t.g1) * c;

  t.G1 = decay * ir2 * P;
  t.G2 = decay * ir2 * Q;
  t.dG1 = decay * ir2 * (dP - (h + 2.0 * ir) * P);
  t.dG2 = decay * ir2 * (dQ - (h + 2.0 * ir) * Q);
  return t;
}

StokesFlow stokes_translation_raw(int axis, const Vec3d& x, double r) {
  const double ir = 1.0 / r;
  const double ir2 = ir * ir;
  const double ir3 = ir2 * ir;
  const double ir4 = ir2 * ir2;
  const double ir5 = ir3 * ir2;
  const double ir6 = ir3 * ir3;

  // velocity_l = A x_axis x_l + B d_{axis,l}
  const double A = 0.75 * (ir3 - ir5);
  const double B = 0.25 * (3.0 * ir + ir3);
  const double dA = 0.75 * (-3.0 * ir4 + 5.0 * ir6);
  const double dB = 0.25 * (-3.0 * ir2 - 3.0 * ir4);

  StokesFlow f;
  const double xa = x[axis];
  f.velocity = (A * xa) * x;
  f.velocity[axis] += B;

  for (int k = 0; k < 3; ++k) {
    const double radial = x[k] * ir;
    for (int l = 0; l < 3; ++l) {
      double v = dA * radial * xa * x[l];
      if (k == axis) v += A * x[l];
      if (k == l) v += A * xa;
      if (axis == l) v += dB * radial;
      f.jacobian[k][l] = v;
    }
  }

  f.pressure = 1.5 * xa * ir3;
  f.pressure_gradient = (-4.5 * xa * ir5) * x;
  f.pressure_gradient[axis] += 1.5 * ir3;
  return f;
}

}  // namespace detail

double dipole_potential(const SpacePoint& p) {
  require_exterior(p);
  return detail::dipole_potential_raw(p.x, p.r);
}

VecJac dipole_field(const SpacePoint& p) {
  require_exterior(p);
  return detail::dipole_field_raw(p.x, p.r);
}

TorsionProfiles torsion_profiles(double r, double h) {
  if (!(r >= 1.0 - 1e-9)) throw std::domain_error("torsion_profiles requires r >= 1");
  if (!(h >= 0.0)) throw std::domain_error("torsion_profiles requires h >= 0");
  return detail::torsion_profiles_raw(r, h);
}

VecJac torsion_field(TorsionPart part, const SpacePoint& p, double h) {
  require_exterior(p);
  const TorsionProfiles t = torsion_profiles(p.r, h);
  if (part == TorsionPart::cos_phase)
    return detail::torsion_field_raw(p.x, p.r, t.G1, t.dG1);
  return detail::torsion_field_raw(p.x, p.r, t.G2, t.dG2);
}

StokesFlow stokes_translation(int axis, const SpacePoint& p) {
  require_exterior(p);
  if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
  return detail::stokes_translation_raw(axis, p.x, p.r);
}

}  // namespace stokeswim
