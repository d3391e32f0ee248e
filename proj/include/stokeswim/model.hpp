#ifndef STOKESWIM_MODEL_HPP
#define STOKESWIM_MODEL_HPP

#include <cmath>

#include "stokeswim/fields.hpp"
#include "stokeswim/harmonic.hpp"

// The prescribed swimming stroke: a dipole stretch oscillating in phase with
// sin t, combined with a torsional oscillation about e_3, plus the
// counter-translation that keeps total momentum balanced.  All participating
// time-periodic fields are first harmonics built from the catalog in
// fields.hpp, so each one is represented by a pair of coefficient mixes.

namespace stokeswim {

/// Dimensionless model parameters.
struct ModelParams {
  /// Stokes number h = sqrt(omega / (2 nu)) * a; h >= 0.
  double stokes_number = 1.0;
  /// Body mass over a^3; defaults to 4*pi/3 (density-matched body).
  double mass_ratio = 4.0 * M_PI / 3.0;

  /// Effective inertia M = 2 (m/a^3) h^2; positive for h > 0.
  double inertia() const { return 2.0 * mass_ratio * stokes_number * stokes_number; }
};

/// Sign convention for the oscillatory pressure p0 = sign * 2 h^2 psi sin t.
/// `negative` is the closed form the formula set ships with; `positive` is
/// the variant that balances the linearized momentum equation (the
/// verification suite measures the residual of both).
enum class PressureSign { negative, positive };

inline double pressure_sign_factor(PressureSign s) {
  return s == PressureSign::negative ? -1.0 : 1.0;
}

/// Linear combination of the catalog fields:
///   dipole * a(x) + torsion_cos * G1(x) + torsion_sin * G2(x) + constant.
/// Used as one harmonic part of a model field.
struct FieldMix {
  double dipole = 0;
  double torsion_cos = 0;
  double torsion_sin = 0;
  Vec3d constant{};

  Vec3d value(const SpacePoint& p, double h) const;
  Mat3d jacobian(const SpacePoint& p, double h) const;

  FieldMix operator+(const FieldMix& o) const {
    return {dipole + o.dipole, torsion_cos + o.torsion_cos, torsion_sin + o.torsion_sin,
            constant + o.constant};
  }
  FieldMix operator-(const FieldMix& o) const {
    return {dipole - o.dipole, torsion_cos - o.torsion_cos, torsion_sin - o.torsion_sin,
            constant - o.constant};
  }
  FieldMix operator-() const { return {-dipole, -torsion_cos, -torsion_sin, -constant}; }
  FieldMix operator*(double s) const {
    return {dipole * s, torsion_cos * s, torsion_sin * s, constant * s};
  }
};

/// The full first-harmonic model at one parameter set:
///   displacement      s   = G1 cos t + (a + G2 + k e_1) sin t
///   surface_velocity  u*  = ds/dt
///   flow              V0  = (a + G2) cos t - G1 sin t
///   body_velocity     zeta0 = -k' cos t e_1
///   pressure          p0  = sign * 2 h^2 psi(x) sin t
/// with k = 4 pi / (3 M).  V0 = u* + zeta0 holds pointwise by construction.
struct ModelBundle {
  ModelParams params;
  Harmonic<FieldMix> displacement;
  Harmonic<FieldMix> surface_velocity;
  Harmonic<FieldMix> flow;
  Harmonic<Vec3d> body_velocity;
  PressureSign pressure_sign = PressureSign::negative;

  /// Coefficient of psi sin t in p0 (sign included).
  double pressure_sin_coeff() const {
    const double h = params.stokes_number;
    return pressure_sign_factor(pressure_sign) * 2.0 * h * h;
  }
};

/// Assemble the model bundle.  Throws std::domain_error for h = 0, where the
/// momentum-balance constant 4 pi / (3 M) is undefined.
ModelBundle build_model(const ModelParams& params,
                        PressureSign sign = PressureSign::negative);

}  // namespace stokeswim

#endif
