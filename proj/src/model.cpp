#include "stokeswim/model.hpp"

#include <stdexcept>

namespace stokeswim {

Vec3d FieldMix::value(const SpacePoint& p, double h) const {
  Vec3d v = constant;
  if (dipole != 0.0) v += dipole * dipole_field(p).value;
  if (torsion_cos != 0.0) v += torsion_cos * torsion_field(TorsionPart::cos_phase, p, h).value;
  if (torsion_sin != 0.0) v += torsion_sin * torsion_field(TorsionPart::sin_phase, p, h).value;
  return v;
}

Mat3d FieldMix::jacobian(const SpacePoint& p, double h) const {
  Mat3d j{};
  if (dipole != 0.0) j += dipole * dipole_field(p).jacobian;
  if (torsion_cos != 0.0) j += torsion_cos * torsion_field(TorsionPart::cos_phase, p, h).jacobian;
  if (torsion_sin != 0.0) j += torsion_sin * torsion_field(TorsionPart::sin_phase, p, h).jacobian;
  return j;
}

ModelBundle build_model(const ModelParams& params, PressureSign sign) {
  if (!(params.stokes_number > 0.0)) {
    throw std::domain_error("build_model requires h > 0 (momentum balance undefined at h = 0)");
  }
  if (!(params.mass_ratio > 0.0)) {
    throw std::domain_error("build_model requires mass_ratio > 0");
  }

  const double k = 4.0 * M_PI / (3.0 * params.inertia());

  ModelBundle m;
  m.params = params;
  m.pressure_sign = sign;

  // s = G1 cos t + (a + G2) sin t + k e_1 sin t; the constant comes from
  // integrating the body velocity in time.
  m.displacement.cos_part = FieldMix{0.0, 1.0, 0.0, {}};
  m.displacement.sin_part = FieldMix{1.0, 0.0, 1.0, {k, 0.0, 0.0}};

  m.surface_velocity.cos_part = m.displacement.sin_part;
  m.surface_velocity.sin_part = -m.displacement.cos_part;

  m.flow.cos_part = FieldMix{1.0, 0.0, 1.0, {}};
  m.flow.sin_part = FieldMix{0.0, -1.0, 0.0, {}};

  m.body_velocity.cos_part = {-k, 0.0, 0.0};
  m.body_velocity.sin_part = {};

  return m;
}

}  // namespace stokeswim
