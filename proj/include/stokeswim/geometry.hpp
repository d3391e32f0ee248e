#ifndef STOKESWIM_GEOMETRY_HPP
#define STOKESWIM_GEOMETRY_HPP

#include <cmath>

#include "stokeswim/tensor.hpp"

namespace stokeswim {

/// A point of the exterior domain {r >= 1} carrying both Cartesian and
/// spherical representations.  Zenith of the spherical frame is e_3:
///   x_3 = r cos(theta),  (x_1, x_2) = r sin(theta) (cos(phi), sin(phi)).
/// All lengths are in units of the body radius.
struct SpacePoint {
  Vec3d x{};           // Cartesian
  double r = 0;        // radial distance
  double theta = 0;    // polar angle in [0, pi]
  double phi = 0;      // azimuth in [0, 2*pi)

  static SpacePoint from_cartesian(const Vec3d& p) {
    SpacePoint s;
    s.x = p;
    s.r = norm(p);
    const double rho = std::hypot(p.x, p.y);
    s.theta = std::atan2(rho, p.z);
    s.phi = std::atan2(p.y, p.x);
    if (s.phi < 0) s.phi += 2.0 * M_PI;
    return s;
  }

  static SpacePoint from_spherical(double r, double theta, double phi) {
    SpacePoint s;
    s.r = r;
    s.theta = theta;
    s.phi = phi;
    const double st = std::sin(theta);
    s.x = {r * st * std::cos(phi), r * st * std::sin(phi), r * std::cos(theta)};
    return s;
  }

  /// Unit radial direction; only meaningful for r > 0.
  Vec3d radial_dir() const { return x * (1.0 / r); }
};

}  // namespace stokeswim

#endif
