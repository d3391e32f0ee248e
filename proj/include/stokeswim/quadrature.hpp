#ifndef STOKESWIM_QUADRATURE_HPP
#define STOKESWIM_QUADRATURE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "stokeswim/geometry.hpp"

// Deterministic, error-controlled integration over the unit sphere surface
// and the exterior volume {r > 1}.
//
// Normal convention, fixed project-wide: on the unit sphere the normal n is
// outward with respect to the liquid, i.e. pointing into the body,
// n = -e_r.  Surface integrands receive the point and build n themselves;
// every built-in consumer (tractions, cancellation checks) uses this
// convention.
//
// Angular rule: product of Gauss-Legendre in cos(theta) and a uniform
// trapezoid in phi.  The integrands produced by the field catalog are
// polynomials in the direction cosines of modest degree, so the product rule
// integrates them exactly once the node counts clear the degree; the
// defaults (24 x 48) leave ample headroom.
//
// Radial rule: adaptive Gauss-Kronrod 7/15 panels on a composite of
//   (i) a boundary-layer region [1, 1 + c / max(h, 1)] resolving the
//       exp(-h (r-1)) cos/sin(h (r-1)) oscillation-decay of the torsional
//       envelopes, and
//  (ii) a far-field region mapped by u = 1 - 1/r, which turns algebraic
//       decay into a polynomial in u.
// Panels split at the midpoint until the summed |K15 - G7| error estimate
// meets tolerance.  The panel schedule and the final ordered reduction are
// deterministic, so results are bit-reproducible.

namespace stokeswim {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Product angular grid over the unit sphere; weights sum to 4*pi.
struct AngularGrid {
  int n_polar = 0;
  int n_azimuth = 0;
  std::vector<double> sx, sy, sz;  // unit directions, phi-major within each theta ring
  std::vector<double> w;

  static AngularGrid product(int n_polar, int n_azimuth, double phi_offset = 0.0);
  std::size_t size() const { return w.size(); }
};

struct QuadResult {
  double value = 0;
  double error_estimate = 0;
  std::int64_t n_evals = 0;
  bool converged = false;
};

template <int K>
struct QuadResultN {
  std::array<double, K> value{};
  std::array<double, K> error_estimate{};
  std::int64_t n_evals = 0;
  bool converged = false;
};

/// Fixed product rule over the unit sphere.
struct SurfaceRule {
  explicit SurfaceRule(int n_polar = 24, int n_azimuth = 48, double phi_offset = 0.0)
      : grid(AngularGrid::product(n_polar, n_azimuth, phi_offset)),
        refined(AngularGrid::product(n_polar + 6, n_azimuth + 12, phi_offset)) {}

  AngularGrid grid;
  AngularGrid refined;  // used for the reported error estimate
};

/// Integrate f over the unit sphere surface.  f maps a surface point to
/// K values; the error estimate is the difference against a refined grid
/// (the returned value is the refined one).  Non-finite samples throw.
template <int K>
QuadResultN<K> integrate_surface(const std::function<std::array<double, K>(const SpacePoint&)>& f,
                                 const SurfaceRule& rule, double abs_tol = 1e-12);

/// Scalar convenience wrapper.
QuadResult integrate_surface_scalar(const std::function<double(const SpacePoint&)>& f,
                                    const SurfaceRule& rule, double abs_tol = 1e-12);

/// Adaptive rule for the exterior volume.
struct VolumeRule {
  int n_polar = 24;
  int n_azimuth = 48;
  double phi_offset = 0.0;
  double abs_tol = 1e-6;
  double rel_tol = 0.0;
  int max_panels = 512;
  double layer_extent = 10.0;   // boundary-layer width in units of 1 / max(h, 1)
  int initial_layer_panels = 4;
  int initial_far_panels = 4;
};

/// Radial shell integrand: r -> r^2 * (angular integral over the sphere of
/// radius r), one entry per component.  The exterior integral is the 1D
/// integral of this over r in (1, inf).
template <int K>
using ShellFn = std::function<std::array<double, K>(double r)>;

/// Integrate a shell integrand over (1, inf) with the layered adaptive
/// scheme; layer_scale is the Stokes number controlling the boundary-layer
/// width (use 0 when there is no layer).
template <int K>
QuadResultN<K> integrate_radial_shells(const ShellFn<K>& shell, const VolumeRule& rule,
                                       double layer_scale);

/// Integrate a pointwise integrand over the exterior volume by combining the
/// angular product grid with the adaptive radial scheme.
template <int K>
QuadResultN<K> integrate_exterior(const std::function<std::array<double, K>(const SpacePoint&)>& f,
                                  const VolumeRule& rule, double layer_scale);

QuadResult integrate_exterior_scalar(const std::function<double(const SpacePoint&)>& f,
                                     const VolumeRule& rule, double layer_scale);

extern template QuadResultN<1> integrate_surface<1>(
    const std::function<std::array<double, 1>(const SpacePoint&)>&, const SurfaceRule&, double);
extern template QuadResultN<3> integrate_surface<3>(
    const std::function<std::array<double, 3>(const SpacePoint&)>&, const SurfaceRule&, double);
extern template QuadResultN<1> integrate_radial_shells<1>(const ShellFn<1>&, const VolumeRule&,
                                                          double);
extern template QuadResultN<3> integrate_radial_shells<3>(const ShellFn<3>&, const VolumeRule&,
                                                          double);
extern template QuadResultN<6> integrate_radial_shells<6>(const ShellFn<6>&, const VolumeRule&,
                                                          double);
extern template QuadResultN<1> integrate_exterior<1>(
    const std::function<std::array<double, 1>(const SpacePoint&)>&, const VolumeRule&, double);
extern template QuadResultN<3> integrate_exterior<3>(
    const std::function<std::array<double, 3>(const SpacePoint&)>&, const VolumeRule&, double);
extern template QuadResultN<6> integrate_exterior<6>(
    const std::function<std::array<double, 6>(const SpacePoint&)>&, const VolumeRule&, double);

}  // namespace stokeswim

#endif
