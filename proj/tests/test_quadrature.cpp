#include <doctest.h>

#include "stokeswim/fields.hpp"
#include "stokeswim/quadrature.hpp"
#include "support/oracles.hpp"

using namespace stokeswim;

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(12, x, w);
  double wsum = 0;
  for (double wi : w) wsum += wi;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  for (int power : {0, 2, 4, 8, 12, 20}) {
    double acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * std::pow(x[i], power);
    CHECK(acc == doctest::Approx(2.0 / (power + 1)).epsilon(1e-13));  // exact to degree 23
  }
  double odd = 0;
  for (std::size_t i = 0; i < x.size(); ++i) odd += w[i] * std::pow(x[i], 7);
  CHECK(odd == doctest::Approx(0.0));
}

TEST_CASE("angular grid weights sum to the sphere area") {
  for (int np : {8, 24}) {
    const AngularGrid g = AngularGrid::product(np, 2 * np);
    double s = 0;
    for (double w : g.w) s += w;
    CHECK(s == doctest::Approx(4.0 * M_PI).epsilon(1e-13));
  }
}

TEST_CASE("surface integrals of reference integrands") {
  const SurfaceRule rule(24, 48);

  const QuadResult area = integrate_surface_scalar(
      [](const SpacePoint&) { return 1.0; }, rule);
  CHECK(area.value == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
  CHECK(area.converged);

  // first moment of the dipole potential against the radial direction
  std::function<std::array<double, 3>(const SpacePoint&)> moment =
      [](const SpacePoint& p) {
        const double psi = dipole_potential(p);
        const Vec3d er = p.radial_dir();
        return std::array<double, 3>{psi * er.x, psi * er.y, psi * er.z};
      };
  const auto m = integrate_surface<3>(moment, rule);
  CHECK(m.value[0] == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-13));
  CHECK(std::fabs(m.value[1]) < 1e-14);
  CHECK(std::fabs(m.value[2]) < 1e-14);

  const QuadResult x1sq = integrate_surface_scalar(
      [](const SpacePoint& p) { return p.x.x * p.x.x; }, rule);
  CHECK(x1sq.value == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));
}

TEST_CASE("non-finite surface samples are reported with the node") {
  const SurfaceRule rule(8, 16);
  CHECK_THROWS_WITH_AS(
      integrate_surface_scalar([](const SpacePoint&) { return std::nan(""); }, rule),
      doctest::Contains("non-finite surface sample"), std::runtime_error);
}

TEST_CASE("exterior integral of the algebraic probe") {
  VolumeRule rule;
  const QuadResult q = integrate_exterior_scalar(
      [](const SpacePoint& p) { return std::pow(p.r, -4.0); }, rule, 0.0);
  CHECK(q.converged);
  CHECK(std::fabs(q.value - 4.0 * M_PI) < rule.abs_tol);
  CHECK(q.error_estimate <= rule.abs_tol);
}

TEST_CASE("exterior integral of the separable dipole-squared probe") {
  VolumeRule rule;
  const QuadResult q = integrate_exterior_scalar(
      [](const SpacePoint& p) {
        const double psi = dipole_potential(p);
        return psi * psi;
      },
      rule, 0.0);
  // separable oracle: angular moment (4 pi / 3) times the radial integral
  const double radial = oracle::adaptive_simpson(
      [](double r) { return std::pow(r, -4.0) * r * r; }, 1.0, 800.0, 1e-12);
  const double tail = 1.0 / 800.0;  // int of r^-2 beyond the truncation
  CHECK(std::fabs(q.value - (4.0 * M_PI / 3.0) * (radial + tail)) < rule.abs_tol);
}

TEST_CASE("boundary-layer probe at h = 50 matches the radial oracle") {
  VolumeRule rule;
  const double h = 50.0;
  const QuadResult q = integrate_exterior_scalar(
      [h](const SpacePoint& p) { return std::exp(-h * (p.r - 1.0)) / (p.r * p.r); }, rule, h);
  const double expected = oracle::radial_exterior_integral(
      [h](double r) { return std::exp(-h * (r - 1.0)) / (r * r); }, 5.0);
  CHECK(std::fabs(q.value - expected) < rule.abs_tol);
  CHECK(std::fabs(q.value - 4.0 * M_PI / h) < rule.abs_tol);  // analytic value
}

TEST_CASE("rotational symmetry of radius-only integrands") {
  VolumeRule rule;
  VolumeRule rotated = rule;
  rotated.phi_offset = 0.37;
  auto f = [](const SpacePoint& p) { return std::exp(-2.0 * (p.r - 1.0)) / p.r; };
  const QuadResult a = integrate_exterior_scalar(f, rule, 2.0);
  const QuadResult b = integrate_exterior_scalar(f, rotated, 2.0);
  CHECK(std::fabs(a.value - b.value) < 1e-12);
}

TEST_CASE("refinement changes stay within the reported error estimate") {
  VolumeRule base;
  VolumeRule fine = base;
  fine.n_polar *= 2;
  fine.n_azimuth *= 2;
  fine.initial_layer_panels *= 2;
  fine.initial_far_panels *= 2;
  for (double h : {0.0, 3.0}) {
    auto f = [h](const SpacePoint& p) {
      return std::exp(-h * (p.r - 1.0)) * std::pow(p.r, -4.0) * (1.0 + p.x.x / p.r);
    };
    const QuadResult a = integrate_exterior_scalar(f, base, h);
    const QuadResult b = integrate_exterior_scalar(f, fine, h);
    CHECK(std::fabs(a.value - b.value) <= std::max(a.error_estimate, 1e-14));
  }
}

TEST_CASE("starved budgets are flagged, never silently wrong") {
  VolumeRule rule;
  rule.abs_tol = 1e-13;
  rule.rel_tol = 0.0;
  rule.max_panels = 9;  // below the initial panel count + one split
  const QuadResult q = integrate_exterior_scalar(
      [](const SpacePoint& p) { return std::sin(40.0 * p.r) / std::pow(p.r, 4.0); }, rule, 0.0);
  CHECK_FALSE(q.converged);
}

TEST_CASE("rule construction guards") {
  std::vector<double> x, w;
  CHECK_THROWS_AS(gauss_legendre(0, x, w), std::invalid_argument);
  gauss_legendre(1, x, w);
  CHECK(x[0] == doctest::Approx(0.0));
  CHECK(w[0] == doctest::Approx(2.0));
  CHECK_THROWS_AS(AngularGrid::product(0, 8), std::invalid_argument);
  CHECK_THROWS_AS(AngularGrid::product(8, 0), std::invalid_argument);
}

TEST_CASE("relative tolerance mode") {
  VolumeRule rule;
  rule.abs_tol = 1e-300;  // force the relative criterion to govern
  rule.rel_tol = 1e-8;
  const QuadResult q = integrate_exterior_scalar(
      [](const SpacePoint& p) { return std::pow(p.r, -4.0); }, rule, 0.0);
  CHECK(q.converged);
  CHECK(q.error_estimate <= 1e-8 * std::fabs(q.value));
}
