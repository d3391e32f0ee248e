#include "stokeswim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stokeswim {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre requires n >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);

  // Newton iteration on P_n from the Chebyshev-like initial guess; standard
  // three-term recurrence for the value and derivative.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

AngularGrid AngularGrid::product(int n_polar, int n_azimuth, double phi_offset) {
  if (n_polar < 1 || n_azimuth < 1) {
    throw std::invalid_argument("angular grid needs at least one node per direction");
  }
  std::vector<double> mu, wmu;
  gauss_legendre(n_polar, mu, wmu);

  AngularGrid g;
  g.n_polar = n_polar;
  g.n_azimuth = n_azimuth;
  const std::size_t n = static_cast<std::size_t>(n_polar) * n_azimuth;
  g.sx.reserve(n);
  g.sy.reserve(n);
  g.sz.reserve(n);
  g.w.reserve(n);

  const double wphi = 2.0 * M_PI / n_azimuth;
  for (int ip = 0; ip < n_polar; ++ip) {
    const double ct = mu[ip];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int ia = 0; ia < n_azimuth; ++ia) {
      const double phi = phi_offset + wphi * ia;
      g.sx.push_back(st * std::cos(phi));
      g.sy.push_back(st * std::sin(phi));
      g.sz.push_back(ct);
      g.w.push_back(wmu[ip] * wphi);
    }
  }
  return g;
}

namespace {

// Gauss-Kronrod 7/15 pair on [-1, 1]; even-index abscissae carry the
// embedded 7-point Gauss rule.
constexpr int kGkPoints = 15;
constexpr double kGkNode[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kGkWeight[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussWeight[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <int K>
struct Panel {
  double lo = 0, hi = 0;
  bool in_u = false;  // false: coordinate is r; true: coordinate is u = 1 - 1/r
  std::array<double, K> value{};
  std::array<double, K> error{};
};

template <int K>
void eval_panel(const ShellFn<K>& shell, Panel<K>& p, std::int64_t& n_evals) {
  const double center = 0.5 * (p.lo + p.hi);
  const double half = 0.5 * (p.hi - p.lo);

  std::array<double, K> kron{};
  std::array<double, K> gauss{};

  auto sample = [&](double t) {
    const double r = p.in_u ? 1.0 / (1.0 - t) : t;
    std::array<double, K> v = shell(r);
    if (p.in_u) {
      const double jac = 1.0 / ((1.0 - t) * (1.0 - t));
      for (int k = 0; k < K; ++k) v[k] *= jac;
    }
    ++n_evals;
    return v;
  };

  for (int j = 0; j < 8; ++j) {
    if (j == 7) {
      const auto v = sample(center);
      for (int k = 0; k < K; ++k) {
        kron[k] += kGkWeight[7] * v[k];
        gauss[k] += kGaussWeight[3] * v[k];
      }
      break;
    }
    const auto vp = sample(center + half * kGkNode[j]);
    const auto vm = sample(center - half * kGkNode[j]);
    for (int k = 0; k < K; ++k) {
      kron[k] += kGkWeight[j] * (vp[k] + vm[k]);
      if (j % 2 == 1) gauss[k] += kGaussWeight[j / 2] * (vp[k] + vm[k]);
    }
  }

  for (int k = 0; k < K; ++k) {
    p.value[k] = kron[k] * half;
    p.error[k] = std::fabs((kron[k] - gauss[k]) * half);
  }
}

}  // namespace

template <int K>
QuadResultN<K> integrate_radial_shells(const ShellFn<K>& shell, const VolumeRule& rule,
                                       double layer_scale) {
  if (rule.initial_layer_panels < 1 || rule.initial_far_panels < 1) {
    throw std::invalid_argument("volume rule needs at least one panel per region");
  }
  if (!(rule.layer_extent > 0)) {
    throw std::invalid_argument("volume rule needs a positive layer extent");
  }
  const double scale = std::max(layer_scale, 1.0);
  const double r_layer = 1.0 + rule.layer_extent / scale;
  const double u_layer = 1.0 - 1.0 / r_layer;

  std::vector<Panel<K>> panels;
  panels.reserve(64);
  QuadResultN<K> out;

  for (int i = 0; i < rule.initial_layer_panels; ++i) {
    Panel<K> p;
    p.lo = 1.0 + (r_layer - 1.0) * i / rule.initial_layer_panels;
    p.hi = 1.0 + (r_layer - 1.0) * (i + 1) / rule.initial_layer_panels;
    p.in_u = false;
    eval_panel<K>(shell, p, out.n_evals);
    panels.push_back(p);
  }
  for (int i = 0; i < rule.initial_far_panels; ++i) {
    Panel<K> p;
    p.lo = u_layer + (1.0 - u_layer) * i / rule.initial_far_panels;
    p.hi = u_layer + (1.0 - u_layer) * (i + 1) / rule.initial_far_panels;
    p.in_u = true;
    eval_panel<K>(shell, p, out.n_evals);
    panels.push_back(p);
  }

  auto tolerance_met = [&]() {
    std::array<double, K> tot{}, err{};
    for (const auto& p : panels)
      for (int k = 0; k < K; ++k) {
        tot[k] += p.value[k];
        err[k] += p.error[k];
      }
    for (int k = 0; k < K; ++k) {
      if (err[k] > std::max(rule.abs_tol, rule.rel_tol * std::fabs(tot[k]))) return false;
    }
    return true;
  };

  while (!tolerance_met() && static_cast<int>(panels.size()) < rule.max_panels) {
    // Split the panel with the largest single-component error (first such
    // panel on ties, so the schedule is deterministic).
    std::size_t worst = 0;
    double worst_err = -1.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      const double e = *std::max_element(panels[i].error.begin(), panels[i].error.end());
      if (e > worst_err) {
        worst_err = e;
        worst = i;
      }
    }
    Panel<K> left = panels[worst];
    Panel<K> right = panels[worst];
    const double mid = 0.5 * (left.lo + left.hi);
    left.hi = mid;
    right.lo = mid;
    eval_panel<K>(shell, left, out.n_evals);
    eval_panel<K>(shell, right, out.n_evals);
    panels[worst] = left;
    panels.push_back(right);
  }

  // Ordered reduction: sort by interval start (u-panels follow r-panels at
  // the same coordinate because u < 1 <= r never interleaves in practice).
  std::sort(panels.begin(), panels.end(), [](const Panel<K>& a, const Panel<K>& b) {
    if (a.in_u != b.in_u) return !a.in_u;
    return a.lo < b.lo;
  });
  for (const auto& p : panels)
    for (int k = 0; k < K; ++k) {
      out.value[k] += p.value[k];
      out.error_estimate[k] += p.error[k];
    }
  out.converged = true;
  for (int k = 0; k < K; ++k) {
    if (out.error_estimate[k] > std::max(rule.abs_tol, rule.rel_tol * std::fabs(out.value[k]))) {
      out.converged = false;
    }
    if (!std::isfinite(out.value[k])) {
      throw std::runtime_error("non-finite exterior integral");
    }
  }
  return out;
}

template <int K>
QuadResultN<K> integrate_exterior(const std::function<std::array<double, K>(const SpacePoint&)>& f,
                                  const VolumeRule& rule, double layer_scale) {
  const AngularGrid grid = AngularGrid::product(rule.n_polar, rule.n_azimuth, rule.phi_offset);
  ShellFn<K> shell = [&f, &grid](double r) {
    std::array<double, K> acc{};
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const SpacePoint p = SpacePoint::from_cartesian({r * grid.sx[j], r * grid.sy[j], r * grid.sz[j]});
      const auto v = f(p);
      for (int k = 0; k < K; ++k) acc[k] += grid.w[j] * v[k];
    }
    for (int k = 0; k < K; ++k) acc[k] *= r * r;
    return acc;
  };
  return integrate_radial_shells<K>(shell, rule, layer_scale);
}

QuadResult integrate_exterior_scalar(const std::function<double(const SpacePoint&)>& f,
                                     const VolumeRule& rule, double layer_scale) {
  auto wrapped = [&f](const SpacePoint& p) { return std::array<double, 1>{f(p)}; };
  const auto r = integrate_exterior<1>(wrapped, rule, layer_scale);
  return {r.value[0], r.error_estimate[0], r.n_evals, r.converged};
}

template <int K>
QuadResultN<K> integrate_surface(const std::function<std::array<double, K>(const SpacePoint&)>& f,
                                 const SurfaceRule& rule, double abs_tol) {
  auto run = [&f](const AngularGrid& grid, std::int64_t& evals) {
    std::array<double, K> acc{};
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const SpacePoint p = SpacePoint::from_cartesian({grid.sx[j], grid.sy[j], grid.sz[j]});
      const auto v = f(p);
      for (int k = 0; k < K; ++k) {
        if (!std::isfinite(v[k])) {
          throw std::runtime_error("non-finite surface sample at phi = " + std::to_string(p.phi) +
                                   ", theta = " + std::to_string(p.theta));
        }
        acc[k] += grid.w[j] * v[k];
      }
      ++evals;
    }
    return acc;
  };

  QuadResultN<K> out;
  const auto coarse = run(rule.grid, out.n_evals);
  const auto fine = run(rule.refined, out.n_evals);
  out.converged = true;
  for (int k = 0; k < K; ++k) {
    out.value[k] = fine[k];
    out.error_estimate[k] = std::fabs(fine[k] - coarse[k]);
    if (out.error_estimate[k] > abs_tol) out.converged = false;
  }
  return out;
}

QuadResult integrate_surface_scalar(const std::function<double(const SpacePoint&)>& f,
                                    const SurfaceRule& rule, double abs_tol) {
  auto wrapped = [&f](const SpacePoint& p) { return std::array<double, 1>{f(p)}; };
  const auto r = integrate_surface<1>(wrapped, rule, abs_tol);
  return {r.value[0], r.error_estimate[0], r.n_evals, r.converged};
}

template QuadResultN<1> integrate_surface<1>(
    const std::function<std::array<double, 1>(const SpacePoint&)>&, const SurfaceRule&, double);
template QuadResultN<3> integrate_surface<3>(
    const std::function<std::array<double, 3>(const SpacePoint&)>&, const SurfaceRule&, double);
template QuadResultN<1> integrate_radial_shells<1>(const ShellFn<1>&, const VolumeRule&, double);
template QuadResultN<3> integrate_radial_shells<3>(const ShellFn<3>&, const VolumeRule&, double);
template QuadResultN<6> integrate_radial_shells<6>(const ShellFn<6>&, const VolumeRule&, double);
template QuadResultN<1> integrate_exterior<1>(
    const std::function<std::array<double, 1>(const SpacePoint&)>&, const VolumeRule&, double);
template QuadResultN<3> integrate_exterior<3>(
    const std::function<std::array<double, 3>(const SpacePoint&)>&, const VolumeRule&, double);
template QuadResultN<6> integrate_exterior<6>(
    const std::function<std::array<double, 6>(const SpacePoint&)>&, const VolumeRule&, double);

}  // namespace stokeswim
