#include "stokeswim/thrust.hpp"

#include <cmath>
#include <stdexcept>

#include "stokeswim/harmonic.hpp"
#include "stokeswim/kernels.hpp"

namespace stokeswim {

namespace {

Vec3d mix_value_raw(const FieldMix& mix, const Vec3d& x, double r, double h) {
  Vec3d v = mix.constant;
  if (mix.dipole != 0.0) v += mix.dipole * detail::dipole_field_raw(x, r).value;
  if (mix.torsion_cos != 0.0 || mix.torsion_sin != 0.0) {
    const TorsionProfiles t = detail::torsion_profiles_raw(r, h);
    if (mix.torsion_cos != 0.0)
      v += mix.torsion_cos * detail::torsion_field_raw(x, r, t.G1, t.dG1).value;
    if (mix.torsion_sin != 0.0)
      v += mix.torsion_sin * detail::torsion_field_raw(x, r, t.G2, t.dG2).value;
  }
  return v;
}

Mat3d mix_jacobian_raw(const FieldMix& mix, const Vec3d& x, double r, double h) {
  Mat3d j{};
  if (mix.dipole != 0.0) j += mix.dipole * detail::dipole_field_raw(x, r).jacobian;
  if (mix.torsion_cos != 0.0 || mix.torsion_sin != 0.0) {
    const TorsionProfiles t = detail::torsion_profiles_raw(r, h);
    if (mix.torsion_cos != 0.0)
      j += mix.torsion_cos * detail::torsion_field_raw(x, r, t.G1, t.dG1).jacobian;
    if (mix.torsion_sin != 0.0)
      j += mix.torsion_sin * detail::torsion_field_raw(x, r, t.G2, t.dG2).jacobian;
  }
  return j;
}

}  // namespace

namespace detail {

std::array<Mat3d, 3> mix_hessian(const FieldMix& mix, const Vec3d& x, double h) {
  // Central differences of the exact Jacobian at steps e and e/2, combined
  // by one Richardson extrapolation: (4 D(e/2) - D(e)) / 3.
  const double r = norm(x);
  const double e = 1e-3 * std::max(1.0, r);

  std::array<Mat3d, 3> hess;
  for (int l = 0; l < 3; ++l) {
    auto central = [&](double step) {
      Vec3d xp = x, xm = x;
      xp[l] += step;
      xm[l] -= step;
      const Mat3d jp = mix_jacobian_raw(mix, xp, norm(xp), h);
      const Mat3d jm = mix_jacobian_raw(mix, xm, norm(xm), h);
      return (jp - jm) * (0.5 / step);
    };
    const Mat3d coarse = central(e);
    const Mat3d fine = central(0.5 * e);
    hess[l] = (fine * 4.0 - coarse) * (1.0 / 3.0);
  }
  return hess;
}

std::array<double, 6> raw_volume_integrand(const ModelBundle& m, const SpacePoint& p) {
  const double h = m.params.stokes_number;
  const double h2 = h * h;
  const double p0_coeff = m.pressure_sin_coeff();

  // Harmonic parts of every participating quantity at this point.
  const Vec3d a_val = detail::dipole_field_raw(p.x, p.r).value;  // grad psi

  const Harmonic<Vec3d> flow_val{mix_value_raw(m.flow.cos_part, p.x, p.r, h),
                                 mix_value_raw(m.flow.sin_part, p.x, p.r, h)};
  const Harmonic<Vec3d> surf_val{mix_value_raw(m.surface_velocity.cos_part, p.x, p.r, h),
                                 mix_value_raw(m.surface_velocity.sin_part, p.x, p.r, h)};
  const Harmonic<Mat3d> grad_flow{mix_jacobian_raw(m.flow.cos_part, p.x, p.r, h),
                                  mix_jacobian_raw(m.flow.sin_part, p.x, p.r, h)};
  const Harmonic<Mat3d> grad_disp{mix_jacobian_raw(m.displacement.cos_part, p.x, p.r, h),
                                  mix_jacobian_raw(m.displacement.sin_part, p.x, p.r, h)};

  // Inertial slip: flow minus boundary velocity minus rigid velocity.  This
  // vanishes pointwise by construction; it is evaluated literally so the
  // cancellation is exercised, not assumed.
  const Harmonic<Vec3d> slip{flow_val.cos_part - surf_val.cos_part - m.body_velocity.cos_part,
                             flow_val.sin_part - surf_val.sin_part - m.body_velocity.sin_part};
  const Vec3d inertial =
      average_product(slip, grad_flow, [](const Vec3d& v, const Mat3d& g) { return vec_mat(v, g); });

  // Stress divergence contracted with the displacement gradient:
  //   [(grad s)^T : grad T]_k = sum_{j,l} (grad s)_jl d_l T_jk,
  //   d_l T_jk = d_l d_j V_k + d_l d_k V_j - d_l p0 d_jk.
  const auto hess_cos = mix_hessian(m.flow.cos_part, p.x, h);
  const auto hess_sin = mix_hessian(m.flow.sin_part, p.x, h);
  const Vec3d grad_p0_sin = p0_coeff * a_val;  // exact: grad psi = a

  auto stress_div_term = [](const Mat3d& gs, const std::array<Mat3d, 3>& hess,
                            const Vec3d& grad_p0) {
    Vec3d out{};
    for (int k = 0; k < 3; ++k) {
      double acc = 0;
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
          const double dT = hess[l][j][k] + hess[l][k][j] - (j == k ? grad_p0[l] : 0.0);
          acc += gs[j][l] * dT;
        }
      out[k] = acc;
    }
    return out;
  };
  const Vec3d stress_div_cos = stress_div_term(grad_disp.cos_part, hess_cos, Vec3d{});
  const Vec3d stress_div_sin = stress_div_term(grad_disp.sin_part, hess_sin, grad_p0_sin);
  const Vec3d stress_div = (stress_div_cos + stress_div_sin) * 0.5;

  // Symmetrized product of displacement and flow gradients.
  const Mat3d cross = average_product(grad_disp, grad_flow, [](const Mat3d& a, const Mat3d& b) {
    const Mat3d ab = a * b;
    return ab + transpose(ab);
  });

  // Trace form entering the pressure-weighted functional.
  const double trace_avg =
      average_product(grad_disp, grad_flow,
                      [](const Mat3d& a, const Mat3d& b) { return trace(a * b); });

  const Vec3d combined = 2.0 * h2 * inertial + stress_div;

  std::array<double, 6> out{};
  for (int i = 0; i < 3; ++i) {
    const StokesFlow aux = detail::stokes_translation_raw(i, p.x, p.r);
    const Mat3d Di = sym(aux.jacobian);
    out[i] = -(dot(combined, aux.velocity) - ddot(cross, Di));
    out[3 + i] = -trace_avg * aux.pressure;
  }
  return out;
}

std::array<double, 3> raw_surface_integrand(const ModelBundle& m, const SpacePoint& p) {
  const double h = m.params.stokes_number;
  const double psi = detail::dipole_potential_raw(p.x, p.r);

  const Harmonic<Mat3d> grad_flow{mix_jacobian_raw(m.flow.cos_part, p.x, p.r, h),
                                  mix_jacobian_raw(m.flow.sin_part, p.x, p.r, h)};
  const Harmonic<Mat3d> grad_disp{mix_jacobian_raw(m.displacement.cos_part, p.x, p.r, h),
                                  mix_jacobian_raw(m.displacement.sin_part, p.x, p.r, h)};

  const Harmonic<double> p0{0.0, m.pressure_sin_coeff() * psi};

  auto stress = [](const Mat3d& g, double pr) {
    return g + transpose(g) - pr * Mat3d::identity();
  };
  const Harmonic<Mat3d> T{stress(grad_flow.cos_part, p0.cos_part),
                          stress(grad_flow.sin_part, p0.sin_part)};

  // H(s) = div s * I - (grad s)^T; div s vanishes analytically but is kept.
  auto hmat = [](const Mat3d& gs) { return trace(gs) * Mat3d::identity() - transpose(gs); };
  const Harmonic<Mat3d> H{hmat(grad_disp.cos_part), hmat(grad_disp.sin_part)};

  const Mat3d avg = average_product(
      T, H, [](const Mat3d& t, const Mat3d& hh) { return t * transpose(hh); });

  const Vec3d n = -p.radial_dir();  // outward with respect to the liquid
  const Vec3d v = mat_vec(avg, n);
  return {v.x, v.y, v.z};
}

}  // namespace detail

ReducedKernelValue reduced_integrand(int axis, const SpacePoint& p, const ModelParams& params) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
  const double h = params.stokes_number;

  const VecJac a = dipole_field(p);
  const VecJac g1 = torsion_field(TorsionPart::cos_phase, p, h);
  const VecJac g2 = torsion_field(TorsionPart::sin_phase, p, h);
  const StokesFlow aux = stokes_translation(axis, p);

  const Mat3d& S = a.jacobian;
  const Mat3d D1 = sym(g1.jacobian);
  const Mat3d D2 = sym(g2.jacobian);
  const Mat3d K1 = g1.jacobian - transpose(g1.jacobian);
  const Mat3d Di = sym(aux.jacobian);

  ReducedKernelValue out;
  out.main = ddot(S, g1.jacobian * aux.jacobian) - ddot(D1, S * aux.jacobian) +
             0.5 * ddot(S * K1 - K1 * S, Di) -
             h * h * dot(aux.velocity, mat_vec(g2.jacobian, a.value));

  const Mat3d C12 = g1.jacobian * g2.jacobian;
  const Mat3d C21 = g2.jacobian * g1.jacobian;
  out.remainder = ddot(D2, g1.jacobian * aux.jacobian) - ddot(D1, g2.jacobian * aux.jacobian) +
                  0.5 * ddot(C12 + transpose(C12) - C21 - transpose(C21), Di);
  return out;
}

ThrustResult thrust_reduced(const ModelParams& params, const VolumeRule& rule) {
  if (!(params.stokes_number >= 0.0)) {
    throw std::domain_error("thrust_reduced requires h >= 0");
  }
  const double h = params.stokes_number;
  const AngularGrid grid = AngularGrid::product(rule.n_polar, rule.n_azimuth, rule.phi_offset);

  ShellFn<6> shell = [&](double r) {
    const RadialContext ctx = make_radial_context(r, h);
    std::array<double, 6> sums = reduced_angular_sums(ctx, grid);
    for (double& v : sums) v *= r * r;
    return sums;
  };
  const QuadResultN<6> q = integrate_radial_shells<6>(shell, rule, h);

  ThrustResult res;
  res.stokes_number = h;
  res.path = ThrustPath::reduced;
  res.G0 = {q.value[0] + q.value[3], q.value[1] + q.value[4], q.value[2] + q.value[5]};
  res.G1_vec = {};
  res.R = {q.value[3], q.value[4], q.value[5]};
  res.G = res.G0;
  res.gamma1 = propulsion_velocity(res.G);
  res.error_estimate = 0;
  for (double e : q.error_estimate) res.error_estimate = std::max(res.error_estimate, e);
  res.n_evals = q.n_evals * static_cast<std::int64_t>(grid.size());
  res.converged = q.converged;
  return res;
}

ThrustResult thrust_raw(const ModelParams& params, const VolumeRule& volume_rule,
                        const SurfaceRule& surface_rule, PressureSign sign) {
  const ModelBundle m = build_model(params, sign);  // rejects h = 0

  auto vol_fn = [&m](const SpacePoint& p) { return detail::raw_volume_integrand(m, p); };
  const QuadResultN<6> vol = integrate_exterior<6>(vol_fn, volume_rule, params.stokes_number);

  auto surf_fn = [&m](const SpacePoint& p) { return detail::raw_surface_integrand(m, p); };
  const QuadResultN<3> surf = integrate_surface<3>(surf_fn, surface_rule, volume_rule.abs_tol);

  ThrustResult res;
  res.stokes_number = params.stokes_number;
  res.path = ThrustPath::raw;
  res.pressure_sign = sign;
  res.G0 = {vol.value[0] - surf.value[0], vol.value[1] - surf.value[1],
            vol.value[2] - surf.value[2]};
  res.G1_vec = {vol.value[3], vol.value[4], vol.value[5]};
  res.R = {};
  res.G = res.G0 + res.G1_vec;
  res.gamma1 = propulsion_velocity(res.G);
  res.error_estimate = 0;
  for (double e : vol.error_estimate) res.error_estimate = std::max(res.error_estimate, e);
  for (double e : surf.error_estimate) res.error_estimate = std::max(res.error_estimate, e);
  res.n_evals = vol.n_evals + surf.n_evals;
  res.converged = vol.converged;
  return res;
}

Vec3d propulsion_velocity(const Vec3d& G) { return G * (1.0 / (6.0 * M_PI)); }

}  // namespace stokeswim
