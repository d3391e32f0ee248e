// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion (details indented).  Exits
// with the number of failed criteria.
//
// Three sub-clauses are expected to fail on well-understood grounds that are
// measured and reported here rather than hidden; see the detail lines they
// print (the closed-form kernel set contains two internal sign slips and one
// misprinted surface identity; the verification suite quantifies all three).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "stokeswim/sweep.hpp"
#include "stokeswim/thrust.hpp"
#include "stokeswim/verify.hpp"
#include "support/oracles.hpp"

using namespace stokeswim;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  double seconds = 0;
  std::vector<std::string> details;

  void note(const std::string& s) { details.push_back(s); }
  void require(bool ok, const std::string& what) {
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    pass = pass && ok;
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const CheckResult* find_check(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;
  const double abs_tol = 1e-6;

  // ------------------------------------------------------------------ 1
  {
    Criterion c{1, "mobility matrix equals 6 pi identity"};
    const auto t0 = Clock::now();
    const Mat3d M = compute_mobility_matrix(SurfaceRule(24, 48));
    c.seconds = seconds_since(t0);
    double diag = 0, offd = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j)
          diag = std::max(diag, std::fabs(M[i][j] - 6.0 * M_PI) / (6.0 * M_PI));
        else
          offd = std::max(offd, std::fabs(M[i][j]));
      }
    c.require(diag < 1e-6, "diagonal relative error " + fmt(diag) + " < 1e-6");
    c.require(offd < 1e-8, "off-diagonal magnitude " + fmt(offd) + " < 1e-8");
    c.require(c.seconds < 1.0, "runtime " + fmt(c.seconds) + " s < 1 s");
    criteria.push_back(c);
  }

  // run the verification suite once; criteria 2, 3, 9 consume it
  const auto verify_t0 = Clock::now();
  const VerificationReport rep = run_verification({});
  const double verify_seconds = seconds_since(verify_t0);

  // ------------------------------------------------------------------ 2
  {
    Criterion c{2, "field residual suite (divergence, boundary, momentum, torsion, p0 sign)"};
    c.seconds = verify_seconds;
    for (const char* name :
         {"aux_flow_boundary_value", "aux_flow_divergence", "aux_flow_momentum_balance",
          "field_jacobians_match_fd", "dipole_gradient_symmetric_traceless",
          "fields_divergence_free", "field_decay_bounds", "torsion_heat_equation",
          "flow_equals_surface_plus_rigid"}) {
      const CheckResult* chk = find_check(rep, name);
      c.require(chk && chk->pass, std::string(name) + " residual " +
                                      (chk ? fmt(chk->max_residual) : "missing") + " tol " +
                                      (chk ? fmt(chk->tolerance) : "-"));
    }
    const CheckResult* sign = find_check(rep, "oscillatory_pressure_sign");
    c.require(sign && sign->pass, "p0-sign check identifies exactly one satisfying sign");
    if (sign) c.note("     " + sign->note);
    c.require(verify_seconds < 60.0, "runtime " + fmt(verify_seconds) + " s < 60 s");
    criteria.push_back(c);
  }

  // ------------------------------------------------------------------ 3
  {
    Criterion c{3, "surface cancellation identities"};
    const auto t0 = Clock::now();
    const CheckResult* moment = find_check(rep, "dipole_normal_moment_vanishes");
    c.require(moment && moment->pass,
              "psi-weighted normal hessian moment " + fmt(moment ? moment->max_residual : -1) +
                  " < 1e-8");
    const CheckResult* unity = find_check(rep, "dipole_gradient_sq_unity_on_surface");
    c.require(unity && unity->pass, "|grad psi|^2 = 1 on the surface within 1e-12 (measured law "
                                    "is 1 + 3 x1^2; deviation from unity " +
                                        fmt(unity ? unity->max_residual : -1) + ")");
    const CheckResult* g2n = find_check(rep, "torsion_sin_normal_gradient_on_surface");
    c.require(g2n && g2n->pass,
              "normal gradient of the sine-phase envelope " +
                  fmt(g2n ? g2n->max_residual : -1) + " < 1e-9");
    const CheckResult* g1fn = find_check(rep, "pressure_functional_vanishes");
    c.require(g1fn && g1fn->pass, "pressure-weighted thrust functional at h in {1, 10}: " +
                                      fmt(g1fn ? g1fn->max_residual : -1) + " < 10 tol");
    c.seconds = seconds_since(t0);
    criteria.push_back(c);
  }

  // shared sweep over the acceptance h set (criteria 4 and 5)
  const std::vector<double> h_set{0.5, 1.0, 5.0, 10.0, 50.0, 150.0};
  std::vector<ThrustResult> set_results;
  const auto set_t0 = Clock::now();
  for (double h : h_set) {
    VolumeRule rule;
    rule.abs_tol = abs_tol;
    set_results.push_back(thrust_reduced({h, 4.0 * M_PI / 3.0}, rule));
  }
  const double set_seconds = seconds_since(set_t0);

  // ------------------------------------------------------------------ 4
  {
    Criterion c{4, "torsional self-interaction remainder vanishes"};
    c.seconds = set_seconds;
    for (std::size_t i = 0; i < h_set.size(); ++i) {
      const double worst = max_abs(set_results[i].R);
      c.require(worst < 10.0 * abs_tol,
                "h = " + fmt(h_set[i]) + ": max |R_i| = " + fmt(worst) + " < 1e-5");
    }
    criteria.push_back(c);
  }

  // ------------------------------------------------------------------ 5
  {
    Criterion c{5, "thrust is aligned with the second axis"};
    c.seconds = 0;
    for (std::size_t i = 0; i < h_set.size(); ++i) {
      const double worst = std::max(std::fabs(set_results[i].G.x), std::fabs(set_results[i].G.z));
      c.require(worst < 10.0 * abs_tol,
                "h = " + fmt(h_set[i]) + ": max(|G_1|, |G_3|) = " + fmt(worst) + " < 1e-5");
    }
    criteria.push_back(c);
  }

  // ------------------------------------------------------------------ 6
  {
    Criterion c{6, "zero crossing of G2 near h = 6"};
    const auto t0 = Clock::now();
    auto g2 = [&](double h) {
      VolumeRule rule;
      rule.abs_tol = abs_tol;
      return thrust_reduced({h, 4.0 * M_PI / 3.0}, rule).G.y;
    };
    const ZeroCrossing z = find_zero_crossing(g2, 0.0, 20.0, 0.05, 11);
    c.seconds = seconds_since(t0);
    c.require(z.found, "sign change located by live bisection");
    if (z.found) {
      c.require(z.hi - z.lo <= 0.05, "bracket width " + fmt(z.hi - z.lo) + " <= 0.05");
      c.require(z.root >= 5.0 && z.root <= 7.0, "h0 = " + fmt(z.root) + " in [5, 7]");
      c.require(z.positive_to_negative,
                std::string("direction + to - (measured: ") +
                    (z.positive_to_negative ? "+ to -" : "- to +") +
                    "; the as-printed kernel yields G2(0) = -3 pi rising through zero)");
    }
    c.require(c.seconds < 300.0, "runtime " + fmt(c.seconds) + " s < 5 min");
    criteria.push_back(c);
  }

  // ------------------------------------------------------------------ 7
  {
    Criterion c{7, "large-h plateau of G2"};
    const auto t0 = Clock::now();
    std::vector<double> values;
    for (double h : {160.0, 180.0, 200.0}) {
      VolumeRule rule;
      rule.abs_tol = abs_tol;
      values.push_back(thrust_reduced({h, 4.0 * M_PI / 3.0}, rule).G.y);
    }
    c.seconds = seconds_since(t0);
    double lo = values[0], hi = values[0], mean = 0;
    for (double v : values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      mean += v / values.size();
    }
    const double rel = (hi - lo) / std::fabs(mean);
    c.require(rel < 0.02, "relative variation over h in {160, 180, 200}: " + fmt(100 * rel) +
                              "% < 2% (level " + fmt(mean) + ")");
    criteria.push_back(c);
  }

  // ------------------------------------------------------------------ 8
  {
    Criterion c{8, "direct-averaging path against the closed-form path"};
    const auto t0 = Clock::now();
    for (double h : {1.0, 5.0, 20.0}) {
      VolumeRule rule;
      rule.abs_tol = abs_tol;
      const ThrustResult reduced = thrust_reduced({h, 4.0 * M_PI / 3.0}, rule);
      const ThrustResult raw =
          thrust_raw({h, 4.0 * M_PI / 3.0}, rule, SurfaceRule(), PressureSign::positive);
      const double diff = max_abs(raw.G - reduced.G);
      c.require(diff <= 50.0 * abs_tol,
                "h = " + fmt(h) + ": |raw(PDE-balancing sign) - reduced| = " + fmt(diff) +
                    " <= 5e-5 (gap = the two as-printed sign slips; see verify notes)");
    }
    {
      VolumeRule rule;
      rule.abs_tol = abs_tol;
      const ThrustResult raw_light =
          thrust_raw({1.0, 4.0 * M_PI / 3.0}, rule, SurfaceRule(), PressureSign::positive);
      const ThrustResult raw_heavy =
          thrust_raw({1.0, 40.0 * M_PI / 3.0}, rule, SurfaceRule(), PressureSign::positive);
      c.require(max_abs(raw_light.G - raw_heavy.G) < 10.0 * abs_tol,
                "mass-ratio independence (10x) of the direct path: " +
                    fmt(max_abs(raw_light.G - raw_heavy.G)) + " < 1e-5");
      const ThrustResult red_light = thrust_reduced({1.0, 4.0 * M_PI / 3.0}, rule);
      const ThrustResult red_heavy = thrust_reduced({1.0, 40.0 * M_PI / 3.0}, rule);
      c.require(max_abs(red_light.G - red_heavy.G) < 10.0 * abs_tol,
                "mass-ratio independence (10x) of the closed-form path: " +
                    fmt(max_abs(red_light.G - red_heavy.G)) + " < 1e-5");
    }
    // diagnostic: the paths do agree once the closed-form kernel uses the
    // direct-average commutator ordering and the matching pressure sign
    {
      const double h = 1.0;
      VolumeRule rule;
      rule.abs_tol = abs_tol;
      for (PressureSign sign : {PressureSign::negative, PressureSign::positive}) {
        const double sig = pressure_sign_factor(sign);
        std::function<std::array<double, 3>(const SpacePoint&)> corrected =
            [h, sig](const SpacePoint& p) {
              const VecJac a = dipole_field(p);
              const VecJac g1 = torsion_field(TorsionPart::cos_phase, p, h);
              const VecJac g2 = torsion_field(TorsionPart::sin_phase, p, h);
              const Mat3d& S = a.jacobian;
              const Mat3d D1 = sym(g1.jacobian);
              const Mat3d D2 = sym(g2.jacobian);
              const Mat3d K1 = g1.jacobian - transpose(g1.jacobian);
              const Mat3d C12 = g1.jacobian * g2.jacobian;
              const Mat3d C21 = g2.jacobian * g1.jacobian;
              std::array<double, 3> out{};
              for (int axis = 0; axis < 3; ++axis) {
                const StokesFlow aux = stokes_translation(axis, p);
                const Mat3d Di = sym(aux.jacobian);
                out[axis] = ddot(S, g1.jacobian * aux.jacobian) - ddot(D1, S * aux.jacobian) +
                            0.5 * ddot(K1 * S - S * K1, Di) +
                            sig * h * h * dot(aux.velocity, mat_vec(g2.jacobian, a.value)) +
                            ddot(D2, g1.jacobian * aux.jacobian) -
                            ddot(D1, g2.jacobian * aux.jacobian) +
                            0.5 * ddot(C12 + transpose(C12) - C21 - transpose(C21), Di);
              }
              return out;
            };
        const auto corr = integrate_exterior<3>(corrected, rule, h);
        const ThrustResult raw = thrust_raw({h, 4.0 * M_PI / 3.0}, rule, SurfaceRule(), sign);
        const Vec3d corr_v{corr.value[0], corr.value[1], corr.value[2]};
        const double d = max_abs(raw.G - corr_v);
        c.note(std::string("diag ") + (d <= 50.0 * abs_tol ? "ok  " : "FAIL") +
               " raw == direct-commutator kernel with matching sign (" +
               (sign == PressureSign::negative ? "negative" : "positive") + "): diff " + fmt(d));
      }
    }
    c.seconds = seconds_since(t0);
    criteria.push_back(c);
  }

  // ------------------------------------------------------------------ 9
  {
    Criterion c{9, "pulsating ball produces no net force"};
    const CheckResult* chk = find_check(rep, "pulsating_ball_null_thrust");
    c.require(chk && chk->pass, "both surface force integrals < 1e-8 at 8 times, eps = 0.3 (" +
                                    (chk ? chk->note : std::string("missing")) + ")");
    criteria.push_back(c);
  }

  // ------------------------------------------------------------------ 10
  {
    Criterion c{10, "quadrature oracles and refinement monotonicity"};
    const auto t0 = Clock::now();
    VolumeRule rule;
    rule.abs_tol = abs_tol;

    const QuadResult algebraic = integrate_exterior_scalar(
        [](const SpacePoint& p) { return std::pow(p.r, -4.0); }, rule, 0.0);
    const double oracle_algebraic =
        oracle::radial_exterior_integral([](double r) { return std::pow(r, -4.0); }, 800.0,
                                        1.0 / 800.0);
    c.require(std::fabs(algebraic.value - oracle_algebraic) < abs_tol,
              "r^-4 probe vs 1D oracle: diff " + fmt(std::fabs(algebraic.value - oracle_algebraic)));
    c.require(std::fabs(algebraic.value - 4.0 * M_PI) < abs_tol,
              "r^-4 probe vs analytic 4 pi: diff " + fmt(std::fabs(algebraic.value - 4.0 * M_PI)));

    const QuadResult layer = integrate_exterior_scalar(
        [](const SpacePoint& p) { return std::exp(-50.0 * (p.r - 1.0)) / (p.r * p.r); }, rule,
        50.0);
    const double oracle_layer = oracle::radial_exterior_integral(
        [](double r) { return std::exp(-50.0 * (r - 1.0)) / (r * r); }, 5.0);
    c.require(std::fabs(layer.value - oracle_layer) < abs_tol,
              "boundary-layer probe (h = 50) vs 1D oracle: diff " +
                  fmt(std::fabs(layer.value - oracle_layer)));

    for (double h : {1.0, 50.0}) {
      VolumeRule fine = rule;
      fine.n_polar *= 2;
      fine.n_azimuth *= 2;
      fine.initial_layer_panels *= 2;
      fine.initial_far_panels *= 2;
      const ThrustResult base = thrust_reduced({h, 4.0 * M_PI / 3.0}, rule);
      const ThrustResult refined = thrust_reduced({h, 4.0 * M_PI / 3.0}, fine);
      const double shift = max_abs(base.G - refined.G);
      c.require(shift <= std::max(base.error_estimate, 1e-12),
                "doubling nodes at h = " + fmt(h) + " shifts G by " + fmt(shift) +
                    " <= reported estimate " + fmt(base.error_estimate));
    }
    c.seconds = seconds_since(t0);
    criteria.push_back(c);
  }

  // ------------------------------------------------------------------ 11
  {
    Criterion c{11, "sweep determinism and runtime"};
    const auto t0 = Clock::now();
    SweepConfig cfg;  // defaults: 101 points over [0, 200]
    cfg.abs_tol = abs_tol;
    const SweepTable first = run_sweep(cfg);
    const double first_seconds = seconds_since(t0);
    const SweepTable second = run_sweep(cfg);

    std::stringstream a, b;
    write_csv(a, first);
    write_csv(b, second);
    c.require(a.str() == b.str(), "two identical sweep runs produce byte-identical CSV (" +
                                      std::to_string(a.str().size()) + " bytes)");
    c.require(first_seconds < 1800.0,
              "101-point sweep took " + fmt(first_seconds) + " s (< 30 min budget)");
    bool all_converged = true;
    for (const auto& r : first.rows) all_converged = all_converged && r.converged;
    c.require(all_converged, "every sweep row converged at tol 1e-6");
    c.seconds = seconds_since(t0);
    criteria.push_back(c);
  }

  // ------------------------------------------------------------------ report
  int failed = 0;
  std::printf("acceptance suite (abs tol %.1e)\n", abs_tol);
  for (const auto& c : criteria) {
    if (!c.pass) ++failed;
    std::printf("[%s] criterion %2d: %s (%.2f s)\n", c.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), c.seconds);
    for (const auto& d : c.details) std::printf("    %s\n", d.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  if (failed > 0) {
    std::printf("failing sub-clauses reproduce documented inconsistencies in the closed-form "
                "kernel set; see the detail lines above and the verification report.\n");
  }
  return failed;
}
