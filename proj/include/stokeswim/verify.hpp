#ifndef STOKESWIM_VERIFY_HPP
#define STOKESWIM_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stokeswim/model.hpp"
#include "stokeswim/quadrature.hpp"

// Numerical verification of every identity the field catalog and the model
// are supposed to satisfy: exact Jacobians against finite differences,
// solenoidality, boundary values, the momentum balance of the auxiliary
// Stokes flows, the torsional heat equation, the oscillatory-pressure sign
// question, the mobility matrix, the surface cancellation identities, and
// the pulsating-ball null case.  Checks are deterministic given the seed and
// never hard-code a pass.

namespace stokeswim {

struct CheckResult {
  std::string name;
  double max_residual = 0;
  double tolerance = 0;
  bool pass = false;
  std::int64_t samples = 0;
  std::string note;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  void print_table(std::ostream& os) const;
  void print_tsv(std::ostream& os) const;
};

struct VerifyOptions {
  std::uint64_t seed = 12345;
  double abs_tol = 1e-6;      // quadrature tolerance used by integral checks
  bool quick = false;         // trims sample counts (used by unit tests)
  // Fault-injection hook: scales the cosine-phase torsional envelope inside
  // the heat-equation check; anything other than 1 must trip that check.
  double torsion_cos_scale = 1.0;
};

/// Expansion/contraction stroke of the unit ball: R(t) = 1 + epsilon sin t.
struct PulsationSpec {
  double epsilon = 0.3;

  double radius(double t) const;
  double radius_dot(double t) const;
  double radius_ddot(double t) const;
};

/// Run the full verification suite.
VerificationReport run_verification(const VerifyOptions& opts = {});

/// Mobility-style matrix of surface tractions of the auxiliary flows,
/// M_ji = integral over the surface of T_jk(h(i), p(i)) n_k; equals
/// 6 pi * identity for the sphere.
Mat3d compute_mobility_matrix(const SurfaceRule& rule);

}  // namespace stokeswim

#endif
