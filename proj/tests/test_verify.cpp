#include <doctest.h>

#include <sstream>

#include "stokeswim/verify.hpp"

using namespace stokeswim;

TEST_CASE("verification suite state: exactly the misprinted identity fails") {
  VerifyOptions opts;
  opts.quick = true;
  const VerificationReport rep = run_verification(opts);
  CHECK(rep.checks.size() >= 18);
  int failures = 0;
  for (const auto& c : rep.checks) {
    if (!c.pass) {
      ++failures;
      // the only failing check is the surface-magnitude shorthand, whose
      // measured law is 1 + 3 x1^2 rather than 1
      CHECK(c.name == "dipole_gradient_sq_unity_on_surface");
    }
  }
  CHECK(failures == 1);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("fault injection trips the torsional heat-equation check") {
  VerifyOptions opts;
  opts.quick = true;
  opts.torsion_cos_scale = 1.05;
  const VerificationReport rep = run_verification(opts);
  bool found = false;
  for (const auto& c : rep.checks) {
    if (c.name == "torsion_heat_equation") {
      found = true;
      CHECK_FALSE(c.pass);
    }
  }
  CHECK(found);
}

TEST_CASE("outcomes are seed independent") {
  VerifyOptions opts;
  opts.quick = true;
  std::vector<bool> baseline;
  for (std::uint64_t seed : {12345ull, 999ull, 31415ull}) {
    opts.seed = seed;
    const VerificationReport rep = run_verification(opts);
    std::vector<bool> outcomes;
    for (const auto& c : rep.checks) outcomes.push_back(c.pass);
    if (baseline.empty())
      baseline = outcomes;
    else
      CHECK(baseline == outcomes);
  }
}

TEST_CASE("mobility matrix is 6 pi times the identity") {
  const Mat3d M = compute_mobility_matrix(SurfaceRule(24, 48));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j)
        CHECK(M[i][j] == doctest::Approx(6.0 * M_PI).epsilon(1e-9));
      else
        CHECK(std::fabs(M[i][j]) < 1e-10);
    }
}

TEST_CASE("report serializers") {
  VerifyOptions opts;
  opts.quick = true;
  const VerificationReport rep = run_verification(opts);

  std::ostringstream table;
  rep.print_table(table);
  CHECK(table.str().find("verification report") != std::string::npos);

  std::ostringstream tsv;
  rep.print_tsv(tsv);
  std::istringstream in(tsv.str());
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == rep.checks.size() + 1);  // header + one line per check
}

TEST_CASE("pulsation spec derivatives are consistent") {
  const PulsationSpec spec;
  CHECK(spec.radius(0.0) == doctest::Approx(1.0));
  const double t = 0.83, e = 1e-6;
  CHECK(spec.radius_dot(t) ==
        doctest::Approx((spec.radius(t + e) - spec.radius(t - e)) / (2 * e)).epsilon(1e-8));
  CHECK(spec.radius_ddot(t) ==
        doctest::Approx((spec.radius_dot(t + e) - spec.radius_dot(t - e)) / (2 * e))
            .epsilon(1e-8));
}
