#ifndef STOKESWIM_SWEEP_HPP
#define STOKESWIM_SWEEP_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stokeswim/thrust.hpp"

// Parameter sweep over the Stokes number, curve analysis (zero crossing of
// the propulsive component, large-h plateau), CSV emission and a small SVG
// plot.  CSV is the canonical output: full-precision decimal so downstream
// comparisons are exact, one row per grid point, non-converged rows flagged
// but never dropped.

namespace stokeswim {

struct SweepConfig {
  double h_min = 0.0;
  double h_max = 200.0;
  int n_points = 101;
  std::vector<double> explicit_grid;  // overrides the uniform grid when set
  double abs_tol = 1e-6;
  double mass_ratio = 4.0 * M_PI / 3.0;
  ThrustPath path = ThrustPath::reduced;
  PressureSign pressure_sign = PressureSign::negative;
  int workers = 0;  // 0 = hardware concurrency
  bool strict = false;

  std::vector<double> grid() const;
  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct SweepRow {
  double h = 0;
  Vec3d G{};
  Vec3d R{};
  Vec3d gamma1{};
  double error_estimate = 0;
  std::int64_t n_evals = 0;
  bool converged = true;
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

SweepTable run_sweep(const SweepConfig& cfg);

/// Bracketed zero crossing of a scalar function of h.
struct ZeroCrossing {
  bool found = false;
  double lo = 0, hi = 0;  // final bracket, sign change inside
  double root = 0;        // bracket midpoint
  bool positive_to_negative = false;
  int evaluations = 0;
};

/// Scan [lo, hi] with `scan_points` samples for a sign change, then bisect
/// the first bracket down to width `xtol`.  Returns found = false when the
/// scan sees no sign change.
ZeroCrossing find_zero_crossing(const std::function<double(double)>& f, double lo, double hi,
                                double xtol = 0.05, int scan_points = 9);

/// Locate a sign change of G2 between adjacent table rows (no refinement).
std::optional<ZeroCrossing> table_sign_change(const SweepTable& table);

struct PlateauResult {
  bool found = false;
  double onset_h = 0;       // first grid h of the qualifying tail
  double value = 0;         // mean G2 over the tail
  double rel_variation = 0; // (max-min)/|mean| over the tail
};

/// Plateau detection over the top quartile of the grid; threshold is the
/// maximal relative variation accepted.
PlateauResult detect_plateau(const SweepTable& table, double threshold = 0.02);

struct AnalysisResult {
  std::optional<ZeroCrossing> crossing;
  PlateauResult plateau;
};

AnalysisResult analyze_table(const SweepTable& table, double plateau_threshold = 0.02);

/// Speed-maximizing angular frequency implied by a plateau onset:
/// omega = 2 h^2 nu / a^2 (dimensional inputs supplied by the caller).
double optimal_frequency(double h_plateau, double nu, double body_radius);

// CSV round trip.  Header:
//   h,G1,G2,G3,R1,R2,R3,gamma1_1,gamma1_2,gamma1_3,err,nevals,converged
void write_csv(std::ostream& os, const SweepTable& table);
SweepTable read_csv(std::istream& is);

/// Minimal standalone SVG line plot of G2 against h, marking the zero
/// crossing when present.
void write_svg_plot(std::ostream& os, const SweepTable& table,
                    const std::optional<ZeroCrossing>& crossing);

}  // namespace stokeswim

#endif
