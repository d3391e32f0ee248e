// Command-line front end: verification suite, single-point thrust
// evaluation, h-sweeps with CSV/SVG output, and post-hoc curve analysis.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stokeswim/pack.hpp"
#include "stokeswim/sweep.hpp"
#include "stokeswim/thrust.hpp"
#include "stokeswim/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitNotConverged = 3;

stokeswim::PressureSign parse_sign(const std::string& s) {
  if (s == "paper") return stokeswim::PressureSign::negative;
  if (s == "flipped") return stokeswim::PressureSign::positive;
  throw CLI::ValidationError("--p0-sign must be 'paper' or 'flipped'");
}

void print_result(const stokeswim::ThrustResult& t) {
  const char* path = t.path == stokeswim::ThrustPath::reduced ? "reduced" : "raw";
  std::printf("path=%s h=%.6g\n", path, t.stokes_number);
  if (t.path == stokeswim::ThrustPath::raw) {
    std::printf("  p0 sign        : %s\n",
                t.pressure_sign == stokeswim::PressureSign::negative ? "paper" : "flipped");
  }
  std::printf("  G              : % .12e % .12e % .12e\n", t.G.x, t.G.y, t.G.z);
  std::printf("  R              : % .12e % .12e % .12e\n", t.R.x, t.R.y, t.R.z);
  std::printf("  G1 functional  : % .12e % .12e % .12e\n", t.G1_vec.x, t.G1_vec.y, t.G1_vec.z);
  std::printf("  gamma1         : % .12e % .12e % .12e\n", t.gamma1.x, t.gamma1.y, t.gamma1.z);
  std::printf("  error estimate : %.3e   evals: %lld   converged: %s\n", t.error_estimate,
              static_cast<long long>(t.n_evals), t.converged ? "yes" : "no");
}

int run_verify(double tol, std::uint64_t seed, const std::string& report_path, bool quick,
               double corrupt_torsion) {
  stokeswim::VerifyOptions opts;
  opts.abs_tol = tol;
  opts.seed = seed;
  opts.quick = quick;
  opts.torsion_cos_scale = corrupt_torsion;

  const stokeswim::VerificationReport rep = stokeswim::run_verification(opts);
  rep.print_table(std::cout);

  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) {
      std::cerr << "cannot write report to " << report_path << "\n";
      return kExitBadConfig;
    }
    rep.print_tsv(f);
  }
  return rep.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-propulsion of a periodically deforming sphere in Stokes flow"};
  app.require_subcommand(1);
  app.set_config("--config");
  app.set_help_flag("--help", "print help");  // keep -h free for the Stokes number

  // verify -------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the numerical verification suite");
  double v_tol = 1e-6;
  std::uint64_t v_seed = 12345;
  std::string v_report;
  bool v_quick = false;
  double v_corrupt = 1.0;
  verify->add_option("--tol", v_tol, "quadrature absolute tolerance");
  verify->add_option("--seed", v_seed, "random sample seed");
  verify->add_option("--report", v_report, "write a TSV report to this path");
  verify->add_flag("--quick", v_quick, "trimmed sample counts");
  verify->add_option("--corrupt-torsion-cos", v_corrupt,
                     "fault-injection hook: scale the cosine torsional envelope")
      ->group("testing");

  // thrust -------------------------------------------------------------
  auto* thrust_cmd = app.add_subcommand("thrust", "evaluate the thrust at a single h");
  thrust_cmd->set_help_flag("--help", "print help");
  double t_h = 1.0;
  double t_tol = 1e-6;
  double t_mass = 4.0 * M_PI / 3.0;
  std::string t_path = "reduced";
  std::string t_sign = "paper";
  thrust_cmd->add_option("--h", t_h, "Stokes number")->required();
  thrust_cmd->add_option("--tol", t_tol, "quadrature absolute tolerance");
  thrust_cmd->add_option("--mass-ratio", t_mass, "body mass over a^3");
  thrust_cmd->add_option("--path", t_path, "reduced | raw | both");
  thrust_cmd->add_option("--p0-sign", t_sign, "oscillatory pressure sign (raw path): paper | flipped");

  // sweep --------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep h and write a CSV table");
  stokeswim::SweepConfig cfg;
  std::string s_grid, s_out, s_plot, s_path = "reduced", s_sign = "paper";
  std::uint64_t s_seed = 12345;
  sweep_cmd->add_option("--h-min", cfg.h_min, "lower end of the h range");
  sweep_cmd->add_option("--h-max", cfg.h_max, "upper end of the h range");
  sweep_cmd->add_option("--n-points", cfg.n_points, "number of grid points");
  sweep_cmd->add_option("--grid", s_grid, "explicit comma-separated h grid (overrides the range)");
  sweep_cmd->add_option("--tol", cfg.abs_tol, "quadrature absolute tolerance");
  sweep_cmd->add_option("--mass-ratio", cfg.mass_ratio, "body mass over a^3");
  sweep_cmd->add_option("--path", s_path, "reduced | raw | both");
  sweep_cmd->add_option("--p0-sign", s_sign, "oscillatory pressure sign (raw path)");
  sweep_cmd->add_option("--out", s_out, "CSV output path")->required();
  sweep_cmd->add_option("--plot", s_plot, "SVG plot output path");
  sweep_cmd->add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
  sweep_cmd->add_option("--seed", s_seed, "reserved for sampling-based checks; not used by the sweep");
  sweep_cmd->add_flag("--strict", cfg.strict, "exit 3 when any row fails to converge");

  // analyze ------------------------------------------------------------
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a sweep CSV");
  std::string a_in;
  double a_threshold = 0.02, a_nu = 0.0, a_radius = 0.0;
  analyze_cmd->add_option("--in", a_in, "CSV produced by sweep")->required();
  analyze_cmd->add_option("--plateau-threshold", a_threshold,
                          "maximal relative variation accepted as a plateau");
  analyze_cmd->add_option("--nu", a_nu, "kinematic viscosity (for the optimal-frequency formula)");
  analyze_cmd->add_option("--radius", a_radius, "body radius (for the optimal-frequency formula)");

  // plot ---------------------------------------------------------------
  auto* plot_cmd = app.add_subcommand("plot", "render an SVG plot from a sweep CSV");
  std::string p_in, p_out;
  plot_cmd->add_option("--in", p_in, "CSV produced by sweep")->required();
  plot_cmd->add_option("--out", p_out, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadConfig;
  }

  try {
    if (*verify) {
      return run_verify(v_tol, v_seed, v_report, v_quick, v_corrupt);
    }

    if (*thrust_cmd) {
      stokeswim::VolumeRule rule;
      rule.abs_tol = t_tol;
      const stokeswim::ModelParams params{t_h, t_mass};
      bool converged = true;
      if (t_path == "reduced" || t_path == "both") {
        const auto r = stokeswim::thrust_reduced(params, rule);
        print_result(r);
        converged = converged && r.converged;
      }
      if (t_path == "raw" || t_path == "both") {
        const auto r = stokeswim::thrust_raw(params, rule, stokeswim::SurfaceRule(),
                                             parse_sign(t_sign));
        print_result(r);
        converged = converged && r.converged;
      }
      if (t_path != "reduced" && t_path != "raw" && t_path != "both") {
        std::cerr << "invalid config: --path must be reduced, raw or both\n";
        return kExitBadConfig;
      }
      return converged ? kExitOk : kExitNotConverged;
    }

    if (*sweep_cmd) {
      if (!s_grid.empty()) {
        std::stringstream ss(s_grid);
        std::string cell;
        while (std::getline(ss, cell, ',')) cfg.explicit_grid.push_back(std::stod(cell));
      }
      cfg.pressure_sign = parse_sign(s_sign);
      if (s_path == "raw") {
        cfg.path = stokeswim::ThrustPath::raw;
      } else if (s_path != "reduced" && s_path != "both") {
        std::cerr << "invalid config: --path must be reduced, raw or both\n";
        return kExitBadConfig;
      }

      auto write_table = [&](const stokeswim::SweepTable& table, const std::string& path) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write CSV to " + path);
        stokeswim::write_csv(f, table);
      };

      cfg.validate();
      stokeswim::SweepTable table = stokeswim::run_sweep(cfg);
      write_table(table, s_out);

      if (s_path == "both") {
        stokeswim::SweepConfig raw_cfg = cfg;
        raw_cfg.path = stokeswim::ThrustPath::raw;
        raw_cfg.validate();
        const stokeswim::SweepTable raw_table = stokeswim::run_sweep(raw_cfg);
        std::string raw_out = s_out + ".raw.csv";
        write_table(raw_table, raw_out);
        std::cout << "raw-path table written to " << raw_out << "\n";
      }

      const stokeswim::AnalysisResult analysis = stokeswim::analyze_table(table);
      if (analysis.crossing) {
        std::cout << "sign change of G2 near h = " << analysis.crossing->root << " (bracket ["
                  << analysis.crossing->lo << ", " << analysis.crossing->hi << "])\n";
      } else {
        std::cout << "no sign change of G2 on the grid\n";
      }
      if (analysis.plateau.found) {
        std::cout << "plateau from h = " << analysis.plateau.onset_h
                  << ", G2 level " << analysis.plateau.value << " (variation "
                  << 100.0 * analysis.plateau.rel_variation << "%)\n";
      }

      if (!s_plot.empty()) {
        std::ofstream f(s_plot, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write plot to " + s_plot);
        stokeswim::write_svg_plot(f, table, analysis.crossing);
      }

      std::cout << "simd tier: " << stokeswim::simd::tier_name(stokeswim::simd::active_tier())
                << ", rows: " << table.rows.size() << "\n";

      if (cfg.strict) {
        for (const auto& r : table.rows) {
          if (!r.converged) {
            std::cerr << "row h = " << r.h << " did not converge\n";
            return kExitNotConverged;
          }
        }
      }
      return kExitOk;
    }

    if (*analyze_cmd) {
      std::ifstream f(a_in);
      if (!f) {
        std::cerr << "cannot read " << a_in << "\n";
        return kExitBadConfig;
      }
      const stokeswim::SweepTable table = stokeswim::read_csv(f);
      const stokeswim::AnalysisResult analysis = stokeswim::analyze_table(table, a_threshold);

      if (analysis.crossing) {
        std::cout << "zero crossing of G2: h0 = " << analysis.crossing->root << " (bracket ["
                  << analysis.crossing->lo << ", " << analysis.crossing->hi << "], "
                  << (analysis.crossing->positive_to_negative ? "+ to -" : "- to +") << ")\n";
      } else {
        std::cout << "no crossing found on the table\n";
      }
      if (analysis.plateau.found) {
        std::cout << "plateau: onset h = " << analysis.plateau.onset_h << ", level "
                  << analysis.plateau.value << ", relative variation "
                  << 100.0 * analysis.plateau.rel_variation << "%\n";
        if (a_nu > 0 && a_radius > 0) {
          std::cout << "optimal frequency omega = 2 h^2 nu / a^2 = "
                    << stokeswim::optimal_frequency(analysis.plateau.onset_h, a_nu, a_radius)
                    << " rad/s (nu = " << a_nu << ", a = " << a_radius << ")\n";
        } else {
          std::cout << "optimal frequency: omega = 2 (" << analysis.plateau.onset_h
                    << ")^2 nu / a^2 (supply --nu and --radius to evaluate)\n";
        }
      } else {
        std::cout << "no plateau at threshold " << 100.0 * a_threshold << "%\n";
      }
      return kExitOk;
    }

    if (*plot_cmd) {
      std::ifstream f(p_in);
      if (!f) {
        std::cerr << "cannot read " << p_in << "\n";
        return kExitBadConfig;
      }
      const stokeswim::SweepTable table = stokeswim::read_csv(f);
      std::ofstream out(p_out, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << p_out << "\n";
        return kExitBadConfig;
      }
      stokeswim::write_svg_plot(out, table, stokeswim::table_sign_change(table));
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }

  return kExitOk;
}
