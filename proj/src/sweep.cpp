#include "stokeswim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace stokeswim {

std::vector<double> SweepConfig::grid() const {
  if (!explicit_grid.empty()) return explicit_grid;
  std::vector<double> g(n_points);
  for (int i = 0; i < n_points; ++i) {
    g[i] = h_min + (h_max - h_min) * i / (n_points - 1);
  }
  return g;
}

void SweepConfig::validate() const {
  if (explicit_grid.empty()) {
    if (!(h_min >= 0)) throw std::invalid_argument("invalid config: h_min must be >= 0");
    if (!(h_min < h_max)) throw std::invalid_argument("invalid config: h_min must be < h_max");
    if (n_points < 2) throw std::invalid_argument("invalid config: n_points must be >= 2");
  } else {
    double prev = -1;
    for (double h : explicit_grid) {
      if (!(h >= 0)) throw std::invalid_argument("invalid config: grid values must be >= 0");
      if (!(h > prev)) throw std::invalid_argument("invalid config: grid must be increasing");
      prev = h;
    }
  }
  if (!(abs_tol > 0)) throw std::invalid_argument("invalid config: abs_tol must be > 0");
  if (!(mass_ratio > 0)) throw std::invalid_argument("invalid config: mass_ratio must be > 0");
  if (workers < 0) throw std::invalid_argument("invalid config: workers must be >= 0");
  if (path != ThrustPath::reduced) {
    for (double h : grid()) {
      if (h == 0.0) {
        throw std::invalid_argument("invalid config: path=raw requires h > 0 on the whole grid");
      }
    }
  }
}

namespace {

SweepRow compute_row(double h, const SweepConfig& cfg) {
  VolumeRule rule;
  rule.abs_tol = cfg.abs_tol;

  ThrustResult t;
  if (cfg.path == ThrustPath::raw) {
    t = thrust_raw({h, cfg.mass_ratio}, rule, SurfaceRule(rule.n_polar, rule.n_azimuth),
                   cfg.pressure_sign);
  } else {
    t = thrust_reduced({h, cfg.mass_ratio}, rule);
  }

  SweepRow row;
  row.h = h;
  row.G = t.G;
  row.R = t.R;
  row.gamma1 = t.gamma1;
  row.error_estimate = t.error_estimate;
  row.n_evals = t.n_evals;
  row.converged = t.converged;
  return row;
}

}  // namespace

SweepTable run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::vector<double> grid = cfg.grid();

  SweepTable table;
  table.rows.resize(grid.size());

  unsigned n_workers = cfg.workers > 0 ? static_cast<unsigned>(cfg.workers)
                                       : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<unsigned>(n_workers, grid.size());

  if (n_workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) table.rows[i] = compute_row(grid[i], cfg);
    return table;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= grid.size()) return;
        table.rows[i] = compute_row(grid[i], cfg);
      }
    });
  }
  for (auto& th : pool) th.join();
  return table;
}

ZeroCrossing find_zero_crossing(const std::function<double(double)>& f, double lo, double hi,
                                double xtol, int scan_points) {
  ZeroCrossing z;
  if (!(lo < hi) || scan_points < 2) return z;

  double prev_h = lo;
  double prev_v = f(lo);
  ++z.evaluations;
  double blo = 0, bhi = 0, vlo = 0;
  bool have_bracket = false;
  for (int i = 1; i < scan_points && !have_bracket; ++i) {
    const double h = lo + (hi - lo) * i / (scan_points - 1);
    const double v = f(h);
    ++z.evaluations;
    if (prev_v == 0.0 || (prev_v > 0) != (v > 0)) {
      blo = prev_h;
      bhi = h;
      vlo = prev_v;
      have_bracket = true;
    }
    prev_h = h;
    prev_v = v;
  }
  if (!have_bracket) return z;

  while (bhi - blo > xtol) {
    const double mid = 0.5 * (blo + bhi);
    const double vm = f(mid);
    ++z.evaluations;
    if (vm == 0.0) {
      blo = mid - 0.25 * xtol;
      bhi = mid + 0.25 * xtol;
      break;
    }
    if ((vm > 0) == (vlo > 0)) {
      blo = mid;
      vlo = vm;
    } else {
      bhi = mid;
    }
  }

  z.found = true;
  z.lo = blo;
  z.hi = bhi;
  z.root = 0.5 * (blo + bhi);
  z.positive_to_negative = vlo > 0;
  return z;
}

std::optional<ZeroCrossing> table_sign_change(const SweepTable& table) {
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const double a = table.rows[i - 1].G.y;
    const double b = table.rows[i].G.y;
    if (a == 0.0 || (a > 0) != (b > 0)) {
      ZeroCrossing z;
      z.found = true;
      z.lo = table.rows[i - 1].h;
      z.hi = table.rows[i].h;
      // Secant estimate within the bracket.
      z.root = (a == b) ? 0.5 * (z.lo + z.hi) : z.lo + (z.hi - z.lo) * a / (a - b);
      z.positive_to_negative = a > 0;
      return z;
    }
  }
  return std::nullopt;
}

PlateauResult detect_plateau(const SweepTable& table, double threshold) {
  PlateauResult p;
  const std::size_t n = table.rows.size();
  if (n < 4) return p;

  const std::size_t start = n - n / 4;  // top quartile of the grid
  double lo = table.rows[start].G.y, hi = lo, sum = 0;
  for (std::size_t i = start; i < n; ++i) {
    const double v = table.rows[i].G.y;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  const double mean = sum / (n - start);
  if (mean == 0.0) return p;
  p.rel_variation = (hi - lo) / std::fabs(mean);
  p.found = p.rel_variation <= threshold;
  p.onset_h = table.rows[start].h;
  p.value = mean;
  return p;
}

AnalysisResult analyze_table(const SweepTable& table, double plateau_threshold) {
  AnalysisResult a;
  a.crossing = table_sign_change(table);
  a.plateau = detect_plateau(table, plateau_threshold);
  return a;
}

double optimal_frequency(double h_plateau, double nu, double body_radius) {
  return 2.0 * h_plateau * h_plateau * nu / (body_radius * body_radius);
}

namespace {

std::string full_precision(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& os, const SweepTable& table) {
  os << "h,G1,G2,G3,R1,R2,R3,gamma1_1,gamma1_2,gamma1_3,err,nevals,converged\n";
  for (const auto& r : table.rows) {
    os << full_precision(r.h) << ',' << full_precision(r.G.x) << ',' << full_precision(r.G.y)
       << ',' << full_precision(r.G.z) << ',' << full_precision(r.R.x) << ','
       << full_precision(r.R.y) << ',' << full_precision(r.R.z) << ','
       << full_precision(r.gamma1.x) << ',' << full_precision(r.gamma1.y) << ','
       << full_precision(r.gamma1.z) << ',' << full_precision(r.error_estimate) << ','
       << r.n_evals << ',' << (r.converged ? 1 : 0) << '\n';
  }
}

SweepTable read_csv(std::istream& is) {
  SweepTable table;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty CSV");
  const std::string expected = "h,G1,G2,G3,R1,R2,R3,gamma1_1,gamma1_2,gamma1_3,err,nevals,converged";
  if (line != expected) throw std::runtime_error("unexpected CSV header: " + line);

  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 13) throw std::runtime_error("malformed CSV row: " + line);
    SweepRow r;
    r.h = std::stod(cells[0]);
    r.G = {std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3])};
    r.R = {std::stod(cells[4]), std::stod(cells[5]), std::stod(cells[6])};
    r.gamma1 = {std::stod(cells[7]), std::stod(cells[8]), std::stod(cells[9])};
    r.error_estimate = std::stod(cells[10]);
    r.n_evals = std::stoll(cells[11]);
    r.converged = cells[12] == "1";
    table.rows.push_back(r);
  }
  return table;
}

void write_svg_plot(std::ostream& os, const SweepTable& table,
                    const std::optional<ZeroCrossing>& crossing) {
  const int width = 720, height = 480, margin = 60;
  if (table.rows.empty()) throw std::runtime_error("cannot plot an empty table");

  double hmin = table.rows.front().h, hmax = table.rows.back().h;
  double vmin = table.rows.front().G.y, vmax = vmin;
  for (const auto& r : table.rows) {
    vmin = std::min(vmin, r.G.y);
    vmax = std::max(vmax, r.G.y);
  }
  if (vmax == vmin) {
    vmax += 1;
    vmin -= 1;
  }
  const double pad = 0.05 * (vmax - vmin);
  vmin -= pad;
  vmax += pad;

  auto X = [&](double h) {
    return margin + (h - hmin) / (hmax - hmin) * (width - 2 * margin);
  };
  auto Y = [&](double v) {
    return height - margin - (v - vmin) / (vmax - vmin) * (height - 2 * margin);
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
     << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
     << height - margin << "\" stroke=\"black\"/>\n";
  if (vmin < 0 && vmax > 0) {
    os << "<line x1=\"" << margin << "\" y1=\"" << Y(0) << "\" x2=\"" << width - margin
       << "\" y2=\"" << Y(0) << "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  }

  os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (const auto& r : table.rows) os << X(r.h) << ',' << Y(r.G.y) << ' ';
  os << "\"/>\n";

  if (crossing && crossing->found) {
    os << "<circle cx=\"" << X(crossing->root) << "\" cy=\"" << Y(0)
       << "\" r=\"4\" fill=\"#d62728\"/>\n";
    os << "<text x=\"" << X(crossing->root) + 8 << "\" y=\"" << Y(0) - 8
       << "\" font-size=\"12\">h0 = " << crossing->root << "</text>\n";
  }

  os << "<text x=\"" << width / 2 << "\" y=\"" << height - margin / 3
     << "\" text-anchor=\"middle\" font-size=\"13\">Stokes number h</text>\n";
  os << "<text x=\"" << margin / 3 << "\" y=\"" << height / 2
     << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 " << margin / 3 << ' '
     << height / 2 << ")\">G2(h)</text>\n";
  os << "</svg>\n";
}

}  // namespace stokeswim
