#include "vecopt/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace vecopt::bench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double measured_value(const ResultRow& r, Measurement m) {
  switch (m) {
    case Measurement::kIters:
      return std::max(1.0, double(r.iters));
    case Measurement::kTime:
      return std::max(1e-9, r.wall_time_s);
    case Measurement::kFevals:
      return std::max(1.0, double(r.f_evals));
    case Measurement::kJevals:
      return std::max(1.0, double(r.j_evals));
  }
  return kInf;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string fmt(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string_view measurement_title(Measurement m) {
  switch (m) {
    case Measurement::kIters:
      return "number of iterations";
    case Measurement::kTime:
      return "CPU time";
    case Measurement::kFevals:
      return "number of function evaluations";
    case Measurement::kJevals:
      return "number of gradient evaluations";
  }
  return "";
}

}  // namespace

ProfileTable build_profile_table(const std::vector<ResultRow>& rows,
                                 Measurement measurement,
                                 Aggregate aggregate) {
  // (problem, start) -> solver -> value; start is -1 when aggregating.
  using Key = std::tuple<std::string, int>;
  std::map<Key, std::map<std::string, double>> cells;
  std::map<Key, std::map<std::string, std::vector<double>>> pooled;
  std::vector<std::string> solvers;

  for (const ResultRow& r : rows) {
    const std::string solver = r.solver();
    solvers.push_back(solver);
    const double value = r.status == RunStatus::kConverged
                             ? measured_value(r, measurement)
                             : kInf;
    if (aggregate == Aggregate::kPerRun) {
      auto& row = cells[{r.problem, r.start_idx}];
      if (!row.emplace(solver, value).second) {
        throw InputError("duplicate result for " + r.problem + " start " +
                         std::to_string(r.start_idx) + " solver " + solver);
      }
    } else {
      pooled[{r.problem, -1}][solver].push_back(value);
    }
  }
  for (auto& [key, by_solver] : pooled) {
    for (auto& [solver, values] : by_solver) {
      cells[key][solver] = median(std::move(values));
    }
  }
  std::sort(solvers.begin(), solvers.end());
  solvers.erase(std::unique(solvers.begin(), solvers.end()), solvers.end());

  ProfileTable table;
  table.solver_names = solvers;
  for (const auto& [key, by_solver] : cells) {
    const auto& [problem, start] = key;
    table.problem_ids.push_back(start < 0 ? problem
                                          : problem + "#" + std::to_string(start));
    std::vector<std::optional<double>> row;
    for (const auto& s : solvers) {
      const auto it = by_solver.find(s);
      if (it == by_solver.end() || !std::isfinite(it->second)) {
        row.emplace_back(std::nullopt);
      } else {
        row.emplace_back(it->second);
      }
    }
    table.t.push_back(std::move(row));
  }
  return table;
}

ProfileResult performance_profile(const ProfileTable& table) {
  const std::size_t n_solvers = table.solver_names.size();
  if (table.t.empty() || n_solvers == 0) {
    throw InputError("performance profile of an empty table");
  }
  if (table.problem_ids.size() != table.t.size()) {
    throw InputError("profile table has mismatched problem ids");
  }

  ProfileResult result;
  std::vector<std::vector<double>> ratios(n_solvers);
  for (std::size_t p = 0; p < table.t.size(); ++p) {
    const auto& row = table.t[p];
    if (row.size() != n_solvers) {
      throw InputError("profile table row " + table.problem_ids[p] +
                       " has the wrong width");
    }
    double best = kInf;
    for (const auto& t : row) {
      if (!t) continue;
      if (!(*t > 0.0) || !std::isfinite(*t)) {
        throw InputError("profile entries must be positive and finite");
      }
      best = std::min(best, *t);
    }
    if (best == kInf) {
      result.dropped_problems.push_back(table.problem_ids[p]);
      continue;
    }
    for (std::size_t s = 0; s < n_solvers; ++s) {
      if (row[s]) ratios[s].push_back(*row[s] / best);
    }
  }
  result.num_problems =
      static_cast<int>(table.t.size() - result.dropped_problems.size());
  if (result.num_problems == 0) {
    throw InputError("every problem failed for every solver");
  }

  const double total = result.num_problems;
  for (std::size_t s = 0; s < n_solvers; ++s) {
    SolverProfile prof;
    prof.solver = table.solver_names[s];
    auto& r = ratios[s];
    std::sort(r.begin(), r.end());
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i + 1 < r.size() && r[i + 1] == r[i]) continue;
      prof.breakpoints.emplace_back(r[i], double(i + 1) / total);
    }
    prof.solved_fraction = double(r.size()) / total;
    result.solvers.push_back(std::move(prof));
  }
  return result;
}

double rho_at(const SolverProfile& profile, double tau) {
  double rho = 0.0;
  for (const auto& [t, r] : profile.breakpoints) {
    if (t > tau) break;
    rho = r;
  }
  return rho;
}

void write_profile_tsv(std::ostream& os, const ProfileResult& profiles) {
  for (const auto& prof : profiles.solvers) {
    os << "# solver\t" << prof.solver << '\n';
    os << "tau\trho\n";
    for (const auto& [tau, rho] : prof.breakpoints) {
      os << fmt(tau) << '\t' << fmt(rho) << '\n';
    }
    os << '\n';
  }
}

std::vector<SolverProfile> read_profile_tsv(std::istream& is) {
  std::vector<SolverProfile> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# solver\t", 0) == 0) {
      out.emplace_back().solver = line.substr(9);
      continue;
    }
    if (line == "tau\trho") continue;
    if (out.empty()) throw InputError("profile TSV: data before a solver block");
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw InputError("profile TSV: bad line");
    out.back().breakpoints.emplace_back(std::stod(line.substr(0, tab)),
                                        std::stod(line.substr(tab + 1)));
  }
  for (auto& prof : out) {
    prof.solved_fraction =
        prof.breakpoints.empty() ? 0.0 : prof.breakpoints.back().second;
  }
  return out;
}

void emit_profile_plot(const ProfileResult& profiles, Measurement measurement,
                       const std::filesystem::path& svg_path) {
  if (profiles.solvers.empty()) throw InputError("no profiles to plot");

  double tau_max = 2.0;
  for (const auto& prof : profiles.solvers) {
    if (!prof.breakpoints.empty()) {
      tau_max = std::max(tau_max, prof.breakpoints.back().first);
    }
  }
  const double log_max = std::log2(tau_max) * 1.05;

  constexpr double width = 760, height = 480;
  constexpr double left = 70, right = 170, top = 40, bottom = 60;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  auto px = [&](double tau) { return left + plot_w * std::log2(tau) / log_max; };
  auto py = [&](double rho) { return top + plot_h * (1.0 - rho); };

  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#ff7f0e", "#9467bd", "#8c564b",
                                            "#e377c2", "#7f7f7f"};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" "
      << "font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"20\" "
      << "text-anchor=\"middle\" font-size=\"14\">Performance profile: "
      << measurement_title(measurement) << " (" << profiles.num_problems
      << " problems)</text>\n";
  svg << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 10; i += 2) {
    const double rho = i / 10.0;
    svg << "<line x1=\"" << left - 4 << "\" y1=\"" << py(rho) << "\" x2=\""
        << left << "\" y2=\"" << py(rho) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << left - 8 << "\" y=\"" << py(rho) + 4
        << "\" text-anchor=\"end\">" << fmt(rho, 3) << "</text>\n";
  }
  for (int e = 0; e <= static_cast<int>(std::floor(log_max)); ++e) {
    const double x = px(std::ldexp(1.0, e));
    svg << "<line x1=\"" << x << "\" y1=\"" << top + plot_h << "\" x2=\"" << x
        << "\" y2=\"" << top + plot_h + 4 << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"" << top + plot_h + 18
        << "\" text-anchor=\"middle\">2^" << e << "</text>\n";
  }
  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15
      << "\" text-anchor=\"middle\">tau (log2 scale)</text>\n";
  svg << "<text x=\"18\" y=\"" << top + plot_h / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << top + plot_h / 2 << ")\">rho_s(tau)</text>\n";

  for (std::size_t s = 0; s < profiles.solvers.size(); ++s) {
    const auto& prof = profiles.solvers[s];
    const char* color = kColors[s % std::size(kColors)];
    std::ostringstream pts;
    double level = 0.0;
    pts << px(1.0) << ',' << py(0.0);
    for (const auto& [tau, rho] : prof.breakpoints) {
      pts << ' ' << px(tau) << ',' << py(level) << ' ' << px(tau) << ','
          << py(rho);
      level = rho;
    }
    const double x_end = left + plot_w;
    pts << ' ' << x_end << ',' << py(level);
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"" << pts.str() << "\"/>\n";
    // Robustness (solved fraction) on the right axis.
    svg << "<text x=\"" << x_end + 6 << "\" y=\"" << py(level) + 4
        << "\" fill=\"" << color << "\">" << fmt(prof.solved_fraction, 3)
        << "</text>\n";
    const double ly = top + 20 + 18 * double(s);
    svg << "<line x1=\"" << x_end + 50 << "\" y1=\"" << ly << "\" x2=\""
        << x_end + 70 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << x_end + 75 << "\" y=\"" << ly + 4 << "\">"
        << xml_escape(prof.solver) << "</text>\n";
  }
  svg << "</svg>\n";

  std::ofstream out(svg_path);
  if (!out) throw ConfigError("cannot write " + svg_path.string());
  out << svg.str();
  auto tsv_path = svg_path;
  tsv_path.replace_extension(".tsv");
  std::ofstream tsv(tsv_path);
  if (!tsv) throw ConfigError("cannot write " + tsv_path.string());
  write_profile_tsv(tsv, profiles);
}

std::filesystem::path profile_from_csv(const std::filesystem::path& csv,
                                       Measurement measurement,
                                       Aggregate aggregate,
                                       const std::filesystem::path& dir) {
  const auto rows = read_results_csv(csv);
  const auto profiles =
      performance_profile(build_profile_table(rows, measurement, aggregate));
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto svg = dir / ("profile_" + std::string(to_string(measurement)) +
                          ".svg");
  emit_profile_plot(profiles, measurement, svg);
  return svg;
}

}  // namespace vecopt::bench
