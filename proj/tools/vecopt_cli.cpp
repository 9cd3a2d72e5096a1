// vecopt: run single solves, benchmark sweeps and performance profiles.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vecopt/bench.hpp"
#include "vecopt/profile.hpp"
#include "vecopt/solver.hpp"

namespace {

using namespace vecopt;

// Flags shared by `run` and `solve`, kept as strings so that only the ones
// given on the command line override the config file.
struct SharedFlags {
  std::vector<std::pair<std::string, std::string>> given;

  void add(CLI::App* app, const std::string& name, const std::string& help) {
    app->add_option_function<std::string>(
        "--" + name,
        [this, name](const std::string& v) { given.emplace_back(name, v); },
        help);
  }
  void apply(bench::BenchConfig& cfg) const {
    for (const auto& [k, v] : given) bench::apply_setting(cfg, k, v);
  }
};

void add_solver_flags(CLI::App* app, SharedFlags& flags) {
  flags.add(app, "rho", "sufficient-decrease constant (default 1e-4)");
  flags.add(app, "sigma", "curvature constant (default 0.1)");
  flags.add(app, "delta", "Armijo backtracking factor (default 0.5)");
  flags.add(app, "mu", "MPRP parameter, > 2 (default 2.4)");
  flags.add(app, "max-iters", "iteration cap (default 5000)");
  flags.add(app, "tol", "criticality tolerance on theta (default 5*2^-26)");
  flags.add(app, "alpha-max", "largest trial step of the Wolfe searches");
  flags.add(app, "max-trials", "line-search trial cap (default 100)");
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

int cmd_list() {
  std::cout << "problems:\n";
  for (const auto& p : suite()) {
    std::cout << "  " << p.name << "  n=" << p.n << " m=" << p.m
              << (p.convex ? "  convex" : "  nonconvex") << "  (" << p.reference
              << ")\n";
  }
  std::cout << "methods:\n";
  for (auto m : all_direction_methods()) std::cout << "  " << to_string(m) << '\n';
  std::cout << "line searches:\n  armijo\n  wolfe\n  strong-wolfe\n";
  return 0;
}

int cmd_solve(const std::string& problem_name, const std::string& method,
              const std::string& linesearch, std::uint64_t seed,
              const std::vector<double>& x0_values, bool quiet,
              const SharedFlags& flags) {
  const VectorProblem* p = find_problem(problem_name);
  if (p == nullptr) throw ConfigError("unknown problem '" + problem_name + "'");
  bench::BenchConfig cfg;
  flags.apply(cfg);
  const auto spec = bench::parse_method_spec(method + ":" + linesearch);
  SolverOptions opts = spec.options(cfg.base);
  opts.keep_trace = true;

  Vector x0;
  if (!x0_values.empty()) {
    if (static_cast<int>(x0_values.size()) != p->n) {
      throw ConfigError("--x0 needs " + std::to_string(p->n) + " values");
    }
    x0 = Eigen::Map<const Vector>(x0_values.data(), p->n);
  } else {
    x0 = sample_start(*p, bench::start_seed(seed, p->name, 0));
  }

  const RunRecord rec = solve(*p, x0, opts);
  if (!quiet) {
    std::cout << "k\t|v|\ttheta\tbeta\talpha\th(x,d)\tphi_decrease\n";
    for (const auto& it : rec.trace) {
      std::cout << it.k << '\t' << fmt(it.norm_v) << '\t' << fmt(it.theta)
                << '\t' << fmt(it.beta) << '\t' << fmt(it.alpha) << '\t'
                << fmt(it.h_d) << '\t' << fmt(it.phi_decrease)
                << (it.restarted ? "\trestart" : "") << '\n';
    }
  }
  std::cout << "status=" << to_string(rec.status) << " iters=" << rec.iters
            << " f_evals=" << rec.f_evals << " j_evals=" << rec.j_evals
            << " restarts=" << rec.restarts
            << " theta_final=" << fmt(rec.theta_final)
            << " wall_time_s=" << fmt(rec.wall_time_s) << '\n';
  std::cout << "x_final=";
  for (Eigen::Index i = 0; i < rec.x_final.size(); ++i) {
    std::cout << (i ? "," : "") << rec.x_final[i];
  }
  std::cout << '\n';
  if (rec.status != RunStatus::kConverged) {
    std::cerr << "vecopt: run did not converge (" << to_string(rec.status)
              << (rec.message.empty() ? "" : ": " + rec.message) << ")\n";
    return 1;
  }
  return 0;
}

int cmd_run(const std::string& config_path, const SharedFlags& flags) {
  bench::BenchConfig cfg;
  if (!config_path.empty()) bench::load_config_file(cfg, config_path);
  flags.apply(cfg);
  const auto csv = bench::run_suite(cfg);
  std::cout << "results: " << csv.string() << '\n';
  const auto rows = bench::read_results_csv(csv);
  for (auto m : bench::kAllMeasurements) {
    const auto svg = bench::profile_from_csv(csv, m, cfg.aggregate,
                                             cfg.output_dir);
    std::cout << "profile: " << svg.string() << '\n';
  }
  std::map<std::string, std::pair<int, int>> solved;
  for (const auto& r : rows) {
    auto& [ok, total] = solved[r.solver()];
    ok += r.status == RunStatus::kConverged;
    ++total;
  }
  for (const auto& [solver, counts] : solved) {
    std::cout << solver << ": " << counts.first << "/" << counts.second
              << " converged\n";
  }
  return 0;
}

int cmd_profile(const std::string& in, const std::string& measure,
                const std::string& aggregate, std::string out_dir) {
  const auto m = bench::parse_measurement(measure);
  if (!m) throw ConfigError("unknown measure '" + measure + "'");
  const auto a = bench::parse_aggregate(aggregate);
  if (!a) throw ConfigError("unknown aggregate '" + aggregate + "'");
  std::filesystem::path dir = out_dir;
  if (dir.empty()) dir = std::filesystem::path(in).parent_path();
  if (dir.empty()) dir = ".";
  const auto svg = bench::profile_from_csv(in, *m, *a, dir);
  std::cout << "profile: " << svg.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugate gradient methods for vector optimization"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list problems and methods");

  SharedFlags solve_flags;
  std::string problem = "jos1", method = "mprp", linesearch = "wolfe";
  std::uint64_t solve_seed = 1;
  std::vector<double> x0;
  bool quiet = false;
  auto* solve_cmd = app.add_subcommand("solve", "single run with trace");
  solve_cmd->add_option("--problem", problem, "problem name")->capture_default_str();
  solve_cmd->add_option("--method", method, "direction method id")->capture_default_str();
  solve_cmd->add_option("--linesearch", linesearch, "armijo | wolfe | strong-wolfe")
      ->capture_default_str();
  solve_cmd->add_option("--seed", solve_seed, "seed for the start point")
      ->capture_default_str();
  solve_cmd->add_option("--x0", x0, "explicit start point")->delimiter(',');
  solve_cmd->add_flag("--quiet", quiet, "print only the summary");
  add_solver_flags(solve_cmd, solve_flags);

  SharedFlags run_flags;
  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "benchmark sweep");
  run_cmd->add_option("--config", config_path, "key = value config file");
  run_flags.add(run_cmd, "methods", "comma list of dir:linesearch[:k=v]");
  run_flags.add(run_cmd, "problems", "comma list of problem names, or all");
  run_flags.add(run_cmd, "starts", "start points per problem (default 200)");
  run_flags.add(run_cmd, "seed", "base seed (default 1)");
  run_flags.add(run_cmd, "out", "output directory (default bench_out)");
  run_flags.add(run_cmd, "measure", "iters | time | fevals | jevals");
  run_flags.add(run_cmd, "aggregate", "run | median");
  run_flags.add(run_cmd, "trace", "write traces.csv (true/false)");
  run_flags.add(run_cmd, "threads", "worker threads (0 = all cores)");
  add_solver_flags(run_cmd, run_flags);

  std::string in_csv, measure = "iters", aggregate = "run", out_dir;
  auto* profile_cmd = app.add_subcommand("profile", "performance profile");
  profile_cmd->add_option("--in", in_csv, "results CSV")->required();
  profile_cmd->add_option("--measure", measure, "iters | time | fevals | jevals")
      ->capture_default_str();
  profile_cmd->add_option("--aggregate", aggregate, "run | median")
      ->capture_default_str();
  profile_cmd->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "vecopt: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (*list) return cmd_list();
    if (*solve_cmd) {
      return cmd_solve(problem, method, linesearch, solve_seed, x0, quiet,
                       solve_flags);
    }
    if (*run_cmd) return cmd_run(config_path, run_flags);
    if (*profile_cmd) return cmd_profile(in_csv, measure, aggregate, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "vecopt: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
