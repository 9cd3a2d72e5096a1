#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vecopt/solver.hpp"

namespace vecopt::bench {

/// Exact header of the results file.
inline constexpr std::string_view kCsvHeader =
    "problem,method,linesearch,start_idx,seed,status,iters,f_evals,j_evals,"
    "wall_time_s,theta_final,restarts";

enum class Measurement { kIters, kTime, kFevals, kJevals };
std::string_view to_string(Measurement m);
std::optional<Measurement> parse_measurement(std::string_view id);
inline constexpr Measurement kAllMeasurements[] = {
    Measurement::kIters, Measurement::kTime, Measurement::kFevals,
    Measurement::kJevals};

/// How starts of one problem map to profile rows.
enum class Aggregate { kPerRun, kMedian };
std::optional<Aggregate> parse_aggregate(std::string_view id);

/// A benchmarked solver: direction rule, step rule and per-method
/// parameter overrides. Written `dir:ls[:key=value]...`, e.g.
/// `mprp:wolfe:mu=3`.
struct MethodSpec {
  DirectionMethod direction = DirectionMethod::kMPRP;
  LineSearchKind linesearch = LineSearchKind::kWolfe;
  std::optional<double> mu, rho, sigma, delta;

  std::string label() const;  // "dir:ls"
  SolverOptions options(const SolverOptions& base) const;
};
MethodSpec parse_method_spec(std::string_view text);

/// MPRP-W, MPRP-A, PRP, PRP+ and FR, the last three with strong Wolfe.
std::vector<MethodSpec> default_methods();

struct BenchConfig {
  std::vector<MethodSpec> methods = default_methods();
  std::vector<std::string> problems;  // empty means the whole suite
  int starts_per_problem = 200;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "bench_out";
  Measurement measurement = Measurement::kIters;
  Aggregate aggregate = Aggregate::kPerRun;
  SolverOptions base;  // shared defaults; keep_trace follows `trace`
  bool trace = false;
  int threads = 0;  // 0: hardware concurrency

  /// Throws ConfigError on an empty method list, starts < 1, unknown
  /// problem names or invalid solver options.
  void validate() const;
  std::vector<const VectorProblem*> resolved_problems() const;
};

/// Applies one `key = value` setting; keys match the CLI flag names
/// without dashes (`max-iters` and `max_iters` are both accepted).
void apply_setting(BenchConfig& cfg, std::string_view key,
                   std::string_view value);

/// Reads a flat `key = value` file; `#` starts a comment.
void load_config_file(BenchConfig& cfg, const std::filesystem::path& path);

struct ResultRow {
  std::string problem;
  std::string method;
  std::string linesearch;
  int start_idx = 0;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::kMaxIters;
  int iters = 0;
  std::int64_t f_evals = 0;
  std::int64_t j_evals = 0;
  double wall_time_s = 0;
  double theta_final = 0;
  int restarts = 0;

  std::string solver() const { return method + ":" + linesearch; }
};

/// Seed of start `start_idx` of `problem`; identical for every method.
std::uint64_t start_seed(std::uint64_t base_seed, std::string_view problem,
                         int start_idx);

/// Runs every (problem, method, start) combination on a worker pool and
/// returns rows sorted by (problem, method label, start_idx).
std::vector<ResultRow> run_sweep(const BenchConfig& cfg);

/// run_sweep plus persistence: results.csv, starts.csv (the x0 of every
/// start) and, with `trace`, traces.csv in cfg.output_dir. Returns the
/// path of results.csv. Configuration problems surface before any run.
std::filesystem::path run_suite(const BenchConfig& cfg);

void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_results_csv(std::istream& is);
std::vector<ResultRow> read_results_csv(const std::filesystem::path& path);

}  // namespace vecopt::bench
