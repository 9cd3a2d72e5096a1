#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vecopt/bench.hpp"

namespace vecopt::bench {

/// t_{p,s}: rows are problems, columns solvers. An empty optional is a
/// failure.
struct ProfileTable {
  std::vector<std::string> problem_ids;
  std::vector<std::string> solver_names;
  std::vector<std::vector<std::optional<double>>> t;
};

struct SolverProfile {
  std::string solver;
  // (τ, ρ_s(τ)) at every τ where ρ_s jumps; ρ_s is constant in between
  // and 0 before the first breakpoint.
  std::vector<std::pair<double, double>> breakpoints;
  double solved_fraction = 0;
};

struct ProfileResult {
  std::vector<SolverProfile> solvers;
  std::vector<std::string> dropped_problems;  // rows where every solver failed
  int num_problems = 0;
};

/// Builds the table from sweep rows. Only CONVERGED runs get a value.
/// Per-run mode makes each (problem, start) pair one row; median mode
/// uses one row per problem holding the median over starts, failures
/// counting as +∞. Rows and solvers are sorted by name, so the table does
/// not depend on the order of `rows`. Zero measurements are floored at 1
/// (counts) or 1e-9 s (time).
ProfileTable build_profile_table(const std::vector<ResultRow>& rows,
                                 Measurement measurement,
                                 Aggregate aggregate = Aggregate::kPerRun);

/// Ratios r_{p,s} = t_{p,s} / min_s t_{p,s} and their cumulative
/// distribution ρ_s(τ). Throws InputError for an empty table or
/// non-positive entries.
ProfileResult performance_profile(const ProfileTable& table);

/// ρ_s(τ) evaluated from the breakpoints.
double rho_at(const SolverProfile& profile, double tau);

/// Writes an SVG step plot (log₂ τ axis) to `svg_path` and the breakpoint
/// table next to it with a `.tsv` extension.
void emit_profile_plot(const ProfileResult& profiles, Measurement measurement,
                       const std::filesystem::path& svg_path);

void write_profile_tsv(std::ostream& os, const ProfileResult& profiles);
std::vector<SolverProfile> read_profile_tsv(std::istream& is);

/// profile_<measure>.svg / .tsv in `dir` from a results file.
std::filesystem::path profile_from_csv(const std::filesystem::path& csv,
                                       Measurement measurement,
                                       Aggregate aggregate,
                                       const std::filesystem::path& dir);

}  // namespace vecopt::bench
