#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "vecopt/bench.hpp"

namespace vecopt::bench {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("vecopt_bench_" + name);
  fs::remove_all(dir);
  return dir;
}

BenchConfig small_config(const std::string& name) {
  BenchConfig cfg;
  cfg.methods = {parse_method_spec("mprp:wolfe")};
  cfg.problems = {"jos1"};
  cfg.starts_per_problem = 3;
  cfg.seed = 1;
  cfg.output_dir = scratch_dir(name);
  cfg.threads = 1;
  return cfg;
}

std::string without_time(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << r.problem << ',' << r.solver() << ',' << r.start_idx << ',' << r.seed
       << ',' << to_string(r.status) << ',' << r.iters << ',' << r.f_evals
       << ',' << r.j_evals << ',' << r.theta_final << ',' << r.restarts << '\n';
  }
  return os.str();
}

TEST(RunSuite, WritesOneRowPerRun) {
  const auto cfg = small_config("rows");
  const auto csv = run_suite(cfg);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, kCsvHeader);
  const auto rows = read_results_csv(csv);
  ASSERT_EQ(rows.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(rows[i].problem, "jos1");
    EXPECT_EQ(rows[i].method, "mprp");
    EXPECT_EQ(rows[i].linesearch, "wolfe");
    EXPECT_EQ(rows[i].start_idx, i);
    EXPECT_EQ(rows[i].status, RunStatus::kConverged);
  }
  EXPECT_TRUE(fs::exists(cfg.output_dir / "starts.csv"));
  EXPECT_FALSE(fs::exists(cfg.output_dir / "traces.csv"));
}

TEST(RunSuite, DeterministicApartFromTime) {
  auto cfg = small_config("det_a");
  cfg.methods = {parse_method_spec("mprp:wolfe"), parse_method_spec("fr:strong-wolfe")};
  cfg.problems = {"jos1", "fonseca"};
  const auto a = read_results_csv(run_suite(cfg));
  cfg.output_dir = scratch_dir("det_b");
  cfg.threads = 2;
  const auto b = read_results_csv(run_suite(cfg));
  EXPECT_EQ(without_time(a), without_time(b));
}

TEST(RunSuite, MethodsShareStartPoints) {
  auto cfg = small_config("starts");
  cfg.methods = default_methods();
  cfg.trace = true;
  const auto rows = read_results_csv(run_suite(cfg));
  ASSERT_EQ(rows.size(), 3u * cfg.methods.size());
  for (const auto& r : rows) {
    EXPECT_EQ(r.seed, start_seed(cfg.seed, r.problem, r.start_idx));
  }
  std::ifstream in(cfg.output_dir / "starts.csv");
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "problem,start_idx,seed,x0");
  int count = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string problem, idx, seed, x0;
    std::getline(fields, problem, ',');
    std::getline(fields, idx, ',');
    std::getline(fields, seed, ',');
    std::getline(fields, x0, ',');
    const Vector expected =
        sample_start(*find_problem(problem), std::stoull(seed));
    std::istringstream coords(x0);
    std::string c;
    Eigen::Index i = 0;
    while (std::getline(coords, c, ';')) EXPECT_EQ(std::stod(c), expected[i++]);
    EXPECT_EQ(i, expected.size());
    ++count;
  }
  EXPECT_EQ(count, 3);
  EXPECT_TRUE(fs::exists(cfg.output_dir / "traces.csv"));
}

TEST(BenchConfig, UnknownProblemFailsBeforeRunning) {
  auto cfg = small_config("unknown");
  cfg.problems = {"jos1", "nope"};
  EXPECT_THROW(run_suite(cfg), ConfigError);
  EXPECT_FALSE(fs::exists(cfg.output_dir / "results.csv"));
}

TEST(BenchConfig, SettingsAndConfigFile) {
  BenchConfig cfg;
  apply_setting(cfg, "methods", "mprp:armijo:rho=0.01,prp+:strong-wolfe");
  ASSERT_EQ(cfg.methods.size(), 2u);
  EXPECT_EQ(cfg.methods[0].label(), "mprp:armijo");
  EXPECT_EQ(cfg.methods[0].rho, 0.01);
  EXPECT_EQ(cfg.methods[0].options(cfg.base).ls.rho, 0.01);
  EXPECT_EQ(cfg.methods[1].direction, DirectionMethod::kPRPPlus);
  apply_setting(cfg, "max_iters", "77");
  EXPECT_EQ(cfg.base.max_iters, 77);
  EXPECT_THROW(apply_setting(cfg, "colour", "red"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "starts", "many"), ConfigError);
  EXPECT_THROW(parse_method_spec("mprp"), ConfigError);
  EXPECT_THROW(parse_method_spec("newton:wolfe"), ConfigError);

  const fs::path dir = scratch_dir("config");
  fs::create_directories(dir);
  {
    std::ofstream os(dir / "sweep.cfg");
    os << "# sweep\nmethods = mprp:wolfe\nproblems = jos1, lov1\n"
          "starts = 5\nsigma = 0.2\nmeasure = fevals\n";
  }
  BenchConfig loaded;
  load_config_file(loaded, dir / "sweep.cfg");
  EXPECT_EQ(loaded.methods.size(), 1u);
  EXPECT_EQ(loaded.problems, (std::vector<std::string>{"jos1", "lov1"}));
  EXPECT_EQ(loaded.starts_per_problem, 5);
  EXPECT_EQ(loaded.base.ls.sigma, 0.2);
  EXPECT_EQ(loaded.measurement, Measurement::kFevals);
}

TEST(ResultsCsv, RoundTrip) {
  ResultRow r;
  r.problem = "lov1";
  r.method = "prp+";
  r.linesearch = "strong-wolfe";
  r.start_idx = 4;
  r.seed = 123456789012345ULL;
  r.status = RunStatus::kLineSearchFail;
  r.iters = 12;
  r.f_evals = 40;
  r.j_evals = 20;
  r.wall_time_s = 0.25;
  r.theta_final = -0.1234567890123;
  r.restarts = 2;
  std::stringstream ss;
  write_results_csv(ss, {r});
  const auto back = read_results_csv(ss);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(without_time(back), without_time({r}));
  EXPECT_DOUBLE_EQ(back[0].wall_time_s, 0.25);

  std::istringstream bad("problem,method\n");
  EXPECT_THROW(read_results_csv(bad), InputError);
}

}  // namespace
}  // namespace vecopt::bench
