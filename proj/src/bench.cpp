#include "vecopt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace vecopt::bench {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const auto end = s.find(sep, begin);
    parts.push_back(trim(s.substr(begin, end - begin)));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("invalid " + std::string(what) + ": '" +
                      std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "1" || text == "true" || text == "yes" || text == "on") {
    return true;
  }
  if (text == "0" || text == "false" || text == "no" || text == "off") {
    return false;
  }
  throw ConfigError("invalid boolean: '" + std::string(text) + "'");
}

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

struct Job {
  const VectorProblem* problem;
  std::size_t method;
  int start_idx;
};

}  // namespace

std::string_view to_string(Measurement m) {
  switch (m) {
    case Measurement::kIters:
      return "iters";
    case Measurement::kTime:
      return "time";
    case Measurement::kFevals:
      return "fevals";
    case Measurement::kJevals:
      return "jevals";
  }
  return "?";
}

std::optional<Measurement> parse_measurement(std::string_view id) {
  for (Measurement m : kAllMeasurements) {
    if (to_string(m) == id) return m;
  }
  return std::nullopt;
}

std::optional<Aggregate> parse_aggregate(std::string_view id) {
  if (id == "run" || id == "none") return Aggregate::kPerRun;
  if (id == "median") return Aggregate::kMedian;
  return std::nullopt;
}

std::string MethodSpec::label() const {
  return std::string(to_string(direction)) + ":" +
         std::string(to_string(linesearch));
}

SolverOptions MethodSpec::options(const SolverOptions& base) const {
  SolverOptions o = base;
  o.method = direction;
  o.linesearch = linesearch;
  if (mu) o.mu = *mu;
  if (rho) o.ls.rho = *rho;
  if (sigma) o.ls.sigma = *sigma;
  if (delta) o.ls.delta = *delta;
  return o;
}

MethodSpec parse_method_spec(std::string_view text) {
  const auto parts = split(trim(text), ':');
  if (parts.size() < 2) {
    throw ConfigError("method '" + std::string(text) +
                      "' must look like direction:linesearch");
  }
  MethodSpec spec;
  const auto dir = parse_direction_method(parts[0]);
  if (!dir) {
    throw ConfigError("unknown direction method '" + std::string(parts[0]) +
                      "'");
  }
  const auto ls = parse_line_search(parts[1]);
  if (!ls) {
    throw ConfigError("unknown line search '" + std::string(parts[1]) + "'");
  }
  spec.direction = *dir;
  spec.linesearch = *ls;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("method parameter '" + std::string(parts[i]) +
                        "' must be key=value");
    }
    const auto key = trim(parts[i].substr(0, eq));
    const double value = parse_number<double>(parts[i].substr(eq + 1), key);
    if (key == "mu") {
      spec.mu = value;
    } else if (key == "rho") {
      spec.rho = value;
    } else if (key == "sigma") {
      spec.sigma = value;
    } else if (key == "delta") {
      spec.delta = value;
    } else {
      throw ConfigError("unknown method parameter '" + std::string(key) + "'");
    }
  }
  return spec;
}

std::vector<MethodSpec> default_methods() {
  return {parse_method_spec("mprp:wolfe"), parse_method_spec("mprp:armijo"),
          parse_method_spec("prp:strong-wolfe"),
          parse_method_spec("prp+:strong-wolfe"),
          parse_method_spec("fr:strong-wolfe")};
}

void BenchConfig::validate() const {
  if (methods.empty()) throw ConfigError("no methods configured");
  if (starts_per_problem < 1) throw ConfigError("starts must be at least 1");
  if (threads < 0) throw ConfigError("threads must be nonnegative");
  resolved_problems();
  std::vector<std::string> labels;
  for (const auto& m : methods) {
    m.options(base).validate();
    labels.push_back(m.label());
  }
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw ConfigError("duplicate method in configuration");
  }
}

std::vector<const VectorProblem*> BenchConfig::resolved_problems() const {
  std::vector<const VectorProblem*> out;
  if (problems.empty()) {
    for (const auto& p : suite()) out.push_back(&p);
    return out;
  }
  for (const auto& name : problems) {
    const VectorProblem* p = find_problem(name);
    if (p == nullptr) throw ConfigError("unknown problem '" + name + "'");
    out.push_back(p);
  }
  return out;
}

void apply_setting(BenchConfig& cfg, std::string_view key,
                   std::string_view value) {
  std::string k(trim(key));
  std::replace(k.begin(), k.end(), '_', '-');
  value = trim(value);
  if (k == "methods") {
    cfg.methods.clear();
    for (auto part : split(value, ',')) {
      if (!part.empty()) cfg.methods.push_back(parse_method_spec(part));
    }
  } else if (k == "problems") {
    cfg.problems.clear();
    if (value != "all") {
      for (auto part : split(value, ',')) {
        if (!part.empty()) cfg.problems.emplace_back(part);
      }
    }
  } else if (k == "starts") {
    cfg.starts_per_problem = parse_number<int>(value, k);
  } else if (k == "seed") {
    cfg.seed = parse_number<std::uint64_t>(value, k);
  } else if (k == "out") {
    cfg.output_dir = std::string(value);
  } else if (k == "rho") {
    cfg.base.ls.rho = parse_number<double>(value, k);
  } else if (k == "sigma") {
    cfg.base.ls.sigma = parse_number<double>(value, k);
  } else if (k == "delta") {
    cfg.base.ls.delta = parse_number<double>(value, k);
  } else if (k == "alpha-max") {
    cfg.base.ls.alpha_max = parse_number<double>(value, k);
  } else if (k == "max-trials") {
    cfg.base.ls.max_trials = parse_number<int>(value, k);
  } else if (k == "mu") {
    cfg.base.mu = parse_number<double>(value, k);
  } else if (k == "max-iters") {
    cfg.base.max_iters = parse_number<int>(value, k);
  } else if (k == "tol") {
    cfg.base.tol_crit = parse_number<double>(value, k);
  } else if (k == "measure") {
    const auto m = parse_measurement(value);
    if (!m) throw ConfigError("unknown measure '" + std::string(value) + "'");
    cfg.measurement = *m;
  } else if (k == "aggregate") {
    const auto a = parse_aggregate(value);
    if (!a) throw ConfigError("unknown aggregate '" + std::string(value) + "'");
    cfg.aggregate = *a;
  } else if (k == "trace") {
    cfg.trace = parse_bool(value);
  } else if (k == "threads") {
    cfg.threads = parse_number<int>(value, k);
  } else {
    throw ConfigError("unknown setting '" + std::string(key) + "'");
  }
}

void load_config_file(BenchConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    view = trim(view.substr(0, view.find('#')));
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": expected key = value");
    }
    apply_setting(cfg, view.substr(0, eq), view.substr(eq + 1));
  }
}

std::uint64_t start_seed(std::uint64_t base_seed, std::string_view problem,
                         int start_idx) {
  return splitmix64(splitmix64(base_seed ^ fnv1a(problem)) +
                    static_cast<std::uint64_t>(start_idx));
}

namespace {

struct SweepOutput {
  std::vector<ResultRow> rows;
  std::vector<RunRecord> records;  // filled only when traces are kept
};

SweepOutput sweep(const BenchConfig& cfg) {
  cfg.validate();
  const auto problems = cfg.resolved_problems();
  std::vector<std::size_t> method_order(cfg.methods.size());
  for (std::size_t i = 0; i < method_order.size(); ++i) method_order[i] = i;
  std::sort(method_order.begin(), method_order.end(),
            [&](std::size_t a, std::size_t b) {
              return cfg.methods[a].label() < cfg.methods[b].label();
            });
  auto sorted_problems = problems;
  std::sort(sorted_problems.begin(), sorted_problems.end(),
            [](const VectorProblem* a, const VectorProblem* b) {
              return a->name < b->name;
            });

  std::vector<Job> jobs;
  for (const VectorProblem* p : sorted_problems) {
    for (std::size_t m : method_order) {
      for (int s = 0; s < cfg.starts_per_problem; ++s) jobs.push_back({p, m, s});
    }
  }

  SweepOutput out;
  out.rows.resize(jobs.size());
  if (cfg.trace) out.records.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::string first_error;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& job = jobs[i];
      const MethodSpec& spec = cfg.methods[job.method];
      SolverOptions opts = spec.options(cfg.base);
      opts.keep_trace = cfg.trace;
      ResultRow& row = out.rows[i];
      row.problem = job.problem->name;
      row.method = std::string(to_string(spec.direction));
      row.linesearch = std::string(to_string(spec.linesearch));
      row.start_idx = job.start_idx;
      row.seed = start_seed(cfg.seed, job.problem->name, job.start_idx);
      try {
        RunRecord rec =
            solve(*job.problem, sample_start(*job.problem, row.seed), opts);
        row.status = rec.status;
        row.iters = rec.iters;
        row.f_evals = rec.f_evals;
        row.j_evals = rec.j_evals;
        row.wall_time_s = rec.wall_time_s;
        row.theta_final = rec.theta_final;
        row.restarts = rec.restarts;
        if (cfg.trace) out.records[i] = std::move(rec);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (first_error.empty()) {
          first_error = row.problem + " / " + spec.label() + " / start " +
                        std::to_string(row.start_idx) + ": " + e.what();
        }
      }
    }
  };

  unsigned n_threads = cfg.threads > 0
                           ? static_cast<unsigned>(cfg.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, std::max<std::size_t>(1, jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!first_error.empty()) throw std::runtime_error(first_error);
  return out;
}

}  // namespace

std::vector<ResultRow> run_sweep(const BenchConfig& cfg) {
  return sweep(cfg).rows;
}

std::filesystem::path run_suite(const BenchConfig& cfg) {
  cfg.validate();
  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  const auto results_path = cfg.output_dir / "results.csv";
  {
    std::ofstream probe(results_path);
    if (!probe) {
      throw ConfigError("cannot write to " + cfg.output_dir.string());
    }
  }

  SweepOutput out = sweep(cfg);
  {
    std::ofstream os(results_path);
    write_results_csv(os, out.rows);
  }
  {
    std::ofstream os(cfg.output_dir / "starts.csv");
    os << "problem,start_idx,seed,x0\n";
    os.precision(17);
    for (const VectorProblem* p : cfg.resolved_problems()) {
      for (int s = 0; s < cfg.starts_per_problem; ++s) {
        const auto seed = start_seed(cfg.seed, p->name, s);
        const Vector x0 = sample_start(*p, seed);
        os << p->name << ',' << s << ',' << seed << ',';
        for (Eigen::Index i = 0; i < x0.size(); ++i) {
          os << (i ? ";" : "") << format_double(x0[i], 17);
        }
        os << '\n';
      }
    }
  }
  if (cfg.trace) {
    std::ofstream os(cfg.output_dir / "traces.csv");
    os << "problem,method,linesearch,start_idx,k,norm_v,theta,beta,alpha,h_d,"
          "phi_decrease,restarted\n";
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
      const ResultRow& row = out.rows[i];
      for (const auto& it : out.records[i].trace) {
        os << row.problem << ',' << row.method << ',' << row.linesearch << ','
           << row.start_idx << ',' << it.k << ',' << format_double(it.norm_v, 17)
           << ',' << format_double(it.theta, 17) << ','
           << format_double(it.beta, 17) << ',' << format_double(it.alpha, 17)
           << ',' << format_double(it.h_d, 17) << ','
           << format_double(it.phi_decrease, 17) << ',' << int(it.restarted)
           << '\n';
      }
    }
  }
  return results_path;
}

void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    os << r.problem << ',' << r.method << ',' << r.linesearch << ','
       << r.start_idx << ',' << r.seed << ',' << to_string(r.status) << ','
       << r.iters << ',' << r.f_evals << ',' << r.j_evals << ','
       << format_double(r.wall_time_s, 9) << ','
       << format_double(r.theta_final, 17) << ',' << r.restarts << '\n';
  }
}

std::vector<ResultRow> read_results_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || trim(line) != kCsvHeader) {
    throw InputError("results file does not start with the expected header");
  }
  std::vector<ResultRow> rows;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 12) {
      throw InputError("results line " + std::to_string(lineno) +
                       " has " + std::to_string(f.size()) + " fields");
    }
    ResultRow r;
    r.problem = std::string(f[0]);
    r.method = std::string(f[1]);
    r.linesearch = std::string(f[2]);
    r.start_idx = parse_number<int>(f[3], "start_idx");
    r.seed = parse_number<std::uint64_t>(f[4], "seed");
    const auto status = parse_run_status(f[5]);
    if (!status) throw InputError("unknown status '" + std::string(f[5]) + "'");
    r.status = *status;
    r.iters = parse_number<int>(f[6], "iters");
    r.f_evals = parse_number<std::int64_t>(f[7], "f_evals");
    r.j_evals = parse_number<std::int64_t>(f[8], "j_evals");
    r.wall_time_s = parse_number<double>(f[9], "wall_time_s");
    r.theta_final = parse_number<double>(f[10], "theta_final");
    r.restarts = parse_number<int>(f[11], "restarts");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ResultRow> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  return read_results_csv(in);
}

}  // namespace vecopt::bench
