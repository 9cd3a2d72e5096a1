#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct Output {
  int code = -1;
  std::string text;
};

Output run(const std::string& args) {
  const std::string cmd = std::string(VECOPT_CLI_PATH) + " " + args + " 2>&1";
  Output out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.text.append(buf, n);
  const int status = pclose(pipe);
  out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

int count_lines_after(const std::string& text, const std::string& heading,
                      const std::string& next) {
  const auto start = text.find(heading);
  const auto stop = text.find(next, start);
  int lines = 0;
  for (auto i = start + heading.size(); i < stop; ++i) lines += text[i] == '\n';
  return lines;
}

TEST(Cli, ListsProblemsAndMethods) {
  const auto out = run("list");
  ASSERT_EQ(out.code, 0) << out.text;
  EXPECT_GE(count_lines_after(out.text, "problems:\n", "methods:"), 10);
  EXPECT_GE(count_lines_after(out.text, "methods:\n", "line searches:"), 8);
}

TEST(Cli, SolveJos1) {
  const auto out = run("solve --problem jos1 --method mprp --linesearch wolfe --quiet");
  ASSERT_EQ(out.code, 0) << out.text;
  EXPECT_NE(out.text.find("status=CONVERGED"), std::string::npos);
  const auto pos = out.text.find("theta_final=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_GE(std::stod(out.text.substr(pos + 12)), -7.45e-8);
}

TEST(Cli, RunThenProfile) {
  const fs::path dir = fs::temp_directory_path() / "vecopt_cli_run";
  fs::remove_all(dir);
  const auto out = run("run --methods mprp:wolfe,prp+:strong-wolfe --problems jos1,lov1 "
                       "--starts 2 --threads 1 --out " + dir.string());
  ASSERT_EQ(out.code, 0) << out.text;
  for (const char* m : {"iters", "time", "fevals", "jevals"}) {
    EXPECT_TRUE(fs::exists(dir / (std::string("profile_") + m + ".svg"))) << m;
  }
  const fs::path other = dir / "again";
  const auto prof = run("profile --in " + (dir / "results.csv").string() +
                        " --measure fevals --out " + other.string());
  ASSERT_EQ(prof.code, 0) << prof.text;
  EXPECT_TRUE(fs::exists(other / "profile_fevals.svg"));
  EXPECT_TRUE(fs::exists(other / "profile_fevals.tsv"));
}

TEST(Cli, BadInvocations) {
  EXPECT_EQ(run("solve --no-such-flag").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("solve --problem nope --quiet").code, 1);
  EXPECT_EQ(run("profile --in /nonexistent/results.csv").code, 1);
}

}  // namespace
