#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(QPB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, PassingSuiteExitsZero) {
  const CliRun r = run("verify ladder");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.front(), '[');
  EXPECT_NE(r.out.find("\"check_id\": \"ladder_algebra\""), std::string::npos);
}

TEST(Cli, FailingCheckExitsOne) {
  EXPECT_EQ(run("verify poisson --tolerance poisson_residual=1e-15").status, 1);
  EXPECT_EQ(run("verify ladder --tolerance ladder_algebra=0 ht_commutator_residual=0").status, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const char* args : {"", "verify", "verify everything", "verify kk --n-points 100",
                           "verify kk --hbar -1", "verify kk --tolerance nope=1",
                           "verify kk --tolerance kk_residual=abc", "verify kk --format xml",
                           "verify kk --n-points", "frobnicate", "normal-order \"X +\""}) {
    EXPECT_EQ(run(args).status, 2) << "args: " << args;
  }
}

TEST(Cli, JsonIsByteStable) {
  const CliRun a = run("verify weyl --seed 7 --format json");
  const CliRun b = run("verify weyl --seed 7 --format json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutFileMatchesStdout) {
  const auto path = std::filesystem::temp_directory_path() / "qpb_cli_test_report.json";
  std::filesystem::remove(path);
  const CliRun to_file = run("verify uncertainty --seed 3 --out " + path.string());
  EXPECT_EQ(to_file.status, 0);
  EXPECT_TRUE(to_file.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), run("verify uncertainty --seed 3").out);
  std::filesystem::remove(path);
}

TEST(Cli, TableFormat) {
  const CliRun r = run("verify ladder --format table --omega 3 --hbar 0.5");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("check_id", 0), 0u);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, NormalOrder) {
  const CliRun r = run("normal-order \"P P X\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "-2*i*hbar P + X P^2\n");
}
