#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(DBCELL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) output.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("seed build") {
  RunResult r = run("seed build --type A1 --word \"-1 1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"1:1\"") != std::string::npos);
  CHECK(r.output.find("vertices") != std::string::npos);

  RunResult bad = run("seed build --type A1 --word \"-1 x\"");
  CHECK(bad.exit_code == 2);
  RunResult nonreduced = run("seed build --type A2 --word \"1 1\"");
  CHECK(nonreduced.exit_code == 2);
  RunResult usage = run("seed build");
  CHECK(usage.exit_code == 2);
}

TEST_CASE("seed mutate through files") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  std::string seed_path = dir + "/dbcell_seed.json";
  RunResult build = run("seed build --type A1 --word \"-1 1\" --out " + seed_path);
  REQUIRE(build.exit_code == 0);
  RunResult mutate = run("seed mutate --seed " + seed_path + " --at 1:1");
  CHECK(mutate.exit_code == 0);
  CHECK(mutate.output.find("epsilon") != std::string::npos);
  RunResult frozen = run("seed mutate --seed " + seed_path + " --at 1:0");
  CHECK(frozen.exit_code == 2);
}

TEST_CASE("deterministic dot export") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  std::string d1 = dir + "/dbcell_a.dot", d2 = dir + "/dbcell_b.dot";
  REQUIRE(run("export dot --type A2 --word \"-1 -2 1 2\" --out " + d1).exit_code == 0);
  REQUIRE(run("export dot --type A2 --word \"-1 -2 1 2\" --out " + d2).exit_code == 0);
  CHECK(slurp(d1) == slurp(d2));
  CHECK(slurp(d1).find("digraph") != std::string::npos);
}

TEST_CASE("dt verify verdicts and exit codes") {
  RunResult pass = run("dt verify --type A1 --word \"-1 1\"");
  CHECK(pass.exit_code == 0);
  CHECK(pass.output.find("PASS") != std::string::npos);

  RunResult fail = run("dt verify --type A1 --word \"-1 1\" --inject-identity");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("FAIL") != std::string::npos);

  RunResult badword = run("dt verify --type A1 --word \"1 1\"");
  CHECK(badword.exit_code == 2);
}

TEST_CASE("dt build emits the step list") {
  RunResult r = run("dt build --type A2 --word \"-1 -2 1 2\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("mutate") != std::string::npos);
  CHECK(r.output.find("iso") != std::string::npos);
}

TEST_CASE("twist-check") {
  RunResult r = run("twist-check --n 2 --word \"-1 1\" --trials 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);

  RunResult vacuous = run("twist-check --n 2 --word \"-1 1\" --trials 0");
  CHECK(vacuous.exit_code == 0);
  CHECK(vacuous.output.find("warning") != std::string::npos);
}

TEST_CASE("identities subcommand and reproducible reports") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  std::string j1 = dir + "/dbcell_id1.json", j2 = dir + "/dbcell_id2.json";
  RunResult r1 = run("identities --trials 5 --json " + j1);
  CHECK(r1.exit_code == 0);
  RunResult r2 = run("identities --trials 5 --json " + j2);
  CHECK(r2.exit_code == 0);
  // identical configs reproduce identical reports byte-for-byte
  CHECK(slurp(j1) == slurp(j2));
  CHECK(slurp(j1).find("random_seed") != std::string::npos);
  CHECK(slurp(j1).find("version") != std::string::npos);
}
