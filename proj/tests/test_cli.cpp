#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(GME_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string("cli_test_") + name;
  std::ofstream out(path, std::ios::binary);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("analyze certifies the example 1 state") {
  const std::string path = write_temp(
      "ex1.json",
      R"({"version":1,"d":3,"family":"ghz-isotropic","params":{"x":0.8}})");
  const RunResult r = run("analyze " + path);
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["criteria"]["verdict"] == "GME-certified");
  CHECK(out["criteria"]["best_k"] == 8);
  bool found = false;
  for (const auto& rec : out["criteria"]["per_k"]) {
    if (rec["k"] == 8) {
      CHECK(std::abs(rec["margin"].get<double>() - (6.74552 * 0.8 - 4.83138)) < 1e-3);
      found = true;
    }
  }
  CHECK(found);
  CHECK(out["version"] == "0.1.0");
  CHECK(out.contains("input_digest"));
}

TEST_CASE("analyze is inconclusive on the maximally mixed state") {
  std::ostringstream body;
  body << R"({"d":2,"family":"explicit","matrix":[)";
  for (int r = 0; r < 8; ++r) {
    body << (r ? "," : "") << "[";
    for (int c = 0; c < 8; ++c) body << (c ? "," : "") << "[" << (r == c ? 0.125 : 0.0) << ",0]";
    body << "]";
  }
  body << "]}";
  const std::string path = write_temp("mixed.json", body.str());
  const RunResult r = run("analyze " + path);
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["criteria"]["verdict"] == "inconclusive");
  CHECK(out["criteria"]["theorem2_bound"] == 0.0);
  for (const auto& rec : out["criteria"]["per_k"]) CHECK(rec["margin"].get<double>() < 0.0);
}

TEST_CASE("analyze rejects malformed and unphysical input with exit 2") {
  const std::string bad = write_temp("bad.json", "{ not json");
  CHECK(run("analyze " + bad).exit_code == 2);
  CHECK(run("analyze " + bad).output.empty());  // no partial output

  const std::string nonpsd = write_temp(
      "nonpsd.json", R"({"d":2,"family":"ghz-w-mix","params":{"x":0.9,"y":0.2}})");
  CHECK(run("analyze " + nonpsd).exit_code == 2);

  CHECK(run("analyze does_not_exist.json").exit_code == 2);
}

TEST_CASE("threshold reproduces quoted onsets") {
  const RunResult ex1 = run("threshold --family ghz-isotropic --d 3 --criterion theorem1 --k 8");
  REQUIRE(ex1.exit_code == 0);
  CHECK(std::abs(std::stod(ex1.output) - 0.716235) < 1e-4);

  const RunResult ex3 = run("threshold --family example3-isotropic --criterion theorem2");
  REQUIRE(ex3.exit_code == 0);
  CHECK(std::abs(std::stod(ex3.output) - 0.866025) < 1e-4);

  // theorem2 on example 1: crossing where x * ||T123|| / (2 sqrt 2) = 2/3
  const RunResult ex1b = run("threshold --family ghz-isotropic --d 3 --criterion theorem2");
  REQUIRE(ex1b.exit_code == 0);
  CHECK(std::stod(ex1b.output) > 0.0);
  CHECK(std::stod(ex1b.output) < 1.0);

  const RunResult never =
      run("threshold --family ghz-isotropic --d 3 --criterion theorem1 --k 8 --bracket 0:0.1");
  CHECK(never.exit_code == 3);
}

TEST_CASE("sweep output structure and determinism") {
  const RunResult a = run(
      "sweep --family ghz-isotropic --d 3 --param x=0:1:11 --criterion theorem1 --k 8 "
      "--criterion theorem2");
  REQUIRE(a.exit_code == 0);
  const RunResult b = run(
      "sweep --family ghz-isotropic --d 3 --param x=0:1:11 --criterion theorem1 --k 8 "
      "--criterion theorem2");
  CHECK(a.output == b.output);

  // header comments, a column row, then 11 data rows
  std::istringstream lines(a.output);
  std::string line;
  int comments = 0, rows = 0;
  bool saw_columns = false;
  while (std::getline(lines, line)) {
    if (line.rfind('#', 0) == 0) ++comments;
    else if (!saw_columns) {
      saw_columns = true;
      CHECK(line.find("x,psd_valid,m_8,t1_margin_k8,t2_bound") == 0);
    } else {
      ++rows;
    }
  }
  CHECK(comments >= 3);
  CHECK(rows == 11);
}

TEST_CASE("sweep with steps=1 emits one row at the range start") {
  const RunResult r = run("sweep --family ghz-w-mix --param x=0.25:0.9:1 --param y=0.1:0.9:1 "
                          "--criterion theorem2");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line, last;
  int rows = 0;
  bool saw_columns = false;
  while (std::getline(lines, line)) {
    if (line.rfind('#', 0) == 0) continue;
    if (!saw_columns) { saw_columns = true; continue; }
    ++rows;
    last = line;
  }
  CHECK(rows == 1);
  CHECK(last.rfind("0.25,0.1,1,", 0) == 0);
}

TEST_CASE("verify exit codes and determinism") {
  const RunResult ok = run("verify --dims 2 --trials 10 --seed 42");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("overall,pass") != std::string::npos);

  const RunResult again = run("verify --dims 2 --trials 10 --seed 42");
  CHECK(ok.output == again.output);

  const RunResult vacuous = run("verify --dims 2 --trials 0");
  CHECK(vacuous.exit_code == 0);

  const RunResult forced = run("verify --dims 2 --trials 10 --seed 42 --tolerance-scale 0");
  CHECK(forced.exit_code == 1);
  CHECK(forced.output.find("FAIL") != std::string::npos);
}
