// Golden tests against the installed command-line surface: byte-identical
// output and the documented exit codes.

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string(CSMLAT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("chi golden output") {
  const RunResult r = run_cli("chi \"P 4\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "5\n");
}

TEST_CASE("csm golden output") {
  const RunResult r = run_cli("csm \"P 2\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "degree 0: 3\ndegree 1: 3\ndegree 2: 1\n");
}

TEST_CASE("push golden output") {
  const RunResult r = run_cli("push --map pow:2 --ambient 2 \"U(2,1)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2 orb{0,1} + 2 orb{0,2} + 2 orb{1,2}\n");
}

TEST_CASE("eval value and errors") {
  const RunResult hit = run_cli("eval --support \"{0,1}\" --ambient 2 \"sub{0,1}\"");
  CHECK(hit.exit_code == 0);
  CHECK(hit.output == "1\n");
  const RunResult miss =
      run_cli("eval --support \"{0,1,2}\" --ambient 2 \"sub{0,1}\"");
  CHECK(miss.exit_code == 0);
  CHECK(miss.output == "0\n");
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run_cli("chi --ambient 2 \"orb{\"").exit_code == 2);
  CHECK(run_cli("chi \"orb{0,1}\"").exit_code == 2);  // no inferable ambient
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("chi").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("push --map veronese:2 --ambient 2 \"P 2\"").exit_code == 2);
  CHECK(run_cli("solve --max-ambient 9").exit_code == 2);  // over the cap
}

TEST_CASE("verify suites pass and honor exit codes") {
  const RunResult theorem = run_cli("verify --suite theorem1 --max-n 4");
  CHECK(theorem.exit_code == 0);
  CHECK(theorem.output.find("[PASS] theorem1 n=4 i=3") != std::string::npos);
  CHECK(theorem.output.find("theorem1: 10/10 cells passed") !=
        std::string::npos);

  const RunResult naturality =
      run_cli("verify --suite naturality --max-n 2 --quiet");
  CHECK(naturality.exit_code == 0);
  CHECK(naturality.output == "naturality: 20/20 cells passed\n");

  const RunResult quotient =
      run_cli("verify --suite quotient --max-n 2 --degrees 2,3 --quiet");
  CHECK(quotient.exit_code == 0);
  CHECK(quotient.output == "quotient: 6/6 cells passed\n");

  CHECK(run_cli("verify --suite nonsense").exit_code == 2);
}

TEST_CASE("solve verdicts drive the exit code") {
  const RunResult pass = run_cli("solve --max-ambient 1 --quiet");
  CHECK(pass.exit_code == 0);
  CHECK(pass.output == "verdict: PASS\n");

  // Without inclusions the space is 3-dimensional instead of 2.
  const RunResult fail = run_cli("solve --max-ambient 1 --no-inclusions --quiet");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output == "verdict: FAIL\n");
}

TEST_CASE("json output is parseable and deterministic") {
  const RunResult a = run_cli("solve --max-ambient 2 --json");
  const RunResult b = run_cli("solve --max-ambient 2 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const nlohmann::json report = nlohmann::json::parse(a.output);
  CHECK(report["dimension"] == 3);
  CHECK(report["expected_dimension"] == 3);
  CHECK(report["span_equal"] == true);
  CHECK(report["pass"] == true);
  CHECK(report["constraint_counts"]["power"].is_number());

  const RunResult chi = run_cli("chi --json \"P 3\"");
  const nlohmann::json value = nlohmann::json::parse(chi.output);
  CHECK(value["value"]["num"] == "4");
  CHECK(value["value"]["den"] == "1");

  const RunResult verify = run_cli("verify --suite theorem1 --max-n 3 --json");
  const nlohmann::json suite = nlohmann::json::parse(verify.output);
  CHECK(suite["pass"] == true);
  CHECK(suite["cells"].size() == 6);
}
