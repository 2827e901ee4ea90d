#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>
#include <sys/wait.h>

// End-to-end checks against the installed binary: exit codes, golden text
// output, and byte-level determinism. The binary path arrives via the
// DELTACHROMA_CLI environment variable set by CTest.

namespace {

std::string cli_path() {
  const char* p = std::getenv("DELTACHROMA_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

int run_count = 0;

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  std::string dir = "/tmp/deltachroma_cli_test";
  if (std::system(("mkdir -p " + dir).c_str()) != 0) FAIL("cannot create temp dir");
  std::string in_file = dir + "/in" + std::to_string(run_count) + ".json";
  std::string out_file = dir + "/out" + std::to_string(run_count) + ".txt";
  ++run_count;
  std::string cmd = cli_path() + " " + args;
  if (!stdin_text.empty()) {
    std::ofstream f(in_file);
    f << stdin_text;
    f.close();
    cmd += " < " + in_file;
  }
  cmd += " > " + out_file + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream f(out_file);
  r.output.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  return r;
}

const char* kK2 = R"({"vertices":["u","v"],"edges":[["u","v"]]})";
const char* kBridge = R"({"vertices":[["h1"],["h2"]],"edges":[{"ends":["h1","h2"]}]})";
const char* kSeaViolator = R"({"ground":["1","2","3"],"feasible":[[],["1","2","3"]]})";
const char* kNonBinary =
    R"({"ground":["1","2","3"],"feasible":[[],["1"],["1","2"],["1","3"],["2","3"]]})";

}  // namespace

TEST_CASE("chromatic text output for K2") {
  auto r = run("chromatic -", kK2);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "p[1,1]:1, p[2]:-1\n");
}

TEST_CASE("chromatic specialization and substitution") {
  CHECK(run("chromatic - --specialize", kK2).output == "t^2-t\n");
  CHECK(run("chromatic -", kBridge).output == "p[1]:x\n");
  CHECK(run("chromatic - --x 3", kBridge).output == "p[1]:3\n");
  CHECK(run("chromatic - --x 1/2", kBridge).output == "p[1]:1/2\n");
}

TEST_CASE("mathematical rejections exit with code 2") {
  CHECK(run("chromatic -", kSeaViolator).exit_code == 2);
  CHECK(run("convert -", kSeaViolator).exit_code == 2);
  CHECK(run("chromatic -", kNonBinary).exit_code == 2);
  // convert reports rather than rejects non-binary delta-matroids.
  auto r = run("convert -", kNonBinary);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"is_binary\": false") != std::string::npos);
  CHECK(r.output.find("\"is_delta_matroid\": true") != std::string::npos);
}

TEST_CASE("schema and usage errors exit with code 1") {
  CHECK(run("chromatic -", "{\"nope\":1}").exit_code == 1);
  CHECK(run("chromatic -", "not json at all").exit_code == 1);
  CHECK(run("verify bogus --grading 2").exit_code == 1);
  CHECK(run("chromatic /nonexistent/file.json").exit_code == 1);
  CHECK(run("").exit_code == 1);
}

TEST_CASE("verification sweeps succeed and fail by exit code") {
  CHECK(run("verify 4t --grading 2 --format text").exit_code == 0);
  CHECK(run("verify moves --grading 2 --format text").exit_code == 0);
  CHECK(run("verify lemma-graphical --grading 3 --format text").exit_code == 0);
  CHECK(run("verify interlacement --grading 3 --format text").exit_code == 0);
  CHECK(run("verify span --grading 2 --even --format text").exit_code == 0);
  // The grading-3 span claim fails; the sweep reports it via exit code 3.
  CHECK(run("verify span --grading 3 --format text").exit_code == 3);
}

TEST_CASE("verify reports are deterministic json") {
  auto a = run("verify 4t --grading 2 --jobs 2");
  auto b = run("verify 4t --grading 2 --jobs 1");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"instances\": 44") != std::string::npos);
  CHECK(a.output.find("\"failures\": 0") != std::string::npos);
}

TEST_CASE("enumeration output") {
  auto r = run("enumerate --grading 1 --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "({1};{{}})\n({1};{{},{1}})\n({1};{{1}})\ncount: 3\n");
  auto even = run("enumerate --grading 2 --even --format text");
  CHECK(even.output.find("count: 5") != std::string::npos);
  CHECK(run("enumerate --grading 5").exit_code == 1);  // needs --allow-large
}

TEST_CASE("convert emits diagnostics for a matrix") {
  auto r = run("convert -", R"({"size":2,"rows":["01","10"]})");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"is_even\": true") != std::string::npos);
  CHECK(r.output.find("\"is_graphical\": true") != std::string::npos);
}

TEST_CASE("convert reports the twisted loop as graphical and odd") {
  auto r = run("convert -",
               R"({"vertices":[["h1","h2"]],"edges":[{"ends":["h1","h2"],"twisted":true}]})");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"is_even\": false") != std::string::npos);
  CHECK(r.output.find("\"is_graphical\": true") != std::string::npos);
}

TEST_CASE("caps can be lowered by flag and environment") {
  CHECK(run("--cap 2 verify 4t --grading 3").exit_code == 1);
  CHECK(run("verify 4t --grading 3 --format text").exit_code == 0);
  setenv("DELTA_CHROMA_CAP", "2", 1);
  // The environment variable travels through std::system's shell.
  CHECK(run("verify 4t --grading 3").exit_code == 1);
  CHECK(run("enumerate --grading 3").exit_code == 1);
  unsetenv("DELTA_CHROMA_CAP");
  CHECK(run("verify 4t --grading 3 --format text").exit_code == 0);
}

TEST_CASE("round-trip through convert is stable") {
  auto first = run("convert -", kNonBinary);
  auto second = run("convert -", kNonBinary);
  CHECK(first.output == second.output);
}
