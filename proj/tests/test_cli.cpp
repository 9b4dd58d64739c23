#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

#include "kinvar/dirac.hpp"
#include "kinvar/linalg.hpp"
#include "kinvar/report.hpp"

// End-to-end tests: every invocation here drives the real binary through the
// shell, so exit codes, stdout, and artifact bytes are observed exactly as a
// user would see them.

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "kinvar_cli_tests";
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  int exit = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const fs::path out = work_dir() / "stdout.txt", err = work_dir() / "stderr.txt";
  std::string cmd = env_prefix + std::string(KINVAR_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2> " + err.string();
  int st = std::system(cmd.c_str());
  RunResult r;
  r.exit = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string data_file(const std::string& name) {
  return (fs::path(KINVAR_TEST_DATA_DIR) / name).string();
}

std::string last_line(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return last;
}

// parses "a/b checks passed" out of a summary line
std::pair<int, int> summary_counts(const std::string& line) {
  size_t colon = line.rfind(": ");
  size_t slash = line.find('/', colon);
  REQUIRE(colon != std::string::npos);
  REQUIRE(slash != std::string::npos);
  return {std::stoi(line.substr(colon + 2, slash - colon - 2)),
          std::stoi(line.substr(slash + 1))};
}

}  // namespace

TEST_SUITE("cli") {

// ── published examples ──────────────────────────────────────────────────────

TEST_CASE("dimension prints the known (5, 5) answer") {
  RunResult r = run_cli("dimension --variety k3 --d 5 --n 5 --seed 7");
  CHECK(r.exit == 0);
  CHECK(r.out == "13\n");
}

TEST_CASE("the full verify suite passes at (5, 5)") {
  RunResult r = run_cli("verify --d 5 --n 5 --suite all --seed 7 --trials 1");
  CHECK(r.exit == 0);
  CHECK(last_line(r.out).find("checks passed") != std::string::npos);
}

// ── frozen artifacts ────────────────────────────────────────────────────────

TEST_CASE("sample artifact is byte-stable") {
  const fs::path out = work_dir() / "cfg_d4_n5_s7.json";
  RunResult r = run_cli("sample --d 4 --n 5 --conserve --seed 7 --out " + out.string());
  CHECK(r.exit == 0);
  CHECK(slurp(out) == slurp(data_file("cfg_d4_n5_s7.json")));
}

TEST_CASE("brackets artifact is byte-stable") {
  const fs::path out = work_dir() / "stack_d4_n5_s7.json";
  RunResult r = run_cli("brackets --config " + data_file("cfg_d4_n5_s7.json") + " --seed 7 --out " +
                        out.string());
  CHECK(r.exit == 0);
  CHECK(slurp(out) == slurp(data_file("stack_d4_n5_s7.json")));
}

TEST_CASE("verify report artifact is byte-stable") {
  const fs::path out = work_dir() / "report_d3_n4_s5.json";
  RunResult r = run_cli("verify --d 3 --n 4 --trials 1 --seed 5 --json " + out.string());
  CHECK(r.exit == 0);
  CHECK(slurp(out) == slurp(data_file("report_d3_n4_s5.json")));
}

TEST_CASE("repeat runs are byte-identical") {
  const fs::path a = work_dir() / "dim_a.json", b = work_dir() / "dim_b.json";
  CHECK(run_cli("dimension --variety k2 --d 4 --n 5 --seed 3 --out " + a.string()).exit == 0);
  CHECK(run_cli("dimension --variety k2 --d 4 --n 5 --seed 3 --out " + b.string()).exit == 0);
  std::string content = slurp(a);
  CHECK(content == slurp(b));
  CHECK(!content.empty());
}

// ── seed plumbing ───────────────────────────────────────────────────────────

TEST_CASE("environment seed matches the explicit flag") {
  const fs::path out = work_dir() / "cfg_env.json";
  RunResult r = run_cli("sample --d 4 --n 5 --conserve --out " + out.string(), "KINVAR_SEED=7 ");
  CHECK(r.exit == 0);
  CHECK(slurp(out) == slurp(data_file("cfg_d4_n5_s7.json")));
}

TEST_CASE("garbage environment seed is a usage error") {
  RunResult r = run_cli("sample --d 4 --n 5 --out " + (work_dir() / "x.json").string(),
                        "KINVAR_SEED=zebra ");
  CHECK(r.exit == 2);
  CHECK(r.err.find("KINVAR_SEED") != std::string::npos);
}

TEST_CASE("worker count never changes results") {
  RunResult a = run_cli("verify --d 4 --n 4 --trials 1 --seed 5 --jobs 1");
  RunResult b = run_cli("verify --d 4 --n 4 --trials 1 --seed 5 --jobs 8");
  CHECK(a.exit == 0);
  CHECK(a.out == b.out);
}

// ── usage errors ────────────────────────────────────────────────────────────

TEST_CASE("three particles require the isotropic sampler") {
  const std::string out = (work_dir() / "iso.json").string();
  CHECK(run_cli("sample --d 4 --n 3 --seed 1 --out " + out).exit == 2);
  CHECK(run_cli("sample --d 4 --n 3 --isotropic --seed 1 --out " + out).exit == 0);
  CHECK(run_cli("sample --d 4 --n 4 --isotropic --seed 1 --out " + out).exit == 2);
  CHECK(run_cli("sample --d 3 --n 3 --isotropic --seed 1 --out " + out).exit == 2);
}

TEST_CASE("unknown subcommands, flags, and values exit 2") {
  CHECK(run_cli("frobnicate --d 4").exit == 2);
  CHECK(run_cli("dirac").exit == 2);                       // missing required --d
  CHECK(run_cli("dirac --d 13").exit == 2);                // out of range
  CHECK(run_cli("dirac --d 4 --frobnicate").exit == 2);    // unknown flag
  CHECK(run_cli("dimension --variety k9 --d 4").exit == 2);
  CHECK(run_cli("table --reproduce other-table").exit == 2);
  CHECK(run_cli("brackets --config /no/such/file.json --out x.json").exit == 2);
}

TEST_CASE("help exits zero") {
  RunResult r = run_cli("--help");
  CHECK(r.exit == 0);
  CHECK(r.out.find("dirac") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}

// ── structured output against the library ───────────────────────────────────

TEST_CASE("dirac json output reproduces the library basis") {
  RunResult r = run_cli("dirac --d 4 --json");
  CHECK(r.exit == 0);
  json j = json::parse(r.out);
  CHECK(j.at("manifest").at("command") == "dirac");
  CHECK(j.at("k") == 2);
  kinvar::DiracBasis basis = kinvar::build_dirac(4);
  REQUIRE(j.at("gammas").size() == 4);
  for (int idx = 1; idx <= 4; ++idx) {
    kinvar::QMat g = kinvar::matrix_from_json(j.at("gammas")[idx - 1].dump());
    CHECK(kinvar::mat_eq<kinvar::Q>(g, basis.gamma(idx)));
  }
}

TEST_CASE("conjugation verify passes and exposes the taxonomy") {
  RunResult r = run_cli("conjugation --d 6 --verify --trials 2 --seed 3 --json");
  CHECK(r.exit == 0);
  json j = json::parse(r.out);
  CHECK(j.at("symmetric") == true);       // k = 3
  CHECK(j.at("block_diagonal") == false);
  CHECK(j.at("manifest").at("checks_failed") == 0);
}

// ── suite filtering ─────────────────────────────────────────────────────────

TEST_CASE("suite filters partition the full check list") {
  int total = 0;
  for (const char* suite : {"clifford", "brackets", "relations", "secant"}) {
    RunResult r = run_cli(std::string("verify --d 3 --n 4 --trials 2 --seed 5 --suite ") + suite);
    CHECK(r.exit == 0);
    auto [pass, count] = summary_counts(last_line(r.out));
    CHECK(pass == count);
    CHECK(count > 0);
    total += count;
  }
  RunResult all = run_cli("verify --d 3 --n 4 --trials 2 --seed 5 --suite all");
  CHECK(all.exit == 0);
  auto [pass, count] = summary_counts(last_line(all.out));
  CHECK(pass == count);
  CHECK(count == total);
}

// ── table and report ────────────────────────────────────────────────────────

TEST_CASE("table reproduces a small corner of the published grid") {
  RunResult r = run_cli("table --reproduce prop-dimensions --dmax 5 --nmax 5 --seed 11");
  CHECK(r.exit == 0);
  CHECK(r.out.find(" d=4      8    13") != std::string::npos);
  CHECK(r.out.find(" d=5      7    13") != std::string::npos);
  CHECK(r.out.find("mismatches: 0 (0 fatal)") != std::string::npos);
}

TEST_CASE("report aggregates by rule and point") {
  const std::string a = (work_dir() / "rep_a.json").string();
  const std::string b = (work_dir() / "rep_b.json").string();
  REQUIRE(run_cli("verify --d 3 --n 4 --trials 1 --seed 5 --json " + a).exit == 0);
  REQUIRE(run_cli("verify --d 4 --n 5 --trials 1 --seed 6 --json " + b).exit == 0);
  RunResult r = run_cli("report " + a + " " + b);
  CHECK(r.exit == 0);
  CHECK(r.out.find("by rule:") != std::string::npos);
  CHECK(r.out.find("d=3 n=4:") != std::string::npos);
  CHECK(r.out.find("d=4 n=5:") != std::string::npos);
  CHECK(r.out.find("0 failures") != std::string::npos);
}

TEST_CASE("report propagates a failing check") {
  const fs::path bad = work_dir() / "rep_bad.json";
  std::ofstream(bad) << R"({"d":3,"n":4,"seed":0,"checks":[)"
                     << R"({"name":"broken","rule":"some-rule","pass":false,"witness":""}]})";
  RunResult r = run_cli("report " + bad.string());
  CHECK(r.exit == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("empty report input is a valid empty summary") {
  RunResult r = run_cli("report");
  CHECK(r.exit == 0);
  CHECK(r.out.find("0 files, 0 checks, 0 failures") != std::string::npos);
}

}  // TEST_SUITE
