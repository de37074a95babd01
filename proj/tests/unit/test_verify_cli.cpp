#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dirac_osc/error.hpp"
#include "dirac_osc/verify.hpp"
#include "oracles.hpp"

using namespace dosc;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// stdout of the command; stderr is folded in when `merge` is set
Run run(const std::string& args, bool merge = false, const char* exe = DOSC_CLI) {
  const std::string cmd = std::string(exe) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("every suite passes with the shipped Hamiltonian") {
  VerifyOptions opt;
  for (const auto& suite : verify_suites()) {
    if (suite == "all") continue;
    const auto rep = run_verify(suite, opt);
    CHECK_MESSAGE(rep.passed(), suite);
    CHECK(!rep.checks.empty());
  }
  CHECK_THROWS_AS(run_verify("nonsense", opt), DomainError);
  CHECK(!is_verify_suite("nonsense"));
}

TEST_CASE("mutation is caught by name") {
  VerifyOptions opt;
  opt.inject_mutation = true;
  const auto rep = run_verify("operators", opt);
  CHECK(!rep.passed());
  const auto failing = rep.failing();
  CHECK(std::find(failing.begin(), failing.end(), "squared_hamiltonian") != failing.end());
}

TEST_CASE("discrepancy entries are reported with their residuals") {
  const auto rep = run_verify("all", VerifyOptions{});
  int discrepancies = 0;
  for (const auto& c : rep.checks)
    if (c.kind == CheckKind::discrepancy) {
      ++discrepancies;
      CHECK(c.passed());
      CHECK(!c.within_tolerance());
      CHECK(!c.detail.empty());
    }
  CHECK(discrepancies >= 3);
  const auto j = rep.to_json();
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["checks"].size() == rep.checks.size());
}

}

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
  CHECK(run("spectrum --n-max 1").status == 0);
  CHECK(run("--omega -1 spectrum").status == 2);
  CHECK(run("--m 0 spectrum").status == 2);
  CHECK(run("--n-max -1 spectrum").status == 2);
  CHECK(run("no-such-command").status == 2);
  CHECK(run("verify nonsense").status == 2);
  CHECK(run("wavefunction --n 0 --j 1/2 --mj 3/2 --eps -1").status == 2);
  CHECK(run("verify covariance").status == 0);
}

TEST_CASE("mutation-control build exits 1 and names the identity") {
  const auto r = run("verify operators", true, DOSC_CLI_MUTANT);
  CHECK(r.status == 1);
  CHECK(r.out.find("squared_hamiltonian") != std::string::npos);
}

TEST_CASE("spectrum CSV and JSON carry the same rows") {
  const auto csv = parse_csv(run("--n-max 3 spectrum").out);
  const auto js = nlohmann::json::parse(run("--n-max 3 --format json spectrum").out);
  REQUIRE(csv.size() == js.size() + 1);
  const std::vector<std::string> header{"N", "n", "l", "j2", "mj2", "epsilon", "branch", "E", "shifted"};
  CHECK(csv[0] == header);
  for (std::size_t i = 0; i < js.size(); ++i) {
    const auto& row = csv[i + 1];
    const auto& o = js[i];
    CHECK(std::stoi(row[0]) == o["N"].get<int>());
    CHECK(std::stoi(row[3]) == o["j2"].get<int>());
    CHECK(row[6] == o["branch"].get<std::string>());
    CHECK(std::stod(row[7]) == doctest::Approx(o["E"].get<double>()).epsilon(1e-14));
    CHECK(std::stoi(row[8]) == o["shifted"].get<int>());
  }
}

TEST_CASE("verify output is byte-deterministic under a fixed seed") {
  const auto a = run("--seed 7 verify all");
  const auto b = run("--seed 7 verify all");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto ja = run("--seed 7 --format json verify operators").out;
  CHECK(ja == run("--seed 7 --format json verify operators").out);
  CHECK(nlohmann::json::parse(ja)["seed"] == 7);
}

TEST_CASE("golden spectrum: m = w = 1, N <= 3") {
  const std::string got = run("--m 1 --omega 1 --n-max 3 spectrum").out;
  const std::string want = slurp(std::string(DOSC_GOLDEN_DIR) + "/spectrum_m1_w1_n3.csv");
  CHECK(got == want);
  // the golden values themselves against the dominant-component oracle
  for (const auto& row : parse_csv(want)) {
    if (row[0] == "N") continue;
    const int n = std::stoi(row[1]), l = std::stoi(row[2]), j2 = std::stoi(row[3]);
    const int eps = std::stoi(row[5]);
    const int beta = row[6] == "+" ? 1 : -1;
    const int orbital = beta == 1 ? l : (j2 - eps) / 2;
    const double ref = oracle::energy_from_dominant(1.0, 1.0, n, orbital, j2 / 2.0, beta);
    CHECK(std::stod(row[7]) == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("golden degeneracy table: m = 1, w = 0.5, N <= 4") {
  const std::string got = run("--m 1 --omega 0.5 --n-max 4 degeneracy").out;
  CHECK(got == slurp(std::string(DOSC_GOLDEN_DIR) + "/degeneracy_m1_w05_n4.csv"));
  // legacy command name
  CHECK(run("--m 1 --omega 0.5 --n-max 4 figure1").out == got);
}

TEST_CASE("wavefunction output is normalized and carries its label") {
  const auto r = run("--grid-npts 2000 wavefunction --n 1 --j 3/2 --mj 1/2 --eps 1 --branch -");
  REQUIRE(r.status == 0);
  const auto nl = r.out.find('\n');
  const auto meta = nlohmann::json::parse(r.out.substr(2, nl - 2));
  CHECK(meta["label"]["j2"] == 3);
  CHECK(meta["label"]["branch"] == "-");
  const auto rows = parse_csv(r.out.substr(nl + 1));
  double integral = 0.0;
  for (std::size_t i = 2; i < rows.size(); ++i) {
    const double r0 = std::stod(rows[i - 1][0]), r1 = std::stod(rows[i][0]);
    integral += 0.5 * (r1 - r0) * (std::stod(rows[i - 1][3]) + std::stod(rows[i][3]));
  }
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("ode-compare agrees with the closed form") {
  const auto rows = parse_csv(run("--n-max 2 ode-compare").out);
  REQUIRE(rows.size() > 10);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][5]) < 1e-6);
    CHECK(std::stod(rows[i][6]) < 1e-6);
  }
}

TEST_CASE("--out writes the same bytes as stdout") {
  const std::string path = std::string(DOSC_BINARY_DIR) + "/cli_out_test.csv";
  CHECK(run("--n-max 2 --out " + path + " spectrum").status == 0);
  CHECK(slurp(path) == run("--n-max 2 spectrum").out);
}

}
