// End-to-end tests for the qwalk binary; every fixture here is part of the
// command-line contract, exit codes included.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QWALK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
  const int status = pclose(pipe);
  return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

TEST_CASE("walk csv output carries the Hadamard T=4 distribution") {
  const CliResult r = run_cli("walk --coin hadamard --initial 1,0,0,0 --steps 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("z,probability\n") == 0);
  CHECK(r.output.find("-4,0.0625\n") != std::string::npos);
  CHECK(r.output.find("-2,0.125\n") != std::string::npos);
  CHECK(r.output.find("0,0.125\n") != std::string::npos);
  CHECK(r.output.find("2,0.625\n") != std::string::npos);
  CHECK(r.output.find("4,0.0625\n") != std::string::npos);
}

TEST_CASE("walk json and csv report identical probabilities at 12 digits") {
  const std::string spec = "--coin balanced:0.5,0.5,0.5,-0.5,0.7 --initial 1,0,0,0 --steps 5";
  const CliResult cj = run_cli("walk " + spec + " --format json");
  const CliResult cc = run_cli("walk " + spec + " --format csv");
  REQUIRE(cj.exit_code == 0);
  REQUIRE(cc.exit_code == 0);

  const json doc = json::parse(cj.output);
  std::size_t row = cc.output.find('\n') + 1;  // skip header
  for (const auto& entry : doc["distribution"]) {
    const std::size_t end = cc.output.find('\n', row);
    const std::string line = cc.output.substr(row, end - row);
    const std::size_t comma = line.find(',');
    CHECK(std::stoi(line.substr(0, comma)) == entry["z"].get<int>());
    CHECK(fmt12(std::stod(line.substr(comma + 1))) ==
          fmt12(entry["probability"].get<double>()));
    row = end + 1;
  }
}

TEST_CASE("walk plot output is two whitespace-separated columns") {
  const CliResult r = run_cli("walk --coin hadamard --initial 1,0,0,0 --steps 2 --format plot");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "-2 0.25\n0 0.5\n2 0.25\n");
}

TEST_CASE("ensemble-check accepts an invariant-ensemble member") {
  const CliResult r =
      run_cli("ensemble-check --coin invariant --state 0,0.70710678,0.70710678,0");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["satisfied"].get<bool>());
  CHECK(doc["residual_b"].get<double>() < 1e-10);
  CHECK(doc["residual_a"].get<double>() < 1e-10);
}

TEST_CASE("ensemble-check rejects a basis state with exit 1") {
  const CliResult r = run_cli("ensemble-check --coin hadamard --state 1,0,0,0");
  CHECK(r.exit_code == 1);
  const json doc = json::parse(r.output);
  CHECK(!doc["satisfied"].get<bool>());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("walk --coin hadamard --initial 1,0,0,0 --steps -1").exit_code == 2);
  CHECK(run_cli("walk --coin hadamard --initial 1,0,0,0 --steps 3 --bogus").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("walk --coin nonsuch --initial 1,0,0,0 --steps 1").exit_code == 2);
  CHECK(run_cli("walk --coin hadamard --initial 1,0,0 --steps 1").exit_code == 2);
  CHECK(run_cli("ensemble-check --coin hadamard --state 1,0,oops,0").exit_code == 2);
  CHECK(run_cli("ensemble-check --coin hadamard").exit_code == 2);
  // grossly unnormalized inputs are rejected rather than silently rescaled
  CHECK(run_cli("walk --coin hadamard --initial 1,0,1,0 --steps 1").exit_code == 2);
  CHECK(run_cli("walk --coin unbalanced:1,0,1,0 --initial 1,0,0,0 --steps 1").exit_code == 2);
}

TEST_CASE("malformed numbers are named in the error message") {
  const CliResult r = run_cli("ensemble-check --coin hadamard --state 1,0,oops,0");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("oops") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("walk --help").exit_code == 0);
}

TEST_CASE("nosignal flags an arbitrary qubit and passes a member") {
  CHECK(run_cli("nosignal --coin hadamard --state 1,0,0,0").exit_code == 1);

  // x = 0.6, y = sqrt(0.28): a member of the Hadamard ensemble
  const std::string member = "0.6,0.52915026221292,0.6,0";
  const CliResult ok = run_cli("nosignal --coin hadamard --state " + member);
  CHECK(ok.exit_code == 0);
  const json doc = json::parse(ok.output);
  CHECK(doc["max_deviation"].get<double>() < 1e-10);
  CHECK(doc["eigenvalues_after"][2].get<double>() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("locc reports both branch entropies") {
  const std::string member = "0.6,0.52915026221292,0.6,0";
  const CliResult ok = run_cli("locc --coin hadamard --state " + member);
  CHECK(ok.exit_code == 0);
  const json doc = json::parse(ok.output);
  CHECK(doc["psi"]["entropy"].get<double>() < 1e-9);
  CHECK(doc["psibar"]["entropy"].get<double>() < 1e-9);
  CHECK(doc["entanglement_preserved"].get<bool>());

  CHECK(run_cli("locc --coin hadamard --state 0.6,0,0.8,0").exit_code == 1);
}

TEST_CASE("walk with the unbalanced example reproduces the stated probabilities") {
  const CliResult r = run_cli(
      "walk --coin unbalanced:0.8660254,0,0.5,0 --initial 0.70710678,0,0,0.70710678 "
      "--steps 3 --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  double p3 = 0.0, pm3 = 0.0, p1 = 0.0, pm1 = 0.0;
  for (const auto& entry : doc["distribution"]) {
    const int z = entry["z"].get<int>();
    const double p = entry["probability"].get<double>();
    if (z == 3) p3 = p;
    if (z == -3) pm3 = p;
    if (z == 1) p1 = p;
    if (z == -1) pm1 = p;
  }
  // inputs carry 8 decimal digits, so agreement is input-precision limited
  CHECK(std::abs(p3 - 0.28125) < 1e-7);
  CHECK(std::abs(pm3 - 0.28125) < 1e-7);
  CHECK(std::abs(p1 - 0.21875) < 1e-7);
  CHECK(std::abs(pm1 - 0.21875) < 1e-7);
}

TEST_CASE("ensemble-sample emits the state schema and honors the seed") {
  const CliResult a = run_cli("ensemble-sample --coin hybrid --seed 7 --count 5");
  REQUIRE(a.exit_code == 0);
  const json da = json::parse(a.output);
  REQUIRE(da["states"].size() == 5);
  for (const auto& s : da["states"]) {
    CHECK(s.contains("re_a"));
    CHECK(s.contains("im_a"));
    CHECK(s.contains("re_b"));
    CHECK(s.contains("im_b"));
    const double n = s["re_a"].get<double>() * s["re_a"].get<double>() +
                     s["im_a"].get<double>() * s["im_a"].get<double>() +
                     s["re_b"].get<double>() * s["re_b"].get<double>() +
                     s["im_b"].get<double>() * s["im_b"].get<double>();
    CHECK(std::abs(n - 1.0) < 1e-9);
  }
  const CliResult b = run_cli("ensemble-sample --coin hybrid --seed 7 --count 5");
  CHECK(a.output == b.output);
  const CliResult c = run_cli("ensemble-sample --coin hybrid --seed 8 --count 5");
  CHECK(a.output != c.output);

  // sampled members are accepted back by ensemble-check
  const auto& first = da["states"][0];
  const std::string state = fmt12(first["re_a"].get<double>()) + "," +
                            fmt12(first["im_a"].get<double>()) + "," +
                            fmt12(first["re_b"].get<double>()) + "," +
                            fmt12(first["im_b"].get<double>());
  CHECK(run_cli("ensemble-check --coin hybrid --state " + state).exit_code == 0);
}

TEST_CASE("sweep summarizes the grid verdicts") {
  const CliResult r = run_cli("sweep --coin invariant --count 10");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["resolution"].get<int>() == 10);
  CHECK(doc["grid_points"].get<int>() == 1000);
  CHECK(doc["intersection_within_constraint"].get<bool>());
  CHECK(doc["constraint_within_both"].get<bool>());

  const CliResult csv = run_cli("sweep --coin invariant --count 10 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("x,y,u,v,residual_b,residual_a,entropy_psi,entropy_psibar,satisfies\n") ==
        0);
  std::size_t lines = 0;
  for (char c : csv.output) lines += c == '\n';
  CHECK(lines == 1001);  // header plus one row per grid point
}

TEST_CASE("csv variants of the verification commands") {
  const CliResult ns = run_cli("nosignal --coin hadamard --state 1,0,0,0 --format csv");
  CHECK(ns.exit_code == 1);
  CHECK(ns.output.find("max_deviation,no_signalling\n") == 0);
  CHECK(ns.output.find("false") != std::string::npos);

  const CliResult lc =
      run_cli("locc --coin hadamard --state 0.6,0.52915026221292,0.6,0 --format csv");
  CHECK(lc.exit_code == 0);
  CHECK(lc.output.find("branch,") == 0);
  CHECK(lc.output.find("\npsi,") != std::string::npos);
  CHECK(lc.output.find("\npsibar,") != std::string::npos);

  const CliResult ec =
      run_cli("ensemble-check --coin hadamard --state 1,0,0,0 --format csv");
  CHECK(ec.exit_code == 1);
  CHECK(ec.output.find("satisfied,residual_b,residual_a") == 0);

  // plot output exists only for distributions
  CHECK(run_cli("nosignal --coin hadamard --state 1,0,0,0 --format plot").exit_code == 2);
}

TEST_CASE("output lands in the requested file and bad paths exit 3") {
  const std::string path = "/tmp/qwalk_cli_test_out.csv";
  std::remove(path.c_str());
  const CliResult r = run_cli("walk --coin hadamard --initial 1,0,0,0 --steps 1 --format csv --out " +
                              path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "z,probability\n-1,0.5\n1,0.5\n");
  std::remove(path.c_str());

  CHECK(run_cli("walk --coin hadamard --initial 1,0,0,0 --steps 1 --out /nonexistent/dir/x")
            .exit_code == 3);
}
