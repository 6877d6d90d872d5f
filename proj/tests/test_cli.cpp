// End-to-end tests of the installed command-line interface. The binary path
// arrives via the CESBOHR_CLI environment variable set by CTest.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

std::string cli_path() {
  const char* path = std::getenv("CESBOHR_CLI");
  REQUIRE_MESSAGE(path != nullptr, "CESBOHR_CLI must point at the built binary");
  return path;
}

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) output.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("radius subcommands report certified roots") {
  const RunResult a = run("radius theorem-a --json");
  CHECK(a.exit_code == 0);
  const auto ja = nlohmann::json::parse(a.output);
  CHECK(std::abs(ja["root"].get<double>() - 0.5335) <= 5e-4);
  CHECK(ja["bracket"]["hi"].get<double>() - ja["bracket"]["lo"].get<double>() <= 1e-12);

  const RunResult t1 = run("radius theorem1 --json");
  CHECK(t1.exit_code == 0);
  const auto j1 = nlohmann::json::parse(t1.output);
  CHECK(std::abs(j1["root"].get<double>() - 0.432) <= 2e-3);
  CHECK(std::abs(j1["residual"].get<double>()) <= 1e-10);

  const RunResult rm = run("radius theorem2-rm --m 2 --json");
  CHECK(rm.exit_code == 0);
  CHECK(std::abs(nlohmann::json::parse(rm.output)["root"].get<double>() - 0.702432) <= 1e-4);

  const RunResult pick = run("radius pick-r");
  CHECK(pick.exit_code == 0);
  CHECK(pick.output.find("0.4934") != std::string::npos);
}

TEST_CASE("radius theorem-b reports the documented anomaly instead of a root") {
  const RunResult tb = run("radius theorem-b --n 1 --json");
  CHECK(tb.exit_code == 0);
  const auto j = nlohmann::json::parse(tb.output);
  CHECK(j["outcome"] == "no-root-in-domain");
  CHECK(j["note"].get<std::string>().find("positive") != std::string::npos);
}

TEST_CASE("sturm subcommand reproduces the certificate counts") {
  const RunResult in_unit = run("sturm --poly \"39 -45 -7 43 13 -11 3 -3\" --interval 0 1");
  CHECK(in_unit.exit_code == 0);
  CHECK(in_unit.output.find(": 0") != std::string::npos);

  const RunResult between = run("sturm --poly \"39 -45 -7 43 13 -11 3 -3\" --interval 1 2");
  CHECK(between.exit_code == 0);
  CHECK(between.output.find(": 1") != std::string::npos);

  const RunResult human =
      run("sturm --poly \"8 + 8r - 3r^2 - 17r^3 + 11r^4 + 9r^5\" --interval 0 1000000 --json");
  CHECK(human.exit_code == 0);
  CHECK(nlohmann::json::parse(human.output)["count"] == 0);

  const RunResult chain = run("sturm --poly \"-1 0 1\" --chain");
  CHECK(chain.exit_code == 0);
  CHECK(chain.output.find("chain (3 polynomials)") != std::string::npos);
}

TEST_CASE("verify subcommands and the exit-code contract") {
  const RunResult grid = run("verify theorem1 --r 0.43 --grid 20x20");
  CHECK(grid.exit_code == 0);
  CHECK(grid.output.find("pass") != std::string::npos);

  // beyond the radius the grid detects a violation: exit code 1
  const RunResult beyond = run("verify theorem1 --r 0.49 --grid 30x30");
  CHECK(beyond.exit_code == 1);

  const RunResult rand = run("verify random --seed 7 --count 25 --r 0.3 --json");
  CHECK(rand.exit_code == 0);
  const auto jr = nlohmann::json::parse(rand.output);
  CHECK(jr["pass"] == true);
  CHECK(jr["worst_value"].get<double>() > 0.0);
}

TEST_CASE("sharpness subcommand") {
  const RunResult found = run("sharpness --m 1 --r 0.45");
  CHECK(found.exit_code == 0);
  CHECK(found.output.find("violation at a =") != std::string::npos);

  // below the radius the precondition gate reports and exits 1
  const RunResult gated = run("sharpness --m 1 --r 0.40");
  CHECK(gated.exit_code == 1);
}

TEST_CASE("figure subcommand writes CSV") {
  const std::string path = "/tmp/cesbohr_cli_b2prime.csv";
  const RunResult fig = run("figure b2prime --steps 999 --out " + path);
  CHECK(fig.exit_code == 0);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "r,value");
  std::string line;
  int rows = 0;
  std::string at_half;
  while (std::getline(in, line)) {
    ++rows;
    if (line.rfind("0.5,", 0) == 0) at_half = line;
  }
  CHECK(rows == 999);
  REQUIRE(!at_half.empty());
  CHECK(std::abs(std::stod(at_half.substr(4)) - 0.11592) <= 1e-4);
  std::remove(path.c_str());
}

TEST_CASE("eval subcommands") {
  const RunResult p = run("eval phi --k 2 --r 0.5");
  CHECK(p.exit_code == 0);
  CHECK(std::abs(std::stod(p.output) - 0.1362944) <= 1e-6);

  const RunResult lhs = run("eval lhs1 --a 0.5 --r 0.4 --json");
  CHECK(lhs.exit_code == 0);
  const auto jl = nlohmann::json::parse(lhs.output);
  CHECK(jl["lhs"].get<double>() < jl["rhs"].get<double>());

  const std::string csv = "/tmp/cesbohr_cli_coeffs.csv";
  std::ofstream out(csv);
  out << "re,im\n1,0\n";
  out.close();
  const RunResult ces = run("eval cesaro --coeffs " + csv + " --z 0.5,0 --json");
  CHECK(ces.exit_code == 0);
  const auto jc = nlohmann::json::parse(ces.output);
  CHECK(std::abs(jc["abs"].get<double>() - 1.3862944) <= 1e-5);
  CHECK(jc["certified_in_unit_ball"] == true);
  std::remove(csv.c_str());
}

TEST_CASE("verify claims runs the full registry through the CLI") {
  const std::string path = "/tmp/cesbohr_cli_claims.json";
  const RunResult claims = run("verify claims --json --out " + path);
  CHECK(claims.exit_code == 0);

  std::ifstream in(path);
  REQUIRE(in.good());
  const auto arr = nlohmann::json::parse(in);
  REQUIRE(arr.is_array());
  CHECK(arr.size() > 100);
  for (const auto& rep : arr) CHECK(rep["pass"] == true);
  std::remove(path.c_str());
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "/tmp/cesbohr_cli_cert.json";
  const RunResult r = run("radius theorem-a --json --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());

  std::ifstream in(path);
  REQUIRE(in.good());
  const auto j = nlohmann::json::parse(in);
  CHECK(std::abs(j["root"].get<double>() - 0.5335) <= 5e-4);
  std::remove(path.c_str());
}

TEST_CASE("identical argv and seed produce byte-identical JSON") {
  const std::string cmd = "verify random --seed 5 --count 10 --r 0.3 --json";
  const RunResult first = run(cmd);
  const RunResult second = run(cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  const RunResult r1 = run("radius theorem1 --json");
  const RunResult r2 = run("radius theorem1 --json");
  CHECK(r1.output == r2.output);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("radius no-such-equation").exit_code == 2);
  CHECK(run("--bogus-flag").exit_code == 2);
  CHECK(run("eval phi --k -3 --r 0.5").exit_code == 2);
  CHECK(run("sturm --poly \"not a poly!!\" --interval 0 1").exit_code == 2);
  CHECK(run("").exit_code == 2);
}
