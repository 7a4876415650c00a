// End-to-end checks of the command-line driver: exit codes, file contracts,
// and byte stability.  The binary path arrives via the HARPER_CLI
// environment variable (set by the test harness).
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("HARPER_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "HARPER_CLI must point at the binary");
  const std::string out_file = "cli_stdout.tmp";
  const std::string err_file = "cli_stderr.tmp";
  const std::string cmd =
      std::string("\"") + bin + "\" " + args + " >" + out_file + " 2>" +
      err_file;
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  std::remove(out_file.c_str());
  std::remove(err_file.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Fields of one CSV line (no quoted-field handling; the numeric outputs
// under test never need quoting).
std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string f;
  while (std::getline(in, f, ',')) fields.push_back(f);
  return fields;
}

std::size_t count_char(const std::string& s, char c) {
  std::size_t n = 0;
  for (char x : s)
    if (x == c) ++n;
  return n;
}

}  // namespace

TEST_CASE("spectrum command: 4-row CSV with zero trace, descending") {
  const auto r = run_cli("spectrum --n 4 --a 1 --out cli_spec.csv");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(slurp("cli_spec.csv"));
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "index,eigenvalue");
  double total = 0.0, prev = 2.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::to_string(i - 1));
    const double v = std::strtod(f[1].c_str(), nullptr);
    CHECK(v <= prev);
    prev = v;
    total += v;
  }
  CHECK(std::abs(total) <= 1e-12);
  std::remove("cli_spec.csv");
}

TEST_CASE("bound command: JSON with exactly the six report keys, bound < 1") {
  const auto r = run_cli("bound --n 101 --k 5 --k-prime 5 --out cli_bound.json");
  CHECK(r.exit_code == 0);
  const std::string json = slurp("cli_bound.json");
  for (const char* key :
       {"\"variant\":", "\"k\":", "\"k_prime\":", "\"weyl\":",
        "\"correction\":", "\"bound\":"})
    CHECK_MESSAGE(json.find(key) != std::string::npos, key);
  CHECK(count_char(json, ':') == 6);  // flat object, no extra keys
  const auto pos = json.find("\"bound\":");
  const double bound = std::strtod(json.c_str() + pos + 8, nullptr);
  CHECK(bound < 1.0);
  CHECK(bound > 0.0);

  // The CSV rendering of the same run carries identical digits.
  const auto r2 =
      run_cli("bound --n 101 --k 5 --k-prime 5 --format csv --out cli_bound.csv");
  CHECK(r2.exit_code == 0);
  const std::string csv = slurp("cli_bound.csv");
  const auto csv_lines = lines_of(csv);
  REQUIRE(!csv_lines.empty());
  CHECK(csv_lines[0] == "key,value");
  const std::string json_bound_digits =
      json.substr(pos + 8, json.find(',', pos) - pos - 8);
  CHECK(csv.find("bound," + json_bound_digits) != std::string::npos);
  std::remove("cli_bound.json");
  std::remove("cli_bound.csv");
}

TEST_CASE("oscillator command: literal header and one row per (n, k)") {
  const auto r =
      run_cli("oscillator --n 250 --n 500 --k-max 2 --out cli_osc.csv");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(slurp("cli_osc.csv"));
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "n,k,n*(1-lambda_k),mu_k,abs_error");
  CHECK(fields_of(lines[1])[0] == "250");
  CHECK(fields_of(lines[4])[0] == "500");
  std::remove("cli_osc.csv");
}

TEST_CASE("absorb command: JSON with exactly the nine keys; seed echoed") {
  const auto r = run_cli(
      "absorb --n 64 --b 8 --trials 2000 --seed 7 --out cli_absorb.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("seed=7") != std::string::npos);  // randomized: seed printed
  const std::string json = slurp("cli_absorb.json");
  for (const char* key :
       {"\"n\":", "\"a\":", "\"b\":", "\"trials\":", "\"seed\":",
        "\"survival\":", "\"g_b\":", "\"lambda_star_estimate\":",
        "\"lambda_star_exact\":"})
    CHECK_MESSAGE(json.find(key) != std::string::npos, key);
  CHECK(count_char(json, ':') == 9);
  std::remove("cli_absorb.json");
}

TEST_CASE("walk command: tv_exact column empty without --exact, filled with") {
  const auto r =
      run_cli("walk heisenberg --p 3 --k-max 3 --out cli_walk.csv");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(slurp("cli_walk.csv"));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "k,chi_square,tv_exact,tv_upper_bound");
  CHECK(fields_of(lines[1])[2].empty());

  const auto r2 =
      run_cli("walk heisenberg --p 3 --k-max 3 --exact --out cli_walk.csv");
  CHECK(r2.exit_code == 0);
  lines = lines_of(slurp("cli_walk.csv"));
  const auto f = fields_of(lines[1]);
  CHECK(!f[2].empty());
  const double tv = std::strtod(f[2].c_str(), nullptr);
  const double tv_bound = std::strtod(f[3].c_str(), nullptr);
  CHECK(tv <= tv_bound + 1e-12);
  std::remove("cli_walk.csv");
}

TEST_CASE("bulk golden run: byte-identical files across invocations") {
  const auto r1 = run_cli("bulk --n 512 --bins 50 --seed 0 --out cli_bulk1.csv");
  const auto r2 = run_cli("bulk --n 512 --bins 50 --seed 0 --out cli_bulk2.csv");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  const std::string a = slurp("cli_bulk1.csv");
  const std::string b = slurp("cli_bulk2.csv");
  REQUIRE(!a.empty());
  CHECK(a == b);
  const auto lines = lines_of(a);
  REQUIRE(lines.size() == 51);  // header + 50 bins
  CHECK(lines[0] == "bin_left,bin_right,count,empirical_density,f2_at_midpoint");
  long total = 0;
  for (std::size_t i = 1; i < lines.size(); ++i)
    total += std::strtol(fields_of(lines[i])[2].c_str(), nullptr, 10);
  CHECK(total == 512);
  // atomic writes leave no temp droppings behind
  for (const auto& entry : std::filesystem::directory_iterator(".")) {
    const auto name = entry.path().filename().string();
    CHECK(name.find("cli_bulk1.csv.") == std::string::npos);
  }
  std::remove("cli_bulk1.csv");
  std::remove("cli_bulk2.csv");
}

TEST_CASE("bulk density table: uniform midpoint grid skipping x = 0") {
  const auto r = run_cli(
      "bulk --n 256 --bins 20 --out cli_bulk.csv "
      "--density-out cli_density.csv --density-points 8");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(slurp("cli_density.csv"));
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] == "x,f2");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const double x = std::strtod(fields_of(lines[i])[0].c_str(), nullptr);
    CHECK(std::abs(x) > 0.0);
    CHECK(std::abs(x) < 1.0);
  }
  std::remove("cli_bulk.csv");
  std::remove("cli_density.csv");
}

TEST_CASE("validation failures exit 2 with usage text") {
  const auto missing = run_cli("spectrum");
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.find("--n is required") != std::string::npos);
  CHECK(missing.err.find("usage") != std::string::npos);

  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
  CHECK(run_cli("spectrum --n 2").exit_code == 2);        // n too small
  CHECK(run_cli("bulk --n 999999").exit_code == 2);       // runtime guard
  CHECK(run_cli("walk affine --p 6 --k-max 2").exit_code == 2);  // not prime
  CHECK(run_cli("spectrum --n 8 --format yaml").exit_code == 2);
}

TEST_CASE("numerical failures exit 3") {
  // Horizon far too short for the tail fit: survival stays near 1.
  const auto r = run_cli("absorb --n 64 --b 8 --trials 1000 --horizon 2");
  CHECK(r.exit_code == 3);
  CHECK(!r.err.empty());
}

TEST_CASE("help exits 0; coverage map lists every command") {
  CHECK(run_cli("--help").exit_code == 0);
  const auto r = run_cli("self-test --coverage");
  CHECK(r.exit_code == 0);
  for (const char* cmd :
       {"spectrum", "bound", "oscillator", "absorb", "walk", "bulk",
        "self_test"})
    CHECK_MESSAGE(r.out.find(cmd) != std::string::npos, cmd);
}

TEST_CASE("json rows render for table commands, keys sorted") {
  const auto r = run_cli(
      "spectrum --n 4 --a 1 --format json --out cli_spec.json");
  CHECK(r.exit_code == 0);
  const std::string json = slurp("cli_spec.json");
  CHECK(json.find("\"rows\":[") != std::string::npos);
  // lexicographic key order within row objects
  CHECK(json.find("{\"eigenvalue\":") != std::string::npos);
  const auto a_pos = json.find("\"a\":");
  const auto n_pos = json.find("\"n\":");
  const auto rows_pos = json.find("\"rows\":");
  CHECK(a_pos < n_pos);
  CHECK(n_pos < rows_pos);
  std::remove("cli_spec.json");
}
