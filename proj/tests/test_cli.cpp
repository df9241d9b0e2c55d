#include <cmath>
#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "exec_util.hpp"
#include "fracosc/special.hpp"
#include "fracosc/validate.hpp"

namespace fs = std::filesystem;
using testutil::parse_csv;
using testutil::read_file;
using testutil::run_command;

namespace {

const std::string kCli = FRACOSC_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("fracosc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("solve --example emits a deterministic CSV and report") {
  TempDir tmp;
  const std::string csv1 = (tmp.path / "a.csv").string();
  const auto r1 = run_command(kCli + " solve --example --n 129 --output " + csv1);
  const std::string first_bytes = read_file(csv1);
  const auto r2 = run_command(kCli + " solve --example --n 129 --output " + csv1);
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(r1.output == r2.output);
  CHECK(first_bytes == read_file(csv1));

  const auto csv = parse_csv(first_bytes);
  REQUIRE(csv.header.size() == 6);
  CHECK(csv.header[0] == "t");
  CHECK(csv.header[5] == "defect");
  REQUIRE(csv.rows.size() == 129);
  CHECK(csv.rows.front()[1] == 0.0);  // u(0) = 0
  CHECK(csv.rows.back()[2] == 0.0);   // v(1) = 0
  // u stays between beta and alpha
  for (const auto& row : csv.rows) {
    CHECK(row[1] <= row[3] + 1e-9);
    CHECK(row[1] >= row[4] - 1e-9);
  }
  CHECK(r1.output.find("# converged = true") != std::string::npos);
  CHECK(r1.output.find("# bracket_ok = true") != std::string::npos);
  CHECK(r1.output.find("# hypotheses = pass") != std::string::npos);
  CHECK(r1.output.find("r_samples = 0.5,0.75,0.875,0.94999999999999996,0.98999999999999999") != std::string::npos);
}

TEST_CASE("the echoed report reloads as a config file") {
  TempDir tmp;
  const auto r = run_command(kCli + " solve --example --n 65");
  CHECK(r.exit_code == 0);
  const std::string cfg = (tmp.path / "echo.cfg").string();
  {
    std::ofstream out(cfg);
    out << r.output;
  }
  const auto r2 = run_command(kCli + " solve --config " + cfg);
  CHECK(r2.exit_code == 0);
  CHECK(r2.output == r.output);
}

TEST_CASE("missing required keys abort with exit 1") {
  TempDir tmp;
  const std::string cfg = (tmp.path / "bad.cfg").string();
  {
    std::ofstream out(cfg);
    out << "omega = 1\np = 0.5\nq = 0.5\n";  // f missing
  }
  const auto r = run_command(kCli + " solve --config " + cfg);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("'f'") != std::string::npos);

  const auto r2 = run_command(kCli + " solve");
  CHECK(r2.exit_code == 1);
}

TEST_CASE("config parse errors report their line") {
  TempDir tmp;
  const std::string cfg = (tmp.path / "bad2.cfg").string();
  {
    std::ofstream out(cfg);
    out << "omega = 1\nwhat = ever\n";
  }
  const auto r = run_command(kCli + " solve --config " + cfg);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("line 2") != std::string::npos);
}

TEST_CASE("check passes the example and fails the zero-bracket variant") {
  const auto pass = run_command(kCli + " check --example");
  CHECK(pass.exit_code == 0);
  CHECK(pass.output.find("# hypotheses = pass") != std::string::npos);

  const auto fail = run_command(kCli + " check --example --A 0 --B 0");
  CHECK(fail.exit_code == 3);
  CHECK(fail.output.find("# hypotheses = fail") != std::string::npos);
  CHECK(fail.output.find("h1_margin = -0.01") != std::string::npos);
  CHECK(fail.output.find("(t = 0,") != std::string::npos);

  const auto zero = run_command(
      kCli + " check --omega 1 --p 0.5 --q 0.5 --f x --A 0.02 --B -0.01");
  CHECK(zero.exit_code == 0);
}

TEST_CASE("op subcommand evaluates the four operators") {
  const auto dcr = run_command(kCli + " op --op dcr --mu 0.5 --f \"1-t\" --n 65");
  CHECK(dcr.exit_code == 0);
  const auto csv = parse_csv(dcr.output);
  REQUIRE(csv.rows.size() == 65);
  const double g15 = fracosc::gamma_fn(1.5);
  for (const auto& row : csv.rows) {
    CHECK(std::abs(row[1] - std::sqrt(1.0 - row[0]) / g15) <= 1e-12);
  }

  const auto ilq = run_command(kCli + " op --op ilq --mu 0.5 --f 1 --n 65");
  const auto icsv = parse_csv(ilq.output);
  for (const auto& row : icsv.rows) {
    CHECK(std::abs(row[1] - std::sqrt(row[0]) / g15) <= 1e-12);
  }

  const auto bad = run_command(kCli + " op --op nope --mu 0.5 --f 1");
  CHECK(bad.exit_code == 1);

  // dlq flags the singular origin value as nan
  const auto dlq = run_command(kCli + " op --op dlq --mu 0.5 --f 1 --n 65");
  CHECK(dlq.exit_code == 0);
  CHECK(dlq.output.find("\n0,nan\n") != std::string::npos);

  const auto uses_x = run_command(kCli + " op --op ilq --mu 0.5 --f x");
  CHECK(uses_x.exit_code == 1);
}

TEST_CASE("mono subcommand verdicts") {
  const auto dec = run_command(kCli + " mono --f \"1-t\" --orders 0.6,0.8,0.95 --n 257");
  CHECK(dec.exit_code == 0);
  CHECK(dec.output == "decreasing\n");

  const auto inc = run_command(kCli + " mono --f \"t^3\" --orders 0.6,0.8,0.95 --n 257");
  CHECK(inc.output == "increasing\n");

  const auto none = run_command(kCli + " mono --f \"t*t - t\" --n 257");
  CHECK(none.output == "inconclusive\n");
}

TEST_CASE("study emits a shrinking-error table") {
  const auto r = run_command(kCli + " study --sizes 65,129,257 --example");
  CHECK(r.exit_code == 0);
  const auto csv = parse_csv(r.output);
  REQUIRE(csv.header.size() == 4);
  REQUIRE(csv.rows.size() == 3);
  CHECK(csv.rows[0][2] > csv.rows[1][2]);
  CHECK(csv.rows[1][2] > csv.rows[2][2]);
  CHECK(csv.rows[2][3] > 0.9);  // empirical order on the last pair

  const auto runs_match =
      run_command(kCli + " study --sizes 65,129,257 --example");
  CHECK(runs_match.output == r.output);

  const auto noref = run_command(kCli + " study --sizes 65,129,257 --omega 1 --p 0.5 --q 0.5 --f x");
  CHECK(noref.exit_code == 1);
}

TEST_CASE("non-convergence exits with code 2") {
  const auto r = run_command(kCli + " solve --example --n 65 --max_iter 2");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("# converged = false") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_command(kCli).exit_code == 1);
  CHECK(run_command(kCli + " frobnicate").exit_code == 1);
  CHECK(run_command(kCli + " solve --example --n 65 --config /nonexistent.cfg").exit_code == 1);
  CHECK(run_command(kCli + " solve --omega 0 --p 0.5 --q 0.5 --f x").exit_code == 1);
  CHECK(run_command(kCli + " --help").exit_code == 0);

  const auto badexpr =
      run_command(kCli + " solve --omega 1 --p 0.5 --q 0.5 --f \"x + * t\"");
  CHECK(badexpr.exit_code == 1);
  CHECK(badexpr.output.find("column 5") != std::string::npos);
}
