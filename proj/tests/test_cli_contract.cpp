#include <cmath>
#include <string>

#include <doctest.h>

#include "cleit/config.hpp"
#include "cleit/csv.hpp"
#include "subprocess.hpp"

using namespace cleit;
using testutil::run_command;
using testutil::shell_quote;

namespace {

const std::string kCli = CLEIT_CLI_PATH;
const std::string kFig6 = std::string(CLEIT_CONFIG_DIR) + "/fig6.cfg";

std::string with_patches(const std::string& base_text,
                         const std::string& extra) {
  return base_text + "\n" + extra + "\n";
}

}  // namespace

TEST_CASE("spectrum subcommand") {
  const std::string dir = testutil::make_temp_dir();

  SUBCASE("reference config: header plus count rows, maximum on resonance") {
    const std::string out = dir + "/spec.csv";
    const auto res = run_command(kCli + " spectrum --config " +
                                 shell_quote(kFig6) + " --out " +
                                 shell_quote(out));
    REQUIRE(res.exit_code == 0);
    const CsvTable table = parse_csv(read_file(out));
    REQUIRE(table.header.size() == 2);
    CHECK(table.header[0] == "delta");
    CHECK(table.rows() == 81);
    std::size_t imax = 0;
    for (std::size_t i = 1; i < table.rows(); ++i)
      if (table.columns[1][i] > table.columns[1][imax]) imax = i;
    CHECK(table.columns[0][imax] == 0.0);
  }

  SUBCASE("two-point grid yields two data rows") {
    std::string text = read_file(kFig6);
    const auto pos = text.find("delta_count = 81");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 16, "delta_count = 2 ");
    const std::string cfg = dir + "/two.cfg";
    write_file(cfg, text);
    const std::string out = dir + "/two.csv";
    const auto res = run_command(kCli + " spectrum --config " +
                                 shell_quote(cfg) + " --out " +
                                 shell_quote(out));
    REQUIRE(res.exit_code == 0);
    CHECK(parse_csv(read_file(out)).rows() == 2);
  }

  SUBCASE("unwritable path: nonzero exit, diagnostic names the path") {
    const std::string out = dir + "/no-such-dir/spec.csv";
    const auto res = run_command(kCli + " spectrum --config " +
                                 shell_quote(kFig6) + " --out " +
                                 shell_quote(out));
    CHECK(res.exit_code != 0);
    CHECK(res.output.find("error:") != std::string::npos);
    CHECK(res.output.find("no-such-dir") != std::string::npos);
  }

  SUBCASE("missing output path is an error") {
    const auto res =
        run_command(kCli + " spectrum --config " + shell_quote(kFig6));
    CHECK(res.exit_code != 0);
    CHECK(res.output.find("error:") != std::string::npos);
  }
}

TEST_CASE("phase-scan subcommand") {
  const std::string dir = testutil::make_temp_dir();

  SUBCASE("summary reports the beat period") {
    const std::string out = dir + "/phase.csv";
    const auto res = run_command(kCli + " phase-scan --config " +
                                 shell_quote(kFig6) + " --out " +
                                 shell_quote(out));
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("fit right: A0=") != std::string::npos);
    const auto lpos = res.output.find("Lambda=");
    REQUIRE(lpos != std::string::npos);
    const double lambda = std::stod(res.output.substr(lpos + 7));
    CHECK(std::abs(lambda - 4.18879) < 0.05);
  }

  SUBCASE("both polarizations: two anti-phased columns") {
    const std::string out = dir + "/both.csv";
    const auto res = run_command(kCli + " phase-scan --config " +
                                 shell_quote(kFig6) + " --polarization both" +
                                 " --out " + shell_quote(out));
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("fit right:") != std::string::npos);
    CHECK(res.output.find("fit left:") != std::string::npos);
    const CsvTable table = parse_csv(read_file(out));
    REQUIRE(table.header.size() == 3);
    CHECK(table.header[1] == "peak_right");
    CHECK(table.header[2] == "peak_left");
    // anti-phased: where right is above its mean, left is below
    double mean = 0.0;
    for (const double v : table.columns[1]) mean += v;
    mean /= static_cast<double>(table.rows());
    for (std::size_t i = 0; i < table.rows(); ++i) {
      const double r = table.columns[1][i] - mean;
      const double l = table.columns[2][i] - mean;
      if (std::abs(r) > 0.05) CHECK(r * l < 0.0);
    }
  }

  SUBCASE("microwave off is reported as degenerate") {
    std::string text = read_file(kFig6);
    const auto pos = text.find("omega_mu = 0.02+0j");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 18, "omega_mu = 0+0j   ");
    const std::string cfg = dir + "/flat.cfg";
    write_file(cfg, text);
    const auto res = run_command(kCli + " phase-scan --config " +
                                 shell_quote(cfg) + " --out " +
                                 shell_quote(dir + "/flat.csv"));
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("degenerate") != std::string::npos);
  }
}

TEST_CASE("oracle-check subcommand") {
  const std::string dir = testutil::make_temp_dir();

  SUBCASE("reference config passes") {
    const auto res =
        run_command(kCli + " oracle-check --config " + shell_quote(kFig6));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("oracle-check: PASS") != std::string::npos);
  }

  SUBCASE("strong probe fails unless marked expected") {
    std::string text = read_file(kFig6);
    const auto pos = text.find("omega1_in = 0.1+0j");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 18, "omega1_in = 0.9+0j");

    const std::string cfg = dir + "/strong.cfg";
    write_file(cfg, text);
    const auto failing =
        run_command(kCli + " oracle-check --config " + shell_quote(cfg));
    CHECK(failing.exit_code != 0);
    CHECK(failing.output.find("FAIL") != std::string::npos);

    const std::string escaped_cfg = dir + "/strong-expected.cfg";
    write_file(escaped_cfg,
               with_patches(text, "expect_weak_probe_fail = true"));
    const auto expected =
        run_command(kCli + " oracle-check --config " + shell_quote(escaped_cfg));
    CHECK(expected.exit_code == 0);
    CHECK(expected.output.find("EXPECTED-FAIL") != std::string::npos);
  }

  SUBCASE("coarse integration step breaks the ODE check") {
    // steps = 16 is the coarsest accepted step count (step = L/16)
    const auto res = run_command(kCli + " oracle-check --config " +
                                 shell_quote(kFig6) + " --steps 16");
    CHECK(res.exit_code != 0);
    CHECK(res.output.find("ode-vs-closed-form") != std::string::npos);
    CHECK(res.output.find("FAIL") != std::string::npos);

    // a step coarser than L/16 violates the integrator precondition
    const auto invalid = run_command(kCli + " oracle-check --config " +
                                     shell_quote(kFig6) + " --steps 4");
    CHECK(invalid.exit_code != 0);
    CHECK(invalid.output.find("error:") != std::string::npos);
  }
}

TEST_CASE("plot subcommand") {
  const std::string dir = testutil::make_temp_dir();
  const std::string csv = dir + "/curve.csv";
  write_file(csv, "delta,transmission\n-1,0.2\n0,0.9\n1,0.2\n");
  const std::string svg = dir + "/curve.svg";
  const auto res = run_command(kCli + " plot " + shell_quote(csv) + " --out " +
                               shell_quote(svg));
  REQUIRE(res.exit_code == 0);
  CHECK(read_file(svg).find("<svg") != std::string::npos);

  const std::string empty_csv = dir + "/empty.csv";
  write_file(empty_csv, "");
  const auto bad = run_command(kCli + " plot " + shell_quote(empty_csv) +
                               " --out " + shell_quote(dir + "/x.svg"));
  CHECK(bad.exit_code != 0);
  CHECK(bad.output.find("error:") != std::string::npos);
}

TEST_CASE("error diagnostics carry the error prefix") {
  const auto res = run_command(kCli + " spectrum --config /nonexistent.cfg");
  CHECK(res.exit_code != 0);
  CHECK(res.output.find("error:") != std::string::npos);
  CHECK(res.output.find("/nonexistent.cfg") != std::string::npos);
}
