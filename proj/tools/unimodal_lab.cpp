// Command-line front end: parses flags into a RunConfig and hands off to
// unimodal_lab::cli::run.

#include "unimodal_lab/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace cli = unimodal_lab::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact unimodality checks for (1+x)^m (1+x^k) and the k^4 membership threshold"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::RunConfig cfg;
  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--out", out_path, "Write the report to PATH instead of stdout");

  auto* check = app.add_subcommand("check", "Check all four conditions for one (m, k)");
  check->add_option("--m", cfg.m, "Exponent of (1+x)")->required();
  check->add_option("--k", cfg.k, "Exponent in (1+x^k)")->required();
  check->add_flag("--show-coeffs", cfg.show_coeffs, "Include the coefficient list");

  auto* scan1 = app.add_subcommand("scan-theorem1", "Minimal m per k, for both predicates");
  std::int64_t k_min1 = 2, k_max1 = 7;
  scan1->add_option("--k-min", k_min1, "First k")->capture_default_str();
  scan1->add_option("--k-max", k_max1, "Last k")->capture_default_str();
  scan1->add_option("--cap", cfg.cap, "Largest m searched (default 2k^2)");
  scan1->add_flag("--exhaustive", cfg.exhaustive, "Check every m below the answer directly");

  auto* probe = app.add_subcommand("probe-inequality", "Both sides of the log-concavity inequality over u");
  probe->add_option("--k", cfg.k, "k >= 3")->required();

  auto* ecl = app.add_subcommand("eclass", "Threshold m(k) with certificates and the k^4 sandwich");
  ecl->add_option("--k", cfg.k, "k >= 2")->required();
  ecl->add_option("--grid", cfg.grid, "Grid points")->default_val(100000);
  ecl->add_option("--tol", cfg.tol, "Refinement tolerance in radians (default 1e-10)");

  auto* scan2 = app.add_subcommand("scan-eclass", "m(k) and the k^4 sandwich over a range of k");
  std::int64_t k_min2 = 9, k_max2 = 24, grid2 = 100000;
  double tol2 = 0.0;
  scan2->add_option("--k-min", k_min2, "First k")->capture_default_str();
  scan2->add_option("--k-max", k_max2, "Last k")->capture_default_str();
  scan2->add_option("--grid", grid2, "Grid points")->capture_default_str();
  scan2->add_option("--tol", tol2, "Refinement tolerance in radians (default 1e-10)");

  auto* cert = app.add_subcommand("certmax", "Enclosure of max D on (pi/2, pi)");
  cert->add_option("--tol", cfg.tol, "Enclosure width (default 1e-9)");

  std::string input;
  auto* gen = app.add_subcommand("general", "Smallest N with (1+x)^N p strongly unimodal");
  gen->add_option("file", input, "Coefficient file, one integer per entry in index order")->required();
  gen->add_option("--cap", cfg.cap, "Largest N searched (default 1000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_code::usage;
  }

  if (*check) cfg.command = cli::Command::check;
  if (*scan1) {
    cfg.command = cli::Command::scan_theorem1;
    cfg.k_min = k_min1;
    cfg.k_max = k_max1;
  }
  if (*probe) cfg.command = cli::Command::probe_inequality;
  if (*ecl) cfg.command = cli::Command::eclass;
  if (*scan2) {
    cfg.command = cli::Command::scan_eclass;
    cfg.k_min = k_min2;
    cfg.k_max = k_max2;
    cfg.grid = grid2;
    cfg.tol = tol2;
  }
  if (*cert) cfg.command = cli::Command::certmax;
  if (*gen) {
    cfg.command = cli::Command::general;
    cfg.input = input;
  }
  cfg.format = cli::parse_format(format);
  if (!out_path.empty()) cfg.out = out_path;

  const auto result = cli::run(cfg);
  std::cerr << result.messages;
  if (cfg.out) {
    std::ofstream out(*cfg.out);
    if (!out) {
      std::cerr << "cannot write '" << *cfg.out << "'\n";
      return cli::exit_code::usage;
    }
    out << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}
