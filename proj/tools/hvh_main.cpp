// hvh: two spins coupled by a harmonic oscillator, quantum vs hybrid
// van Hove dynamics. `run` sweeps purity/concurrence over omega*t and
// writes CSV (optionally SVG); `verify` executes the verification suites.
#include "hvh/svg_plot.hpp"
#include "hvh/sweep.hpp"
#include "hvh/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open for writing: " << path << "\n";
    return 1;
  }
  out << content;
  if (!out.flush()) {
    std::cerr << "error: write failed: " << path << "\n";
    return 1;
  }
  return 0;
}

std::string kappa_label(double kappa) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "kappa = %g", kappa);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid van Hove mechanics: two spins coupled by a classical or quantum "
               "harmonic oscillator"};
  app.require_subcommand(1);

  hvh::RunConfig cfg;
  std::string mode_name = "both";

  CLI::App* run = app.add_subcommand("run", "sweep purity and concurrence over omega*t");
  run->set_config("--config", "", "key=value file with the same option names");
  run->add_option("--mode", mode_name, "quantum | hybrid | both")
      ->check(CLI::IsMember({"quantum", "hybrid", "both"}));
  run->add_option("--kappa", cfg.kappa, "dimensionless coupling g^2/(m w^3 hbar)");
  run->add_option("--epsilon", cfg.epsilon_tilde, "level splitting in units of hbar*omega");
  run->add_option("--q0", cfg.q0_tilde, "initial position, units sqrt(hbar/m w)");
  run->add_option("--p0", cfg.p0_tilde, "initial momentum, units sqrt(m w hbar)");
  run->add_option("--sigma", cfg.sigma_tilde, "Gaussian width, units sqrt(hbar/m w)");
  run->add_option("--t-max", cfg.t_max, "sweep end in omega*t");
  run->add_option("--samples", cfg.samples, "number of time samples");
  run->add_option("--out", cfg.out_csv, "output CSV path")->required();
  run->add_option("--svg", cfg.out_svg, "optional output SVG path");
  run->add_flag("--oracle", cfg.oracle, "cross-check every sample against quadrature");
  run->add_option("--oracle-grid", cfg.oracle_grid, "quadrature nodes (hybrid capped at 401)");

  std::string suite = "all";
  int grid = 0;
  double tol = 0.0;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "algebra | oracle | pde | expectation | all")
      ->check(CLI::IsMember({"algebra", "oracle", "pde", "expectation", "all"}));
  verify->add_option("--grid", grid, "grid nodes (defaults per suite)");
  verify->add_option("--tol", tol, "tolerance (defaults per suite)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      cfg.mode = mode_name == "quantum"  ? hvh::RunMode::Quantum
                 : mode_name == "hybrid" ? hvh::RunMode::Hybrid
                                         : hvh::RunMode::Both;
      cfg.validate();
      const hvh::SweepResult result = hvh::compute_sweep(cfg);
      const std::string csv = hvh::sweep_csv(result);
      if (write_file(cfg.out_csv, csv) != 0) return 2;
      if (!cfg.out_svg.empty()) {
        if (write_file(cfg.out_svg, hvh::svg_from_csv(csv, kappa_label(cfg.kappa))) != 0)
          return 2;
      }
      if (result.has_oracle) {
        std::printf("oracle max deviation: purity %.3e concurrence %.3e over %zu rows\n",
                    result.max_purity_deviation, result.max_concurrence_deviation,
                    result.rows.size());
      }
      return 0;
    }

    std::vector<hvh::CheckResult> checks;
    if (suite == "algebra") {
      checks = hvh::verify_algebra();
    } else if (suite == "oracle") {
      checks = hvh::verify_oracle(grid > 0 ? grid : 801, tol > 0 ? tol : 1e-8);
    } else if (suite == "pde") {
      checks = hvh::verify_pde(grid > 0 ? grid : 201, tol > 0 ? tol : 1e-3);
    } else if (suite == "expectation") {
      checks = hvh::verify_expectation(grid > 0 ? grid : 401, tol > 0 ? tol : 5e-3);
    } else {
      checks = hvh::verify_all(grid > 0 ? grid : 201, tol);
    }
    return hvh::report_checks(checks) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
