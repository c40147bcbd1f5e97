// Time-sweep driver shared by the CLI and the acceptance suite: computes
// R/S/U, purity and concurrence over a range of omega*t, optionally checks
// every sample against the quadrature oracle, and serializes to CSV.
#pragma once

#include "hvh/spin_oscillator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hvh {

enum class RunMode { Quantum, Hybrid, Both };

struct RunConfig {
  RunMode mode = RunMode::Both;
  double kappa = 1.0;
  double epsilon_tilde = 0.0;  // epsilon / (hbar omega)
  double q0_tilde = 0.0;       // units sqrt(hbar / m omega)
  double p0_tilde = 0.0;       // units sqrt(m omega hbar)
  double sigma_tilde = 1.0;    // units sqrt(hbar / m omega)
  double t_max = 8.0 * 3.14159265358979323846;  // in omega*t
  int samples = 400;
  std::string out_csv;
  std::string out_svg;  // empty = no plot
  bool oracle = false;
  int oracle_grid = 801;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// Natural-unit scenario (m = omega = hbar = 1, g = sqrt(kappa)).
ScenarioParams scenario_from_config(const RunConfig& cfg);

struct SweepRow {
  double omega_t = 0.0;
  bool hybrid = false;
  RSU rsu;
  double purity_value = 0.0;
  double concurrence_value = 0.0;
  std::optional<double> purity_oracle;
  std::optional<double> concurrence_oracle;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // omega_t-major, quantum before hybrid
  bool has_oracle = false;
  double max_purity_deviation = 0.0;      // closed form vs oracle
  double max_concurrence_deviation = 0.0;
};

SweepResult compute_sweep(const RunConfig& cfg);

// Exact CSV contract: header
//   omega_t,mode,R,S,U,purity,concurrence[,purity_oracle,concurrence_oracle]
// 17 significant digits, LF line endings, no trailing separator.
std::string sweep_csv(const SweepResult& result);

}  // namespace hvh
