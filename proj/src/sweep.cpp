#include "hvh/sweep.hpp"

#include "hvh/entanglement.hpp"
#include "hvh/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hvh {

void RunConfig::validate() const {
  if (!(kappa >= 0.0)) throw std::invalid_argument("invalid config field: kappa (must be >= 0)");
  if (!(sigma_tilde > 0.0))
    throw std::invalid_argument("invalid config field: sigma (must be > 0)");
  if (!(t_max > 0.0)) throw std::invalid_argument("invalid config field: t-max (must be > 0)");
  if (samples < 2) throw std::invalid_argument("invalid config field: samples (must be >= 2)");
  if (oracle_grid < 3)
    throw std::invalid_argument("invalid config field: oracle-grid (must be >= 3)");
}

ScenarioParams scenario_from_config(const RunConfig& cfg) {
  ScenarioParams sp;
  sp.osc = OscillatorParams::create(1.0, 1.0, 1.0);
  sp.g = std::sqrt(cfg.kappa);
  sp.epsilon = cfg.epsilon_tilde;
  sp.ic = make_initial_condition(sp.osc, cfg.q0_tilde, cfg.p0_tilde, cfg.sigma_tilde);
  return sp;
}

SweepResult compute_sweep(const RunConfig& cfg) {
  cfg.validate();
  const ScenarioParams sp = scenario_from_config(cfg);
  SweepResult out;
  out.has_oracle = cfg.oracle;

  const bool want_quantum = cfg.mode != RunMode::Hybrid;
  const bool want_hybrid = cfg.mode != RunMode::Quantum;

  // Oracle windows cover the whole sweep so every sample reuses one grid.
  Grid1D qwin{-1.0, 1.0, 3};
  Grid2D hwin{{-1.0, 1.0, 3}, {-1.0, 1.0, 3}};
  if (cfg.oracle) {
    if (want_quantum) qwin = quantum_window(sp, cfg.t_max, cfg.oracle_grid);
    if (want_hybrid) hwin = hybrid_window(sp, cfg.t_max, std::min(cfg.oracle_grid, 401));
  }

  for (int i = 0; i < cfg.samples; ++i) {
    const double wt = cfg.t_max * static_cast<double>(i) / (cfg.samples - 1);
    for (int pass = 0; pass < 2; ++pass) {
      const bool hybrid = pass == 1;
      if (hybrid && !want_hybrid) continue;
      if (!hybrid && !want_quantum) continue;
      SweepRow row;
      row.omega_t = wt;
      row.hybrid = hybrid;
      row.rsu = hybrid ? rsu_hybrid(wt, sp) : rsu_quantum(wt, sp);
      const SpinDensityMatrix rho = assemble_density(row.rsu);
      row.purity_value = purity(rho);
      row.concurrence_value = concurrence(rho);
      if (cfg.oracle) {
        const SpinDensityMatrix oracle_rho =
            hybrid ? hybrid_marginal_quadrature(wt, sp, hwin)
                   : quantum_marginal_quadrature(wt, sp, qwin);
        row.purity_oracle = purity(oracle_rho);
        row.concurrence_oracle = concurrence(oracle_rho);
        out.max_purity_deviation = std::max(out.max_purity_deviation,
                                            std::abs(*row.purity_oracle - row.purity_value));
        out.max_concurrence_deviation =
            std::max(out.max_concurrence_deviation,
                     std::abs(*row.concurrence_oracle - row.concurrence_value));
      }
      out.rows.push_back(row);
    }
  }
  return out;
}

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream os;
  os << "omega_t,mode,R,S,U,purity,concurrence";
  if (result.has_oracle) os << ",purity_oracle,concurrence_oracle";
  os << "\n";
  for (const SweepRow& r : result.rows) {
    os << g17(r.omega_t) << ',' << (r.hybrid ? "hybrid" : "quantum") << ',' << g17(r.rsu.R)
       << ',' << g17(r.rsu.S) << ',' << g17(r.rsu.U) << ',' << g17(r.purity_value) << ','
       << g17(r.concurrence_value);
    if (result.has_oracle)
      os << ',' << g17(r.purity_oracle.value_or(0.0)) << ','
         << g17(r.concurrence_oracle.value_or(0.0));
    os << "\n";
  }
  return os.str();
}

}  // namespace hvh
