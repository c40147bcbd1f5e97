// Independent verification layer: brute-force quadrature marginalization of
// the quantum and hybrid scenarios, finite-difference PDE and Liouville
// residuals of the closed-form classical state, and the van Hove
// expectation-value consistency check.
#pragma once

#include "hvh/numerics.hpp"
#include "hvh/spin_oscillator.hpp"
#include "hvh/vanhove_algebra.hpp"

namespace hvh {

// Window helpers: cover every displaced Gaussian center reachable during
// [0, t_max], plus 8 envelope widths of margin.
Grid1D quantum_window(const ScenarioParams& sp, double t_max, int n);
Grid2D hybrid_window(const ScenarioParams& sp, double t_max, int n);
// Window around the transported classical Gaussian alone.
Grid2D classical_window(const OscillatorParams& osc, const InitialCondition& ic, double t_max,
                        int n, double widths = 8.0);

// Window centered on the transported Gaussian at a single time; used by the
// residual checks, where a tight grid sharpens the finite differences.
Grid2D transported_window(const OscillatorParams& osc, const InitialCondition& ic, double t,
                          int n, double widths);

// rho_ij = (1/4) integral psi_i^* psi_j dq (each |++> branch carries
// amplitude 1/2). Result is Hermitized and invariant-checked. Throws if the
// window does not cover all four displaced centers +- 8 widths.
SpinDensityMatrix quantum_marginal_quadrature(double t, const ScenarioParams& sp,
                                              const Grid1D& grid);

// Phase-space analogue with the weak-equality phase, per the evaluation
// rule: numerical phases enter only after all operator manipulations.
SpinDensityMatrix hybrid_marginal_quadrature(double t, const ScenarioParams& sp,
                                             const Grid2D& grid);

struct ResidualReport {
  double sup = 0.0;           // sup-norm over admissible interior nodes
  size_t admissible = 0;      // node count entering the norm
  double masked_fraction = 0.0;
};

// Sup-norm of |i hbar dPhi/dt - O_{H0} Phi| for the full-mode Gaussian
// state, with central differences in t and (q,p). Nodes near the tau branch
// cut (|q| band), the |p| band, and the origin disc are masked; masking
// fewer than 100 admissible nodes is an error.
ResidualReport pde_residual_classical(const OscillatorParams& osc, const InitialCondition& ic,
                                      const Grid2D& grid, double t, double dt);

// Sup-norm of |drho/dt + {rho, H0}| for rho = |Phi|^2 (amplitude only, no
// singularity mask needed).
ResidualReport liouville_residual(const OscillatorParams& osc, const InitialCondition& ic,
                                  const Grid2D& grid, double t, double dt);

// Same residual for an arbitrary sampled density provided as a callable of
// (q, p, t); used to confirm the residual detects non-solutions.
ResidualReport liouville_residual_of(const std::function<double(double, double, double)>& rho,
                                     const OscillatorParams& osc, const Grid2D& grid, double t,
                                     double dt);

struct ExpectationResult {
  Complex lhs;             // <Phi|O_f|Phi> with weak equality applied at evaluation
  double rhs = 0.0;        // integral of |Phi|^2 f
  Complex lhs_raw;         // full functional form, no weak-equality substitution
  double masked_fraction = 0.0;  // fraction of branch-affected nodes (reported, not applied)
};

// Applies O_f to the full-mode state analytically (operator coefficients
// from vanhove_operator, state derivatives from the closed form). The lhs
// substitutes tau ~ tau0 + t in the resulting integrand before quadrature,
// which is the evaluation rule the weak equality prescribes; the raw
// no-substitution value is reported alongside as a diagnostic of the
// finite-width systematic.
ExpectationResult expectation_vanhove(const PolyPhaseFunction& f, const OscillatorParams& osc,
                                      const InitialCondition& ic, const Grid2D& grid, double t);

}  // namespace hvh
