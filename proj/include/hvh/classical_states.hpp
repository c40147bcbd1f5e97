// Closed-form states and trajectory machinery for the harmonic oscillator:
// the classical flow, the action/phase functions eta and tau, the quantum
// coherent state, and the Gaussian van Hove state of the classical
// oscillator with full and weak-equality phase conventions.
#pragma once

#include <complex>
#include <functional>

namespace hvh {

struct OscillatorParams {
  double m = 1.0;
  double omega = 1.0;
  double hbar = 1.0;

  static OscillatorParams create(double m, double omega, double hbar);
};

struct InitialCondition {
  double q0 = 0.0;
  double p0 = 0.0;
  double sigma = 1.0;  // Gaussian width in position units
  double tau0 = 0.0;   // initial value of the time function tau
};

// tau0 defaults to tau(q0,p0); an origin-centered state gets tau0 = 0
// (its full-mode phase is never used by the marginalization pipeline).
InitialCondition make_initial_condition(const OscillatorParams& params, double q0, double p0,
                                        double sigma);

enum class PhaseMode { Full, WeakEquality };

struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
};

// Forward classical flow: the trajectory through (q1,p1) at t=0, evaluated
// at time t. Energy-conserving by construction.
PhasePoint trajectory(double q1, double p1, double t, const OscillatorParams& params);

double hamiltonian(double q, double p, const OscillatorParams& params);

// eta = q p / 2, the action function; {eta, H0} = L.
double eta(double q, double p);

// tau = atan2(m omega q, p) / omega, range (-pi/omega, pi/omega];
// {tau, H0} = 1. Throws std::domain_error at the phase-space origin.
double tau(double q, double p, const OscillatorParams& params);

// Coherent oscillator state, unit L2 norm in q at every t.
std::complex<double> coherent_state(double q, double t, const OscillatorParams& params,
                                    double q0, double p0);

// Gaussian van Hove state of the classical oscillator. The amplitude is the
// initial Gaussian transported along the flow (evaluated at the pullback
// trajectory point), so |Phi|^2 solves the Liouville equation exactly.
// Full mode carries the phase eta/hbar - H0 (t + tau0 - tau)/hbar and is
// undefined at the origin; WeakEquality carries eta/hbar only.
std::complex<double> classical_gaussian_state(double q, double p, double t,
                                              const OscillatorParams& params,
                                              const InitialCondition& ic, PhaseMode mode);

// Exact transport of an arbitrary nonnegative initial density along the
// classical flow; the solution of the Liouville equation.
double liouville_flow_density(const std::function<double(double, double)>& initial_density,
                              double q, double p, double t, const OscillatorParams& params);

// Analytic log-derivatives of the full-mode Gaussian van Hove state,
// used by the verification layer to apply van Hove operators without
// finite-difference stencils. delta_tau = tau(q,p) - tau0 - t is the
// factor the weak-equality rule sets to zero.
struct StateLogDerivatives {
  double rho = 0.0;   // |Phi|^2
  double dG_dq = 0.0;  // log-amplitude gradient
  double dG_dp = 0.0;
  double dchi_dq = 0.0;  // full-mode phase gradient
  double dchi_dp = 0.0;
  double delta_tau = 0.0;
};

StateLogDerivatives classical_gaussian_log_derivatives(double q, double p, double t,
                                                       const OscillatorParams& params,
                                                       const InitialCondition& ic);

}  // namespace hvh
