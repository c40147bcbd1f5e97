// Closed-form solution of two spins coupled to a quantum or classical
// harmonic oscillator, prepared in |++> x (coherent / Gaussian) state:
// component wavefunctions, the R/S/U phase functions, and assembly of the
// 4x4 reduced spin density matrix in the basis |uu>,|ud>,|du>,|dd>.
#pragma once

#include "hvh/classical_states.hpp"
#include "hvh/numerics.hpp"

namespace hvh {

struct ScenarioParams {
  OscillatorParams osc;
  double g = 0.0;        // coupling, energy / length
  double epsilon = 0.0;  // level splitting
  InitialCondition ic;

  // dimensionless coupling g^2 / (m omega^3 hbar)
  double kappa() const;
  // branch constants, k = 1..4: (eps,0,0,-eps), (g,0,0,-g)
  double epsilon_k(int k) const;
  double g_k(int k) const;
  // position displacement g_k / (m omega^2)
  double shift_k(int k) const;
};

struct RSU {
  double R = 0.0;  // >= 0; controls |a|, |b|
  double S = 0.0;
  double U = 0.0;
};

// Eqs. of the quantum marginal: R = kappa (1 - cos wt),
// S = (kappa/2)(sin wt - wt), U = (g/m w^2 hbar){2 m w q0 sin wt +
// p0 [1 - 2 cos wt]} + 2 eps t / hbar.
RSU rsu_quantum(double t, const ScenarioParams& sp);

// Hybrid marginal: R = (g^2/m^2 w^4 Sigma^2)(1-cos wt) + g^2 Sigma^2/(8 w^2 hbar^2),
// S = (kappa/2)(sin(wt)/2 - wt), U = (g q0/w hbar) sin wt -
// (g p0/m w^2 hbar) cos wt + 2 eps t / hbar.
RSU rsu_hybrid(double t, const ScenarioParams& sp);

// Two-qubit density matrix with validated invariants.
class SpinDensityMatrix {
 public:
  // Validates: Hermitian within 1e-12, unit trace within 1e-12,
  // eigenvalues >= -1e-10. Throws std::invalid_argument otherwise.
  static SpinDensityMatrix from_matrix(const ComplexMatrix4& m);

  const ComplexMatrix4& matrix() const { return m_; }
  const Complex& operator()(int r, int c) const { return m_(r, c); }

 private:
  ComplexMatrix4 m_;
};

// Builds the reduced density matrix from (R,S,U). With
// a = e^{-2R-iU}, b = e^{-R/2-i(U/2+S)}, c = e^{-R/2-i(U/2-S)}:
//
//        [ 1   b*  b*  a* ]
//  4r =  [ b   1   1   c* ]
//        [ b   1   1   c* ]
//        [ a   c   c   1  ]
//
// This is the exact Gaussian marginal; the coherences between branches of
// equal +-g pick up the energy-offset phase S with opposite signs, so the
// pattern is not a single common-Bloch-vector form. Throws on R < 0.
SpinDensityMatrix assemble_density(const RSU& r);

// Spin-branch wavefunction of the quantum scenario, k = 1..4.
Complex psi_quantum(int k, double q, double t, const ScenarioParams& sp);

// Spin-branch hybrid wavefunction over phase space, k = 1..4.
Complex psi_hybrid(int k, double q, double p, double t, const ScenarioParams& sp,
                   PhaseMode mode);

}  // namespace hvh
