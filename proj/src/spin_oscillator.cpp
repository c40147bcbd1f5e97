#include "hvh/spin_oscillator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hvh {

double ScenarioParams::kappa() const {
  const double w = osc.omega;
  return g * g / (osc.m * w * w * w * osc.hbar);
}

double ScenarioParams::epsilon_k(int k) const {
  switch (k) {
    case 1: return epsilon;
    case 2:
    case 3: return 0.0;
    case 4: return -epsilon;
  }
  throw std::invalid_argument("spin index must be in 1..4");
}

double ScenarioParams::g_k(int k) const {
  switch (k) {
    case 1: return g;
    case 2:
    case 3: return 0.0;
    case 4: return -g;
  }
  throw std::invalid_argument("spin index must be in 1..4");
}

double ScenarioParams::shift_k(int k) const {
  return g_k(k) / (osc.m * osc.omega * osc.omega);
}

RSU rsu_quantum(double t, const ScenarioParams& sp) {
  const double w = sp.osc.omega;
  const double wt = w * t;
  const double kap = sp.kappa();
  RSU r;
  r.R = kap * (1.0 - std::cos(wt));
  r.S = 0.5 * kap * (std::sin(wt) - wt);
  r.U = sp.g / (sp.osc.m * w * w * sp.osc.hbar) *
            (2.0 * sp.osc.m * w * sp.ic.q0 * std::sin(wt) +
             sp.ic.p0 * (1.0 - 2.0 * std::cos(wt))) +
        2.0 * sp.epsilon * t / sp.osc.hbar;
  return r;
}

RSU rsu_hybrid(double t, const ScenarioParams& sp) {
  const double w = sp.osc.omega;
  const double wt = w * t;
  const double m = sp.osc.m;
  const double hb = sp.osc.hbar;
  const double sig = sp.ic.sigma;
  RSU r;
  r.R = sp.g * sp.g / (m * m * w * w * w * w * sig * sig) * (1.0 - std::cos(wt)) +
        0.125 * sp.g * sp.g * sig * sig / (w * w * hb * hb);
  r.S = 0.5 * sp.kappa() * (0.5 * std::sin(wt) - wt);
  r.U = sp.g * sp.ic.q0 / (w * hb) * std::sin(wt) -
        sp.g * sp.ic.p0 / (m * w * w * hb) * std::cos(wt) + 2.0 * sp.epsilon * t / hb;
  return r;
}

SpinDensityMatrix SpinDensityMatrix::from_matrix(const ComplexMatrix4& m) {
  double herm = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) herm = std::max(herm, std::abs(m(r, c) - std::conj(m(c, r))));
  if (herm > 1e-12) {
    std::ostringstream os;
    os << "SpinDensityMatrix: Hermiticity defect " << herm;
    throw std::invalid_argument(os.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "SpinDensityMatrix: trace defect " << std::abs(tr - 1.0);
    throw std::invalid_argument(os.str());
  }
  const auto eigs = hermitian_eigenvalues_4(m);
  if (eigs[0] < -1e-10) {
    std::ostringstream os;
    os << "SpinDensityMatrix: negative eigenvalue " << eigs[0];
    throw std::invalid_argument(os.str());
  }
  SpinDensityMatrix rho;
  rho.m_ = m;
  return rho;
}

SpinDensityMatrix assemble_density(const RSU& r) {
  if (r.R < 0.0) throw std::invalid_argument("assemble_density: R must be nonnegative");
  const Complex a = std::exp(Complex(-2.0 * r.R, -r.U));
  const Complex b = std::exp(Complex(-0.5 * r.R, -(0.5 * r.U + r.S)));
  const Complex c = std::exp(Complex(-0.5 * r.R, -(0.5 * r.U - r.S)));
  const Complex ac = std::conj(a), bc = std::conj(b), cc = std::conj(c);
  ComplexMatrix4 m;
  const Complex one = 1.0;
  const Complex entries[16] = {one, bc, bc, ac,   //
                               b, one, one, cc,   //
                               b, one, one, cc,   //
                               a, c, c, one};
  for (int k = 0; k < 16; ++k) m.e[static_cast<size_t>(k)] = 0.25 * entries[k];
  return SpinDensityMatrix::from_matrix(m);
}

namespace {

Complex branch_phase(int k, double t, const ScenarioParams& sp) {
  const double gk = sp.g_k(k);
  const double offset = sp.epsilon_k(k) - gk * gk / (2.0 * sp.osc.m * sp.osc.omega * sp.osc.omega);
  return std::exp(Complex(0.0, -offset * t / sp.osc.hbar));
}

}  // namespace

Complex psi_quantum(int k, double q, double t, const ScenarioParams& sp) {
  const double s = sp.shift_k(k);
  return branch_phase(k, t, sp) * coherent_state(q + s, t, sp.osc, sp.ic.q0 + s, sp.ic.p0);
}

Complex psi_hybrid(int k, double q, double p, double t, const ScenarioParams& sp,
                   PhaseMode mode) {
  const double s = sp.shift_k(k);
  InitialCondition shifted = sp.ic;
  shifted.q0 = sp.ic.q0 + s;
  shifted.tau0 = (shifted.q0 == 0.0 && shifted.p0 == 0.0)
                     ? 0.0
                     : tau(shifted.q0, shifted.p0, sp.osc);
  return branch_phase(k, t, sp) * classical_gaussian_state(q + s, p, t, sp.osc, shifted, mode);
}

}  // namespace hvh
