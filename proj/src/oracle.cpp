#include "hvh/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hvh {

namespace {

ComplexMatrix4 hermitized(const ComplexMatrix4& m) {
  ComplexMatrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  return out;
}

double coherent_width(const OscillatorParams& osc) {
  return std::sqrt(osc.hbar / (osc.m * osc.omega));
}

// q-space center of branch k at time t (common for quantum and hybrid).
double branch_center_q(int k, double t, const ScenarioParams& sp) {
  const double s = sp.shift_k(k);
  return trajectory(sp.ic.q0 + s, sp.ic.p0, t, sp.osc).q - s;
}

double branch_center_p(int k, double t, const ScenarioParams& sp) {
  const double s = sp.shift_k(k);
  return trajectory(sp.ic.q0 + s, sp.ic.p0, t, sp.osc).p;
}

}  // namespace

Grid1D quantum_window(const ScenarioParams& sp, double t_max, int n) {
  const double w = coherent_width(sp.osc);
  const double mw = sp.osc.m * sp.osc.omega;
  const double reach = std::hypot(sp.ic.q0, sp.ic.p0 / mw) +
                       2.0 * std::abs(sp.g) / (mw * sp.osc.omega);
  (void)t_max;  // the reach bound holds uniformly in t
  return Grid1D::over(-reach - 8.0 * w, reach + 8.0 * w, n);
}

Grid2D hybrid_window(const ScenarioParams& sp, double t_max, int n) {
  const double mw = sp.osc.m * sp.osc.omega;
  const double wq = sp.ic.sigma;
  const double wp = mw * sp.ic.sigma;
  const double reach = std::hypot(sp.ic.q0, sp.ic.p0 / mw) +
                       2.0 * std::abs(sp.g) / (mw * sp.osc.omega);
  (void)t_max;
  return Grid2D{Grid1D::over(-reach - 8.0 * wq, reach + 8.0 * wq, n),
                Grid1D::over(-mw * reach - 8.0 * wp, mw * reach + 8.0 * wp, n)};
}

Grid2D classical_window(const OscillatorParams& osc, const InitialCondition& ic, double t_max,
                        int n, double widths) {
  const double mw = osc.m * osc.omega;
  const double reach = std::hypot(ic.q0, ic.p0 / mw);
  (void)t_max;
  return Grid2D{Grid1D::over(-reach - widths * ic.sigma, reach + widths * ic.sigma, n),
                Grid1D::over(-mw * (reach + widths * ic.sigma), mw * (reach + widths * ic.sigma),
                             n)};
}

Grid2D transported_window(const OscillatorParams& osc, const InitialCondition& ic, double t,
                          int n, double widths) {
  const PhasePoint c = trajectory(ic.q0, ic.p0, t, osc);
  const double wq = widths * ic.sigma;
  const double wp = widths * osc.m * osc.omega * ic.sigma;
  return Grid2D{Grid1D::over(c.q - wq, c.q + wq, n), Grid1D::over(c.p - wp, c.p + wp, n)};
}

SpinDensityMatrix quantum_marginal_quadrature(double t, const ScenarioParams& sp,
                                              const Grid1D& grid) {
  const double w = coherent_width(sp.osc);
  for (int k = 1; k <= 4; ++k) {
    const double c = branch_center_q(k, t, sp);
    if (c - 8.0 * w < grid.lo || c + 8.0 * w > grid.hi) {
      std::ostringstream os;
      os << "quantum_marginal_quadrature: window [" << grid.lo << "," << grid.hi
         << "] does not cover branch " << k << " center " << c << " +- 8 widths";
      throw std::invalid_argument(os.str());
    }
  }
  // Sample the four branches once, then reduce all 16 overlaps.
  const int n = (grid.n % 2 == 1) ? grid.n : grid.n + 1;
  const double h = (grid.hi - grid.lo) / static_cast<double>(n - 1);
  std::vector<std::array<Complex, 4>> psi(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double q = grid.lo + h * i;
    for (int k = 0; k < 4; ++k) psi[static_cast<size_t>(i)][k] = psi_quantum(k + 1, q, t, sp);
  }
  ComplexMatrix4 rho;
  for (int i = 0; i < n; ++i) {
    const double wt = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const auto& v = psi[static_cast<size_t>(i)];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) rho(a, b) += wt * std::conj(v[a]) * v[b];
  }
  rho = Complex(0.25 * h / 3.0) * rho;
  return SpinDensityMatrix::from_matrix(hermitized(rho));
}

SpinDensityMatrix hybrid_marginal_quadrature(double t, const ScenarioParams& sp,
                                             const Grid2D& grid) {
  const double wq = sp.ic.sigma;
  const double wp = sp.osc.m * sp.osc.omega * sp.ic.sigma;
  for (int k = 1; k <= 4; ++k) {
    const double cq = branch_center_q(k, t, sp);
    const double cp = branch_center_p(k, t, sp);
    if (cq - 8.0 * wq < grid.q.lo || cq + 8.0 * wq > grid.q.hi || cp - 8.0 * wp < grid.p.lo ||
        cp + 8.0 * wp > grid.p.hi) {
      std::ostringstream os;
      os << "hybrid_marginal_quadrature: window does not cover branch " << k << " center ("
         << cq << "," << cp << ") +- 8 widths";
      throw std::invalid_argument(os.str());
    }
  }
  const int nq = (grid.q.n % 2 == 1) ? grid.q.n : grid.q.n + 1;
  const int np = (grid.p.n % 2 == 1) ? grid.p.n : grid.p.n + 1;
  const double hq = (grid.q.hi - grid.q.lo) / static_cast<double>(nq - 1);
  const double hp = (grid.p.hi - grid.p.lo) / static_cast<double>(np - 1);
  ComplexMatrix4 rho;
  std::vector<std::array<Complex, 4>> row(static_cast<size_t>(np));
  for (int i = 0; i < nq; ++i) {
    const double q = grid.q.lo + hq * i;
    const double wi = (i == 0 || i == nq - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    for (int j = 0; j < np; ++j) {
      const double p = grid.p.lo + hp * j;
      for (int k = 0; k < 4; ++k)
        row[static_cast<size_t>(j)][k] = psi_hybrid(k + 1, q, p, t, sp, PhaseMode::WeakEquality);
    }
    for (int j = 0; j < np; ++j) {
      const double wj = (j == 0 || j == np - 1) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      const auto& v = row[static_cast<size_t>(j)];
      const double wgt = wi * wj;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) rho(a, b) += wgt * std::conj(v[a]) * v[b];
    }
  }
  rho = Complex(0.25 * hq * hp / 9.0) * rho;
  return SpinDensityMatrix::from_matrix(hermitized(rho));
}

namespace {

struct Mask {
  const Grid2D& grid;
  bool masked(double q, double p) const {
    const double dq = grid.q.step(), dp = grid.p.step();
    const double r2 = q * q + p * p;
    const double disc = 3.0 * std::max(dq, dp);
    return std::abs(q) < 3.0 * dq || std::abs(p) < 3.0 * dp || r2 < disc * disc;
  }
};

ResidualReport reduce_residual(const Field2D& res, const Mask* mask) {
  ResidualReport rep;
  size_t masked = 0, total = 0;
  for (int i = 0; i < res.grid.q.n; ++i) {
    for (int j = 0; j < res.grid.p.n; ++j) {
      if (!res.interior(i, j)) continue;
      ++total;
      if (mask && mask->masked(res.grid.q.node(i), res.grid.p.node(j))) {
        ++masked;
        continue;
      }
      rep.sup = std::max(rep.sup, std::abs(res.at(i, j)));
      ++rep.admissible;
    }
  }
  rep.masked_fraction = total > 0 ? static_cast<double>(masked) / total : 0.0;
  if (rep.admissible < 100)
    throw std::invalid_argument("residual: fewer than 100 admissible nodes");
  return rep;
}

}  // namespace

ResidualReport pde_residual_classical(const OscillatorParams& osc, const InitialCondition& ic,
                                      const Grid2D& grid, double t, double dt) {
  auto state = [&](double tt) {
    return Field2D::sample(grid, [&](double q, double p) {
      // the origin node is inside the mask bands; any value works there
      if (q == 0.0 && p == 0.0) return Complex(0.0);
      return classical_gaussian_state(q, p, tt, osc, ic, PhaseMode::Full);
    });
  };
  const Field2D fm = state(t - dt), f0 = state(t), fp = state(t + dt);
  const Field2D dfdt = time_derivative(fm, fp, dt);
  const Field2D dfdq = finite_diff(f0, Axis::Q, 1);
  const Field2D dfdp = finite_diff(f0, Axis::P, 1);

  Field2D res;
  res.grid = grid;
  res.values.assign(f0.values.size(), Complex(0.0));
  const double w = osc.omega;
  for (int i = 0; i < grid.q.n; ++i) {
    const double q = grid.q.node(i);
    for (int j = 0; j < grid.p.n; ++j) {
      const double p = grid.p.node(j);
      // O_{H0} = (-p^2/2m + m w^2 q^2 / 2) + i hbar (m w^2 q d_p - p/m d_q)
      const Complex op = (-p * p / (2.0 * osc.m) + 0.5 * osc.m * w * w * q * q) * f0.at(i, j) +
                         Complex(0, osc.hbar) *
                             (osc.m * w * w * q * dfdp.at(i, j) - p / osc.m * dfdq.at(i, j));
      res.at(i, j) = Complex(0, osc.hbar) * dfdt.at(i, j) - op;
    }
  }
  Mask mask{grid};
  return reduce_residual(res, &mask);
}

ResidualReport liouville_residual_of(const std::function<double(double, double, double)>& rho,
                                     const OscillatorParams& osc, const Grid2D& grid, double t,
                                     double dt) {
  auto density = [&](double tt) {
    return Field2D::sample(grid, [&](double q, double p) { return Complex(rho(q, p, tt)); });
  };
  const Field2D fm = density(t - dt), f0 = density(t), fp = density(t + dt);
  const Field2D dfdt = time_derivative(fm, fp, dt);
  const Field2D dfdq = finite_diff(f0, Axis::Q, 1);
  const Field2D dfdp = finite_diff(f0, Axis::P, 1);

  Field2D res;
  res.grid = grid;
  res.values.assign(f0.values.size(), Complex(0.0));
  const double w = osc.omega;
  for (int i = 0; i < grid.q.n; ++i) {
    const double q = grid.q.node(i);
    for (int j = 0; j < grid.p.n; ++j) {
      const double p = grid.p.node(j);
      // drho/dt + {rho, H0}, {rho,H0} = (p/m) d_q rho - m w^2 q d_p rho
      res.at(i, j) =
          dfdt.at(i, j) + (p / osc.m) * dfdq.at(i, j) - osc.m * w * w * q * dfdp.at(i, j);
    }
  }
  return reduce_residual(res, nullptr);
}

ResidualReport liouville_residual(const OscillatorParams& osc, const InitialCondition& ic,
                                  const Grid2D& grid, double t, double dt) {
  auto rho = [&](double q, double p, double tt) {
    const Complex v = classical_gaussian_state(q, p, tt, osc, ic, PhaseMode::WeakEquality);
    return std::norm(v);
  };
  return liouville_residual_of(rho, osc, grid, t, dt);
}

ExpectationResult expectation_vanhove(const PolyPhaseFunction& f, const OscillatorParams& osc,
                                      const InitialCondition& ic, const Grid2D& grid, double t) {
  const PhaseSpaceOperator op = vanhove_operator(f, Rational(osc.hbar));
  const ComplexPhasePoly c0 = op.c0(), cq = op.cq(), cp = op.cp();
  const double hb = osc.hbar;

  auto weak_integrand = [&](double q, double p) {
    const StateLogDerivatives d = classical_gaussian_log_derivatives(q, p, t, osc, ic);
    // weak equality: delta_tau -> 0, so dchi_dq -> p and dchi_dp -> 0
    const Complex dWq(d.dG_dq, p / hb);
    const Complex dWp(d.dG_dp, 0.0);
    return d.rho * (c0.eval(q, p) + cq.eval(q, p) * dWq + cp.eval(q, p) * dWp);
  };
  auto raw_integrand = [&](double q, double p) {
    const StateLogDerivatives d = classical_gaussian_log_derivatives(q, p, t, osc, ic);
    const Complex dWq(d.dG_dq, d.dchi_dq / hb);
    const Complex dWp(d.dG_dp, d.dchi_dp / hb);
    return d.rho * (c0.eval(q, p) + cq.eval(q, p) * dWq + cp.eval(q, p) * dWp);
  };

  ExpectationResult out;
  out.lhs = quadrature_2d(weak_integrand, grid);
  out.rhs = quadrature_2d([&](double q, double p) {
              const StateLogDerivatives d = classical_gaussian_log_derivatives(q, p, t, osc, ic);
              return Complex(d.rho * f.eval(q, p));
            },
                          grid)
                .real();

  // Raw diagnostic: the integrand is bounded across the tau branch cut (only
  // the delta_tau factor jumps), so it is integrated unmasked; the fraction of
  // branch-affected nodes is reported for reference.
  Mask mask{grid};
  size_t masked = 0, total = 0;
  out.lhs_raw = quadrature_2d(
      [&](double q, double p) {
        ++total;
        if (mask.masked(q, p)) ++masked;
        return raw_integrand(q, p);
      },
      grid);
  out.masked_fraction = total > 0 ? static_cast<double>(masked) / total : 0.0;
  return out;
}

}  // namespace hvh
