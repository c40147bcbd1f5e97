#include "hvh/verify.hpp"

#include "hvh/entanglement.hpp"
#include "hvh/numerics.hpp"
#include "hvh/oracle.hpp"
#include "hvh/sweep.hpp"
#include "hvh/vanhove_algebra.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace hvh {

namespace {

constexpr double kPi = std::numbers::pi;

PolyPhaseFunction random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  PolyPhaseFunction f;
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b) {
      const int c = coef(rng);
      if (c != 0) f.add_term(a, b, Rational(c) / den(rng));
    }
  return f;
}

ScenarioParams offset_scenario(double kappa) {
  RunConfig cfg;
  cfg.kappa = kappa;
  cfg.epsilon_tilde = 0.5;
  cfg.q0_tilde = 1.0;
  cfg.p0_tilde = 0.5;
  return scenario_from_config(cfg);
}

}  // namespace

std::vector<CheckResult> verify_algebra() {
  std::vector<CheckResult> out;

  // Isomorphism for all monomial pairs up to total degree 4, hbar in {1, 1/3}.
  {
    int failures = 0, cases = 0;
    for (const Rational& hb : {Rational(1), Rational(1, 3)}) {
      for (int a1 = 0; a1 <= 4; ++a1)
        for (int b1 = 0; a1 + b1 <= 4; ++b1)
          for (int a2 = 0; a2 <= 4; ++a2)
            for (int b2 = 0; a2 + b2 <= 4; ++b2) {
              ++cases;
              if (!check_isomorphism(PolyPhaseFunction::monomial(a1, b1, 1),
                                     PolyPhaseFunction::monomial(a2, b2, 1), hb))
                ++failures;
            }
    }
    out.push_back({"algebra/isomorphism-monomials(" + std::to_string(cases) + " cases)",
                   failures == 0, static_cast<double>(failures), 0.0});
  }

  // 100 random polynomial pairs of degree <= 3.
  {
    std::mt19937 rng(20250811);
    int failures = 0;
    for (int it = 0; it < 100; ++it) {
      const PolyPhaseFunction f = random_poly(rng, 3);
      const PolyPhaseFunction g = random_poly(rng, 3);
      if (!check_isomorphism(f, g, Rational(1))) ++failures;
    }
    out.push_back({"algebra/isomorphism-random(100 pairs)", failures == 0,
                   static_cast<double>(failures), 0.0});
  }

  // Commutator antisymmetry and the Jacobi identity on low-degree monomials.
  {
    int failures = 0;
    std::vector<PolyPhaseFunction> basis;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b) basis.push_back(PolyPhaseFunction::monomial(a, b, 1));
    std::vector<PhaseSpaceOperator> ops;
    for (const auto& f : basis) ops.push_back(vanhove_operator(f, Rational(1)));
    const PhaseSpaceOperator zero{Rational(1)};
    for (size_t i = 0; i < ops.size(); ++i)
      for (size_t j = i; j < ops.size(); ++j)
        if (!(commutator(ops[i], ops[j]) + commutator(ops[j], ops[i]) == zero)) ++failures;
    for (size_t i = 0; i < ops.size(); ++i)
      for (size_t j = i + 1; j < ops.size(); ++j)
        for (size_t k = j + 1; k < ops.size(); ++k) {
          const auto lhs = commutator(ops[i], commutator(ops[j], ops[k])) +
                           commutator(ops[j], commutator(ops[k], ops[i])) +
                           commutator(ops[k], commutator(ops[i], ops[j]));
          if (!(lhs == zero)) ++failures;
        }
    out.push_back({"algebra/antisymmetry+jacobi", failures == 0,
                   static_cast<double>(failures), 0.0});
  }

  // Non-product witnesses.
  {
    const Rational hb(1);
    PhaseSpaceOperator expect_q(hb);  // -hbar^2 d^2/dp^2
    expect_q.set_part(0, 2, RationalComplex{-hb * hb, 0} * ComplexPhasePoly(PolyPhaseFunction::constant(1)));
    const bool ok_q = power_gap(PolyPhaseFunction::q(), 2, hb) == expect_q;

    // (O_p)^2 - O_{p^2} = p^2 + 2 i hbar p d_q - hbar^2 d^2/dq^2
    PhaseSpaceOperator expect_p(hb);
    expect_p.set_part(0, 0, ComplexPhasePoly(PolyPhaseFunction::monomial(0, 2, 1)));
    expect_p.set_part(1, 0, RationalComplex{0, 2 * hb} * ComplexPhasePoly(PolyPhaseFunction::p()));
    expect_p.set_part(2, 0, RationalComplex{-hb * hb, 0} * ComplexPhasePoly(PolyPhaseFunction::constant(1)));
    const bool ok_p = power_gap(PolyPhaseFunction::p(), 2, hb) == expect_p;

    const bool ok_const = power_gap(PolyPhaseFunction::constant(1), 2, hb).is_zero();
    out.push_back({"algebra/power-gap-witnesses", ok_q && ok_p && ok_const,
                   static_cast<double>(!ok_q) + !ok_p + !ok_const, 0.0});
  }

  return out;
}

std::vector<CheckResult> verify_oracle(int grid_points, double tol) {
  std::vector<CheckResult> out;
  const ScenarioParams sp = offset_scenario(1.0);

  {
    const Grid1D win = quantum_window(sp, 4.0 * kPi, grid_points);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double wt = 4.0 * kPi * i / 99.0;
      const SpinDensityMatrix oracle = quantum_marginal_quadrature(wt, sp, win);
      const SpinDensityMatrix closed = assemble_density(rsu_quantum(wt, sp));
      worst = std::max(worst, max_abs_entry(oracle.matrix() - closed.matrix()));
    }
    out.push_back({"oracle/quantum-marginal(100 times)", worst <= tol, worst, tol});
  }

  {
    const int n = std::min(grid_points, 401);
    const double tol_h = 100.0 * tol;
    const Grid2D win = hybrid_window(sp, 4.0 * kPi, n);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double wt = 4.0 * kPi * i / 49.0;
      const SpinDensityMatrix oracle = hybrid_marginal_quadrature(wt, sp, win);
      const SpinDensityMatrix closed = assemble_density(rsu_hybrid(wt, sp));
      worst = std::max(worst, max_abs_entry(oracle.matrix() - closed.matrix()));
    }
    out.push_back({"oracle/hybrid-marginal(50 times)", worst <= tol_h, worst, tol_h});
  }

  return out;
}

std::vector<CheckResult> verify_pde(int grid_points, double tol) {
  std::vector<CheckResult> out;
  const OscillatorParams osc = OscillatorParams::create(1.0, 1.0, 1.0);
  const InitialCondition ic = make_initial_condition(osc, 1.0, 0.5, 1.0);
  const double t = 0.1, dt = 1e-4;

  auto window = [&](int n) { return transported_window(osc, ic, t, n, 3.5); };

  const ResidualReport pde1 = pde_residual_classical(osc, ic, window(grid_points), t, dt);
  out.push_back({"pde/residual(n=" + std::to_string(grid_points) + ")", pde1.sup <= tol,
                 pde1.sup, tol});

  const ResidualReport liou1 = liouville_residual(osc, ic, window(grid_points), t, dt);
  out.push_back({"pde/liouville-residual(n=" + std::to_string(grid_points) + ")",
                 liou1.sup <= tol, liou1.sup, tol});

  // Second-order convergence on halving the step (and dt).
  const ResidualReport pde2 =
      pde_residual_classical(osc, ic, window(2 * grid_points - 1), t, dt / 2.0);
  const double ratio = pde2.sup > 0.0 ? pde1.sup / pde2.sup : 0.0;
  out.push_back({"pde/convergence-x4", ratio >= 3.0 && ratio <= 5.0, ratio, 4.0});

  return out;
}

std::vector<CheckResult> verify_expectation(int grid_points, double tol) {
  std::vector<CheckResult> out;
  const OscillatorParams osc = OscillatorParams::create(1.0, 1.0, 1.0);
  const InitialCondition ic = make_initial_condition(osc, 1.0, 0.5, 1.0);
  const Grid2D win = classical_window(osc, ic, 0.0, grid_points);

  const auto H0 = PolyPhaseFunction::harmonic_hamiltonian(1, 1);
  const std::vector<std::pair<std::string, PolyPhaseFunction>> fs = {
      {"1", PolyPhaseFunction::constant(1)},
      {"q", PolyPhaseFunction::q()},
      {"p", PolyPhaseFunction::p()},
      {"qp", PolyPhaseFunction::monomial(1, 1, 1)},
      {"q^2", PolyPhaseFunction::monomial(2, 0, 1)},
      {"p^2", PolyPhaseFunction::monomial(0, 2, 1)},
      {"H0", H0}};

  double worst_gap = 0.0, worst_im = 0.0;
  for (const auto& [name, f] : fs) {
    const ExpectationResult r = expectation_vanhove(f, osc, ic, win, 0.0);
    worst_gap = std::max(worst_gap, std::abs(r.lhs - Complex(r.rhs)));
    worst_im = std::max(worst_im, std::abs(r.lhs.imag()));
  }
  out.push_back({"expectation/lhs-vs-rhs(7 observables)", worst_gap <= tol, worst_gap, tol});
  out.push_back({"expectation/imaginary-part", worst_im <= 1e-8, worst_im, 1e-8});

  // rhs against analytic Gaussian moments at t = 0.
  const double sq = ic.sigma * ic.sigma;  // position variance is sq/2
  const double sp2 = sq;                  // m=omega=1: momentum variance sq/2 as well
  const std::vector<std::pair<PolyPhaseFunction, double>> moments = {
      {PolyPhaseFunction::constant(1), 1.0},
      {PolyPhaseFunction::q(), ic.q0},
      {PolyPhaseFunction::p(), ic.p0},
      {PolyPhaseFunction::monomial(1, 1, 1), ic.q0 * ic.p0},
      {PolyPhaseFunction::monomial(2, 0, 1), ic.q0 * ic.q0 + 0.5 * sq},
      {PolyPhaseFunction::monomial(0, 2, 1), ic.p0 * ic.p0 + 0.5 * sp2},
      {H0, 0.5 * (ic.p0 * ic.p0 + ic.q0 * ic.q0) + 0.25 * (sq + sp2)}};
  double worst_mom = 0.0;
  for (const auto& [f, expect] : moments) {
    const ExpectationResult r = expectation_vanhove(f, osc, ic, win, 0.0);
    worst_mom = std::max(worst_mom, std::abs(r.rhs - expect));
  }
  out.push_back({"expectation/rhs-analytic-moments", worst_mom <= 1e-9, worst_mom, 1e-9});

  return out;
}

std::vector<CheckResult> verify_all(int grid_points, double tol) {
  std::vector<CheckResult> out = verify_algebra();
  for (auto&& c : verify_oracle(std::max(grid_points, 801), 1e-8)) out.push_back(c);
  for (auto&& c : verify_pde(std::max(grid_points, 201), 1e-3)) out.push_back(c);
  for (auto&& c : verify_expectation(std::max(grid_points, 401), 5e-3)) out.push_back(c);
  (void)tol;
  return out;
}

bool report_checks(const std::vector<CheckResult>& checks) {
  bool all = true;
  for (const CheckResult& c : checks) {
    std::printf("%s %-45s defect=%.6g tol=%.3g\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.defect, c.tolerance);
    all = all && c.pass;
  }
  return all;
}

}  // namespace hvh
