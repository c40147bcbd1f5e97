#include "hvh/spin_oscillator.hpp"

#include "hvh/entanglement.hpp"
#include "hvh/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hvh;

namespace {

constexpr double kPi = std::numbers::pi;

ScenarioParams natural_scenario(double kappa, double eps = 0.0, double q0 = 0.0, double p0 = 0.0,
                                double sigma = 1.0) {
  ScenarioParams sp;
  sp.osc = OscillatorParams::create(1.0, 1.0, 1.0);
  sp.g = std::sqrt(kappa);
  sp.epsilon = eps;
  sp.ic = make_initial_condition(sp.osc, q0, p0, sigma);
  return sp;
}

}  // namespace

TEST_CASE("kappa and branch constants") {
  const ScenarioParams sp = natural_scenario(0.5, 0.3);
  CHECK(sp.kappa() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sp.epsilon_k(1) == 0.3);
  CHECK(sp.epsilon_k(2) == 0.0);
  CHECK(sp.epsilon_k(4) == -0.3);
  CHECK(sp.g_k(1) == sp.g);
  CHECK(sp.g_k(4) == -sp.g);
  CHECK_THROWS_AS(sp.g_k(5), std::invalid_argument);
}

TEST_CASE("rsu_quantum: fixed values") {
  SUBCASE("t = 0 with p0 = 0") {
    const ScenarioParams sp = natural_scenario(1.0);
    const RSU r = rsu_quantum(0.0, sp);
    CHECK(r.R == 0.0);
    CHECK(r.S == 0.0);
    CHECK(r.U == 0.0);
  }
  SUBCASE("wt = pi, kappa = 1/2") {
    const ScenarioParams sp = natural_scenario(0.5);
    const RSU r = rsu_quantum(kPi, sp);
    CHECK(r.R == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.S == doctest::Approx(-kPi / 4).epsilon(1e-14));
    CHECK(r.U == doctest::Approx(0.0));
  }
  SUBCASE("wt = 2pi, kappa = 1") {
    const ScenarioParams sp = natural_scenario(1.0);
    const RSU r = rsu_quantum(2 * kPi, sp);
    CHECK(std::abs(r.R) < 1e-14);
    CHECK(r.S == doctest::Approx(-kPi).epsilon(1e-14));
    CHECK(std::abs(r.U) < 1e-14);
  }
}

TEST_CASE("rsu_hybrid: fixed values") {
  SUBCASE("t = 0 at natural width") {
    const ScenarioParams sp = natural_scenario(1.0);
    const RSU r = rsu_hybrid(0.0, sp);
    CHECK(r.R == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(r.S == 0.0);
    CHECK(r.U == 0.0);
  }
  SUBCASE("wt = 2pi: oscillatory part vanishes") {
    const ScenarioParams sp = natural_scenario(0.7);
    const RSU r = rsu_hybrid(2 * kPi, sp);
    CHECK(r.R == doctest::Approx(0.7 / 8).epsilon(1e-12));
    CHECK(r.S == doctest::Approx(-kPi * 0.7).epsilon(1e-12));
  }
  SUBCASE("U at t=0 coincides with the quantum value") {
    const ScenarioParams sp = natural_scenario(0.9, 0.4, 1.1, -0.6);
    CHECK(rsu_hybrid(0.0, sp).U == doctest::Approx(rsu_quantum(0.0, sp).U).epsilon(1e-14));
    CHECK(rsu_quantum(0.0, sp).U == doctest::Approx(-sp.g * sp.ic.p0).epsilon(1e-14));
  }
}

TEST_CASE("R and S never depend on epsilon, q0, p0") {
  for (double eps : {0.0, 0.4, -1.0, 2.5, 7.0}) {
    for (double q0 : {0.0, 1.0, -2.0, 0.3, 5.0}) {
      for (double p0 : {0.0, -0.7, 1.5, 3.0, -4.0}) {
        const ScenarioParams sp = natural_scenario(0.8, eps, q0, p0);
        const ScenarioParams ref = natural_scenario(0.8);
        for (double wt : {0.5, 2.0, 5.0}) {
          CHECK(rsu_quantum(wt, sp).R == rsu_quantum(wt, ref).R);
          CHECK(rsu_quantum(wt, sp).S == rsu_quantum(wt, ref).S);
          CHECK(rsu_hybrid(wt, sp).R == rsu_hybrid(wt, ref).R);
          CHECK(rsu_hybrid(wt, sp).S == rsu_hybrid(wt, ref).S);
        }
      }
    }
  }
}

TEST_CASE("R periodicity and positivity") {
  const ScenarioParams sp = natural_scenario(0.6);
  const double floor = 0.125 * sp.g * sp.g;  // g^2 Sigma^2 / (8 w^2 hbar^2) at natural units
  for (int i = 0; i <= 200; ++i) {
    const double wt = 8 * kPi * i / 200.0;
    const double Rq = rsu_quantum(wt, sp).R;
    CHECK(Rq >= 0.0);
    CHECK(rsu_quantum(wt + 2 * kPi, sp).R == doctest::Approx(Rq).epsilon(1e-10));
    CHECK(rsu_hybrid(wt, sp).R >= floor - 1e-15);
  }
}

TEST_CASE("assemble_density: forced values") {
  SUBCASE("R=S=U=0 gives the |++> projector, all entries 1/4") {
    const SpinDensityMatrix rho = assemble_density(RSU{0, 0, 0});
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        CHECK(rho(r, c).real() == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(std::abs(rho(r, c).imag()) < 1e-15);
      }
  }
  SUBCASE("R -> infinity keeps only the exchange coherences") {
    const SpinDensityMatrix rho = assemble_density(RSU{60.0, -0.4, 1.3});
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const double expect = (r == c || (r == 1 && c == 2) || (r == 2 && c == 1)) ? 0.25 : 0.0;
        CHECK(std::abs(rho(r, c) - Complex(expect)) < 1e-12);
      }
  }
  SUBCASE("negative R rejected") { CHECK_THROWS_AS(assemble_density(RSU{-0.1, 0, 0}), std::invalid_argument); }
}

TEST_CASE("assemble_density: invariants across parameters") {
  for (double R : {0.0, 0.05, 0.7, 2.0}) {
    for (double S : {0.0, -0.9, 1.7}) {
      for (double U : {0.0, 0.6, -2.2}) {
        const SpinDensityMatrix rho = assemble_density(RSU{R, S, U});
        const ComplexMatrix4& m = rho.matrix();
        CHECK(std::abs(m.trace() - Complex(1.0)) < 1e-14);
        for (int d = 0; d < 4; ++d) CHECK(m(d, d) == Complex(0.25));
        CHECK(hermitian_eigenvalues_4(m)[0] >= -1e-10);
        CHECK(max_abs_entry(m - m.adjoint()) < 1e-15);
      }
    }
  }
}

TEST_CASE("g = 0 stays pure with local phase only") {
  const ScenarioParams sp = natural_scenario(0.0, 0.8, 0.5, -0.2);
  for (double wt : {0.0, 1.3, 4.0}) {
    const RSU rq = rsu_quantum(wt, sp);
    CHECK(rq.R == 0.0);
    CHECK(rq.S == 0.0);
    CHECK(rq.U == doctest::Approx(2 * sp.epsilon * wt).epsilon(1e-14));
    const RSU rh = rsu_hybrid(wt, sp);
    CHECK(rh.R == 0.0);
    CHECK(rh.S == 0.0);
    CHECK(purity(assemble_density(rq)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(purity(assemble_density(rh)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("psi_quantum: branch 2 is the bare coherent state") {
  const ScenarioParams sp = natural_scenario(0.8, 0.3, 0.9, -0.5);
  for (double q : {-0.5, 0.6, 1.4}) {
    for (double t : {0.0, 0.8}) {
      CHECK(std::abs(psi_quantum(2, q, t, sp) -
                     coherent_state(q, t, sp.osc, sp.ic.q0, sp.ic.p0)) < 1e-15);
    }
  }
}

TEST_CASE("psi_quantum: displacement cancels at t=0 up to a phase") {
  const ScenarioParams sp = natural_scenario(1.0, 0.0, 0.7, 0.4);
  // |psi_1(q,0)| is the unshifted Gaussian envelope centered at q0
  for (double q : {0.0, 0.7, 1.5}) {
    const double env = std::pow(1.0 / kPi, 0.25) * std::exp(-0.5 * (q - sp.ic.q0) * (q - sp.ic.q0));
    CHECK(std::abs(psi_quantum(1, q, 0.0, sp)) == doctest::Approx(env).epsilon(1e-13));
  }
}

TEST_CASE("psi_quantum: each branch stays normalized") {
  const ScenarioParams sp = natural_scenario(1.0, 0.5, 1.0, 0.5);
  const Grid1D g = Grid1D::over(-14.0, 14.0, 1001);
  for (int k = 1; k <= 4; ++k) {
    for (double wt : {0.0, 1.0, kPi}) {
      const Complex n = quadrature_1d(
          [&](double q) { return Complex(std::norm(psi_quantum(k, q, wt, sp))); }, g);
      CHECK(std::abs(n - Complex(1.0)) < 1e-10);
    }
  }
}

TEST_CASE("psi_hybrid: branch 3 is the unshifted Gaussian state") {
  const ScenarioParams sp = natural_scenario(0.7, 0.2, 0.6, -0.3);
  for (double q : {-0.4, 0.8}) {
    for (double p : {0.5, -1.1}) {
      CHECK(std::abs(psi_hybrid(3, q, p, 0.7, sp, PhaseMode::WeakEquality) -
                     classical_gaussian_state(q, p, 0.7, sp.osc, sp.ic,
                                              PhaseMode::WeakEquality)) < 1e-15);
    }
  }
}

TEST_CASE("psi_hybrid: each branch stays normalized") {
  const ScenarioParams sp = natural_scenario(1.0, 0.5, 1.0, 0.5);
  const Grid2D g{Grid1D::over(-12.0, 12.0, 401), Grid1D::over(-12.0, 12.0, 401)};
  for (int k = 1; k <= 4; ++k) {
    const Complex n = quadrature_2d(
        [&](double q, double p) {
          return Complex(std::norm(psi_hybrid(k, q, p, 0.9, sp, PhaseMode::WeakEquality)));
        },
        g);
    CHECK(std::abs(n - Complex(1.0)) < 1e-9);
  }
}

TEST_CASE("psi_hybrid: weak phase difference between branches 1 and 4 at t=0") {
  // eta(q+s,p) - eta(q-s,p) = s p, so the branch phases differ by s p / hbar.
  const ScenarioParams sp = natural_scenario(0.9, 0.0, 0.4, 0.3);
  const double s = sp.shift_k(1);
  for (double q : {0.2, 1.0}) {
    for (double p : {0.6, -0.8}) {
      const Complex r = psi_hybrid(1, q, p, 0.0, sp, PhaseMode::WeakEquality) /
                        psi_hybrid(4, q, p, 0.0, sp, PhaseMode::WeakEquality);
      const double expected = s * p;  // phase(k=1) - phase(k=4), amplitude ratio != 1
      CHECK(std::arg(r) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}
