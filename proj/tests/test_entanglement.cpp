#include "hvh/entanglement.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace hvh;

namespace {

constexpr double kPi = std::numbers::pi;

SpinDensityMatrix plus_plus_projector() { return assemble_density(RSU{0, 0, 0}); }

SpinDensityMatrix maximally_mixed() {
  ComplexMatrix4 m;
  for (int d = 0; d < 4; ++d) m(d, d) = 0.25;
  return SpinDensityMatrix::from_matrix(m);
}

SpinDensityMatrix bell_phi_plus() {
  // (|uu> + |dd>)/sqrt(2)
  ComplexMatrix4 m;
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return SpinDensityMatrix::from_matrix(m);
}

std::mt19937& rng() {
  static std::mt19937 r(2027);
  return r;
}

RSU random_rsu() {
  std::uniform_real_distribution<double> uR(0.0, 2.0), uSU(-3.0, 3.0);
  return RSU{uR(rng()), uSU(rng()), uSU(rng())};
}

// Random SU(2) as a 2x2 complex matrix.
std::array<std::array<Complex, 2>, 2> random_su2() {
  std::normal_distribution<double> n(0.0, 1.0);
  double a = n(rng()), b = n(rng()), c = n(rng()), d = n(rng());
  const double norm = std::sqrt(a * a + b * b + c * c + d * d);
  a /= norm;
  b /= norm;
  c /= norm;
  d /= norm;
  return {{{Complex(a, b), Complex(c, d)}, {Complex(-c, d), Complex(a, -b)}}};
}

ComplexMatrix4 kron2(const std::array<std::array<Complex, 2>, 2>& u,
                     const std::array<std::array<Complex, 2>, 2>& v) {
  ComplexMatrix4 m;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2) m(2 * r1 + r2, 2 * c1 + c2) = u[r1][c1] * v[r2][c2];
  return m;
}

}  // namespace

TEST_CASE("purity: pure, mixed, and the closed form") {
  CHECK(purity(plus_plus_projector()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(purity(maximally_mixed()) == doctest::Approx(0.25).epsilon(1e-14));

  const double p = purity(assemble_density(RSU{0.125, 0.3, -0.7}));
  const double expect = (3.0 + 4.0 * std::exp(-0.125) + std::exp(-0.5)) / 8.0;
  CHECK(p == doctest::Approx(expect).epsilon(1e-12));
  CHECK(p == doctest::Approx(0.8920647837563768).epsilon(1e-12));
}

TEST_CASE("purity_from_R: limits and closed-form equivalence") {
  CHECK(purity_from_R(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(purity_from_R(50.0) == doctest::Approx(3.0 / 8.0).epsilon(1e-12));
  CHECK_THROWS_AS(purity_from_R(-0.2), std::invalid_argument);

  for (int it = 0; it < 50; ++it) {
    const RSU r = random_rsu();
    CHECK(purity(assemble_density(r)) == doctest::Approx(purity_from_R(r.R)).epsilon(1e-12));
  }
}

TEST_CASE("spin_flip: fixed points and Bloch-vector flip") {
  CHECK(max_abs_entry(spin_flip(maximally_mixed().matrix()) - maximally_mixed().matrix()) <
        1e-15);

  // |++> flips to |--> : alternating-sign 1/4 entries
  const ComplexMatrix4 f = spin_flip(plus_plus_projector().matrix());
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const int parity = ((r >> 1) + (r & 1) + (c >> 1) + (c & 1)) % 2;
      CHECK(f(r, c).real() == doctest::Approx(parity ? -0.25 : 0.25).epsilon(1e-14));
      CHECK(std::abs(f(r, c).imag()) < 1e-15);
    }

  // flipping an assembled state negates both Bloch vectors, keeps T
  for (int it = 0; it < 10; ++it) {
    const RSU r = random_rsu();
    const ComplexMatrix4 rho = assemble_density(r).matrix();
    const BlochFano bf = bloch_fano_decompose(rho);
    const BlochFano bff = bloch_fano_decompose(spin_flip(rho));
    for (int i = 0; i < 3; ++i) {
      CHECK(bff.a1[i] == doctest::Approx(-bf.a1[i]).epsilon(1e-13));
      CHECK(bff.a2[i] == doctest::Approx(-bf.a2[i]).epsilon(1e-13));
      for (int j = 0; j < 3; ++j)
        CHECK(bff.t[i][j] == doctest::Approx(bf.t[i][j]).epsilon(1e-13));
    }
  }

  // purity is invariant under the flip
  for (int it = 0; it < 5; ++it) {
    const RSU r = random_rsu();
    const SpinDensityMatrix rho = assemble_density(r);
    const SpinDensityMatrix flipped = SpinDensityMatrix::from_matrix(spin_flip(rho.matrix()));
    CHECK(std::abs(purity(rho) - purity(flipped)) < 1e-14);
  }
}

TEST_CASE("concurrence: benchmark states") {
  CHECK(concurrence(plus_plus_projector()) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(concurrence(bell_phi_plus()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence(maximally_mixed()) == doctest::Approx(0.0).epsilon(1e-12));

  // R -> infinity assembled state is separable Bell-diagonal
  CHECK(concurrence(assemble_density(RSU{60.0, 0.9, -1.4})) == doctest::Approx(0.0));
}

TEST_CASE("concurrence: pure assembled states give |sin S|") {
  for (double S : {0.0, -0.3, -kPi / 4, -kPi / 2, 1.2, -2.8}) {
    for (double U : {0.0, 0.7, -1.9}) {
      const double c = concurrence(assemble_density(RSU{0.0, S, U}));
      CHECK(c == doctest::Approx(std::abs(std::sin(S))).epsilon(1e-10));
    }
  }
}

TEST_CASE("concurrence: range and local-unitary invariance") {
  for (int it = 0; it < 20; ++it) {
    const RSU r = random_rsu();
    const SpinDensityMatrix rho = assemble_density(r);
    const double c = concurrence(rho);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
    const ComplexMatrix4 u = kron2(random_su2(), random_su2());
    const ComplexMatrix4 rotated = u * rho.matrix() * u.adjoint();
    const double c2 = concurrence(SpinDensityMatrix::from_matrix(rotated));
    CHECK(std::abs(c - c2) < 1e-10);
  }
}

TEST_CASE("concurrence: depends only on (R, S) for assembled states") {
  std::uniform_real_distribution<double> uU(-5.0, 5.0);
  for (const auto& [R, S] : {std::pair{0.2, -0.8}, {1.1, 0.45}}) {
    const double base = concurrence(assemble_density(RSU{R, S, 0.0}));
    for (int it = 0; it < 10; ++it) {
      const double c = concurrence(assemble_density(RSU{R, S, uU(rng())}));
      CHECK(std::abs(c - base) < 1e-10);
    }
  }
}

TEST_CASE("concurrence: Hermitian route matches the rho*rho~ spectrum") {
  // The lambda_i^2 from sqrt(rho) rho~ sqrt(rho) are the eigenvalues of
  // rho rho~; compare through trace powers of the non-Hermitian product.
  for (int it = 0; it < 10; ++it) {
    const RSU r = random_rsu();
    const SpinDensityMatrix rho = assemble_density(r);
    const ComplexMatrix4 prod = rho.matrix() * spin_flip(rho.matrix());

    const ComplexMatrix4 root = [&] {
      const EigenSystem4 sys = hermitian_eigensystem_4(rho.matrix());
      ComplexMatrix4 out;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          Complex s = 0.0;
          for (int k = 0; k < 4; ++k)
            s += sys.vectors(a, k) * std::sqrt(std::max(sys.values[k], 0.0)) *
                 std::conj(sys.vectors(b, k));
          out(a, b) = s;
        }
      return out;
    }();
    const ComplexMatrix4 M = root * spin_flip(rho.matrix()) * root;
    const auto lam2 = hermitian_eigenvalues_4(M);

    ComplexMatrix4 pk = prod;
    for (int k = 1; k <= 4; ++k) {
      double tr_lam = 0.0;
      for (double v : lam2) tr_lam += std::pow(std::max(v, 0.0), k);
      CHECK(pk.trace().real() == doctest::Approx(tr_lam).epsilon(1e-9));
      CHECK(std::abs(pk.trace().imag()) < 1e-12);
      pk = pk * prod;
    }
  }
}

TEST_CASE("bloch_fano_decompose: named values") {
  SUBCASE("maximally mixed: everything zero") {
    const BlochFano bf = bloch_fano_decompose(maximally_mixed().matrix());
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(bf.a1[i]) < 1e-15);
      CHECK(std::abs(bf.a2[i]) < 1e-15);
      for (int j = 0; j < 3; ++j) CHECK(std::abs(bf.t[i][j]) < 1e-15);
    }
  }
  SUBCASE("|uu><uu|") {
    ComplexMatrix4 m;
    m(0, 0) = 1.0;
    const BlochFano bf = bloch_fano_decompose(m);
    CHECK(bf.a1[2] == doctest::Approx(1.0));
    CHECK(bf.a2[2] == doctest::Approx(1.0));
    CHECK(bf.t[2][2] == doctest::Approx(1.0));
    CHECK(std::abs(bf.a1[0]) + std::abs(bf.a1[1]) < 1e-15);
    CHECK(std::abs(bf.t[0][0]) + std::abs(bf.t[0][1]) + std::abs(bf.t[1][0]) < 1e-15);
  }
  SUBCASE("assembled states: equal Bloch vectors, T block from a") {
    for (int it = 0; it < 20; ++it) {
      const RSU r = random_rsu();
      const BlochFano bf = bloch_fano_decompose(assemble_density(r).matrix());
      // both transverse Bloch vectors equal cos(S) e^{-R/2} (cos U/2, -sin U/2)
      const double mag = std::exp(-r.R / 2) * std::cos(r.S);
      CHECK(bf.a1[0] == doctest::Approx(mag * std::cos(r.U / 2)).epsilon(1e-12));
      CHECK(bf.a1[1] == doctest::Approx(-mag * std::sin(r.U / 2)).epsilon(1e-12));
      for (int i = 0; i < 3; ++i) CHECK(bf.a1[i] == doctest::Approx(bf.a2[i]).epsilon(1e-12));
      CHECK(std::abs(bf.a1[2]) < 1e-14);
      // correlation block carries a = e^{-2R - iU}
      const double rea = std::exp(-2 * r.R) * std::cos(r.U);
      const double ima = -std::exp(-2 * r.R) * std::sin(r.U);
      CHECK(bf.t[0][0] == doctest::Approx(0.5 * (1 + rea)).epsilon(1e-12));
      CHECK(bf.t[1][1] == doctest::Approx(0.5 * (1 - rea)).epsilon(1e-12));
      CHECK(bf.t[0][1] == doctest::Approx(0.5 * ima).epsilon(1e-12));
      CHECK(bf.t[1][0] == doctest::Approx(0.5 * ima).epsilon(1e-12));
      CHECK(std::abs(bf.t[2][2]) < 1e-14);
    }
  }
}

TEST_CASE("bloch_fano round trip reproduces the matrix") {
  for (int it = 0; it < 20; ++it) {
    const RSU r = random_rsu();
    const ComplexMatrix4 rho = assemble_density(r).matrix();
    const ComplexMatrix4 rec = bloch_fano_recompose(bloch_fano_decompose(rho));
    CHECK(max_abs_entry(rec - rho) < 1e-12);
  }
}

TEST_CASE("invalid density matrices are rejected") {
  ComplexMatrix4 bad = ComplexMatrix4::identity();  // trace 4
  CHECK_THROWS_AS(SpinDensityMatrix::from_matrix(bad), std::invalid_argument);

  ComplexMatrix4 neg;  // trace 1 but indefinite
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(SpinDensityMatrix::from_matrix(neg), std::invalid_argument);
}
