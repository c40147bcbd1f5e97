#include "hvh/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hvh {

namespace {

using C = Complex;

std::array<std::array<C, 2>, 2> pauli2(int i) {
  switch (i) {
    case 0: return {{{1, 0}, {0, 1}}};
    case 1: return {{{0, 1}, {1, 0}}};
    case 2: return {{{0, C(0, -1)}, {C(0, 1), 0}}};
    case 3: return {{{1, 0}, {0, -1}}};
  }
  throw std::invalid_argument("pauli index must be in 0..3");
}

}  // namespace

ComplexMatrix4 pauli_kron(int i, int j) {
  const auto a = pauli2(i), b = pauli2(j);
  ComplexMatrix4 m;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          m(2 * r1 + r2, 2 * c1 + c2) = a[r1][c1] * b[r2][c2];
  return m;
}

double purity(const SpinDensityMatrix& rho) {
  const ComplexMatrix4& m = rho.matrix();
  double s = 0.0;
  for (const auto& x : m.e) s += std::norm(x);  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  return s;
}

double purity_from_R(double R) {
  if (R < 0.0) throw std::invalid_argument("purity_from_R: R must be nonnegative");
  return (3.0 + 4.0 * std::exp(-R) + std::exp(-4.0 * R)) / 8.0;
}

ComplexMatrix4 spin_flip(const ComplexMatrix4& rho) {
  static const ComplexMatrix4 flip = pauli_kron(2, 2);
  return flip * rho.conjugate() * flip;
}

namespace {

ComplexMatrix4 matrix_sqrt_psd(const ComplexMatrix4& m) {
  const EigenSystem4 sys = hermitian_eigensystem_4(m);
  ComplexMatrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      C s = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double lam = std::max(sys.values[k], 0.0);
        s += sys.vectors(r, k) * std::sqrt(lam) * std::conj(sys.vectors(c, k));
      }
      out(r, c) = s;
    }
  return out;
}

}  // namespace

double concurrence(const SpinDensityMatrix& rho) {
  const ComplexMatrix4 flipped = spin_flip(rho.matrix());
  const ComplexMatrix4 root = matrix_sqrt_psd(rho.matrix());
  const ComplexMatrix4 M = root * flipped * root;
  auto eigs = hermitian_eigenvalues_4(M);
  // Structurally zero eigenvalues of M come back as O(eps) noise whose
  // square root would pollute the lambda differences at 1e-8; clamp at a
  // rank threshold relative to the largest eigenvalue.
  const double floor = 1e-12 * std::max(eigs[3], 0.0);
  std::array<double, 4> lam{};
  for (int k = 0; k < 4; ++k) {
    double v = eigs[k];
    if (v < -1e-10) {
      std::ostringstream os;
      os << "concurrence: eigenvalue " << v << " of sqrt(rho) rho~ sqrt(rho) below tolerance";
      throw std::runtime_error(os.str());
    }
    lam[k] = v <= floor ? 0.0 : std::sqrt(v);
  }
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

BlochFano bloch_fano_decompose(const ComplexMatrix4& rho) {
  BlochFano bf;
  for (int i = 1; i <= 3; ++i) {
    bf.a1[i - 1] = (rho * pauli_kron(i, 0)).trace().real();
    bf.a2[i - 1] = (rho * pauli_kron(0, i)).trace().real();
    for (int j = 1; j <= 3; ++j) bf.t[i - 1][j - 1] = (rho * pauli_kron(i, j)).trace().real();
  }
  return bf;
}

ComplexMatrix4 bloch_fano_recompose(const BlochFano& bf) {
  ComplexMatrix4 m = ComplexMatrix4::identity();
  for (int i = 1; i <= 3; ++i) {
    m = m + bf.a1[i - 1] * pauli_kron(i, 0);
    m = m + bf.a2[i - 1] * pauli_kron(0, i);
    for (int j = 1; j <= 3; ++j) m = m + bf.t[i - 1][j - 1] * pauli_kron(i, j);
  }
  return Complex(0.25) * m;
}

}  // namespace hvh
