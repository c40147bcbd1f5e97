// Mixedness and entanglement measures on two-qubit density matrices:
// purity, the sigma2 x sigma2 spin flip, Wootters concurrence, and the
// Bloch-Fano decomposition.
#pragma once

#include "hvh/numerics.hpp"
#include "hvh/spin_oscillator.hpp"

#include <array>

namespace hvh {

// Pauli tensor products in the |uu>,|ud>,|du>,|dd> basis; i,j in 1..3.
ComplexMatrix4 pauli_kron(int i, int j);  // sigma_i x sigma_j (0 means identity)

// tr(rho^2), in [1/4, 1] for valid two-qubit states.
double purity(const SpinDensityMatrix& rho);

// Closed form (3 + 4 e^{-R} + e^{-4R}) / 8; the purity of every state
// assembled from (R,S,U) depends on R alone.
double purity_from_R(double R);

// (sigma2 x sigma2) rho^* (sigma2 x sigma2); accepts any 4x4 matrix.
ComplexMatrix4 spin_flip(const ComplexMatrix4& rho);

// Wootters concurrence: lambda_i are the square roots of the eigenvalues of
// rho rho~ in descending order, computed through the Hermitian form
// sqrt(rho) rho~ sqrt(rho). Eigenvalue noise above -1e-10 is clamped to 0;
// anything below raises std::runtime_error.
double concurrence(const SpinDensityMatrix& rho);

struct BlochFano {
  std::array<double, 3> a1{};                 // tr(rho sigma_i x I)
  std::array<double, 3> a2{};                 // tr(rho I x sigma_i)
  std::array<std::array<double, 3>, 3> t{};   // tr(rho sigma_i x sigma_j)
};

// Pre: Hermitian unit-trace input. The recomposition below reproduces the
// source matrix to machine precision.
BlochFano bloch_fano_decompose(const ComplexMatrix4& rho);

ComplexMatrix4 bloch_fano_recompose(const BlochFano& bf);

}  // namespace hvh
