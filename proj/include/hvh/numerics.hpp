// Uniform grids, composite-Simpson quadrature for complex integrands,
// central finite differences on sampled fields, and a 4x4 complex
// Hermitian eigensolver (cyclic Jacobi). Everything here is a pure
// function of its inputs and safe for concurrent use.
#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace hvh {

using Complex = std::complex<double>;

struct Grid1D {
  double lo = 0.0;
  double hi = 1.0;
  int n = 3;  // number of nodes, uniformly spaced, node(0)=lo, node(n-1)=hi

  static Grid1D over(double lo, double hi, int n);

  double step() const { return (hi - lo) / static_cast<double>(n - 1); }
  double node(int i) const { return lo + step() * static_cast<double>(i); }
};

struct Grid2D {
  Grid1D q;
  Grid1D p;
};

// Composite Simpson over [lo,hi]. If the grid has an even node count the
// integrand is resampled on n+1 uniform nodes so the rule stays valid on
// the exact interval. Throws std::domain_error naming the offending node
// if the integrand returns a non-finite value.
Complex quadrature_1d(const std::function<Complex(double)>& f, const Grid1D& grid);

// Tensor-product Simpson over grid.q x grid.p.
Complex quadrature_2d(const std::function<Complex(double, double)>& f, const Grid2D& grid);

enum class Axis { Q, P };

// Complex field sampled on a Grid2D, q-major storage: values[iq * n_p + ip].
struct Field2D {
  Grid2D grid;
  std::vector<Complex> values;

  static Field2D sample(const Grid2D& grid, const std::function<Complex(double, double)>& f);

  Complex& at(int iq, int ip) { return values[static_cast<size_t>(iq) * grid.p.n + ip]; }
  const Complex& at(int iq, int ip) const {
    return values[static_cast<size_t>(iq) * grid.p.n + ip];
  }
  // Interior in the stencil sense: one node in from every edge.
  bool interior(int iq, int ip) const {
    return iq > 0 && iq < grid.q.n - 1 && ip > 0 && ip < grid.p.n - 1;
  }
};

// Central finite difference of order 1 or 2 along the given axis.
// O(step^2) at interior nodes; boundary nodes are left as zero and must be
// excluded from norms via Field2D::interior. Requires n >= 5 on the axis.
Field2D finite_diff(const Field2D& field, Axis axis, int order);

// Central time derivative from samples at t-dt and t+dt.
Field2D time_derivative(const Field2D& minus, const Field2D& plus, double dt);

struct ComplexMatrix4 {
  std::array<Complex, 16> e{};  // row-major

  Complex& operator()(int r, int c) { return e[static_cast<size_t>(4 * r + c)]; }
  const Complex& operator()(int r, int c) const { return e[static_cast<size_t>(4 * r + c)]; }

  static ComplexMatrix4 identity();
  static ComplexMatrix4 zero() { return {}; }

  ComplexMatrix4 adjoint() const;
  ComplexMatrix4 conjugate() const;
  Complex trace() const;

  friend ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b);
  friend ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b);
  friend ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b);
  friend ComplexMatrix4 operator*(Complex s, const ComplexMatrix4& a);
};

double max_abs_entry(const ComplexMatrix4& m);

struct EigenSystem4 {
  std::array<double, 4> values{};  // ascending
  ComplexMatrix4 vectors;          // columns are the eigenvectors
};

// Eigenvalues of the Hermitized input (m+m^dagger)/2, ascending. Throws
// std::invalid_argument reporting the defect if max|m - m^dagger| > 1e-10.
std::array<double, 4> hermitian_eigenvalues_4(const ComplexMatrix4& m);

EigenSystem4 hermitian_eigensystem_4(const ComplexMatrix4& m);

}  // namespace hvh
