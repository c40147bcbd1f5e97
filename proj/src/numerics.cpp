#include "hvh/numerics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hvh {

Grid1D Grid1D::over(double lo, double hi, int n) {
  if (!(lo < hi)) throw std::invalid_argument("Grid1D: lo must be < hi");
  if (n < 3) throw std::invalid_argument("Grid1D: need at least 3 nodes");
  return Grid1D{lo, hi, n};
}

namespace {

void check_finite(Complex v, double x, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os << "quadrature: non-finite " << what << " sample at node " << x;
    throw std::domain_error(os.str());
  }
}

// Simpson weights 1,4,2,...,2,4,1 over an odd node count.
double simpson_weight(int i, int n) {
  if (i == 0 || i == n - 1) return 1.0;
  return (i % 2 == 1) ? 4.0 : 2.0;
}

}  // namespace

Complex quadrature_1d(const std::function<Complex(double)>& f, const Grid1D& grid) {
  // Simpson needs an even interval count; resample on n+1 nodes otherwise.
  const int n = (grid.n % 2 == 1) ? grid.n : grid.n + 1;
  const double h = (grid.hi - grid.lo) / static_cast<double>(n - 1);
  Complex acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = grid.lo + h * i;
    const Complex v = f(x);
    check_finite(v, x, "integrand");
    acc += simpson_weight(i, n) * v;
  }
  return acc * (h / 3.0);
}

Complex quadrature_2d(const std::function<Complex(double, double)>& f, const Grid2D& grid) {
  const int nq = (grid.q.n % 2 == 1) ? grid.q.n : grid.q.n + 1;
  const int np = (grid.p.n % 2 == 1) ? grid.p.n : grid.p.n + 1;
  const double hq = (grid.q.hi - grid.q.lo) / static_cast<double>(nq - 1);
  const double hp = (grid.p.hi - grid.p.lo) / static_cast<double>(np - 1);
  Complex acc = 0.0;
  for (int i = 0; i < nq; ++i) {
    const double x = grid.q.lo + hq * i;
    const double wq = simpson_weight(i, nq);
    Complex row = 0.0;
    for (int j = 0; j < np; ++j) {
      const double y = grid.p.lo + hp * j;
      const Complex v = f(x, y);
      check_finite(v, x, "integrand");
      row += simpson_weight(j, np) * v;
    }
    acc += wq * row;
  }
  return acc * (hq * hp / 9.0);
}

Field2D Field2D::sample(const Grid2D& grid, const std::function<Complex(double, double)>& f) {
  Field2D out;
  out.grid = grid;
  out.values.resize(static_cast<size_t>(grid.q.n) * grid.p.n);
  for (int i = 0; i < grid.q.n; ++i)
    for (int j = 0; j < grid.p.n; ++j) out.at(i, j) = f(grid.q.node(i), grid.p.node(j));
  return out;
}

Field2D finite_diff(const Field2D& field, Axis axis, int order) {
  const int n_axis = axis == Axis::Q ? field.grid.q.n : field.grid.p.n;
  if (n_axis < 5) throw std::invalid_argument("finite_diff: need at least 5 nodes along axis");
  if (order != 1 && order != 2) throw std::invalid_argument("finite_diff: order must be 1 or 2");
  const double h = axis == Axis::Q ? field.grid.q.step() : field.grid.p.step();
  Field2D out;
  out.grid = field.grid;
  out.values.assign(field.values.size(), Complex(0.0, 0.0));
  const int nq = field.grid.q.n, np = field.grid.p.n;
  for (int i = 0; i < nq; ++i) {
    for (int j = 0; j < np; ++j) {
      const int k = axis == Axis::Q ? i : j;
      if (k == 0 || k == n_axis - 1) continue;  // boundary stays flagged (zero)
      const Complex& fm = axis == Axis::Q ? field.at(i - 1, j) : field.at(i, j - 1);
      const Complex& fp = axis == Axis::Q ? field.at(i + 1, j) : field.at(i, j + 1);
      if (order == 1) {
        out.at(i, j) = (fp - fm) / (2.0 * h);
      } else {
        out.at(i, j) = (fp - 2.0 * field.at(i, j) + fm) / (h * h);
      }
    }
  }
  return out;
}

Field2D time_derivative(const Field2D& minus, const Field2D& plus, double dt) {
  if (minus.values.size() != plus.values.size())
    throw std::invalid_argument("time_derivative: slice size mismatch");
  Field2D out;
  out.grid = plus.grid;
  out.values.resize(plus.values.size());
  for (size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = (plus.values[k] - minus.values[k]) / (2.0 * dt);
  return out;
}

ComplexMatrix4 ComplexMatrix4::identity() {
  ComplexMatrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix4 ComplexMatrix4::adjoint() const {
  ComplexMatrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(c, r));
  return m;
}

ComplexMatrix4 ComplexMatrix4::conjugate() const {
  ComplexMatrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(r, c));
  return m;
}

Complex ComplexMatrix4::trace() const {
  return e[0] + e[5] + e[10] + e[15];
}

ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 m;
  for (size_t k = 0; k < 16; ++k) m.e[k] = a.e[k] + b.e[k];
  return m;
}

ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 m;
  for (size_t k = 0; k < 16; ++k) m.e[k] = a.e[k] - b.e[k];
  return m;
}

ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Complex s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(r, k) * b(k, c);
      m(r, c) = s;
    }
  return m;
}

ComplexMatrix4 operator*(Complex s, const ComplexMatrix4& a) {
  ComplexMatrix4 m;
  for (size_t k = 0; k < 16; ++k) m.e[k] = s * a.e[k];
  return m;
}

double max_abs_entry(const ComplexMatrix4& m) {
  double v = 0.0;
  for (const auto& x : m.e) v = std::max(v, std::abs(x));
  return v;
}

namespace {

double hermiticity_defect(const ComplexMatrix4& m) {
  double d = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
  return d;
}

double off_diagonal_norm(const ComplexMatrix4& a) {
  double s = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

EigenSystem4 hermitian_eigensystem_4(const ComplexMatrix4& m) {
  const double defect = hermiticity_defect(m);
  if (defect > 1e-10) {
    std::ostringstream os;
    os << "hermitian_eigensystem_4: input not Hermitian, max|m - m^dagger| = " << defect;
    throw std::invalid_argument(os.str());
  }
  // Work on the Hermitized input.
  ComplexMatrix4 a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  ComplexMatrix4 v = ComplexMatrix4::identity();

  // Cyclic Jacobi with complex Givens rotations.
  for (int sweep = 0; sweep < 64; ++sweep) {
    if (off_diagonal_norm(a) < 1e-15 * (1.0 + std::abs(a.trace()))) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const Complex apq = a(p, q);
        if (std::abs(apq) == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase so the pivot becomes real, then a standard 2x2 rotation.
        const Complex phase = apq / std::abs(apq);
        const double g = std::abs(apq);
        const double theta = 0.5 * std::atan2(2.0 * g, app - aqq);
        const double c = std::cos(theta), s = std::sin(theta);
        const Complex sp = s * phase;
        // Columns p,q of a and v: right-multiplication by the rotation.
        for (int r = 0; r < 4; ++r) {
          const Complex arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp + std::conj(sp) * arq;
          a(r, q) = -sp * arp + c * arq;
          const Complex vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp + std::conj(sp) * vrq;
          v(r, q) = -sp * vrp + c * vrq;
        }
        // Rows p,q: left-multiplication by the adjoint rotation.
        for (int col = 0; col < 4; ++col) {
          const Complex apc = a(p, col), aqc = a(q, col);
          a(p, col) = c * apc + sp * aqc;
          a(q, col) = -std::conj(sp) * apc + c * aqc;
        }
      }
    }
  }

  EigenSystem4 sys;
  std::array<int, 4> idx = {0, 1, 2, 3};
  std::array<double, 4> d;
  for (int i = 0; i < 4; ++i) d[i] = a(i, i).real();
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
  for (int i = 0; i < 4; ++i) {
    sys.values[i] = d[idx[i]];
    for (int r = 0; r < 4; ++r) sys.vectors(r, i) = v(r, idx[i]);
  }
  return sys;
}

std::array<double, 4> hermitian_eigenvalues_4(const ComplexMatrix4& m) {
  return hermitian_eigensystem_4(m).values;
}

}  // namespace hvh
