// Exact symbolic calculus of phase-space polynomials and van Hove operators.
//
// Coefficients are exact rationals (boost multiprecision), with hbar
// substituted by an exact rational at operator construction. Operators are
// kept in canonical normal order: polynomial coefficients to the left,
// derivatives to the right, no zero terms stored. Equality is coefficient-map
// equality, so algebraic identities can be asserted with no tolerance.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace hvh {

using Rational = boost::multiprecision::cpp_rational;

// Raised when an intermediate polynomial exceeds the supported degree.
struct DegreeOverflowError : std::runtime_error {
  explicit DegreeOverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kMaxPolyDegree = 8;

// (q-exponent, p-exponent); map ordering gives the canonical term order.
using Monomial = std::pair<int, int>;

// Exact bivariate polynomial in (q, p) with rational coefficients.
class PolyPhaseFunction {
 public:
  PolyPhaseFunction() = default;

  static PolyPhaseFunction zero() { return {}; }
  static PolyPhaseFunction constant(const Rational& c);
  static PolyPhaseFunction monomial(int qexp, int pexp, const Rational& coeff);
  static PolyPhaseFunction q() { return monomial(1, 0, 1); }
  static PolyPhaseFunction p() { return monomial(0, 1, 1); }
  // p^2/2m + m w^2 q^2 / 2
  static PolyPhaseFunction harmonic_hamiltonian(const Rational& m, const Rational& omega);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  PolyPhaseFunction derivative_q() const;
  PolyPhaseFunction derivative_p() const;
  double eval(double q, double p) const;

  PolyPhaseFunction& add_term(int qexp, int pexp, const Rational& coeff);

  friend PolyPhaseFunction operator+(const PolyPhaseFunction& a, const PolyPhaseFunction& b);
  friend PolyPhaseFunction operator-(const PolyPhaseFunction& a, const PolyPhaseFunction& b);
  friend PolyPhaseFunction operator*(const PolyPhaseFunction& a, const PolyPhaseFunction& b);
  friend PolyPhaseFunction operator*(const Rational& s, const PolyPhaseFunction& a);
  friend bool operator==(const PolyPhaseFunction& a, const PolyPhaseFunction& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

PolyPhaseFunction pow(const PolyPhaseFunction& f, int n);

// d_q f d_p g - d_p f d_q g, exact.
PolyPhaseFunction poisson_bracket(const PolyPhaseFunction& f, const PolyPhaseFunction& g);

struct RationalComplex {
  Rational re = 0;
  Rational im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// Bivariate polynomial with exact complex-rational coefficients.
class ComplexPhasePoly {
 public:
  ComplexPhasePoly() = default;
  explicit ComplexPhasePoly(const PolyPhaseFunction& real_part);

  static ComplexPhasePoly zero() { return {}; }

  const std::map<Monomial, RationalComplex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  ComplexPhasePoly derivative(int dq, int dp) const;
  std::complex<double> eval(double q, double p) const;

  ComplexPhasePoly& add_term(int qexp, int pexp, const RationalComplex& coeff);

  friend ComplexPhasePoly operator+(const ComplexPhasePoly& a, const ComplexPhasePoly& b);
  friend ComplexPhasePoly operator-(const ComplexPhasePoly& a, const ComplexPhasePoly& b);
  friend ComplexPhasePoly operator*(const ComplexPhasePoly& a, const ComplexPhasePoly& b);
  friend ComplexPhasePoly operator*(const RationalComplex& s, const ComplexPhasePoly& a);
  friend bool operator==(const ComplexPhasePoly& a, const ComplexPhasePoly& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  std::map<Monomial, RationalComplex> terms_;
};

// (order of d_q, order of d_p)
using DerivIndex = std::pair<int, int>;

// Differential operator sum_alpha C_alpha(q,p) d^alpha in normal order.
// General derivative order is supported so that operator powers compose
// exactly; van Hove operators themselves are first order.
class PhaseSpaceOperator {
 public:
  explicit PhaseSpaceOperator(const Rational& hbar) : hbar_(hbar) {}

  const Rational& hbar() const { return hbar_; }
  const std::map<DerivIndex, ComplexPhasePoly>& parts() const { return parts_; }

  bool is_zero() const { return parts_.empty(); }
  bool is_first_order() const;

  ComplexPhasePoly part(int dq, int dp) const;
  ComplexPhasePoly c0() const { return part(0, 0); }
  ComplexPhasePoly cq() const { return part(1, 0); }
  ComplexPhasePoly cp() const { return part(0, 1); }
  ComplexPhasePoly cqq() const { return part(2, 0); }
  ComplexPhasePoly cpp() const { return part(0, 2); }
  ComplexPhasePoly cqp() const { return part(1, 1); }

  PhaseSpaceOperator& set_part(int dq, int dp, const ComplexPhasePoly& poly);

  friend PhaseSpaceOperator operator+(const PhaseSpaceOperator& a, const PhaseSpaceOperator& b);
  friend PhaseSpaceOperator operator-(const PhaseSpaceOperator& a, const PhaseSpaceOperator& b);
  friend PhaseSpaceOperator operator*(const RationalComplex& s, const PhaseSpaceOperator& a);
  friend bool operator==(const PhaseSpaceOperator& a, const PhaseSpaceOperator& b) {
    return a.hbar_ == b.hbar_ && a.parts_ == b.parts_;
  }

  std::string str() const;

 private:
  static void check_same_hbar(const PhaseSpaceOperator& a, const PhaseSpaceOperator& b);

  Rational hbar_;
  std::map<DerivIndex, ComplexPhasePoly> parts_;

  friend PhaseSpaceOperator compose(const PhaseSpaceOperator& a, const PhaseSpaceOperator& b);
};

// O_f = (f - p d_p f) + i hbar (d_q f d_p - d_p f d_q), first order.
PhaseSpaceOperator vanhove_operator(const PolyPhaseFunction& f, const Rational& hbar);

// Normal-ordered operator product ab (Leibniz rule on coefficients).
PhaseSpaceOperator compose(const PhaseSpaceOperator& a, const PhaseSpaceOperator& b);

// ab - ba. Throws std::invalid_argument on mismatched hbar.
PhaseSpaceOperator commutator(const PhaseSpaceOperator& a, const PhaseSpaceOperator& b);

// True iff [O_f, O_g] = i hbar O_{f,g} with exact coefficient equality.
bool check_isomorphism(const PolyPhaseFunction& f, const PolyPhaseFunction& g,
                       const Rational& hbar);

// (O_f)^n - O_{f^n}, n >= 2.
PhaseSpaceOperator power_gap(const PolyPhaseFunction& f, int n, const Rational& hbar);

}  // namespace hvh
