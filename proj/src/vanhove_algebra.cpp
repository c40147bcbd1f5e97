#include "hvh/vanhove_algebra.hpp"

#include <sstream>

namespace hvh {

namespace {

void check_degree(int deg, const char* where) {
  if (deg > kMaxPolyDegree) {
    std::ostringstream os;
    os << where << ": intermediate polynomial degree " << deg << " exceeds cap "
       << kMaxPolyDegree;
    throw DegreeOverflowError(os.str());
  }
}

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyPhaseFunction

PolyPhaseFunction PolyPhaseFunction::constant(const Rational& c) {
  return monomial(0, 0, c);
}

PolyPhaseFunction PolyPhaseFunction::monomial(int qexp, int pexp, const Rational& coeff) {
  PolyPhaseFunction f;
  f.add_term(qexp, pexp, coeff);
  return f;
}

PolyPhaseFunction PolyPhaseFunction::harmonic_hamiltonian(const Rational& m,
                                                          const Rational& omega) {
  PolyPhaseFunction h;
  h.add_term(0, 2, Rational(1) / (2 * m));
  h.add_term(2, 0, m * omega * omega / 2);
  return h;
}

int PolyPhaseFunction::degree() const {
  int d = -1;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.first + mono.second);
  return d;
}

PolyPhaseFunction& PolyPhaseFunction::add_term(int qexp, int pexp, const Rational& coeff) {
  if (qexp < 0 || pexp < 0) throw std::invalid_argument("PolyPhaseFunction: negative exponent");
  check_degree(qexp + pexp, "PolyPhaseFunction");
  const Monomial key{qexp, pexp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

PolyPhaseFunction PolyPhaseFunction::derivative_q() const {
  PolyPhaseFunction out;
  for (const auto& [mono, c] : terms_)
    if (mono.first > 0) out.add_term(mono.first - 1, mono.second, c * mono.first);
  return out;
}

PolyPhaseFunction PolyPhaseFunction::derivative_p() const {
  PolyPhaseFunction out;
  for (const auto& [mono, c] : terms_)
    if (mono.second > 0) out.add_term(mono.first, mono.second - 1, c * mono.second);
  return out;
}

double PolyPhaseFunction::eval(double q, double p) const {
  double acc = 0.0;
  for (const auto& [mono, c] : terms_) {
    double t = c.convert_to<double>();
    for (int i = 0; i < mono.first; ++i) t *= q;
    for (int i = 0; i < mono.second; ++i) t *= p;
    acc += t;
  }
  return acc;
}

PolyPhaseFunction operator+(const PolyPhaseFunction& a, const PolyPhaseFunction& b) {
  PolyPhaseFunction out = a;
  for (const auto& [mono, c] : b.terms_) out.add_term(mono.first, mono.second, c);
  return out;
}

PolyPhaseFunction operator-(const PolyPhaseFunction& a, const PolyPhaseFunction& b) {
  PolyPhaseFunction out = a;
  for (const auto& [mono, c] : b.terms_) out.add_term(mono.first, mono.second, -c);
  return out;
}

PolyPhaseFunction operator*(const PolyPhaseFunction& a, const PolyPhaseFunction& b) {
  PolyPhaseFunction out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
  return out;
}

PolyPhaseFunction operator*(const Rational& s, const PolyPhaseFunction& a) {
  PolyPhaseFunction out;
  if (s == 0) return out;
  for (const auto& [mono, c] : a.terms_) out.add_term(mono.first, mono.second, s * c);
  return out;
}

std::string PolyPhaseFunction::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (mono.first > 0) os << " q^" << mono.first;
    if (mono.second > 0) os << " p^" << mono.second;
  }
  return os.str();
}

PolyPhaseFunction pow(const PolyPhaseFunction& f, int n) {
  if (n < 0) throw std::invalid_argument("pow: negative exponent");
  PolyPhaseFunction out = PolyPhaseFunction::constant(1);
  for (int i = 0; i < n; ++i) out = out * f;
  return out;
}

PolyPhaseFunction poisson_bracket(const PolyPhaseFunction& f, const PolyPhaseFunction& g) {
  return f.derivative_q() * g.derivative_p() - f.derivative_p() * g.derivative_q();
}

// ---------------------------------------------------------------------------
// ComplexPhasePoly

ComplexPhasePoly::ComplexPhasePoly(const PolyPhaseFunction& real_part) {
  for (const auto& [mono, c] : real_part.terms())
    terms_.emplace(mono, RationalComplex{c, 0});
}

int ComplexPhasePoly::degree() const {
  int d = -1;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.first + mono.second);
  return d;
}

ComplexPhasePoly& ComplexPhasePoly::add_term(int qexp, int pexp, const RationalComplex& coeff) {
  if (qexp < 0 || pexp < 0) throw std::invalid_argument("ComplexPhasePoly: negative exponent");
  check_degree(qexp + pexp, "ComplexPhasePoly");
  const Monomial key{qexp, pexp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(key, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

ComplexPhasePoly ComplexPhasePoly::derivative(int dq, int dp) const {
  ComplexPhasePoly out = *this;
  for (int k = 0; k < dq; ++k) {
    ComplexPhasePoly next;
    for (const auto& [mono, c] : out.terms_)
      if (mono.first > 0)
        next.add_term(mono.first - 1, mono.second, RationalComplex{Rational(mono.first), 0} * c);
    out = next;
  }
  for (int k = 0; k < dp; ++k) {
    ComplexPhasePoly next;
    for (const auto& [mono, c] : out.terms_)
      if (mono.second > 0)
        next.add_term(mono.first, mono.second - 1, RationalComplex{Rational(mono.second), 0} * c);
    out = next;
  }
  return out;
}

std::complex<double> ComplexPhasePoly::eval(double q, double p) const {
  std::complex<double> acc = 0.0;
  for (const auto& [mono, c] : terms_) {
    double t = 1.0;
    for (int i = 0; i < mono.first; ++i) t *= q;
    for (int i = 0; i < mono.second; ++i) t *= p;
    acc += std::complex<double>(c.re.convert_to<double>(), c.im.convert_to<double>()) * t;
  }
  return acc;
}

ComplexPhasePoly operator+(const ComplexPhasePoly& a, const ComplexPhasePoly& b) {
  ComplexPhasePoly out = a;
  for (const auto& [mono, c] : b.terms_) out.add_term(mono.first, mono.second, c);
  return out;
}

ComplexPhasePoly operator-(const ComplexPhasePoly& a, const ComplexPhasePoly& b) {
  ComplexPhasePoly out = a;
  for (const auto& [mono, c] : b.terms_)
    out.add_term(mono.first, mono.second, RationalComplex{-c.re, -c.im});
  return out;
}

ComplexPhasePoly operator*(const ComplexPhasePoly& a, const ComplexPhasePoly& b) {
  ComplexPhasePoly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
  return out;
}

ComplexPhasePoly operator*(const RationalComplex& s, const ComplexPhasePoly& a) {
  ComplexPhasePoly out;
  if (s.is_zero()) return out;
  for (const auto& [mono, c] : a.terms()) out.add_term(mono.first, mono.second, s * c);
  return out;
}

std::string ComplexPhasePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re << (c.im >= 0 ? "+" : "") << c.im << "i)";
    if (mono.first > 0) os << " q^" << mono.first;
    if (mono.second > 0) os << " p^" << mono.second;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// PhaseSpaceOperator

bool PhaseSpaceOperator::is_first_order() const {
  for (const auto& [idx, poly] : parts_)
    if (idx.first + idx.second > 1) return false;
  return true;
}

ComplexPhasePoly PhaseSpaceOperator::part(int dq, int dp) const {
  auto it = parts_.find(DerivIndex{dq, dp});
  return it == parts_.end() ? ComplexPhasePoly::zero() : it->second;
}

PhaseSpaceOperator& PhaseSpaceOperator::set_part(int dq, int dp, const ComplexPhasePoly& poly) {
  const DerivIndex key{dq, dp};
  if (poly.is_zero())
    parts_.erase(key);
  else
    parts_[key] = poly;
  return *this;
}

void PhaseSpaceOperator::check_same_hbar(const PhaseSpaceOperator& a,
                                         const PhaseSpaceOperator& b) {
  if (a.hbar_ != b.hbar_)
    throw std::invalid_argument("PhaseSpaceOperator: mixing operators with different hbar");
}

PhaseSpaceOperator operator+(const PhaseSpaceOperator& a, const PhaseSpaceOperator& b) {
  PhaseSpaceOperator::check_same_hbar(a, b);
  PhaseSpaceOperator out = a;
  for (const auto& [idx, poly] : b.parts_)
    out.set_part(idx.first, idx.second, out.part(idx.first, idx.second) + poly);
  return out;
}

PhaseSpaceOperator operator-(const PhaseSpaceOperator& a, const PhaseSpaceOperator& b) {
  PhaseSpaceOperator::check_same_hbar(a, b);
  PhaseSpaceOperator out = a;
  for (const auto& [idx, poly] : b.parts_)
    out.set_part(idx.first, idx.second, out.part(idx.first, idx.second) - poly);
  return out;
}

PhaseSpaceOperator operator*(const RationalComplex& s, const PhaseSpaceOperator& a) {
  PhaseSpaceOperator out(a.hbar());
  for (const auto& [idx, poly] : a.parts_) out.set_part(idx.first, idx.second, s * poly);
  return out;
}

std::string PhaseSpaceOperator::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, poly] : parts_) {
    if (!first) os << "  +  ";
    first = false;
    os << "[" << poly.str() << "]";
    if (idx.first > 0) os << " d_q^" << idx.first;
    if (idx.second > 0) os << " d_p^" << idx.second;
  }
  return os.str();
}

PhaseSpaceOperator vanhove_operator(const PolyPhaseFunction& f, const Rational& hbar) {
  PhaseSpaceOperator op(hbar);
  const PolyPhaseFunction fq = f.derivative_q();
  const PolyPhaseFunction fp = f.derivative_p();
  op.set_part(0, 0, ComplexPhasePoly(f - PolyPhaseFunction::p() * fp));
  op.set_part(0, 1, RationalComplex{0, hbar} * ComplexPhasePoly(fq));
  op.set_part(1, 0, RationalComplex{0, -hbar} * ComplexPhasePoly(fp));
  return op;
}

PhaseSpaceOperator compose(const PhaseSpaceOperator& a, const PhaseSpaceOperator& b) {
  PhaseSpaceOperator::check_same_hbar(a, b);
  PhaseSpaceOperator out(a.hbar());
  // (A d^alpha)(B d^beta) expands by the Leibniz rule:
  //   A sum_{gamma<=alpha} C(alpha,gamma) (d^gamma B) d^{alpha-gamma+beta}
  for (const auto& [alpha, A] : a.parts()) {
    for (const auto& [beta, B] : b.parts()) {
      for (int gq = 0; gq <= alpha.first; ++gq) {
        for (int gp = 0; gp <= alpha.second; ++gp) {
          const ComplexPhasePoly dB = B.derivative(gq, gp);
          if (dB.is_zero()) continue;
          const Rational coeff = binomial(alpha.first, gq) * binomial(alpha.second, gp);
          const DerivIndex idx{alpha.first - gq + beta.first, alpha.second - gp + beta.second};
          const ComplexPhasePoly contrib = RationalComplex{coeff, 0} * (A * dB);
          out.set_part(idx.first, idx.second, out.part(idx.first, idx.second) + contrib);
        }
      }
    }
  }
  return out;
}

PhaseSpaceOperator commutator(const PhaseSpaceOperator& a, const PhaseSpaceOperator& b) {
  return compose(a, b) - compose(b, a);
}

bool check_isomorphism(const PolyPhaseFunction& f, const PolyPhaseFunction& g,
                       const Rational& hbar) {
  const PhaseSpaceOperator lhs = commutator(vanhove_operator(f, hbar), vanhove_operator(g, hbar));
  const PhaseSpaceOperator rhs =
      RationalComplex{0, hbar} * vanhove_operator(poisson_bracket(f, g), hbar);
  return lhs == rhs;
}

PhaseSpaceOperator power_gap(const PolyPhaseFunction& f, int n, const Rational& hbar) {
  if (n < 2) throw std::invalid_argument("power_gap: n must be >= 2");
  const PhaseSpaceOperator of = vanhove_operator(f, hbar);
  PhaseSpaceOperator acc = of;
  for (int k = 1; k < n; ++k) acc = compose(acc, of);
  return acc - vanhove_operator(pow(f, n), hbar);
}

}  // namespace hvh
