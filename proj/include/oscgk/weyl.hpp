#pragma once

#include <string>
#include <vector>

#include "oscgk/polynomial.hpp"

namespace oscgk {

/// One normal-ordered term c * x^mult * D^deriv of a differential operator.
struct DiffOpTerm {
  Rational coeff;
  Monomial mult;
  Monomial deriv;
};

/// Polynomial-coefficient differential operator in normal-ordered canonical
/// form: terms sorted by (mult, deriv), no duplicates, nonzero coefficients.
/// Normal ordering makes operator equality decidable, which is what the
/// bracket comparisons against structure constants rely on.
class DiffOp {
 public:
  explicit DiffOp(RingDesc ring = RingDesc{}) : m_ring(ring) {}

  static DiffOp zero(RingDesc ring) { return DiffOp(ring); }
  static DiffOp identity(RingDesc ring);
  static DiffOp term(RingDesc ring, const Rational& c, const Monomial& mult, const Monomial& deriv);
  /// Multiplication operator by a polynomial.
  static DiffOp mul(const Polynomial& p);

  const RingDesc& ring() const { return m_ring; }
  bool is_zero() const { return m_terms.empty(); }
  const std::vector<DiffOpTerm>& terms() const { return m_terms; }

  DiffOp& operator+=(const DiffOp& other);
  DiffOp& operator-=(const DiffOp& other);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp operator-() const;
  DiffOp& mul_scalar(const Rational& c);
  friend DiffOp operator*(const Rational& c, DiffOp op) { return op.mul_scalar(c); }

  /// Exact image of f; linear in f, Leibniz-correct.
  Polynomial apply(const Polynomial& f) const;
  Polynomial apply(const Monomial& m, const Rational& c = Rational(1)) const;

  /// True when every term shifts total degree by the same amount
  /// deg(mult) - deg(deriv); reports that shift.
  bool uniform_degree_shift(int& shift) const;

  std::string to_string() const;

  friend bool operator==(const DiffOp& a, const DiffOp& b);

  static DiffOp from_terms(RingDesc ring, std::vector<DiffOpTerm> terms);

 private:
  RingDesc m_ring;
  std::vector<DiffOpTerm> m_terms;

  void normalize();
};

/// Normal-ordered product: apply(compose(a,b), f) == apply(a, apply(b, f)).
DiffOp compose(const DiffOp& a, const DiffOp& b);

/// compose(a,b) - compose(b,a).
DiffOp bracket(const DiffOp& a, const DiffOp& b);

}  // namespace oscgk
