#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oscgk/monomial.hpp"
#include "oscgk/rational.hpp"

namespace oscgk {

/// Exact sparse polynomial over the ambient ring: terms kept in canonical
/// form, sorted ascending by the monomial order, nonzero coefficients only.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(RingDesc ring = RingDesc{}) : m_ring(ring) {}

  static Polynomial zero(RingDesc ring) { return Polynomial(ring); }
  static Polynomial constant(RingDesc ring, const Rational& c);
  static Polynomial monomial(RingDesc ring, const Monomial& m, const Rational& c = Rational(1));
  static Polynomial variable(RingDesc ring, VarIndex v, unsigned exp = 1);

  /// Builds canonical form from arbitrary (monomial, coefficient) pairs.
  static Polynomial from_terms(RingDesc ring, std::vector<Term> terms);

  const RingDesc& ring() const { return m_ring; }
  bool is_zero() const { return m_terms.empty(); }
  std::size_t term_count() const { return m_terms.size(); }
  const std::vector<Term>& terms() const { return m_terms; }

  /// Smallest monomial in the order (the elimination pivot); polynomial must
  /// be nonzero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  int degree() const;  // -1 for the zero polynomial
  Rational coeff(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial& mul_scalar(const Rational& c);
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p.mul_scalar(c); }

  /// a -= c * b, the elimination kernel; avoids a temporary polynomial.
  void add_multiple(const Rational& c, const Polynomial& b);

  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Terms sorted by the monomial order, "c*x1^a*y2^b" syntax.
  std::string to_string() const;

  /// Parses the serialization syntax (signs, rational coefficients, '*'
  /// separated variable powers). Throws std::invalid_argument on bad input.
  static Polynomial parse(RingDesc ring, const std::string& text);

 private:
  RingDesc m_ring;
  std::vector<Term> m_terms;

  void check_ring(const Polynomial& other) const;
  void normalize();
};

}  // namespace oscgk
