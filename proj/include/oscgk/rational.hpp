#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace oscgk {

/// Exact rational coefficient. mpq_class keeps values in lowest terms as long
/// as every construction site canonicalizes, so all entry points below do.
using Rational = mpq_class;

inline Rational ratio(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational ratio(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q"; throws on malformed input.
inline Rational rational_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("bad rational: " + text);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace oscgk
