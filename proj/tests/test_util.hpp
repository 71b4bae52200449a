#pragma once

// Shared brute-force helpers for the test suites. Everything here is kept
// independent of the library's internal computation paths: plain enumeration
// and direct arithmetic only.

#include <random>
#include <vector>

#include "oscgk/polynomial.hpp"

namespace testutil {

using oscgk::Monomial;
using oscgk::Polynomial;
using oscgk::Rational;
using oscgk::RingDesc;
using oscgk::VarIndex;

inline std::vector<VarIndex> ring_vars(const RingDesc& ring) {
  std::vector<VarIndex> vars;
  if (ring.has_x0) vars.push_back(VarIndex::x(0));
  for (int i = 1; i <= ring.n; ++i) vars.push_back(VarIndex::x(i));
  for (int i = 1; i <= ring.n; ++i) vars.push_back(VarIndex::y(i));
  return vars;
}

/// All monomials of total degree <= maxdeg, by direct enumeration.
inline std::vector<Monomial> all_monomials(const RingDesc& ring, int maxdeg) {
  std::vector<VarIndex> vars = ring_vars(ring);
  std::vector<Monomial> out;
  std::vector<std::pair<VarIndex, unsigned>> current;
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == vars.size()) {
      out.push_back(Monomial::from_pairs(current));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      if (e > 0) current.emplace_back(vars[pos], static_cast<unsigned>(e));
      self(self, pos + 1, remaining - e);
      if (e > 0) current.pop_back();
    }
  };
  rec(rec, 0, maxdeg);
  return out;
}

inline Monomial random_monomial(std::mt19937& rng, const RingDesc& ring, int maxdeg) {
  std::vector<VarIndex> vars = ring_vars(ring);
  std::uniform_int_distribution<int> degd(0, maxdeg);
  int deg = degd(rng);
  std::vector<std::pair<VarIndex, unsigned>> pairs;
  std::uniform_int_distribution<std::size_t> vard(0, vars.size() - 1);
  for (int i = 0; i < deg; ++i) pairs.emplace_back(vars[vard(rng)], 1);
  return Monomial::from_pairs(pairs);
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> numd(-6, 6);
  std::uniform_int_distribution<long> dend(1, 4);
  return oscgk::ratio(numd(rng), dend(rng));
}

inline Polynomial random_polynomial(std::mt19937& rng, const RingDesc& ring, int maxdeg, int maxterms) {
  std::uniform_int_distribution<int> termd(0, maxterms);
  int k = termd(rng);
  std::vector<Polynomial::Term> terms;
  for (int i = 0; i < k; ++i) terms.emplace_back(random_monomial(rng, ring, maxdeg), random_rational(rng));
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace testutil
