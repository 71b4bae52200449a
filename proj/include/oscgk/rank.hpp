#pragma once

#include <map>
#include <span>
#include <vector>

#include "oscgk/polynomial.hpp"

namespace oscgk {

/// Result of an exact rank computation: pivot monomials are the leading
/// monomials of the row space, strictly increasing in the monomial order.
struct RankProfile {
  int rank = 0;
  std::vector<Monomial> pivots;
};

/// Incremental exact row space over Q. Rows are reduced until their leading
/// monomial is fresh, then stored monic keyed by that pivot. The pivot set
/// depends only on the row space, not on insertion order.
class RowSpace {
 public:
  explicit RowSpace(RingDesc ring) : m_ring(ring) {}

  /// Reduces the row against the space; stores it if independent. Returns
  /// a pointer to the stored monic residue when the rank grew, nullptr
  /// otherwise.
  const Polynomial* insert(Polynomial row);

  int rank() const { return static_cast<int>(m_rows.size()); }
  RankProfile profile() const;

  /// Rows keyed by pivot, ascending in the monomial order.
  const std::map<Monomial, Polynomial, MonomialLess>& rows() const { return m_rows; }

  /// Total stored terms, for memory budgets.
  std::size_t term_count() const { return m_term_count; }

  const RingDesc& ring() const { return m_ring; }

 private:
  RingDesc m_ring;
  std::map<Monomial, Polynomial, MonomialLess> m_rows;
  std::size_t m_term_count = 0;
};

/// Exact rank of the row span. Deterministic in row content only.
RankProfile exact_rank(std::span<const Polynomial> rows);
RankProfile exact_rank(const std::vector<Polynomial>& rows);

}  // namespace oscgk
