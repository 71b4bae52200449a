#include "oscgk/rank.hpp"

namespace oscgk {

const Polynomial* RowSpace::insert(Polynomial row) {
  if (!(row.ring() == m_ring)) throw std::invalid_argument("RowSpace: mixed ambient rings");
  while (!row.is_zero()) {
    const Monomial& lead = row.leading_monomial();
    auto it = m_rows.find(lead);
    if (it == m_rows.end()) {
      Rational inv = Rational(1) / row.leading_coeff();
      row.mul_scalar(inv);
      m_term_count += row.term_count();
      auto [pos, ok] = m_rows.emplace(lead, std::move(row));
      return &pos->second;
    }
    row.add_multiple(-row.leading_coeff(), it->second);
  }
  return nullptr;
}

RankProfile RowSpace::profile() const {
  RankProfile p;
  p.rank = rank();
  p.pivots.reserve(m_rows.size());
  for (const auto& [pivot, row] : m_rows) p.pivots.push_back(pivot);
  return p;
}

RankProfile exact_rank(std::span<const Polynomial> rows) {
  if (rows.empty()) return RankProfile{};
  RowSpace space(rows.front().ring());
  for (const auto& r : rows) space.insert(r);
  return space.profile();
}

RankProfile exact_rank(const std::vector<Polynomial>& rows) {
  return exact_rank(std::span<const Polynomial>(rows.data(), rows.size()));
}

}  // namespace oscgk
