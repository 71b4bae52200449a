#include "oscgk/monomial.hpp"

#include <algorithm>

namespace oscgk {

void Monomial::push(std::uint8_t var, unsigned exp) {
  if (exp == 0) return;
  if (exp > kMaxExponent) throw std::overflow_error("Monomial: exponent overflow");
  if (m_size == kMaxSlots) throw std::overflow_error("Monomial: too many variables");
  m_slots[m_size++] = Slot{var, static_cast<std::uint8_t>(exp)};
}

Monomial Monomial::variable(VarIndex v, unsigned exp) {
  Monomial m;
  m.push(v.code(), exp);
  return m;
}

Monomial Monomial::from_pairs(const std::vector<std::pair<VarIndex, unsigned>>& pairs) {
  std::vector<std::pair<std::uint8_t, unsigned>> items;
  items.reserve(pairs.size());
  for (const auto& [v, e] : pairs) items.emplace_back(v.code(), e);
  std::sort(items.begin(), items.end());
  Monomial m;
  for (std::size_t i = 0; i < items.size(); ++i) {
    unsigned exp = items[i].second;
    while (i + 1 < items.size() && items[i + 1].first == items[i].first) {
      exp += items[++i].second;
    }
    m.push(items[i].first, exp);
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < m_size; ++i) d += m_slots[static_cast<std::size_t>(i)].exp;
  return d;
}

unsigned Monomial::exponent(VarIndex v) const {
  for (int i = 0; i < m_size; ++i) {
    const Slot& s = m_slots[static_cast<std::size_t>(i)];
    if (s.var == v.code()) return s.exp;
    if (s.var > v.code()) break;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  int i = 0, j = 0;
  while (i < a.m_size || j < b.m_size) {
    if (j == b.m_size || (i < a.m_size && a.m_slots[i].var < b.m_slots[j].var)) {
      out.push(a.m_slots[i].var, a.m_slots[i].exp);
      ++i;
    } else if (i == a.m_size || b.m_slots[j].var < a.m_slots[i].var) {
      out.push(b.m_slots[j].var, b.m_slots[j].exp);
      ++j;
    } else {
      out.push(a.m_slots[i].var, static_cast<unsigned>(a.m_slots[i].exp) + b.m_slots[j].exp);
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::try_divide(const Monomial& b, Monomial& out) const {
  Monomial q;
  int i = 0, j = 0;
  while (i < m_size || j < b.m_size) {
    if (j == b.m_size) {
      q.push(m_slots[i].var, m_slots[i].exp);
      ++i;
    } else if (i == m_size || b.m_slots[j].var < m_slots[i].var) {
      return false;  // b has a variable absent from *this
    } else if (m_slots[i].var < b.m_slots[j].var) {
      q.push(m_slots[i].var, m_slots[i].exp);
      ++i;
    } else {
      if (m_slots[i].exp < b.m_slots[j].exp) return false;
      q.push(m_slots[i].var, static_cast<unsigned>(m_slots[i].exp) - b.m_slots[j].exp);
      ++i;
      ++j;
    }
  }
  out = q;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  Monomial scratch;
  return other.try_divide(*this, scratch);
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string s;
  for (int i = 0; i < m_size; ++i) {
    const Slot& sl = m_slots[static_cast<std::size_t>(i)];
    if (!s.empty()) s += '*';
    s += (sl.var < 64 ? "x" : "y") + std::to_string(sl.var < 64 ? sl.var : sl.var - 64);
    if (sl.exp > 1) s += "^" + std::to_string(sl.exp);
  }
  return s;
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.m_size != b.m_size) return false;
  for (int i = 0; i < a.m_size; ++i) {
    if (a.m_slots[i].var != b.m_slots[i].var || a.m_slots[i].exp != b.m_slots[i].exp) return false;
  }
  return true;
}

int monomial_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  int i = a.slot_count() - 1, j = b.slot_count() - 1;
  while (i >= 0 && j >= 0) {
    const auto sa = a.slot(i), sb = b.slot(j);
    if (sa.var != sb.var) {
      // The monomial owning the larger variable has positive exponent where
      // the other has zero, hence compares greater.
      return sa.var > sb.var ? 1 : -1;
    }
    if (sa.exp != sb.exp) return sa.exp > sb.exp ? 1 : -1;
    --i;
    --j;
  }
  if (i >= 0) return 1;
  if (j >= 0) return -1;
  return 0;
}

}  // namespace oscgk
