#include "oscgk/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace oscgk {

Polynomial Polynomial::constant(RingDesc ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.m_terms.emplace_back(Monomial::one(), c);
  return p;
}

Polynomial Polynomial::monomial(RingDesc ring, const Monomial& m, const Rational& c) {
  for (int i = 0; i < m.slot_count(); ++i) {
    auto s = m.slot(i);
    VarIndex v = s.var < 64 ? VarIndex::x(s.var) : VarIndex::y(s.var - 64);
    if (!v.valid_in(ring)) throw std::invalid_argument("monomial variable outside ambient ring: " + v.name());
  }
  Polynomial p(ring);
  if (c != 0) p.m_terms.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::variable(RingDesc ring, VarIndex v, unsigned exp) {
  return monomial(ring, Monomial::variable(v, exp));
}

Polynomial Polynomial::from_terms(RingDesc ring, std::vector<Term> terms) {
  Polynomial p(ring);
  p.m_terms = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(m_terms.begin(), m_terms.end(),
            [](const Term& a, const Term& b) { return monomial_cmp(a.first, b.first) < 0; });
  std::vector<Term> out;
  out.reserve(m_terms.size());
  for (auto& t : m_terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else if (t.second != 0) {
      out.push_back(std::move(t));
    }
  }
  m_terms = std::move(out);
}

const Monomial& Polynomial::leading_monomial() const {
  if (m_terms.empty()) throw std::logic_error("leading_monomial of zero polynomial");
  return m_terms.front().first;
}

const Rational& Polynomial::leading_coeff() const {
  if (m_terms.empty()) throw std::logic_error("leading_coeff of zero polynomial");
  return m_terms.front().second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : m_terms) d = std::max(d, m.degree());
  return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(m_terms.begin(), m_terms.end(), m, [](const Term& t, const Monomial& key) {
    return monomial_cmp(t.first, key) < 0;
  });
  if (it != m_terms.end() && it->first == m) return it->second;
  return Rational(0);
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!(m_ring == other.m_ring)) throw std::invalid_argument("mixed ambient rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_multiple(Rational(1), other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_multiple(Rational(-1), other);
  return *this;
}

void Polynomial::add_multiple(const Rational& c, const Polynomial& b) {
  check_ring(b);
  if (c == 0 || b.is_zero()) return;
  if (&b == this) {
    mul_scalar(Rational(1) + c);
    return;
  }
  std::vector<Term> merged;
  merged.reserve(m_terms.size() + b.m_terms.size());
  std::size_t i = 0, j = 0;
  while (i < m_terms.size() || j < b.m_terms.size()) {
    int cmp;
    if (i == m_terms.size()) {
      cmp = 1;
    } else if (j == b.m_terms.size()) {
      cmp = -1;
    } else {
      cmp = monomial_cmp(m_terms[i].first, b.m_terms[j].first);
    }
    if (cmp < 0) {
      merged.push_back(std::move(m_terms[i++]));
    } else if (cmp > 0) {
      merged.emplace_back(b.m_terms[j].first, c * b.m_terms[j].second);
      ++j;
    } else {
      Rational sum = m_terms[i].second + c * b.m_terms[j].second;
      if (sum != 0) merged.emplace_back(m_terms[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  m_terms = std::move(merged);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Polynomial::Term> prods;
  prods.reserve(a.m_terms.size() * b.m_terms.size());
  for (const auto& [ma, ca] : a.m_terms) {
    for (const auto& [mb, cb] : b.m_terms) {
      prods.emplace_back(ma * mb, ca * cb);
    }
  }
  return Polynomial::from_terms(a.m_ring, std::move(prods));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.m_terms) c = -c;
  return p;
}

Polynomial& Polynomial::mul_scalar(const Rational& c) {
  if (c == 0) {
    m_terms.clear();
    return *this;
  }
  for (auto& [m, coeff] : m_terms) coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = Polynomial::constant(m_ring, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.m_ring == b.m_ring && a.m_terms == b.m_terms;
}

std::string Polynomial::to_string() const {
  if (m_terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : m_terms) {
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      s += abs_c.get_str();
    } else {
      if (abs_c != 1) s += abs_c.get_str() + "*";
      s += m.to_string();
    }
  }
  return s;
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos == text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("polynomial parse: expected integer at position " +
                                                  std::to_string(start) + " in '" + text + "'");
    return text.substr(start, pos - start);
  }
};

}  // namespace

Polynomial Polynomial::parse(RingDesc ring, const std::string& text) {
  Cursor cur{text};
  std::vector<Term> terms;
  bool first = true;
  while (!cur.eof()) {
    int sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (cur.accept('+')) {
      sign = 1;
    } else if (!first) {
      throw std::invalid_argument("polynomial parse: expected '+' or '-' in '" + text + "'");
    }
    first = false;

    Rational coeff(sign);
    Monomial mono;
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      char c = cur.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = cur.integer();
        std::string frac = num;
        if (cur.accept('/')) frac = num + "/" + cur.integer();
        coeff *= rational_from_string(frac);
        saw_factor = true;
      } else if (c == 'x' || c == 'y') {
        ++cur.pos;
        int idx = std::stoi(cur.integer());
        unsigned exp = 1;
        if (cur.accept('^')) exp = static_cast<unsigned>(std::stoul(cur.integer()));
        VarIndex v = (c == 'x') ? VarIndex::x(idx) : VarIndex::y(idx);
        if (!v.valid_in(ring)) throw std::invalid_argument("polynomial parse: variable outside ring: " + v.name());
        mono = mono * Monomial::variable(v, exp);
        saw_factor = true;
      } else {
        throw std::invalid_argument("polynomial parse: unexpected character in '" + text + "'");
      }
      expect_factor = cur.accept('*');
    }
    if (!saw_factor) throw std::invalid_argument("polynomial parse: empty term in '" + text + "'");
    terms.emplace_back(mono, coeff);
  }
  if (terms.empty()) throw std::invalid_argument("polynomial parse: empty input");
  return from_terms(ring, std::move(terms));
}

}  // namespace oscgk
