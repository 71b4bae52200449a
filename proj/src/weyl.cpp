#include "oscgk/weyl.hpp"

#include <algorithm>

namespace oscgk {

namespace {

int term_cmp(const DiffOpTerm& a, const DiffOpTerm& b) {
  int c = monomial_cmp(a.mult, b.mult);
  if (c != 0) return c;
  return monomial_cmp(a.deriv, b.deriv);
}

/// Falling factorial product prod_v e_v (e_v-1) ... (e_v-g_v+1); zero when
/// some g_v exceeds e_v.
mpz_class falling_factorial(const Monomial& e, const Monomial& g) {
  mpz_class acc(1);
  for (int i = 0; i < g.slot_count(); ++i) {
    auto s = g.slot(i);
    VarIndex v = s.var < 64 ? VarIndex::x(s.var) : VarIndex::y(s.var - 64);
    unsigned have = e.exponent(v);
    if (have < s.exp) return mpz_class(0);
    for (unsigned t = 0; t < s.exp; ++t) acc *= static_cast<unsigned long>(have - t);
  }
  return acc;
}

mpz_class binom_small(unsigned a, unsigned b) {
  if (b > a) return mpz_class(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

mpz_class factorial_small(unsigned a) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), a);
  return r;
}

}  // namespace

DiffOp DiffOp::identity(RingDesc ring) {
  return term(ring, Rational(1), Monomial::one(), Monomial::one());
}

DiffOp DiffOp::term(RingDesc ring, const Rational& c, const Monomial& mult, const Monomial& deriv) {
  // Validates variables against the ring.
  Polynomial::monomial(ring, mult);
  Polynomial::monomial(ring, deriv);
  DiffOp op(ring);
  if (c != 0) op.m_terms.push_back(DiffOpTerm{c, mult, deriv});
  return op;
}

DiffOp DiffOp::mul(const Polynomial& p) {
  DiffOp op(p.ring());
  for (const auto& [m, c] : p.terms()) op.m_terms.push_back(DiffOpTerm{c, m, Monomial::one()});
  op.normalize();
  return op;
}

DiffOp DiffOp::from_terms(RingDesc ring, std::vector<DiffOpTerm> terms) {
  DiffOp op(ring);
  op.m_terms = std::move(terms);
  op.normalize();
  return op;
}

void DiffOp::normalize() {
  std::sort(m_terms.begin(), m_terms.end(),
            [](const DiffOpTerm& a, const DiffOpTerm& b) { return term_cmp(a, b) < 0; });
  std::vector<DiffOpTerm> out;
  out.reserve(m_terms.size());
  for (auto& t : m_terms) {
    if (!out.empty() && out.back().mult == t.mult && out.back().deriv == t.deriv) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  m_terms = std::move(out);
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  if (!(m_ring == other.m_ring)) throw std::invalid_argument("DiffOp: mixed ambient rings");
  std::vector<DiffOpTerm> merged = m_terms;
  merged.insert(merged.end(), other.m_terms.begin(), other.m_terms.end());
  m_terms = std::move(merged);
  normalize();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& other) {
  return *this += (-other);
}

DiffOp DiffOp::operator-() const {
  DiffOp op = *this;
  for (auto& t : op.m_terms) t.coeff = -t.coeff;
  return op;
}

DiffOp& DiffOp::mul_scalar(const Rational& c) {
  if (c == 0) {
    m_terms.clear();
    return *this;
  }
  for (auto& t : m_terms) t.coeff *= c;
  return *this;
}

Polynomial DiffOp::apply(const Monomial& m, const Rational& c) const {
  std::vector<Polynomial::Term> out;
  for (const auto& t : m_terms) {
    mpz_class ff = falling_factorial(m, t.deriv);
    if (ff == 0) continue;
    Monomial rest;
    if (!m.try_divide(t.deriv, rest)) continue;  // unreachable once ff != 0
    out.emplace_back(rest * t.mult, c * t.coeff * Rational(ff));
  }
  return Polynomial::from_terms(m_ring, std::move(out));
}

Polynomial DiffOp::apply(const Polynomial& f) const {
  if (!(m_ring == f.ring())) throw std::invalid_argument("DiffOp::apply: mixed ambient rings");
  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& t : m_terms) {
      mpz_class ff = falling_factorial(m, t.deriv);
      if (ff == 0) continue;
      Monomial rest;
      m.try_divide(t.deriv, rest);
      out.emplace_back(rest * t.mult, c * t.coeff * Rational(ff));
    }
  }
  return Polynomial::from_terms(m_ring, std::move(out));
}

bool DiffOp::uniform_degree_shift(int& shift) const {
  bool have = false;
  for (const auto& t : m_terms) {
    int s = t.mult.degree() - t.deriv.degree();
    if (!have) {
      shift = s;
      have = true;
    } else if (s != shift) {
      return false;
    }
  }
  return have;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  if (!(a.m_ring == b.m_ring) || a.m_terms.size() != b.m_terms.size()) return false;
  for (std::size_t i = 0; i < a.m_terms.size(); ++i) {
    const auto& ta = a.m_terms[i];
    const auto& tb = b.m_terms[i];
    if (!(ta.mult == tb.mult) || !(ta.deriv == tb.deriv) || ta.coeff != tb.coeff) return false;
  }
  return true;
}

std::string DiffOp::to_string() const {
  if (m_terms.empty()) return "0";
  // Display order puts plain multiplications first, the way the operator
  // tables are written.
  std::vector<DiffOpTerm> display = m_terms;
  std::sort(display.begin(), display.end(), [](const DiffOpTerm& a, const DiffOpTerm& b) {
    int c = monomial_cmp(a.deriv, b.deriv);
    if (c != 0) return c < 0;
    return monomial_cmp(a.mult, b.mult) < 0;
  });
  std::string s;
  for (const auto& t : display) {
    Rational abs_c = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
    if (s.empty()) {
      if (t.coeff < 0) s += "-";
    } else {
      s += t.coeff < 0 ? " - " : " + ";
    }
    std::string factors;
    if (!t.mult.is_one()) factors = t.mult.to_string();
    if (!t.deriv.is_one()) {
      for (int i = 0; i < t.deriv.slot_count(); ++i) {
        auto sl = t.deriv.slot(i);
        if (!factors.empty()) factors += '*';
        factors += std::string("D") + (sl.var < 64 ? "x" : "y") +
                   std::to_string(sl.var < 64 ? sl.var : sl.var - 64);
        if (sl.exp > 1) factors += "^" + std::to_string(sl.exp);
      }
    }
    if (factors.empty()) {
      s += abs_c.get_str();
    } else {
      if (abs_c != 1) s += abs_c.get_str() + "*";
      s += factors;
    }
  }
  return s;
}

/// Enumerates componentwise nu <= min(gamma, mu) for the normal-ordering
/// expansion D^gamma x^mu = sum_nu C(gamma,nu) C(mu,nu) nu! x^(mu-nu) D^(gamma-nu).
namespace {

void expand_contractions(const Monomial& gamma, const Monomial& mu,
                         std::vector<std::pair<Monomial, mpz_class>>& out) {
  std::vector<std::pair<VarIndex, unsigned>> common;
  for (int i = 0; i < gamma.slot_count(); ++i) {
    auto s = gamma.slot(i);
    VarIndex v = s.var < 64 ? VarIndex::x(s.var) : VarIndex::y(s.var - 64);
    unsigned cap = std::min<unsigned>(s.exp, mu.exponent(v));
    if (cap > 0) common.emplace_back(v, cap);
  }
  std::vector<unsigned> nu(common.size(), 0);
  while (true) {
    Monomial numono;
    mpz_class weight(1);
    for (std::size_t i = 0; i < common.size(); ++i) {
      if (nu[i] == 0) continue;
      const auto& [v, cap] = common[i];
      numono = numono * Monomial::variable(v, nu[i]);
      weight *= binom_small(gamma.exponent(v), nu[i]);
      weight *= binom_small(mu.exponent(v), nu[i]);
      weight *= factorial_small(nu[i]);
    }
    out.emplace_back(numono, weight);
    std::size_t pos = 0;
    while (pos < common.size() && nu[pos] == common[pos].second) {
      nu[pos] = 0;
      ++pos;
    }
    if (pos == common.size()) break;
    ++nu[pos];
  }
}

}  // namespace

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("compose: mixed ambient rings");
  std::vector<DiffOpTerm> terms;
  std::vector<std::pair<Monomial, mpz_class>> contractions;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      contractions.clear();
      expand_contractions(ta.deriv, tb.mult, contractions);
      for (const auto& [nu, weight] : contractions) {
        Monomial mult, deriv;
        tb.mult.try_divide(nu, mult);
        ta.deriv.try_divide(nu, deriv);
        terms.push_back(DiffOpTerm{ta.coeff * tb.coeff * Rational(weight), ta.mult * mult, deriv * tb.deriv});
      }
    }
  }
  return DiffOp::from_terms(a.ring(), std::move(terms));
}

DiffOp bracket(const DiffOp& a, const DiffOp& b) {
  return compose(a, b) - compose(b, a);
}

}  // namespace oscgk
