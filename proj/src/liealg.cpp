#include "oscgk/liealg.hpp"

#include <algorithm>
#include <set>

#include "oscgk/parallel.hpp"

namespace oscgk {

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::EvenOrthogonal: return "o-even";
    case AlgebraKind::OddOrthogonal: return "o-odd";
    case AlgebraKind::Symplectic: return "sp";
  }
  return "?";
}

std::optional<AlgebraKind> algebra_from_string(const std::string& name) {
  if (name == "o-even") return AlgebraKind::EvenOrthogonal;
  if (name == "o-odd") return AlgebraKind::OddOrthogonal;
  if (name == "sp") return AlgebraKind::Symplectic;
  return std::nullopt;
}

void RepConfig::validate() const {
  if (n < 1 || n > 7) throw std::invalid_argument("RepConfig: n must be in 1..7");
  if (n1 < 1 || n1 > n2 || n2 > n) throw std::invalid_argument("RepConfig: need 1 <= n1 <= n2 <= n");
}

int RepConfig::dimension() const {
  return kind == AlgebraKind::EvenOrthogonal ? n * (2 * n - 1) : n * (2 * n + 1);
}

std::string BasisElement::to_string(const RepConfig& config) const {
  const int n = config.n;
  const bool sp = config.kind == AlgebraKind::Symplectic;
  auto E = [](int r, int c) { return "E(" + std::to_string(r) + "," + std::to_string(c) + ")"; };
  switch (family) {
    case Family::Gl: return E(i, j) + "-" + E(n + j, n + i);
    case Family::Raise:
      if (sp) return i == j ? E(i, n + i) : E(i, n + j) + "+" + E(j, n + i);
      return E(i, n + j) + "-" + E(j, n + i);
    case Family::Lower:
      if (sp) return i == j ? E(n + i, i) : E(n + i, j) + "+" + E(n + j, i);
      return E(n + j, i) + "-" + E(n + i, j);
    case Family::ZeroNeg: return E(0, i) + "-" + E(n + i, 0);
    case Family::ZeroPos: return E(0, n + i) + "-" + E(i, 0);
  }
  return "?";
}

SpMatrix matrix_of(const RepConfig& config, const BasisElement& e) {
  const int n = config.n;
  const bool sp = config.kind == AlgebraKind::Symplectic;
  SpMatrix m;
  switch (e.family) {
    case BasisElement::Family::Gl:
      m[{e.i, e.j}] += 1;
      m[{n + e.j, n + e.i}] -= 1;
      break;
    case BasisElement::Family::Raise:
      if (e.i == e.j) {
        if (!sp) throw std::invalid_argument("Raise(i,i) only exists for sp");
        m[{e.i, n + e.i}] += 1;
      } else {
        m[{e.i, n + e.j}] += 1;
        m[{e.j, n + e.i}] += sp ? 1 : -1;
      }
      break;
    case BasisElement::Family::Lower:
      if (e.i == e.j) {
        if (!sp) throw std::invalid_argument("Lower(i,i) only exists for sp");
        m[{n + e.i, e.i}] += 1;
      } else if (sp) {
        m[{n + e.i, e.j}] += 1;
        m[{n + e.j, e.i}] += 1;
      } else {
        m[{n + e.j, e.i}] += 1;
        m[{n + e.i, e.j}] -= 1;
      }
      break;
    case BasisElement::Family::ZeroNeg:
      m[{0, e.i}] += 1;
      m[{n + e.i, 0}] -= 1;
      break;
    case BasisElement::Family::ZeroPos:
      m[{0, n + e.i}] += 1;
      m[{e.i, 0}] -= 1;
      break;
  }
  return m;
}

SpMatrix commutator(const SpMatrix& a, const SpMatrix& b) {
  SpMatrix out;
  auto accumulate = [&out](const SpMatrix& lhs, const SpMatrix& rhs, long long sign) {
    for (const auto& [rc, v] : lhs) {
      auto it = rhs.lower_bound({rc.second, 0});
      for (; it != rhs.end() && it->first.first == rc.second; ++it) {
        std::pair<int, int> key{rc.first, it->first.second};
        long long& slot = out[key];
        slot += sign * v * it->second;
        if (slot == 0) out.erase(key);
      }
    }
  };
  accumulate(a, b, 1);
  accumulate(b, a, -1);
  return out;
}

std::vector<std::pair<Rational, BasisElement>> expand_in_basis(const RepConfig& config,
                                                               const SpMatrix& m) {
  const int n = config.n;
  const bool sp = config.kind == AlgebraKind::Symplectic;
  const bool odd = config.kind == AlgebraKind::OddOrthogonal;
  std::map<BasisElement, long long> coeffs;

  auto offer = [&](const BasisElement& e, long long c) {
    auto [it, fresh] = coeffs.emplace(e, c);
    if (!fresh && it->second != c)
      throw std::domain_error("expand_in_basis: inconsistent entries, matrix not in the algebra");
  };

  for (const auto& [rc, v] : m) {
    auto [r, c] = rc;
    if (r == 0 || c == 0) {
      if (!odd) throw std::domain_error("expand_in_basis: zero row/column outside odd kind");
      if (r == 0 && c >= 1 && c <= n) offer(BasisElement::zero_neg(c), v);
      else if (r == 0 && c > n && c <= 2 * n) offer(BasisElement::zero_pos(c - n), v);
      else if (c == 0 && r >= 1 && r <= n) offer(BasisElement::zero_pos(r), -v);
      else if (c == 0 && r > n && r <= 2 * n) offer(BasisElement::zero_neg(r - n), -v);
      else throw std::domain_error("expand_in_basis: bad zero-row/column entry");
    } else if (r <= n && c <= n) {
      offer(BasisElement::gl(r, c), v);
    } else if (r > n && c > n) {
      offer(BasisElement::gl(c - n, r - n), -v);
    } else if (r <= n) {  // raise block
      int a = r, b = c - n;
      if (a == b) {
        if (!sp) throw std::domain_error("expand_in_basis: diagonal raise entry outside sp");
        offer(BasisElement::raise_elem(a, a), v);
      } else if (a < b) {
        offer(BasisElement::raise_elem(a, b), v);
      } else {
        offer(BasisElement::raise_elem(b, a), sp ? v : -v);
      }
    } else {  // lower block
      int a = r - n, b = c;
      if (a == b) {
        if (!sp) throw std::domain_error("expand_in_basis: diagonal lower entry outside sp");
        offer(BasisElement::lower_elem(a, a), v);
      } else if (sp) {
        offer(BasisElement::lower_elem(std::min(a, b), std::max(a, b)), v);
      } else if (a > b) {
        offer(BasisElement::lower_elem(b, a), v);
      } else {
        offer(BasisElement::lower_elem(a, b), -v);
      }
    }
  }

  // Rebuild and compare against the input; catches missing partner entries.
  SpMatrix rebuilt;
  for (const auto& [e, c] : coeffs) {
    for (const auto& [rc, v] : matrix_of(config, e)) {
      long long& slot = rebuilt[rc];
      slot += c * v;
      if (slot == 0) rebuilt.erase(rc);
    }
  }
  if (!(rebuilt == m)) throw std::domain_error("expand_in_basis: matrix not in the algebra span");

  std::vector<std::pair<Rational, BasisElement>> out;
  out.reserve(coeffs.size());
  for (const auto& [e, c] : coeffs) {
    if (c != 0) out.emplace_back(Rational(static_cast<long>(c)), e);
  }
  return out;
}

std::vector<std::pair<Rational, BasisElement>> matrix_bracket(const RepConfig& config,
                                                              const BasisElement& a,
                                                              const BasisElement& b) {
  return expand_in_basis(config, commutator(matrix_of(config, a), matrix_of(config, b)));
}

namespace {

VarIndex X(int i) { return VarIndex::x(i); }
VarIndex Y(int i) { return VarIndex::y(i); }

DiffOp T(RingDesc ring, long coeff, std::initializer_list<VarIndex> mult,
         std::initializer_list<VarIndex> deriv) {
  Monomial m, d;
  for (VarIndex v : mult) m = m * Monomial::variable(v);
  for (VarIndex v : deriv) d = d * Monomial::variable(v);
  return DiffOp::term(ring, Rational(coeff), m, d);
}

// The defining displays of the oscillator representation, one branch per
// index block.

DiffOp ex_part(const RepConfig& cfg, int i, int j) {
  RingDesc R = cfg.ring();
  const int n1 = cfg.n1;
  if (i <= n1 && j <= n1) {
    DiffOp op = T(R, -1, {X(j)}, {X(i)});
    if (i == j) op += T(R, -1, {}, {});
    return op;
  }
  if (i <= n1) return T(R, 1, {}, {X(i), X(j)});
  if (j <= n1) return T(R, -1, {X(i), X(j)}, {});
  return T(R, 1, {X(i)}, {X(j)});
}

DiffOp ey_part(const RepConfig& cfg, int i, int j) {
  RingDesc R = cfg.ring();
  const int n2 = cfg.n2;
  if (i <= n2 && j <= n2) return T(R, 1, {Y(i)}, {Y(j)});
  if (i <= n2) return T(R, -1, {Y(i), Y(j)}, {});
  if (j <= n2) return T(R, 1, {}, {Y(i), Y(j)});
  DiffOp op = T(R, -1, {Y(j)}, {Y(i)});
  if (i == j) op += T(R, -1, {}, {});
  return op;
}

DiffOp raise_part(const RepConfig& cfg, int i, int j) {  // E_{i, n+j}
  RingDesc R = cfg.ring();
  if (i <= cfg.n1 && j <= cfg.n2) return T(R, 1, {}, {X(i), Y(j)});
  if (i <= cfg.n1) return T(R, -1, {Y(j)}, {X(i)});
  if (j <= cfg.n2) return T(R, 1, {X(i)}, {Y(j)});
  return T(R, -1, {X(i), Y(j)}, {});
}

DiffOp lower_part(const RepConfig& cfg, int i, int j) {  // E_{n+i, j}
  RingDesc R = cfg.ring();
  if (j <= cfg.n1 && i <= cfg.n2) return T(R, -1, {X(j), Y(i)}, {});
  if (j <= cfg.n1) return T(R, -1, {X(j)}, {Y(i)});
  if (i <= cfg.n2) return T(R, 1, {Y(i)}, {X(j)});
  return T(R, 1, {}, {X(j), Y(i)});
}

DiffOp zero_row(const RepConfig& cfg, int a) {  // E_{0, a}, a in 1..2n
  RingDesc R = cfg.ring();
  if (a <= cfg.n1) return T(R, -1, {X(0), X(a)}, {});
  if (a <= cfg.n) return T(R, 1, {X(0)}, {X(a)});
  if (a <= cfg.n + cfg.n2) return T(R, 1, {X(0)}, {Y(a - cfg.n)});
  return T(R, -1, {X(0), Y(a - cfg.n)}, {});
}

DiffOp zero_col(const RepConfig& cfg, int a) {  // E_{a, 0}, a in 1..2n
  RingDesc R = cfg.ring();
  if (a <= cfg.n1) return T(R, 1, {}, {X(0), X(a)});
  if (a <= cfg.n) return T(R, 1, {X(a)}, {X(0)});
  if (a <= cfg.n + cfg.n2) return T(R, 1, {Y(a - cfg.n)}, {X(0)});
  return T(R, 1, {}, {X(0), Y(a - cfg.n)});
}

DiffOp rep_of(const RepConfig& cfg, const BasisElement& e) {
  const bool sp = cfg.kind == AlgebraKind::Symplectic;
  switch (e.family) {
    case BasisElement::Family::Gl:
      return ex_part(cfg, e.i, e.j) - ey_part(cfg, e.j, e.i);
    case BasisElement::Family::Raise:
      if (e.i == e.j) return raise_part(cfg, e.i, e.i);
      if (sp) return raise_part(cfg, e.i, e.j) + raise_part(cfg, e.j, e.i);
      return raise_part(cfg, e.i, e.j) - raise_part(cfg, e.j, e.i);
    case BasisElement::Family::Lower:
      if (e.i == e.j) return lower_part(cfg, e.i, e.i);
      if (sp) return lower_part(cfg, e.i, e.j) + lower_part(cfg, e.j, e.i);
      return lower_part(cfg, e.j, e.i) - lower_part(cfg, e.i, e.j);
    case BasisElement::Family::ZeroNeg:
      return zero_row(cfg, e.i) - zero_col(cfg, cfg.n + e.i);
    case BasisElement::Family::ZeroPos:
      return zero_row(cfg, cfg.n + e.i) - zero_col(cfg, e.i);
  }
  throw std::logic_error("rep_of: bad family");
}

std::vector<BasisElement> enumerate_basis(const RepConfig& cfg) {
  const int n = cfg.n;
  const bool sp = cfg.kind == AlgebraKind::Symplectic;
  std::vector<BasisElement> basis;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) basis.push_back(BasisElement::gl(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = sp ? i : i + 1; j <= n; ++j) basis.push_back(BasisElement::raise_elem(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = sp ? i : i + 1; j <= n; ++j) basis.push_back(BasisElement::lower_elem(i, j));
  if (cfg.kind == AlgebraKind::OddOrthogonal) {
    for (int i = 1; i <= n; ++i) basis.push_back(BasisElement::zero_neg(i));
    for (int i = 1; i <= n; ++i) basis.push_back(BasisElement::zero_pos(i));
  }
  return basis;
}

}  // namespace

std::vector<LabeledRoot> case_table(const RepConfig& cfg) {
  cfg.validate();
  RingDesc R = cfg.ring();
  const int n = cfg.n, n1 = cfg.n1, n2 = cfg.n2;
  std::vector<LabeledRoot> roots;
  auto add = [&](const std::string& label, int sign, BasisElement elem, DiffOp display, int group) {
    roots.push_back(LabeledRoot{label, sign, elem, std::move(display), group});
  };
  const bool case1 = n1 < n2;
  const std::string dash = case1 ? "" : "-";

  if (cfg.kind != AlgebraKind::Symplectic) {
    for (int i = 1; i <= n1; ++i)
      for (int r = i + 1; r <= n1; ++r)
        add("ri" + dash, 1, BasisElement::gl(r, i),
            T(R, -1, {X(i)}, {X(r)}) + T(R, -1, {Y(i)}, {Y(r)}), 1);
    for (int i = 1; i <= n1; ++i)
      for (int s = n1 + 1; s <= n2; ++s)
        add("si", 1, BasisElement::gl(s, i),
            T(R, -1, {X(i), X(s)}, {}) + T(R, -1, {Y(i)}, {Y(s)}), 2);
    for (int i = 1; i <= n1; ++i)
      for (int t = n2 + 1; t <= n; ++t)
        add("ti" + dash, 1, BasisElement::gl(t, i),
            T(R, -1, {X(i), X(t)}, {}) + T(R, 1, {Y(i), Y(t)}, {}), 2);
    for (int j = n1 + 1; j <= n2; ++j)
      for (int s = j + 1; s <= n2; ++s)
        add("sj", 1, BasisElement::gl(s, j),
            T(R, 1, {X(s)}, {X(j)}) + T(R, -1, {Y(j)}, {Y(s)}), 1);
    for (int s = n1 + 1; s <= n2; ++s)
      for (int t = n2 + 1; t <= n; ++t)
        add("ts", 1, BasisElement::gl(t, s),
            T(R, 1, {X(t)}, {X(s)}) + T(R, 1, {Y(s), Y(t)}, {}), 2);
    for (int p = n2 + 1; p <= n; ++p)
      for (int t = p + 1; t <= n; ++t)
        add("tp" + dash, 1, BasisElement::gl(t, p),
            T(R, 1, {X(t)}, {X(p)}) + T(R, 1, {Y(t)}, {Y(p)}), 1);
    for (int i = 1; i <= n1; ++i)
      for (int r = i + 1; r <= n1; ++r) {
        add("inr" + dash, 1, BasisElement::raise_elem(i, r),
            T(R, 1, {}, {X(i), Y(r)}) + T(R, -1, {}, {X(r), Y(i)}), 1);
        add("nri" + dash, 1, BasisElement::lower_elem(i, r),
            T(R, -1, {X(i), Y(r)}, {}) + T(R, 1, {X(r), Y(i)}, {}), 2);
      }
    for (int i = 1; i <= n1; ++i)
      for (int s = n1 + 1; s <= n2; ++s) {
        add("ins", 1, BasisElement::raise_elem(i, s),
            T(R, 1, {}, {X(i), Y(s)}) + T(R, -1, {X(s)}, {Y(i)}), 1);
        add("nsi", 1, BasisElement::lower_elem(i, s),
            T(R, -1, {X(i), Y(s)}, {}) + T(R, -1, {Y(i)}, {X(s)}), 2);
      }
    for (int i = 1; i <= n1; ++i)
      for (int t = n2 + 1; t <= n; ++t) {
        add("int" + dash, 1, BasisElement::raise_elem(i, t),
            T(R, -1, {Y(t)}, {X(i)}) + T(R, -1, {X(t)}, {Y(i)}), 1);
        add("nti" + dash, 1, BasisElement::lower_elem(i, t),
            T(R, -1, {X(i)}, {Y(t)}) + T(R, -1, {Y(i)}, {X(t)}), 1);
      }
    for (int j = n1 + 1; j <= n2; ++j)
      for (int s = j + 1; s <= n2; ++s) {
        add("jns", 1, BasisElement::raise_elem(j, s),
            T(R, 1, {X(j)}, {Y(s)}) + T(R, -1, {X(s)}, {Y(j)}), 1);
        // Displayed as E_{n+j,s} - E_{n+s,j}, the opposite orientation of the
        // canonical element.
        add("njs", -1, BasisElement::lower_elem(j, s),
            T(R, -1, {Y(s)}, {X(j)}) + T(R, 1, {Y(j)}, {X(s)}), 1);
      }
    for (int s = n1 + 1; s <= n2; ++s)
      for (int t = n2 + 1; t <= n; ++t) {
        add("snt", 1, BasisElement::raise_elem(s, t),
            T(R, -1, {X(s), Y(t)}, {}) + T(R, -1, {X(t)}, {Y(s)}), 2);
        // Displayed as E_{n+s,t} - E_{n+t,s}, the opposite orientation. The
        // sign of the y_s Dx_t term is the one the bracket relations force
        // (check_homomorphism adjudicates it).
        add("nst", -1, BasisElement::lower_elem(s, t),
            T(R, 1, {Y(s)}, {X(t)}) + T(R, -1, {}, {X(s), Y(t)}), 1);
      }
    for (int p = n2 + 1; p <= n; ++p)
      for (int t = p + 1; t <= n; ++t) {
        add("pnt" + dash, 1, BasisElement::raise_elem(p, t),
            T(R, -1, {X(p), Y(t)}, {}) + T(R, 1, {X(t), Y(p)}, {}), 2);
        // Displayed as E_{n+p,t} - E_{n+t,p}, the opposite orientation.
        add("npt" + dash, -1, BasisElement::lower_elem(p, t),
            T(R, -1, {}, {X(p), Y(t)}) + T(R, 1, {}, {X(t), Y(p)}), 1);
      }
    if (cfg.kind == AlgebraKind::OddOrthogonal) {
      for (int i = 1; i <= n1; ++i)
        add("0i" + dash, 1, BasisElement::zero_neg(i),
            T(R, -1, {X(0), X(i)}, {}) + T(R, -1, {Y(i)}, {X(0)}), 2);
      for (int s = n1 + 1; s <= n2; ++s)
        add("0s", 1, BasisElement::zero_neg(s),
            T(R, 1, {X(0)}, {X(s)}) + T(R, -1, {Y(s)}, {X(0)}), 1);
      for (int t = n2 + 1; t <= n; ++t)
        add("0t" + dash, 1, BasisElement::zero_neg(t),
            T(R, 1, {X(0)}, {X(t)}) + T(R, -1, {}, {X(0), Y(t)}), 1);
      for (int i = 1; i <= n1; ++i)
        add("0ni" + dash, 1, BasisElement::zero_pos(i),
            T(R, 1, {X(0)}, {Y(i)}) + T(R, -1, {}, {X(0), X(i)}), 1);
      for (int s = n1 + 1; s <= n2; ++s)
        add("0ns", 1, BasisElement::zero_pos(s),
            T(R, 1, {X(0)}, {Y(s)}) + T(R, -1, {X(s)}, {X(0)}), 1);
      for (int t = n2 + 1; t <= n; ++t)
        add("0nt" + dash, 1, BasisElement::zero_pos(t),
            T(R, -1, {X(0), Y(t)}, {}) + T(R, -1, {X(t)}, {X(0)}), 2);
    }
    return roots;
  }

  // Symplectic: the displayed set spans g2; g1 is the complement among the
  // root elements, assembled in the RepTable constructor.
  for (int i = 1; i <= n1; ++i)
    for (int s = n1 + 1; s <= n2; ++s)
      add("si3", 1, BasisElement::gl(s, i),
          T(R, -1, {X(i), X(s)}, {}) + T(R, -1, {Y(i)}, {Y(s)}), 2);
  for (int i = 1; i <= n1; ++i)
    for (int t = n2 + 1; t <= n; ++t)
      add("ti3", 1, BasisElement::gl(t, i),
          T(R, -1, {X(i), X(t)}, {}) + T(R, 1, {Y(i), Y(t)}, {}), 2);
  for (int s = n1 + 1; s <= n2; ++s)
    for (int t = n2 + 1; t <= n; ++t)
      add("ts3", 1, BasisElement::gl(t, s),
          T(R, 1, {X(t)}, {X(s)}) + T(R, 1, {Y(s), Y(t)}, {}), 2);
  for (int i = 1; i <= n1; ++i)
    for (int r = i + 1; r <= n1; ++r)
      add("nri3", 1, BasisElement::lower_elem(i, r),
          T(R, -1, {X(i), Y(r)}, {}) + T(R, -1, {X(r), Y(i)}, {}), 2);
  for (int i = 1; i <= n1; ++i)
    for (int s = n1 + 1; s <= n2; ++s)
      add("nsi3", 1, BasisElement::lower_elem(i, s),
          T(R, -1, {X(i), Y(s)}, {}) + T(R, 1, {Y(i)}, {X(s)}), 2);
  for (int s = n1 + 1; s <= n2; ++s)
    for (int t = n2 + 1; t <= n; ++t)
      add("snt3", 1, BasisElement::raise_elem(s, t),
          T(R, -1, {X(s), Y(t)}, {}) + T(R, 1, {X(t)}, {Y(s)}), 2);
  for (int p = n2 + 1; p <= n; ++p)
    for (int t = p + 1; t <= n; ++t)
      add("pnt3", 1, BasisElement::raise_elem(p, t),
          T(R, -1, {X(p), Y(t)}, {}) + T(R, -1, {X(t), Y(p)}, {}), 2);
  for (int i = 1; i <= n1; ++i)
    add("ini", 1, BasisElement::lower_elem(i, i), T(R, -1, {X(i), Y(i)}, {}), 2);
  for (int t = n2 + 1; t <= n; ++t)
    add("tnt", 1, BasisElement::raise_elem(t, t), T(R, -1, {X(t), Y(t)}, {}), 2);
  return roots;
}

RepTable::RepTable(RepConfig config, std::map<BasisElement, DiffOp> ops,
                   std::vector<BasisElement> basis, std::vector<LabeledRoot> roots)
    : m_config(config), m_ops(std::move(ops)), m_basis(std::move(basis)), m_roots(std::move(roots)) {
  for (int i = 1; i <= m_config.n; ++i) {
    for (int j = i + 1; j <= m_config.n; ++j) m_kplus.push_back(BasisElement::gl(i, j));
    m_cartan.push_back(BasisElement::gl(i, i));
  }
  if (m_config.kind == AlgebraKind::Symplectic) {
    std::set<BasisElement> in_g2;
    for (const auto& root : m_roots)
      if (root.group == 2) in_g2.insert(root.elem);
    for (const auto& e : m_basis) {
      bool is_root = !(e.family == BasisElement::Family::Gl && e.i == e.j);
      if (is_root && !in_g2.count(e)) m_g1.push_back(e);
    }
    for (const auto& root : m_roots) m_g2.push_back(root.elem);
  } else {
    for (const auto& root : m_roots) {
      (root.group == 1 ? m_g1 : m_g2).push_back(root.elem);
    }
  }
}

const DiffOp& RepTable::op(const BasisElement& e) const {
  auto it = m_ops.find(e);
  if (it == m_ops.end()) throw std::invalid_argument("RepTable: element not in basis");
  return it->second;
}

std::vector<DiffOp> RepTable::g1_ops() const {
  std::vector<DiffOp> ops;
  ops.reserve(m_g1.size());
  for (const auto& e : m_g1) ops.push_back(op(e));
  return ops;
}

std::vector<DiffOp> RepTable::g2_ops() const {
  std::vector<DiffOp> ops;
  ops.reserve(m_g2.size());
  for (const auto& e : m_g2) ops.push_back(op(e));
  return ops;
}

std::string RepTable::dump() const {
  std::string out;
  for (const auto& e : m_basis) out += e.to_string(m_config) + " := " + op(e).to_string() + "\n";
  return out;
}

RepTable build_rep(const RepConfig& config) {
  config.validate();
  std::vector<BasisElement> basis = enumerate_basis(config);
  std::map<BasisElement, DiffOp> ops;
  for (const auto& e : basis) ops.emplace(e, rep_of(config, e));
  return RepTable(config, std::move(ops), std::move(basis), case_table(config));
}

std::vector<Violation> check_homomorphism(const RepTable& table, int threads) {
  const auto& basis = table.basis();
  const std::size_t dim = basis.size();
  auto results = parallel_map<std::optional<Violation>>(dim * dim, threads, [&](std::size_t idx) {
    const BasisElement& a = basis[idx / dim];
    const BasisElement& b = basis[idx % dim];
    DiffOp lhs = bracket(table.op(a), table.op(b));
    DiffOp rhs = DiffOp::zero(table.config().ring());
    for (const auto& [c, e] : matrix_bracket(table.config(), a, b)) rhs += c * table.op(e);
    if (lhs == rhs) return std::optional<Violation>{};
    return std::optional<Violation>{Violation{a, b, std::move(lhs), std::move(rhs)}};
  });
  std::vector<Violation> violations;
  for (auto& r : results) {
    if (r) violations.push_back(std::move(*r));
  }
  return violations;
}

}  // namespace oscgk
