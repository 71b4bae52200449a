#include "oscgk/graded.hpp"

#include <algorithm>

namespace oscgk {

int grade_weight(const RepConfig& config, const Monomial& m) {
  int w = 0;
  for (int s = 0; s < m.slot_count(); ++s) {
    auto slot = m.slot(s);
    int e = slot.exp;
    if (slot.var < 64) {
      int i = slot.var;
      if (i == 0) w += e;  // B'_<k> = sum B_<k-i> x0^i
      else w += (i <= config.n1) ? -e : e;
    } else {
      int i = slot.var - 64;
      w += (i <= config.n2) ? e : -e;
    }
  }
  return w;
}

bool weight_homogeneous(const RepConfig& config, const Polynomial& f, int& k) {
  bool have = false;
  for (const auto& [m, c] : f.terms()) {
    int w = grade_weight(config, m);
    if (!have) {
      k = w;
      have = true;
    } else if (w != k) {
      return false;
    }
  }
  return have;
}

std::vector<Monomial> graded_slice(const RepConfig& config, int kprime, int N) {
  config.validate();
  if (N < 0) throw std::invalid_argument("graded_slice: N must be >= 0");
  std::vector<VarIndex> vars;
  if (config.kind == AlgebraKind::OddOrthogonal) vars.push_back(VarIndex::x(0));
  for (int i = 1; i <= config.n; ++i) vars.push_back(VarIndex::x(i));
  for (int i = 1; i <= config.n; ++i) vars.push_back(VarIndex::y(i));

  std::vector<Monomial> out;
  std::vector<std::pair<VarIndex, unsigned>> current;
  auto weight_of = [&](VarIndex v) {
    if (v.kind() == VarIndex::Kind::X) return v.index() == 0 ? 1 : (v.index() <= config.n1 ? -1 : 1);
    return v.index() <= config.n2 ? 1 : -1;
  };
  auto rec = [&](auto&& self, std::size_t pos, int remaining, int weight) -> void {
    if (std::abs(kprime - weight) > remaining) return;  // each unit of degree moves weight by 1
    if (pos == vars.size()) {
      if (weight == kprime) out.push_back(Monomial::from_pairs(current));
      return;
    }
    int wv = weight_of(vars[pos]);
    for (int e = 0; e <= remaining; ++e) {
      if (e > 0) current.emplace_back(vars[pos], static_cast<unsigned>(e));
      self(self, pos + 1, remaining - e, weight + e * wv);
      if (e > 0) current.pop_back();
    }
  };
  rec(rec, 0, N, 0);
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

LaplaceKind laplace_kind(const RepConfig& config) {
  switch (config.kind) {
    case AlgebraKind::EvenOrthogonal: return LaplaceKind::EvenD;
    case AlgebraKind::OddOrthogonal: return LaplaceKind::OddDprime;
    case AlgebraKind::Symplectic: return LaplaceKind::SpGrading;
  }
  throw std::logic_error("laplace_kind");
}

DiffOp laplace(const RepConfig& config) {
  config.validate();
  RingDesc R = config.ring();
  const int n = config.n, n1 = config.n1, n2 = config.n2;
  auto term = [&](long c, std::vector<std::pair<VarIndex, unsigned>> mult,
                  std::vector<std::pair<VarIndex, unsigned>> deriv) {
    return DiffOp::term(R, Rational(c), Monomial::from_pairs(mult), Monomial::from_pairs(deriv));
  };
  DiffOp op = DiffOp::zero(R);
  switch (laplace_kind(config)) {
    case LaplaceKind::EvenD:
      for (int i = 1; i <= n1; ++i) op += term(1, {{VarIndex::x(i), 1}}, {{VarIndex::y(i), 1}});
      for (int r = n1 + 1; r <= n2; ++r)
        op += term(-1, {}, {{VarIndex::x(r), 1}, {VarIndex::y(r), 1}});
      for (int s = n2 + 1; s <= n; ++s) op += term(1, {{VarIndex::y(s), 1}}, {{VarIndex::x(s), 1}});
      return op;
    case LaplaceKind::OddDprime:
      op += term(1, {}, {{VarIndex::x(0), 2}});
      for (int i = 1; i <= n1; ++i) op += term(-2, {{VarIndex::x(i), 1}}, {{VarIndex::y(i), 1}});
      for (int r = n1 + 1; r <= n2; ++r)
        op += term(2, {}, {{VarIndex::x(r), 1}, {VarIndex::y(r), 1}});
      for (int s = n2 + 1; s <= n; ++s) op += term(-2, {{VarIndex::y(s), 1}}, {{VarIndex::x(s), 1}});
      return op;
    case LaplaceKind::SpGrading:
      for (int r = n1 + 1; r <= n; ++r) op += term(1, {{VarIndex::x(r), 1}}, {{VarIndex::x(r), 1}});
      for (int i = 1; i <= n1; ++i) op += term(-1, {{VarIndex::x(i), 1}}, {{VarIndex::x(i), 1}});
      for (int i = 1; i <= n2; ++i) op += term(1, {{VarIndex::y(i), 1}}, {{VarIndex::y(i), 1}});
      for (int r = n2 + 1; r <= n; ++r) op += term(-1, {{VarIndex::y(r), 1}}, {{VarIndex::y(r), 1}});
      return op;
  }
  throw std::logic_error("laplace");
}

namespace {

/// Canonical nullspace basis of op restricted to the slice: dense RREF with
/// columns in slice order, one kernel vector per free column, scaled to
/// primitive integers with positive leading coefficient.
std::vector<Polynomial> kernel_in_slice(const RepConfig& config, const DiffOp& op,
                                        const std::vector<Monomial>& slice) {
  RingDesc R = config.ring();
  const std::size_t ncols = slice.size();
  std::map<Monomial, std::size_t, MonomialLess> target_index;
  std::vector<Polynomial> images;
  images.reserve(ncols);
  for (const auto& m : slice) {
    Polynomial img = op.apply(Polynomial::monomial(R, m));
    for (const auto& [t, c] : img.terms()) target_index.emplace(t, 0);
    images.push_back(std::move(img));
  }
  std::size_t nrows = 0;
  for (auto& [t, idx] : target_index) idx = nrows++;

  std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols, Rational(0)));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (const auto& [t, c] : images[j].terms()) a[target_index.at(t)][j] = c;
  }

  std::vector<long> pivot_row_of_col(ncols, -1);
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < ncols && next_row < nrows; ++col) {
    std::size_t sel = next_row;
    while (sel < nrows && a[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(a[sel], a[next_row]);
    Rational inv = Rational(1) / a[next_row][col];
    for (auto& v : a[next_row]) v *= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == next_row || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t j = col; j < ncols; ++j) a[r][j] -= factor * a[next_row][j];
    }
    pivot_row_of_col[col] = static_cast<long>(next_row);
    ++next_row;
  }

  std::vector<Polynomial> kernel;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (pivot_row_of_col[free_col] >= 0) continue;
    std::vector<Polynomial::Term> terms;
    terms.emplace_back(slice[free_col], Rational(1));
    for (std::size_t col = 0; col < free_col; ++col) {
      long r = pivot_row_of_col[col];
      if (r >= 0 && a[static_cast<std::size_t>(r)][free_col] != 0)
        terms.emplace_back(slice[col], -a[static_cast<std::size_t>(r)][free_col]);
    }
    Polynomial v = Polynomial::from_terms(R, std::move(terms));
    mpz_class den(1), num(0);
    for (const auto& [m, c] : v.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rational scale = ratio(den, num);
    if (v.leading_coeff() * scale < 0) scale = -scale;
    v.mul_scalar(scale);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

Polynomial power_of_var(RingDesc R, VarIndex v, int e) {
  return e == 0 ? Polynomial::constant(R, Rational(1))
                : Polynomial::variable(R, v, static_cast<unsigned>(e));
}

}  // namespace

std::vector<Polynomial> harmonic_basis(const RepConfig& config, int kprime, int N) {
  if (config.kind == AlgebraKind::Symplectic)
    throw std::invalid_argument("harmonic_basis: the symplectic grading has no kernel condition");
  return kernel_in_slice(config, laplace(config), graded_slice(config, kprime, N));
}

bool is_singular(const RepTable& table, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("is_singular: zero input");
  // Weight vector first: every Cartan element acts diagonally on monomials,
  // so f must be an eigenvector of each.
  for (const auto& h : table.cartan()) {
    Polynomial image = table.op(h).apply(f);
    Rational lambda = image.is_zero() ? Rational(0) : image.leading_coeff() / f.leading_coeff();
    Polynomial scaled = f;
    scaled.mul_scalar(lambda);
    if (!(image == scaled)) return false;
  }
  for (const auto& e : table.kplus()) {
    if (!table.op(e).apply(f).is_zero()) return false;
  }
  return true;
}

std::vector<SingularVector> singular_catalog(const RepConfig& config, int kprime, int max_param) {
  config.validate();
  if (config.kind != AlgebraKind::EvenOrthogonal)
    throw std::invalid_argument("singular_catalog: defined for the even-orthogonal tables");
  RingDesc R = config.ring();
  const int n = config.n, n1 = config.n1, n2 = config.n2;
  std::vector<SingularVector> out;

  auto add_pair_family = [&](VarIndex a, int wa, VarIndex b, int wb, const std::string& tag) {
    for (int m1 = 0; m1 <= max_param; ++m1) {
      for (int m2 = 0; m2 <= max_param; ++m2) {
        if (wa * m1 + wb * m2 != kprime) continue;
        Polynomial p = power_of_var(R, a, m1) * power_of_var(R, b, m2);
        out.push_back(
            {std::move(p), tag + " m1=" + std::to_string(m1) + " m2=" + std::to_string(m2)});
      }
    }
  };

  if (n1 < n2) {
    bool only_c = (n1 + 1 == n2 && n2 == n);
    if (!only_c && n2 < n) {
      add_pair_family(VarIndex::x(n1), -1, VarIndex::y(n2 + 1), -1, "case1-a");
      add_pair_family(VarIndex::x(n1 + 1), 1, VarIndex::y(n2 + 1), -1, "case1-b");
    }
    add_pair_family(VarIndex::x(n1), -1, VarIndex::y(n2), 1, "case1-c");
    return out;
  }

  if (n2 < n) add_pair_family(VarIndex::x(n1), -1, VarIndex::y(n2 + 1), -1, "case2-a");
  if (n1 >= 2 && kprime <= 0) {
    Polynomial zeta1 =
        Polynomial::variable(R, VarIndex::x(n1 - 1)) * Polynomial::variable(R, VarIndex::y(n1)) -
        Polynomial::variable(R, VarIndex::x(n1)) * Polynomial::variable(R, VarIndex::y(n1 - 1));
    for (int m = 0; m <= max_param; ++m) {
      Polynomial p = power_of_var(R, VarIndex::x(n1), -kprime) * zeta1.pow(static_cast<unsigned>(m + 1));
      out.push_back({std::move(p), "case2-b m=" + std::to_string(m)});
    }
  }
  if (n1 + 2 <= n && kprime <= 0) {
    Polynomial zeta2 =
        Polynomial::variable(R, VarIndex::x(n1 + 1)) * Polynomial::variable(R, VarIndex::y(n1 + 2)) -
        Polynomial::variable(R, VarIndex::x(n1 + 2)) * Polynomial::variable(R, VarIndex::y(n1 + 1));
    for (int m = 0; m <= max_param; ++m) {
      Polynomial p =
          power_of_var(R, VarIndex::y(n1 + 1), -kprime) * zeta2.pow(static_cast<unsigned>(m + 1));
      out.push_back({std::move(p), "case2-c m=" + std::to_string(m)});
    }
  }
  return out;
}

Polynomial t1_twist(const RepConfig& config, const Polynomial& f) {
  if (config.kind != AlgebraKind::OddOrthogonal)
    throw std::invalid_argument("t1_twist: odd-orthogonal only");
  RingDesc R = config.ring();
  const int n = config.n, n1 = config.n1, n2 = config.n2;
  auto term = [&](long c, std::vector<std::pair<VarIndex, unsigned>> mult,
                  std::vector<std::pair<VarIndex, unsigned>> deriv) {
    return DiffOp::term(R, Rational(c), Monomial::from_pairs(mult), Monomial::from_pairs(deriv));
  };
  DiffOp dhat = DiffOp::zero(R);
  for (int i = 1; i <= n1; ++i) dhat += term(-1, {{VarIndex::x(i), 1}}, {{VarIndex::y(i), 1}});
  for (int s = n1 + 1; s <= n2; ++s) dhat += term(1, {}, {{VarIndex::x(s), 1}, {VarIndex::y(s), 1}});
  for (int t = n2 + 1; t <= n; ++t) dhat += term(-1, {{VarIndex::y(t), 1}}, {{VarIndex::x(t), 1}});

  Polynomial result = Polynomial::zero(R);
  Polynomial g = f;
  mpz_class odd_factorial(1);  // (2i+1)!
  mpz_class pow2(1);           // 2^i
  for (int i = 0; !g.is_zero(); ++i) {
    if (i > 0) {
      odd_factorial *= 2 * i;
      odd_factorial *= 2 * i + 1;
      pow2 *= 2;
    }
    Rational coeff = ratio((i % 2 == 0) ? pow2 : mpz_class(-pow2), odd_factorial);
    Polynomial contribution =
        Polynomial::variable(R, VarIndex::x(0), static_cast<unsigned>(2 * i + 1)) * g;
    contribution.mul_scalar(coeff);
    result += contribution;
    g = dhat.apply(g);
  }
  return result;
}

SingularVector default_seed(const RepConfig& config, int kprime) {
  config.validate();
  RingDesc R = config.ring();
  const int n = config.n, n1 = config.n1;
  if (kprime <= 0) {
    return {power_of_var(R, VarIndex::x(n1), -kprime),
            "x" + std::to_string(n1) + "^" + std::to_string(-kprime)};
  }
  switch (config.kind) {
    case AlgebraKind::EvenOrthogonal:
      throw std::invalid_argument(
          "default_seed: no named generator for k' > 0 in the even-orthogonal case; pass an "
          "explicit seed");
    case AlgebraKind::OddOrthogonal:
      if (config.n1 < config.n2) {
        return {power_of_var(R, VarIndex::x(n1 + 1), kprime),
                "x" + std::to_string(n1 + 1) + "^" + std::to_string(kprime)};
      }
      return {t1_twist(config, power_of_var(R, VarIndex::y(n1), kprime - 1)),
              "T1(y" + std::to_string(n1) + "^" + std::to_string(kprime - 1) + ")"};
    case AlgebraKind::Symplectic:
      if (n1 < n) {
        return {power_of_var(R, VarIndex::x(n1 + 1), kprime),
                "x" + std::to_string(n1 + 1) + "^" + std::to_string(kprime)};
      }
      return {power_of_var(R, VarIndex::y(n), kprime),
              "y" + std::to_string(n) + "^" + std::to_string(kprime)};
  }
  throw std::logic_error("default_seed");
}

std::vector<Polynomial> span_closure(RingDesc ring, const std::vector<DiffOp>& ops,
                                     const std::vector<Polynomial>& start, int sweep_cap) {
  RowSpace space(ring);
  std::vector<Polynomial> frontier;
  for (const auto& p : start) {
    if (const Polynomial* stored = space.insert(p)) frontier.push_back(*stored);
  }
  int sweeps = 0;
  while (!frontier.empty()) {
    if (++sweeps > sweep_cap)
      throw std::runtime_error("span_closure: sweep cap exhausted before stabilization");
    std::vector<Polynomial> next;
    for (const auto& op : ops) {
      for (const auto& f : frontier) {
        Polynomial image = op.apply(f);
        if (image.is_zero()) continue;
        if (const Polynomial* stored = space.insert(std::move(image))) next.push_back(*stored);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Polynomial> basis;
  basis.reserve(space.rows().size());
  for (const auto& [pivot, row] : space.rows()) basis.push_back(row);
  return basis;
}

SeedModule seed_module(const RepTable& table, SingularVector seed, int sweep_cap) {
  if (seed.poly.is_zero()) throw std::invalid_argument("seed_module: zero seed");
  if (!is_singular(table, seed.poly))
    throw std::invalid_argument("seed_module: seed is not K-singular");
  std::vector<Polynomial> basis =
      span_closure(table.config().ring(), table.g1_ops(), {seed.poly}, sweep_cap);
  SeedModule m0;
  m0.seed = std::move(seed);
  m0.profile = exact_rank(basis);
  m0.basis = std::move(basis);
  return m0;
}

}  // namespace oscgk
