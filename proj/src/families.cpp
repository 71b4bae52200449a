#include "oscgk/families.hpp"

#include "oscgk/counting.hpp"
#include "oscgk/parallel.hpp"

namespace oscgk {

std::string to_string(FamilyName name) {
  switch (name) {
    case FamilyName::Mk: return "Mk";
    case FamilyName::Tk: return "Tk";
    case FamilyName::Sk: return "Sk";
    case FamilyName::Rk: return "Rk";
    case FamilyName::Uk: return "Uk";
    case FamilyName::Vk: return "Vk";
    case FamilyName::Wk: return "Wk";
    case FamilyName::Zk: return "Zk";
    case FamilyName::NprimeK: return "Nk";
  }
  return "?";
}

std::optional<FamilyName> family_from_string(const std::string& name) {
  if (name == "Mk") return FamilyName::Mk;
  if (name == "Tk") return FamilyName::Tk;
  if (name == "Sk") return FamilyName::Sk;
  if (name == "Rk") return FamilyName::Rk;
  if (name == "Uk") return FamilyName::Uk;
  if (name == "Vk") return FamilyName::Vk;
  if (name == "Wk") return FamilyName::Wk;
  if (name == "Zk") return FamilyName::Zk;
  if (name == "Nk" || name == "NprimeK") return FamilyName::NprimeK;
  return std::nullopt;
}

namespace {

Polynomial xv(RingDesc R, int i) { return Polynomial::variable(R, VarIndex::x(i)); }
Polynomial yv(RingDesc R, int i) { return Polynomial::variable(R, VarIndex::y(i)); }

Polynomial xy_anti(RingDesc R, int i, int r) {  // x_i y_r - x_r y_i
  return xv(R, i) * yv(R, r) - xv(R, r) * yv(R, i);
}

Polynomial xx_minus_yy(RingDesc R, int i, int t) {  // x_i x_t - y_i y_t
  return xv(R, i) * xv(R, t) - yv(R, i) * yv(R, t);
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("build_family: " + what);
}

}  // namespace

GeneratorFamily build_family(FamilyName name, int n, int n1, int n2) {
  expect(n >= 1 && n <= 7, "n must be in 1..7");
  RingDesc R{n, false};
  GeneratorFamily fam;
  fam.name = name;
  fam.n = n;
  fam.ring = R;
  std::vector<Polynomial>& g = fam.gens;
  switch (name) {
    case FamilyName::Mk:
      expect(1 <= n1 && n1 < n, "Mk needs 1 <= n1 < n");
      fam.n1 = fam.n2 = n1;
      for (int i = 1; i <= n1; ++i)
        for (int t = n1 + 1; t <= n; ++t) g.push_back(xv(R, i) * xv(R, t));
      return fam;
    case FamilyName::Tk:
      expect(n >= 2, "Tk needs n >= 2");
      fam.n1 = fam.n2 = 1;
      for (int p = 2; p <= n; ++p)
        for (int t = p + 1; t <= n; ++t) g.push_back(xy_anti(R, p, t));
      for (int t = 2; t <= n; ++t) g.push_back(xx_minus_yy(R, 1, t));
      return fam;
    case FamilyName::Sk:
      expect(n >= 2, "Sk needs n >= 2");
      fam.n1 = fam.n2 = n - 1;
      for (int i = 1; i <= n - 1; ++i)
        for (int r = i + 1; r <= n - 1; ++r) g.push_back(xy_anti(R, i, r));
      for (int i = 1; i <= n - 1; ++i) g.push_back(xx_minus_yy(R, i, n));
      return fam;
    case FamilyName::Rk:
      expect(n >= 2, "Rk needs n >= 2");
      fam.n1 = fam.n2 = n;
      for (int i = 1; i <= n; ++i)
        for (int r = i + 1; r <= n; ++r) g.push_back(xy_anti(R, i, r));
      return fam;
    case FamilyName::Uk:
      expect(1 < n1 && n1 < n - 1, "Uk needs 1 < n1 < n-1");
      fam.n1 = fam.n2 = n1;
      for (int p = n1 + 1; p <= n; ++p)
        for (int t = p + 1; t <= n; ++t) g.push_back(xy_anti(R, p, t));
      for (int i = 1; i <= n1; ++i)
        for (int r = i + 1; r <= n1; ++r) g.push_back(xy_anti(R, i, r));
      for (int i = 1; i <= n1; ++i)
        for (int t = n1 + 1; t <= n; ++t) g.push_back(xx_minus_yy(R, i, t));
      return fam;
    case FamilyName::Vk:
      expect(1 < n1 && n1 < n - 1, "Vk needs 1 < n1 < n-1");
      fam.n1 = n1;
      fam.n2 = n - 1;
      for (int i = 1; i <= n1; ++i)
        for (int s = n1 + 1; s <= n - 1; ++s) g.push_back(xv(R, i) * xv(R, s));
      for (int i = 1; i <= n1; ++i)
        for (int s = n1 + 1; s <= n - 1; ++s) g.push_back(xv(R, i) * yv(R, s));
      for (int s = n1 + 1; s <= n - 1; ++s) g.push_back(xv(R, s) * yv(R, n));
      for (int s = n1 + 1; s <= n - 1; ++s) g.push_back(yv(R, s) * yv(R, n));
      for (int i = 1; i <= n1; ++i) g.push_back(xx_minus_yy(R, i, n));
      for (int i = 1; i <= n1; ++i)
        for (int r = i + 1; r <= n1; ++r) g.push_back(xy_anti(R, i, r));
      return fam;
    case FamilyName::Wk:
      expect(1 < n2 && n2 < n - 1, "Wk needs 1 < n2 < n-1");
      fam.n1 = 1;
      fam.n2 = n2;
      for (int s = 2; s <= n2; ++s) g.push_back(xv(R, 1) * xv(R, s));
      for (int s = 2; s <= n2; ++s) g.push_back(xv(R, 1) * yv(R, s));
      for (int s = 2; s <= n2; ++s)
        for (int t = n2 + 1; t <= n; ++t) g.push_back(xv(R, s) * yv(R, t));
      for (int s = 2; s <= n2; ++s)
        for (int t = n2 + 1; t <= n; ++t) g.push_back(yv(R, s) * yv(R, t));
      for (int t = n2 + 1; t <= n; ++t) g.push_back(xx_minus_yy(R, 1, t));
      for (int p = n2 + 1; p <= n; ++p)
        for (int t = p + 1; t <= n; ++t) g.push_back(xy_anti(R, p, t));
      return fam;
    case FamilyName::Zk:
      expect(1 < n1 && n1 < n, "Zk needs 1 < n1 < n");
      fam.n1 = n1;
      fam.n2 = n;
      for (int i = 1; i <= n1; ++i)
        for (int s = n1 + 1; s <= n; ++s) g.push_back(xv(R, i) * xv(R, s));
      for (int i = 1; i <= n1; ++i)
        for (int s = n1 + 1; s <= n; ++s) g.push_back(xv(R, i) * yv(R, s));
      for (int i = 1; i <= n1; ++i)
        for (int r = i + 1; r <= n1; ++r) g.push_back(xy_anti(R, i, r));
      return fam;
    case FamilyName::NprimeK:
      // Index ranges follow the split-parameter blocks
      // i <= n1 < s <= n2 < t <= n, matching the torsion-free operator set.
      expect(1 < n1 && n1 < n2 && n2 < n - 1, "Nk needs 1 < n1 < n2 < n-1");
      fam.n1 = n1;
      fam.n2 = n2;
      for (int i = 1; i <= n1; ++i)
        for (int s = n1 + 1; s <= n2; ++s) g.push_back(xv(R, i) * xv(R, s));
      for (int s = n1 + 1; s <= n2; ++s)
        for (int t = n2 + 1; t <= n; ++t) g.push_back(yv(R, s) * yv(R, t));
      for (int i = 1; i <= n1; ++i)
        for (int s = n1 + 1; s <= n2; ++s) g.push_back(xv(R, i) * yv(R, s));
      for (int s = n1 + 1; s <= n2; ++s)
        for (int t = n2 + 1; t <= n; ++t) g.push_back(xv(R, s) * yv(R, t));
      for (int i = 1; i <= n1; ++i)
        for (int t = n2 + 1; t <= n; ++t) g.push_back(xx_minus_yy(R, i, t));
      for (int i = 1; i <= n1; ++i)
        for (int r = i + 1; r <= n1; ++r) g.push_back(xy_anti(R, i, r));
      for (int p = n2 + 1; p <= n; ++p)
        for (int t = p + 1; t <= n; ++t) g.push_back(xy_anti(R, p, t));
      return fam;
  }
  throw std::logic_error("build_family");
}

std::optional<int> claimed_exponent(FamilyName name, int n, int n1) {
  switch (name) {
    case FamilyName::Mk: return n - 2;
    case FamilyName::Tk:
    case FamilyName::Sk:
    case FamilyName::Rk:
      if (n <= 3) return 2 * n - 4;
      if (n == 4) return 2 * n - 3;
      return 2 * n - 2;
    case FamilyName::Uk:
      // No row is claimed for n = 2, 3 (the constraints exclude them anyway).
      if (n == 4) return 2 * n - 3;
      if (n >= 5) return 2 * n - 2;
      return std::nullopt;
    case FamilyName::Vk:
    case FamilyName::Wk:
    case FamilyName::NprimeK:
      return 2 * n - 2;
    case FamilyName::Zk:
      return n1 == 2 ? 2 * n - 3 : 2 * n - 2;
  }
  return std::nullopt;
}

mpz_class prop31_formula(int n, int n1, int k) {
  if (!(1 <= n1 && n1 < n)) throw std::invalid_argument("prop31_formula: need 1 <= n1 < n");
  if (k < 0) throw std::invalid_argument("prop31_formula: k >= 0");
  return binom(n1 + k - 1, k) * binom(n - n1 + k - 1, k);
}

namespace {

/// All exponent tuples (a_1..a_m) with sum k, lexicographic.
void enumerate_tuples(int m, int k, std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> current(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == m - 1) {
      current[static_cast<std::size_t>(pos)] = static_cast<unsigned>(remaining);
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current[static_cast<std::size_t>(pos)] = static_cast<unsigned>(e);
      self(self, pos + 1, remaining - e);
    }
  };
  if (m == 0) {
    if (k == 0) out.push_back({});
    return;
  }
  rec(rec, 0, k);
}

}  // namespace

long long span_dim_oracle(const GeneratorFamily& family, int k, std::size_t product_cap,
                          int threads) {
  if (k < 0) throw std::invalid_argument("span_dim_oracle: k >= 0");
  const int m = static_cast<int>(family.gens.size());
  if (m == 0) return k == 0 ? 1 : 0;
  mpz_class count = binom(m + k - 1, k);
  if (count > static_cast<unsigned long>(product_cap))
    throw BudgetError("span_dim_oracle: " + count.get_str() + " products exceed the cap of " +
                      std::to_string(product_cap));

  // Power tables g_i^e keep per-tuple work down to m-1 multiplications.
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    powers[static_cast<std::size_t>(i)].push_back(Polynomial::constant(family.ring, Rational(1)));
    for (int e = 1; e <= k; ++e)
      powers[static_cast<std::size_t>(i)].push_back(powers[static_cast<std::size_t>(i)].back() *
                                                    family.gens[static_cast<std::size_t>(i)]);
  }

  std::vector<std::vector<unsigned>> tuples;
  enumerate_tuples(m, k, tuples);
  auto expansions = parallel_map<Polynomial>(tuples.size(), threads, [&](std::size_t idx) {
    Polynomial prod = Polynomial::constant(family.ring, Rational(1));
    for (int i = 0; i < m; ++i) {
      unsigned e = tuples[idx][static_cast<std::size_t>(i)];
      if (e > 0) prod = prod * powers[static_cast<std::size_t>(i)][e];
    }
    return prod;
  });
  RowSpace space(family.ring);
  for (auto& p : expansions) space.insert(std::move(p));
  return space.rank();
}

ExponentFit fit_family_exponent(const GeneratorFamily& family, int kmax, int window,
                                std::size_t product_cap, int threads) {
  if (kmax < 4) throw std::invalid_argument("fit_family_exponent: kmax must be >= 4");
  ExponentFit fit;
  for (int k = 0; k <= kmax; ++k)
    fit.dk.push_back(span_dim_oracle(family, k, product_cap, threads));
  fit.measured = detect_polynomial_degree(fit.dk, window);
  fit.claimed = claimed_exponent(family.name, family.n, family.n1);
  if (!fit.measured) {
    fit.verdict = "unstable";
  } else if (!fit.claimed) {
    fit.verdict = "no-claim";
  } else {
    fit.verdict = (*fit.measured == *fit.claimed) ? "match" : "mismatch";
  }
  return fit;
}

}  // namespace oscgk
