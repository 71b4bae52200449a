#include "doctest.h"

#include <set>

#include "oscgk/liealg.hpp"
#include "oscgk/rank.hpp"

using namespace oscgk;

namespace {

std::vector<RepConfig> admissible_configs(int nmax) {
  std::vector<RepConfig> configs;
  for (AlgebraKind kind :
       {AlgebraKind::EvenOrthogonal, AlgebraKind::OddOrthogonal, AlgebraKind::Symplectic}) {
    for (int n = 1; n <= nmax; ++n)
      for (int n1 = 1; n1 <= n; ++n1)
        for (int n2 = n1; n2 <= n; ++n2) configs.push_back(RepConfig{kind, n, n1, n2});
  }
  return configs;
}

/// Flattens a matrix into a degree-1 polynomial over a synthetic ring, one
/// variable per matrix entry, so exact_rank measures matrix span dimensions.
Polynomial flatten(const RepConfig& cfg, const SpMatrix& m) {
  const int size = cfg.matrix_size() + 1;
  RingDesc flat{63, true};
  std::vector<Polynomial::Term> terms;
  for (const auto& [rc, v] : m) {
    int code = rc.first * size + rc.second;
    terms.emplace_back(Monomial::variable(VarIndex::x(code % 63)) *
                           (code >= 63 ? Monomial::variable(VarIndex::y(1), code / 63) : Monomial::one()),
                       Rational(static_cast<long>(v)));
  }
  return Polynomial::from_terms(flat, std::move(terms));
}

}  // namespace

TEST_CASE("basis_cardinality_matches_algebra_dimension") {
  for (const auto& cfg : admissible_configs(4)) {
    RepTable table = build_rep(cfg);
    int expected = cfg.kind == AlgebraKind::EvenOrthogonal ? cfg.n * (2 * cfg.n - 1)
                                                           : cfg.n * (2 * cfg.n + 1);
    CHECK(static_cast<int>(table.basis().size()) == expected);
    CHECK(expected == cfg.dimension());
    for (const auto& e : table.basis()) CHECK(!table.op(e).is_zero());
  }
}

TEST_CASE("matrix_bracket_examples") {
  RepConfig o4{AlgebraKind::EvenOrthogonal, 2, 1, 2};
  // [E12-E43, E21-E34] = (E11-E33) - (E22-E44)
  auto lie = matrix_bracket(o4, BasisElement::gl(1, 2), BasisElement::gl(2, 1));
  REQUIRE(lie.size() == 2);
  CHECK(lie[0].second == BasisElement::gl(1, 1));
  CHECK(lie[0].first == Rational(1));
  CHECK(lie[1].second == BasisElement::gl(2, 2));
  CHECK(lie[1].first == Rational(-1));

  // Cartan elements commute.
  CHECK(matrix_bracket(o4, BasisElement::gl(1, 1), BasisElement::gl(2, 2)).empty());

  RepConfig sp4{AlgebraKind::Symplectic, 2, 1, 1};
  // [E13, E31] = E11 - E33 in sp(4).
  auto spb = matrix_bracket(sp4, BasisElement::raise_elem(1, 1), BasisElement::lower_elem(1, 1));
  REQUIRE(spb.size() == 1);
  CHECK(spb[0].second == BasisElement::gl(1, 1));
  CHECK(spb[0].first == Rational(1));

  RepConfig o5{AlgebraKind::OddOrthogonal, 2, 1, 1};
  auto zz = matrix_bracket(o5, BasisElement::zero_neg(1), BasisElement::zero_neg(2));
  REQUIRE(zz.size() == 1);
  CHECK(zz[0].second == BasisElement::lower_elem(1, 2));
  CHECK(zz[0].first == Rational(1));
}

TEST_CASE("matrix_bracket_antisymmetry_and_jacobi") {
  for (const auto& cfg : admissible_configs(3)) {
    if (cfg.n1 != 1 || cfg.n2 != cfg.n) continue;  // bracket structure does not depend on n1, n2
    RepTable table = build_rep(cfg);
    const auto& basis = table.basis();
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        SpMatrix ab = commutator(matrix_of(cfg, a), matrix_of(cfg, b));
        SpMatrix ba = commutator(matrix_of(cfg, b), matrix_of(cfg, a));
        for (const auto& [rc, v] : ab) {
          auto it = ba.find(rc);
          REQUIRE(it != ba.end());
          CHECK(it->second == -v);
        }
        CHECK(ab.size() == ba.size());
        // Closure: every bracket expands in the declared basis.
        CHECK_NOTHROW(expand_in_basis(cfg, ab));
      }
    }
    // Jacobi at the matrix level over all basis triples.
    std::vector<SpMatrix> mats;
    for (const auto& e : basis) mats.push_back(matrix_of(cfg, e));
    for (const auto& a : mats)
      for (const auto& b : mats)
        for (const auto& c : mats) {
          SpMatrix total = commutator(commutator(a, b), c);
          for (const auto& [rc, v] : commutator(commutator(b, c), a)) {
            auto& slot = total[rc];
            slot += v;
            if (slot == 0) total.erase(rc);
          }
          for (const auto& [rc, v] : commutator(commutator(c, a), b)) {
            auto& slot = total[rc];
            slot += v;
            if (slot == 0) total.erase(rc);
          }
          CHECK(total.empty());
        }
  }
}

TEST_CASE("expand_in_basis_rejects_foreign_matrices") {
  RepConfig o4{AlgebraKind::EvenOrthogonal, 2, 1, 2};
  SpMatrix bad;
  bad[{1, 2}] = 1;  // missing the -E(4,3) partner
  CHECK_THROWS_AS(expand_in_basis(o4, bad), std::domain_error);
  SpMatrix diag;
  diag[{1, 3}] = 1;  // E(1,n+1) alone is symplectic, not orthogonal
  CHECK_THROWS_AS(expand_in_basis(o4, diag), std::domain_error);
}

TEST_CASE("build_rep_spec_examples") {
  RingDesc B2{2, false};
  RepTable split = build_rep(RepConfig{AlgebraKind::EvenOrthogonal, 2, 1, 2});
  CHECK(split.op(BasisElement::gl(2, 1)).to_string() == "-x1*x2 - y1*Dy2");

  RepTable equal = build_rep(RepConfig{AlgebraKind::EvenOrthogonal, 2, 1, 1});
  CHECK(equal.op(BasisElement::gl(2, 1)).to_string() == "-x1*x2 + y1*y2");

  for (int n1 = 1; n1 <= 2; ++n1) {
    RepTable sp = build_rep(RepConfig{AlgebraKind::Symplectic, 2, n1, 2});
    CHECK(sp.op(BasisElement::lower_elem(1, 1)).to_string() == "-x1*y1");
  }
}

TEST_CASE("case_table_matches_built_representation") {
  for (const auto& cfg : admissible_configs(3)) {
    RepTable table = build_rep(cfg);
    std::set<BasisElement> seen;
    for (const auto& root : case_table(cfg)) {
      DiffOp built = table.op(root.elem);
      if (root.sign < 0) built = -built;
      CHECK_MESSAGE(built == root.display,
                    to_string(cfg.kind), " n=", cfg.n, " n1=", cfg.n1, " n2=", cfg.n2, " label (",
                    root.label, "): built ", built.to_string(), " vs display ",
                    root.display.to_string());
      CHECK(!seen.count(root.elem));
      seen.insert(root.elem);
    }
  }
}

TEST_CASE("split_spans_complement_of_kplus_and_cartan") {
  for (const auto& cfg : admissible_configs(3)) {
    RepTable table = build_rep(cfg);
    std::vector<Polynomial> rows;
    for (const auto& e : table.g1()) rows.push_back(flatten(cfg, matrix_of(cfg, e)));
    for (const auto& e : table.g2()) rows.push_back(flatten(cfg, matrix_of(cfg, e)));
    std::size_t split_count = rows.size();
    CHECK(exact_rank(rows).rank == static_cast<int>(split_count));  // independent
    for (const auto& e : table.kplus()) rows.push_back(flatten(cfg, matrix_of(cfg, e)));
    for (const auto& e : table.cartan()) rows.push_back(flatten(cfg, matrix_of(cfg, e)));
    CHECK(exact_rank(rows).rank == cfg.dimension());
  }
}

TEST_CASE("check_homomorphism_passes_for_all_small_configs") {
  for (const auto& cfg : admissible_configs(3)) {
    RepTable table = build_rep(cfg);
    auto violations = check_homomorphism(table);
    CHECK_MESSAGE(violations.empty(), to_string(cfg.kind), " n=", cfg.n, " n1=", cfg.n1,
                  " n2=", cfg.n2, " first pair: ",
                  violations.empty() ? "" : violations.front().a.to_string(cfg) + " , " +
                                                violations.front().b.to_string(cfg));
  }
}

TEST_CASE("check_homomorphism_flags_mutated_table") {
  RepConfig cfg{AlgebraKind::EvenOrthogonal, 2, 1, 2};
  RepTable table = build_rep(cfg);
  std::map<BasisElement, DiffOp> ops;
  for (const auto& e : table.basis()) ops.emplace(e, table.op(e));
  BasisElement victim = BasisElement::gl(2, 1);
  ops.at(victim) = -ops.at(victim);
  RepTable mutated(cfg, std::move(ops), table.basis(), case_table(cfg));
  auto violations = check_homomorphism(mutated);
  REQUIRE(!violations.empty());
  bool names_victim = false;
  for (const auto& v : violations) names_victim |= (v.a == victim || v.b == victim);
  CHECK(names_victim);
}

TEST_CASE("invalid_configs_rejected") {
  CHECK_THROWS_AS(build_rep(RepConfig{AlgebraKind::EvenOrthogonal, 2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_rep(RepConfig{AlgebraKind::EvenOrthogonal, 2, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_rep(RepConfig{AlgebraKind::Symplectic, 8, 1, 1}), std::invalid_argument);
}

TEST_CASE("table_dump_format") {
  RepTable table = build_rep(RepConfig{AlgebraKind::EvenOrthogonal, 2, 1, 2});
  std::string dump = table.dump();
  CHECK(dump.find("E(2,1)-E(3,4) := -x1*x2 - y1*Dy2") != std::string::npos);
}
