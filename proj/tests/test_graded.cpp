#include "doctest.h"

#include <set>

#include "oscgk/graded.hpp"
#include "test_util.hpp"

using namespace oscgk;

namespace {

const RepConfig kO4_11{AlgebraKind::EvenOrthogonal, 2, 1, 1};
const RepConfig kO4_12{AlgebraKind::EvenOrthogonal, 2, 1, 2};
const RepConfig kO5_12{AlgebraKind::OddOrthogonal, 2, 1, 2};
const RepConfig kSp4_11{AlgebraKind::Symplectic, 2, 1, 1};

Polynomial P(const RepConfig& cfg, const std::string& text) {
  return Polynomial::parse(cfg.ring(), text);
}

bool in_span(const std::vector<Polynomial>& basis, const Polynomial& v) {
  RowSpace space(v.ring());
  for (const auto& b : basis) space.insert(b);
  return space.insert(v) == nullptr;
}

}  // namespace

TEST_CASE("grade_weight_basic_values") {
  // n = 2, n1 = n2 = 1: x1 -> -1, x2 -> +1, y1 -> +1, y2 -> -1.
  CHECK(grade_weight(kO4_11, Monomial::variable(VarIndex::x(1))) == -1);
  CHECK(grade_weight(kO4_11, Monomial::variable(VarIndex::x(2))) == 1);
  CHECK(grade_weight(kO4_11, Monomial::variable(VarIndex::y(1))) == 1);
  CHECK(grade_weight(kO4_11, Monomial::variable(VarIndex::y(2))) == -1);
  CHECK(grade_weight(kO4_11, Monomial::one()) == 0);
  // x0 adds +1 per exponent.
  CHECK(grade_weight(kO5_12, Monomial::variable(VarIndex::x(0), 3)) == 3);
  // Additivity over products.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Monomial a = testutil::random_monomial(rng, kO5_12.ring(), 4);
    Monomial b = testutil::random_monomial(rng, kO5_12.ring(), 4);
    CHECK(grade_weight(kO5_12, a * b) == grade_weight(kO5_12, a) + grade_weight(kO5_12, b));
  }
}

TEST_CASE("graded_slice_examples_and_enumeration_oracle") {
  auto slice = graded_slice(kO4_11, -1, 1);
  REQUIRE(slice.size() == 2);
  CHECK(slice[0] == Monomial::variable(VarIndex::x(1)));
  CHECK(slice[1] == Monomial::variable(VarIndex::y(2)));

  auto unit = graded_slice(kO4_11, 0, 0);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].is_one());

  CHECK_THROWS_AS(graded_slice(kO4_11, 0, -1), std::invalid_argument);

  // Independent oracle: filter a full enumeration by the weight definition.
  for (const RepConfig& cfg : {kO4_12, kO5_12, kSp4_11}) {
    for (int kprime : {-3, -1, 0, 2}) {
      auto got = graded_slice(cfg, kprime, 4);
      std::vector<Monomial> expected;
      for (const auto& m : testutil::all_monomials(cfg.ring(), 4)) {
        int w = 0;
        for (int s = 0; s < m.slot_count(); ++s) {
          auto slot = m.slot(s);
          int idx = slot.var < 64 ? slot.var : slot.var - 64;
          bool is_x = slot.var < 64;
          int unit_w;
          if (is_x) unit_w = idx == 0 ? 1 : (idx <= cfg.n1 ? -1 : 1);
          else unit_w = idx <= cfg.n2 ? 1 : -1;
          w += unit_w * slot.exp;
        }
        if (w == kprime) expected.push_back(m);
      }
      std::sort(expected.begin(), expected.end(), MonomialLess{});
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
    }
  }
}

TEST_CASE("laplace_operator_displays") {
  CHECK(laplace(kO4_12).to_string() == "x1*Dy1 - Dx2*Dy2");
  CHECK(laplace(kO5_12).to_string() == "-2*x1*Dy1 + Dx0^2 + 2*Dx2*Dy2");
  CHECK(laplace(kSp4_11).to_string() == "-x1*Dx1 + x2*Dx2 + y1*Dy1 - y2*Dy2");
  CHECK(laplace_kind(kO4_12) == LaplaceKind::EvenD);
  CHECK(laplace_kind(kO5_12) == LaplaceKind::OddDprime);
  CHECK(laplace_kind(kSp4_11) == LaplaceKind::SpGrading);
}

TEST_CASE("sp_grading_operator_has_weight_eigenvalues") {
  DiffOp d = laplace(kSp4_11);
  for (const auto& m : testutil::all_monomials(kSp4_11.ring(), 4)) {
    Polynomial f = Polynomial::monomial(kSp4_11.ring(), m);
    Polynomial expected = f;
    expected.mul_scalar(Rational(grade_weight(kSp4_11, m)));
    CHECK(d.apply(f) == expected);
  }
}

TEST_CASE("laplace_lowers_weight_by_two_and_never_raises_degree") {
  for (const RepConfig& cfg : {kO4_11, kO4_12, kO5_12}) {
    DiffOp d = laplace(cfg);
    for (const auto& m : testutil::all_monomials(cfg.ring(), 4)) {
      Polynomial image = d.apply(Polynomial::monomial(cfg.ring(), m));
      if (image.is_zero()) continue;
      CHECK(image.degree() <= m.degree());
      int k = 0;
      CHECK(weight_homogeneous(cfg, image, k));
      CHECK(k == grade_weight(cfg, m) - 2);
    }
  }
}

TEST_CASE("table_operators_preserve_the_grading") {
  for (const RepConfig& cfg : {kO4_11, kO4_12, kO5_12, kSp4_11,
                               RepConfig{AlgebraKind::Symplectic, 2, 1, 2}}) {
    RepTable table = build_rep(cfg);
    for (const auto& e : table.basis()) {
      int shift = 0;
      bool have = false;
      for (const auto& t : table.op(e).terms()) {
        int s = grade_weight(cfg, t.mult) - grade_weight(cfg, t.deriv);
        if (!have) {
          shift = s;
          have = true;
        } else {
          CHECK(s == shift);
        }
      }
      REQUIRE(have);
      CHECK(shift == 0);  // the whole algebra preserves the Z-grading
      for (const auto& m : testutil::all_monomials(cfg.ring(), 3)) {
        Polynomial image = table.op(e).apply(Polynomial::monomial(cfg.ring(), m));
        if (image.is_zero()) continue;
        int k = 0;
        CHECK(weight_homogeneous(cfg, image, k));
        CHECK(k == grade_weight(cfg, m) + shift);
      }
    }
  }
}

TEST_CASE("harmonic_basis_examples") {
  auto h = harmonic_basis(kO4_11, -1, 1);
  REQUIRE(h.size() == 2);
  CHECK(h[0] == P(kO4_11, "x1"));
  CHECK(h[1] == P(kO4_11, "y2"));

  auto h2 = harmonic_basis(kO4_12, -2, 2);
  CHECK(in_span(h2, P(kO4_12, "x1^2")));

  auto h0 = harmonic_basis(kO4_12, 0, 0);
  REQUIRE(h0.size() == 1);
  CHECK(h0[0] == P(kO4_12, "1"));

  CHECK_THROWS_AS(harmonic_basis(kSp4_11, -1, 2), std::invalid_argument);

  // Hand-derived: the weight -1, degree <= 3 kernel for o(4), n1 = n2 = 1 is
  // spanned by x1, y2, x1^2 x2 - x1 y1 y2, x1 x2 y2 - y1 y2^2.
  auto h3 = harmonic_basis(kO4_11, -1, 3);
  REQUIRE(h3.size() == 4);
  CHECK(in_span(h3, P(kO4_11, "x1")));
  CHECK(in_span(h3, P(kO4_11, "y2")));
  CHECK(in_span(h3, P(kO4_11, "x1^2*x2 - x1*y1*y2")));
  CHECK(in_span(h3, P(kO4_11, "x1*x2*y2 - y1*y2^2")));
  CHECK(!in_span(h3, P(kO4_11, "x1^2*x2")));
}

TEST_CASE("harmonic_basis_dimension_matches_rank_oracle") {
  for (const RepConfig& cfg : {kO4_11, kO4_12, kO5_12}) {
    DiffOp d = laplace(cfg);
    for (int kprime : {-2, -1, 0}) {
      for (int N : {2, 4}) {
        auto slice = graded_slice(cfg, kprime, N);
        auto kernel = harmonic_basis(cfg, kprime, N);
        std::vector<Polynomial> images;
        for (const auto& m : slice) images.push_back(d.apply(Polynomial::monomial(cfg.ring(), m)));
        int image_rank = exact_rank(images).rank;
        CHECK(static_cast<int>(kernel.size()) == static_cast<int>(slice.size()) - image_rank);
        CHECK(exact_rank(kernel).rank == static_cast<int>(kernel.size()));
        for (const auto& f : kernel) {
          CHECK(d.apply(f).is_zero());
          int k = 0;
          CHECK(weight_homogeneous(cfg, f, k));
          CHECK(k == kprime);
          CHECK(f.degree() <= N);
        }
      }
    }
  }
}

TEST_CASE("harmonics_stay_harmonic_under_the_action") {
  for (const RepConfig& cfg : {kO4_11, kO4_12, kO5_12}) {
    RepTable table = build_rep(cfg);
    DiffOp d = laplace(cfg);
    for (const auto& f : harmonic_basis(cfg, -1, 4)) {
      for (const auto& e : table.basis()) {
        CHECK(d.apply(table.op(e).apply(f)).is_zero());
      }
    }
  }
}

TEST_CASE("is_singular_examples") {
  RepTable t11 = build_rep(kO4_11);
  CHECK(is_singular(t11, P(kO4_11, "x1^3")));

  RepConfig o6_22{AlgebraKind::EvenOrthogonal, 3, 2, 2};
  RepTable t22 = build_rep(o6_22);
  CHECK(is_singular(t22, P(o6_22, "x2") * P(o6_22, "x1*y2 - x2*y1").pow(2)));

  RepTable t12 = build_rep(kO4_12);
  CHECK(!is_singular(t12, P(kO4_12, "x1 + x2")));

  CHECK_THROWS_AS(is_singular(t11, Polynomial::zero(kO4_11.ring())), std::invalid_argument);
}

TEST_CASE("singular_catalog_entries_are_singular_and_harmonic") {
  for (int kprime : {-4, -3, -2, -1, 0}) {
    for (const RepConfig& cfg :
         {kO4_11, kO4_12, RepConfig{AlgebraKind::EvenOrthogonal, 2, 2, 2}}) {
      RepTable table = build_rep(cfg);
      DiffOp d = laplace(cfg);
      for (const auto& sv : singular_catalog(cfg, kprime, 4)) {
        CHECK_MESSAGE(is_singular(table, sv.poly), sv.label, " k'=", kprime);
        CHECK_MESSAGE(d.apply(sv.poly).is_zero(), sv.label, " not harmonic");
        int k = 0;
        CHECK(weight_homogeneous(cfg, sv.poly, k));
        CHECK(k == kprime);
      }
    }
  }
  // n1+1 = n2 = n keeps only the (c) family.
  for (const auto& sv : singular_catalog(kO4_12, -2, 4)) {
    CHECK(sv.label.substr(0, 7) == "case1-c");
  }
  CHECK_THROWS_AS(singular_catalog(kSp4_11, -1, 4), std::invalid_argument);
}

TEST_CASE("t1_twist_value_and_harmonicity") {
  RepConfig cfg{AlgebraKind::OddOrthogonal, 2, 1, 1};
  Polynomial twisted = t1_twist(cfg, P(cfg, "y1^2"));
  CHECK(twisted == P(cfg, "x0*y1^2 + 2/3*x0^3*x1*y1 + 1/15*x0^5*x1^2"));
  CHECK(laplace(cfg).apply(twisted).is_zero());
  RepTable table = build_rep(cfg);
  CHECK(is_singular(table, twisted));
  int k = 0;
  CHECK(weight_homogeneous(cfg, twisted, k));
  CHECK(k == 3);
}

TEST_CASE("default_seed_named_generators") {
  CHECK(default_seed(kO4_11, -2).poly == P(kO4_11, "x1^2"));
  CHECK(default_seed(kO4_11, 0).poly == P(kO4_11, "1"));
  CHECK_THROWS_AS(default_seed(kO4_11, 1), std::invalid_argument);

  RepConfig sp22{AlgebraKind::Symplectic, 2, 2, 2};
  CHECK(default_seed(sp22, 2).poly == P(sp22, "y2^2"));
  CHECK(default_seed(RepConfig{AlgebraKind::Symplectic, 2, 1, 2}, 1).poly == P(kSp4_11, "x2"));

  RepConfig odd11{AlgebraKind::OddOrthogonal, 2, 1, 1};
  CHECK(default_seed(odd11, 1).poly == Polynomial::parse(odd11.ring(), "x0"));
  RepConfig odd12{AlgebraKind::OddOrthogonal, 2, 1, 2};
  CHECK(default_seed(odd12, 2).poly == Polynomial::parse(odd12.ring(), "x2^2"));
}

TEST_CASE("seed_module_closures") {
  RepTable t11 = build_rep(kO4_11);
  SeedModule m0 = seed_module(t11, {P(kO4_11, "x1"), "x1"});
  REQUIRE(m0.basis.size() == 2);
  CHECK(in_span(m0.basis, P(kO4_11, "x1")));
  CHECK(in_span(m0.basis, P(kO4_11, "y2")));
  CHECK(m0.profile.rank == 2);
  // Closed under every g1 operator.
  for (const auto& op : t11.g1_ops()) {
    for (const auto& b : m0.basis) {
      Polynomial image = op.apply(b);
      if (!image.is_zero()) CHECK(in_span(m0.basis, image));
    }
  }

  SeedModule unit = seed_module(t11, {P(kO4_11, "1"), "1"});
  CHECK(unit.basis.size() == 1);

  RepConfig sp22{AlgebraKind::Symplectic, 2, 2, 2};
  RepTable tsp = build_rep(sp22);
  SeedModule spm = seed_module(tsp, {P(sp22, "y2^2"), "y2^2"});
  CHECK(spm.basis.size() == 3);  // y2^2, y1 y2, y1^2

  CHECK_THROWS_AS(seed_module(t11, {Polynomial::zero(kO4_11.ring()), "0"}), std::invalid_argument);
  RepTable t12 = build_rep(kO4_12);
  CHECK_THROWS_AS(seed_module(t12, {P(kO4_12, "x1 + x2"), "bad"}), std::invalid_argument);
}

TEST_CASE("span_closure_cap_guards_non_nilpotent_sets") {
  RingDesc ring{1, false};
  DiffOp mul = DiffOp::mul(Polynomial::variable(ring, VarIndex::x(1)));
  CHECK_THROWS_AS(span_closure(ring, {mul}, {Polynomial::constant(ring, Rational(1))}, 5),
                  std::runtime_error);
}
