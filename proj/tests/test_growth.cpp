#include "doctest.h"

#include "oscgk/growth.hpp"
#include "oscgk/counting.hpp"

using namespace oscgk;

namespace {

/// Calibration setup: commuting multiplications by x_1..x_c acting on 1.
std::pair<std::vector<DiffOp>, std::vector<Polynomial>> polynomial_ring_ops(int c) {
  RingDesc ring{c, false};
  std::vector<DiffOp> ops;
  for (int i = 1; i <= c; ++i) ops.push_back(DiffOp::mul(Polynomial::variable(ring, VarIndex::x(i))));
  std::vector<Polynomial> m0 = {Polynomial::constant(ring, Rational(1))};
  return {std::move(ops), std::move(m0)};
}

/// Brute-force oracle: spans of all words of length <= k applied to m0.
long long word_span_dim(RingDesc ring, const std::vector<DiffOp>& ops,
                        const std::vector<Polynomial>& m0, int k) {
  std::vector<Polynomial> rows = m0;
  std::vector<Polynomial> layer = m0;
  for (int len = 1; len <= k; ++len) {
    std::vector<Polynomial> next;
    for (const auto& op : ops) {
      for (const auto& f : layer) next.push_back(op.apply(f));
    }
    rows.insert(rows.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return exact_rank(rows).rank;
}

}  // namespace

TEST_CASE("estimate_examples") {
  FiltrationSeries quad;
  quad.phi = {1, 3, 6, 10, 15, 21};  // C(k+2, 2)
  GrowthEstimate est = estimate_gk(quad, 3);
  REQUIRE(est.degree.has_value());
  CHECK(*est.degree == 2);
  CHECK(*est.leading == ratio(1, 2));
  CHECK(*est.bernstein == 1);

  FiltrationSeries flat;
  flat.phi = {5, 5, 5, 5};
  GrowthEstimate est0 = estimate_gk(flat, 2);
  REQUIRE(est0.degree.has_value());
  CHECK(*est0.degree == 0);
  CHECK(*est0.bernstein == 5);

  FiltrationSeries noisy;
  noisy.phi = {1, 2, 4, 8, 16, 32, 64};
  CHECK(!estimate_gk(noisy, 3).degree.has_value());

  FiltrationSeries tiny;
  tiny.phi = {1, 2};
  CHECK_THROWS_AS(estimate_gk(tiny, 3), std::invalid_argument);
}

TEST_CASE("polynomial_ring_calibration") {
  for (int c = 1; c <= 4; ++c) {
    auto [ops, m0] = polynomial_ring_ops(c);
    FiltrationSeries series = filtration_series_ops(RingDesc{c, false}, ops, m0, 9);
    REQUIRE(series.phi.size() == 10);
    CHECK(!series.truncated);
    for (int k = 0; k <= 9; ++k) {
      CHECK(series.phi[static_cast<std::size_t>(k)] == binom(c + k, k).get_si());
    }
    GrowthEstimate est = estimate_gk(series, 3);
    REQUIRE(est.degree.has_value());
    CHECK(*est.degree == c);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(c));
    CHECK(*est.leading == ratio(mpz_class(1), fact));
  }
}

TEST_CASE("empty_generating_set_freezes_the_series") {
  RingDesc ring{2, false};
  std::vector<Polynomial> m0 = {Polynomial::parse(ring, "x1"), Polynomial::parse(ring, "y2"),
                                Polynomial::parse(ring, "2*x1")};
  FiltrationSeries series = filtration_series_ops(ring, {}, m0, 6);
  REQUIRE(series.phi.size() == 7);
  for (long long v : series.phi) CHECK(v == 2);
}

TEST_CASE("frontier_iteration_matches_word_enumeration") {
  for (RepConfig cfg : {RepConfig{AlgebraKind::EvenOrthogonal, 2, 1, 1},
                        RepConfig{AlgebraKind::EvenOrthogonal, 2, 1, 2},
                        RepConfig{AlgebraKind::Symplectic, 2, 1, 1},
                        RepConfig{AlgebraKind::OddOrthogonal, 2, 1, 1}}) {
    RepTable table = build_rep(cfg);
    SeedModule m0 = seed_module(table, default_seed(cfg, -1));
    FiltrationSeries series = filtration_series(table, m0, 3);
    for (int k = 0; k <= 3; ++k) {
      CHECK(series.phi[static_cast<std::size_t>(k)] ==
            word_span_dim(cfg.ring(), table.g2_ops(), m0.basis, k));
    }
    // phi nondecreasing, phi(0) = dim M0, one-step growth bounded by the
    // generator count.
    CHECK(series.phi[0] == m0.profile.rank);
    for (std::size_t k = 1; k < series.phi.size(); ++k) {
      CHECK(series.phi[k] >= series.phi[k - 1]);
      CHECK(series.phi[k] <=
            series.phi[k - 1] * (1 + static_cast<long long>(table.g2().size())));
    }
  }
}

TEST_CASE("o4_equal_split_series_is_linear") {
  RepConfig cfg{AlgebraKind::EvenOrthogonal, 2, 1, 1};
  RepTable table = build_rep(cfg);
  SeedModule m0 = seed_module(table, default_seed(cfg, -1));
  FiltrationSeries series = filtration_series(table, m0, 11);
  for (int k = 0; k <= 11; ++k) CHECK(series.phi[static_cast<std::size_t>(k)] == 2 * k + 2);
  GrowthEstimate est = estimate_gk(series, 3);
  REQUIRE(est.degree.has_value());
  CHECK(*est.degree == 1);  // 2n-3 at n=2

  // Reported degree is stable under extending the horizon.
  FiltrationSeries longer = filtration_series(table, m0, 14);
  CHECK(*estimate_gk(longer, 3).degree == 1);
}

TEST_CASE("term_budget_truncates_with_flag") {
  RepConfig cfg{AlgebraKind::EvenOrthogonal, 2, 1, 1};
  RepTable table = build_rep(cfg);
  SeedModule m0 = seed_module(table, default_seed(cfg, -1));
  GrowthBudget budget;
  budget.max_terms = 4;
  FiltrationSeries series = filtration_series(table, m0, 11, budget);
  CHECK(series.truncated);
  CHECK(series.phi.size() < 12);
}

TEST_CASE("parallel_series_identical") {
  RepConfig cfg{AlgebraKind::Symplectic, 2, 1, 2};
  RepTable table = build_rep(cfg);
  SeedModule m0 = seed_module(table, default_seed(cfg, -1));
  GrowthBudget one, eight;
  eight.threads = 8;
  FiltrationSeries a = filtration_series(table, m0, 7, one);
  FiltrationSeries b = filtration_series(table, m0, 7, eight);
  CHECK(a.phi == b.phi);
}
