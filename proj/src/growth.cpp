#include "oscgk/growth.hpp"

#include "oscgk/parallel.hpp"

namespace oscgk {

FiltrationSeries filtration_series_ops(RingDesc ring, const std::vector<DiffOp>& ops,
                                       const std::vector<Polynomial>& m0, int K,
                                       const GrowthBudget& budget) {
  if (K < 0) throw std::invalid_argument("filtration_series: K must be >= 0");
  FiltrationSeries series;
  RowSpace space(ring);
  std::vector<Polynomial> frontier;
  for (const auto& p : m0) {
    if (const Polynomial* stored = space.insert(p)) frontier.push_back(*stored);
  }
  series.phi.push_back(space.rank());
  for (int k = 1; k <= K; ++k) {
    if (frontier.empty()) {
      series.phi.push_back(space.rank());
      continue;
    }
    // Images in a fixed order (operator index major, frontier index minor);
    // computation may run on several workers, insertion stays serial.
    const std::size_t count = ops.size() * frontier.size();
    auto images = parallel_map<Polynomial>(count, budget.threads, [&](std::size_t idx) {
      const DiffOp& op = ops[idx / frontier.size()];
      return op.apply(frontier[idx % frontier.size()]);
    });
    std::vector<Polynomial> next;
    for (auto& image : images) {
      if (image.is_zero()) continue;
      if (const Polynomial* stored = space.insert(std::move(image))) next.push_back(*stored);
    }
    frontier = std::move(next);
    series.phi.push_back(space.rank());
    if (space.term_count() > budget.max_terms) {
      series.truncated = true;
      break;
    }
  }
  return series;
}

FiltrationSeries filtration_series(const RepTable& table, const SeedModule& m0, int K,
                                   const GrowthBudget& budget) {
  FiltrationSeries series =
      filtration_series_ops(table.config().ring(), table.g2_ops(), m0.basis, K, budget);
  series.seed_label = m0.seed.label;
  return series;
}

std::optional<int> detect_polynomial_degree(const std::vector<long long>& series, int window,
                                            long long* leading_diff) {
  if (window < 1) throw std::invalid_argument("detect_polynomial_degree: window must be >= 1");
  std::vector<long long> diff = series;
  // diff holds the d-th differences; the (d+1)-th differences vanish on the
  // last `window` points exactly when the last window+1 entries here agree.
  for (int d = 0; static_cast<int>(diff.size()) >= window + 1; ++d) {
    bool tail_constant = true;
    for (std::size_t i = diff.size() - static_cast<std::size_t>(window) - 1; i < diff.size(); ++i) {
      if (diff[i] != diff.back()) tail_constant = false;
    }
    if (tail_constant && diff.back() > 0) {
      if (leading_diff) *leading_diff = diff.back();
      return d;
    }
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  return std::nullopt;
}

GrowthEstimate estimate_gk(const FiltrationSeries& series, int window) {
  if (static_cast<int>(series.phi.size()) < window + 2)
    throw std::invalid_argument("estimate_gk: series shorter than window + 2");
  GrowthEstimate est;
  est.window = window;
  long long leading_diff = 0;
  est.degree = detect_polynomial_degree(series.phi, window, &leading_diff);
  if (est.degree) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(*est.degree));
    est.bernstein = leading_diff;
    est.leading = ratio(mpz_class(static_cast<long>(leading_diff)), fact);
  }
  return est;
}

}  // namespace oscgk
