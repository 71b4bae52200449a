#pragma once

#include <optional>

#include "oscgk/graded.hpp"

namespace oscgk {

/// Raised when a combinatorial or memory budget stops a computation.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GrowthBudget {
  std::size_t max_terms = 40'000'000;  // stored terms across all reduced rows
  int threads = 1;
};

struct FiltrationSeries {
  std::vector<long long> phi;  // phi(0..K), or a prefix when truncated
  bool truncated = false;
  std::string seed_label;
};

/// phi(k) = dim of the span of words of length <= k in ops applied to the
/// span of m0, by frontier iteration with incremental exact rank. The
/// frontier carries the reduced residues that entered the space at step k;
/// applying ops to them spans step k+1 modulo the current space.
FiltrationSeries filtration_series_ops(RingDesc ring, const std::vector<DiffOp>& ops,
                                       const std::vector<Polynomial>& m0, int K,
                                       const GrowthBudget& budget = {});

/// phi(k) = dim U_k(g2) M0 for the configured representation.
FiltrationSeries filtration_series(const RepTable& table, const SeedModule& m0, int K,
                                   const GrowthBudget& budget = {});

/// Smallest d whose (d+1)-th finite differences vanish on the last `window`
/// points with positive d-th difference; nullopt when the series is too
/// short or not yet polynomial. leading_diff receives that constant d-th
/// difference when requested.
std::optional<int> detect_polynomial_degree(const std::vector<long long>& series, int window,
                                            long long* leading_diff = nullptr);

struct GrowthEstimate {
  std::optional<int> degree;           // nullopt = unstable
  int window = 3;
  std::optional<Rational> leading;     // c(M)/d!, the Hilbert leading coefficient
  std::optional<long long> bernstein;  // c(M), the constant d-th difference
};

GrowthEstimate estimate_gk(const FiltrationSeries& series, int window = 3);

}  // namespace oscgk
