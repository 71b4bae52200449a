#include "oscgk/counting.hpp"

#include <stdexcept>

namespace oscgk {

mpz_class binom(long a, long b) {
  if (a < 0) throw std::invalid_argument("binom: a must be >= 0");
  if (b < 0 || b > a) return mpz_class(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

std::vector<Rational> bernoulli_numbers(int max_index) {
  if (max_index < 0) throw std::invalid_argument("bernoulli_numbers: negative index");
  // sum_{j<=m} C(m+1, j) B_j = 0 with B_0 = 1.
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(max_index) + 1);
  b.emplace_back(1);
  for (int m = 1; m <= max_index; ++m) {
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += Rational(binom(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(-acc / Rational(binom(m + 1, m)));
  }
  return b;
}

Rational faulhaber_sum(int p, long long n) {
  if (p < 1) throw std::invalid_argument("faulhaber_sum: p must be >= 1");
  if (n < 0) throw std::invalid_argument("faulhaber_sum: n must be >= 0");
  std::vector<Rational> B = bernoulli_numbers(p);
  mpz_class np1(static_cast<long>(n) + 1);
  auto power = [&](int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), np1.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
  };
  Rational total = ratio(power(p + 1), mpz_class(p + 1));
  for (int k = 1; k <= p; ++k) {
    total += B[static_cast<std::size_t>(k)] * ratio(mpz_class(1), mpz_class(p - k + 1)) *
             Rational(binom(p, k)) * Rational(power(p - k + 1));
  }
  return total;
}

}  // namespace oscgk
