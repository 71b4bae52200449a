#pragma once

#include <vector>

#include "oscgk/rational.hpp"

namespace oscgk {

/// Exact C(a, b); zero when b < 0 or b > a. Requires a >= 0.
mpz_class binom(long a, long b);

/// B_0..B_max in the convention fixed empirically by the Faulhaber identity
/// (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(int max_index);

/// sum_{i=0}^{n} i^p via the Bernoulli-number closed form; p >= 1, n >= 0.
Rational faulhaber_sum(int p, long long n);

}  // namespace oscgk
