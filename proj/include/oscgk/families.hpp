#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscgk/growth.hpp"

namespace oscgk {

enum class FamilyName { Mk, Tk, Sk, Rk, Uk, Vk, Wk, Zk, NprimeK };

std::string to_string(FamilyName name);
std::optional<FamilyName> family_from_string(const std::string& name);

/// One degree-2 generator family of the counting identities, with the
/// parameters it was built from.
struct GeneratorFamily {
  FamilyName name;
  int n = 2;
  int n1 = 1;
  int n2 = 1;  // derived for most families
  std::vector<Polynomial> gens;
  RingDesc ring;
};

/// Builds the family's exact generator list; throws std::invalid_argument
/// when the parameters violate the family's constraints. n1 is ignored by
/// the families that fix it; for Wk the free parameter is n2.
GeneratorFamily build_family(FamilyName name, int n, int n1 = 0, int n2 = 0);

/// The claimed growth exponent of d_k for the family at these parameters.
std::optional<int> claimed_exponent(FamilyName name, int n, int n1);

/// Closed form of Prop 3.1: C(n1+k-1, k) * C(n-n1+k-1, k); requires
/// 1 <= n1 < n.
mpz_class prop31_formula(int n, int n1, int k);

/// dim Span of all products prod g_i^{a_i} with sum a_i = k, by explicit
/// expansion and exact rank. Throws BudgetError when the number of products
/// C(m+k-1, k) exceeds product_cap.
long long span_dim_oracle(const GeneratorFamily& family, int k, std::size_t product_cap = 200000,
                          int threads = 1);

struct ExponentFit {
  std::vector<long long> dk;    // d_0..d_kmax
  std::optional<int> measured;  // finite-difference degree, nullopt = unstable
  std::optional<int> claimed;
  std::string verdict;  // "match", "mismatch", "unstable"
};

ExponentFit fit_family_exponent(const GeneratorFamily& family, int kmax, int window = 3,
                                std::size_t product_cap = 200000, int threads = 1);

}  // namespace oscgk
