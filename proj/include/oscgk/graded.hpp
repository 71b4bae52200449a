#pragma once

#include "oscgk/liealg.hpp"
#include "oscgk/rank.hpp"

namespace oscgk {

/// Signed-degree grading weight determined by (n1, n2): x_i counts -1 for
/// i <= n1 and +1 above, y_i counts +1 for i <= n2 and -1 above, x_0 counts +1.
int grade_weight(const RepConfig& config, const Monomial& m);

/// True when every monomial of f has the same weight; reports it in k.
bool weight_homogeneous(const RepConfig& config, const Polynomial& f, int& k);

/// All monomials of weight k' and total degree <= N, ascending in the
/// monomial order. Possibly empty.
std::vector<Monomial> graded_slice(const RepConfig& config, int kprime, int N);

enum class LaplaceKind { EvenD, OddDprime, SpGrading };

LaplaceKind laplace_kind(const RepConfig& config);

/// The variated Laplace operator of the orthogonal kinds, or the diagonal
/// grading operator of the symplectic kind.
DiffOp laplace(const RepConfig& config);

/// Exact basis of ker(laplace) inside the degree-filtered slice, orthogonal
/// kinds only. The operator never raises total degree, so the kernel of the
/// truncation is exactly H_<k'> within {deg <= N}.
std::vector<Polynomial> harmonic_basis(const RepConfig& config, int kprime, int N);

/// True iff f is a weight vector annihilated by every K_+ operator; f must be
/// nonzero.
bool is_singular(const RepTable& table, const Polynomial& f);

struct SingularVector {
  Polynomial poly;
  std::string label;
};

/// Singular-vector catalog of the even-orthogonal case tables: all family
/// entries of weight k' with parameters m1, m2, m <= max_param.
std::vector<SingularVector> singular_catalog(const RepConfig& config, int kprime, int max_param);

/// Twist map sum_i (-2)^i x0^(2i+1) Dhat^i / (2i+1)! used by the odd Case-2
/// positive-weight generators; the sum truncates once Dhat^i kills f.
Polynomial t1_twist(const RepConfig& config, const Polynomial& f);

/// The named generator of the (config, k') module; throws when the
/// configuration has no named seed (an explicit seed is required then).
SingularVector default_seed(const RepConfig& config, int kprime);

struct SeedModule {
  SingularVector seed;
  std::vector<Polynomial> basis;  // reduced rows, ascending by pivot
  RankProfile profile;
};

/// Span closure of {start} under repeated application of ops; sweeps until a
/// full sweep adds no rank. Throws std::runtime_error when sweep_cap is
/// exhausted first.
std::vector<Polynomial> span_closure(RingDesc ring, const std::vector<DiffOp>& ops,
                                     const std::vector<Polynomial>& start, int sweep_cap);

/// M0 = U(g1) seed. Requires is_singular(seed).
SeedModule seed_module(const RepTable& table, SingularVector seed, int sweep_cap = 64);

}  // namespace oscgk
