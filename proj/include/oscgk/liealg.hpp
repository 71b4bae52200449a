#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oscgk/weyl.hpp"

namespace oscgk {

enum class AlgebraKind { EvenOrthogonal, OddOrthogonal, Symplectic };

std::string to_string(AlgebraKind kind);
std::optional<AlgebraKind> algebra_from_string(const std::string& name);

/// Configuration of one oscillator representation: the algebra, its rank
/// parameter n and the splitting parameters 1 <= n1 <= n2 <= n.
struct RepConfig {
  AlgebraKind kind = AlgebraKind::EvenOrthogonal;
  int n = 1;
  int n1 = 1;
  int n2 = 1;

  void validate() const;
  RingDesc ring() const { return RingDesc{n, kind == AlgebraKind::OddOrthogonal}; }
  int matrix_size() const { return kind == AlgebraKind::OddOrthogonal ? 2 * n + 1 : 2 * n; }
  /// Dimension of the algebra: n(2n-1) even-orthogonal, n(2n+1) otherwise.
  int dimension() const;
  bool case_two() const { return n1 == n2; }

  friend bool operator==(const RepConfig&, const RepConfig&) = default;
};

/// Canonical basis element of the matrix algebra.
///
///   Gl(i,j)    E_{i,j} - E_{n+j,n+i}                       (all kinds)
///   Raise(i,j) E_{i,n+j} - E_{j,n+i}, i<j                  (orthogonal)
///              E_{i,n+j} + E_{j,n+i}, i<j;  E_{i,n+i}, i=j (symplectic)
///   Lower(i,j) E_{n+j,i} - E_{n+i,j}, i<j                  (orthogonal)
///              E_{n+i,j} + E_{n+j,i}, i<j;  E_{n+i,i}, i=j (symplectic)
///   ZeroNeg(i) E_{0,i} - E_{n+i,0}                         (odd only)
///   ZeroPos(i) E_{0,n+i} - E_{i,0}                         (odd only)
struct BasisElement {
  enum class Family : int { Gl = 0, Raise = 1, Lower = 2, ZeroNeg = 3, ZeroPos = 4 };

  Family family = Family::Gl;
  int i = 1;
  int j = 1;

  static BasisElement gl(int i, int j) { return {Family::Gl, i, j}; }
  static BasisElement raise_elem(int i, int j) { return {Family::Raise, i, j}; }
  static BasisElement lower_elem(int i, int j) { return {Family::Lower, i, j}; }
  static BasisElement zero_neg(int i) { return {Family::ZeroNeg, i, 0}; }
  static BasisElement zero_pos(int i) { return {Family::ZeroPos, i, 0}; }

  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;

  std::string to_string(const RepConfig& config) const;
};

/// Sparse integer matrix, indices 0..2n (row/col 0 used by the odd kind).
using SpMatrix = std::map<std::pair<int, int>, long long>;

SpMatrix matrix_of(const RepConfig& config, const BasisElement& elem);
SpMatrix commutator(const SpMatrix& a, const SpMatrix& b);

/// Expands a matrix in the declared basis; throws std::domain_error when the
/// matrix lies outside the algebra (a basis-construction bug).
std::vector<std::pair<Rational, BasisElement>> expand_in_basis(const RepConfig& config,
                                                               const SpMatrix& m);

/// [a, b] in the declared basis, via E_{r,s} E_{u,v} = delta_{s,u} E_{r,v}.
std::vector<std::pair<Rational, BasisElement>> matrix_bracket(const RepConfig& config,
                                                              const BasisElement& a,
                                                              const BasisElement& b);

/// One labeled root vector from the case tables, carrying the display
/// formula transcribed from the table and its g1/g2 membership.
struct LabeledRoot {
  std::string label;
  int sign;  // displayed combination = sign * canonical element
  BasisElement elem;
  DiffOp display;
  int group;  // 1 or 2
};

/// The complete parameterized representation table.
class RepTable {
 public:
  RepTable(RepConfig config, std::map<BasisElement, DiffOp> ops, std::vector<BasisElement> basis,
           std::vector<LabeledRoot> roots);

  const RepConfig& config() const { return m_config; }
  const std::vector<BasisElement>& basis() const { return m_basis; }
  const DiffOp& op(const BasisElement& e) const;

  /// Upper-triangular gl part K_+ = span{Gl(i,j), i<j}.
  const std::vector<BasisElement>& kplus() const { return m_kplus; }
  const std::vector<BasisElement>& cartan() const { return m_cartan; }
  /// Locally nilpotent / torsion-free split of the generating root set.
  const std::vector<BasisElement>& g1() const { return m_g1; }
  const std::vector<BasisElement>& g2() const { return m_g2; }
  std::vector<DiffOp> g1_ops() const;
  std::vector<DiffOp> g2_ops() const;

  const std::vector<LabeledRoot>& labeled_roots() const { return m_roots; }

  /// One line per basis element, `<element> := <operator>`.
  std::string dump() const;

 private:
  RepConfig m_config;
  std::map<BasisElement, DiffOp> m_ops;
  std::vector<BasisElement> m_basis;
  std::vector<LabeledRoot> m_roots;
  std::vector<BasisElement> m_kplus;
  std::vector<BasisElement> m_cartan;
  std::vector<BasisElement> m_g1;
  std::vector<BasisElement> m_g2;
};

/// Builds the full table from the defining displays, one formula set for all
/// three kinds.
RepTable build_rep(const RepConfig& config);

/// The case tables: labeled root vectors with their displayed operators and
/// the I1/I2 split. Selection is strictly n1 < n2 -> Case 1, n1 = n2 -> Case 2;
/// empty index ranges contribute nothing.
std::vector<LabeledRoot> case_table(const RepConfig& config);

struct Violation {
  BasisElement a;
  BasisElement b;
  DiffOp lhs;  // bracket of represented operators
  DiffOp rhs;  // representation of the matrix bracket
};

/// Checks bracket(table[a], table[b]) == table[matrix_bracket(a, b)] over all
/// ordered basis pairs; empty result means the table is a homomorphism.
std::vector<Violation> check_homomorphism(const RepTable& table, int threads = 1);

}  // namespace oscgk
