#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscgk {

/// Ambient polynomial ring: C[x_1..x_n, y_1..y_n], with x_0 adjoined for the
/// odd-orthogonal case.
struct RingDesc {
  int n = 0;
  bool has_x0 = false;

  friend bool operator==(const RingDesc&, const RingDesc&) = default;
};

/// One variable of the ambient ring. Codes are arranged so that comparing
/// codes realizes the fixed variable precedence x0 < x1 < ... < xn < y1 < ... < yn
/// independently of n.
class VarIndex {
 public:
  enum class Kind : std::uint8_t { X, Y };

  static VarIndex x(int i) {
    if (i < 0 || i > kMaxIndex) throw std::out_of_range("VarIndex: x index");
    return VarIndex(static_cast<std::uint8_t>(i));
  }
  static VarIndex y(int i) {
    if (i < 1 || i > kMaxIndex) throw std::out_of_range("VarIndex: y index");
    return VarIndex(static_cast<std::uint8_t>(kYBase + i));
  }

  Kind kind() const { return m_code < kYBase ? Kind::X : Kind::Y; }
  int index() const { return m_code < kYBase ? m_code : m_code - kYBase; }
  std::uint8_t code() const { return m_code; }

  bool valid_in(const RingDesc& ring) const {
    if (kind() == Kind::X) return index() <= ring.n && (index() > 0 || ring.has_x0);
    return index() >= 1 && index() <= ring.n;
  }

  std::string name() const {
    return (kind() == Kind::X ? "x" : "y") + std::to_string(index());
  }

  friend auto operator<=>(const VarIndex&, const VarIndex&) = default;

  static constexpr int kMaxIndex = 63;

 private:
  explicit VarIndex(std::uint8_t code) : m_code(code) {}
  static constexpr std::uint8_t kYBase = 64;
  std::uint8_t m_code;
};

/// Sparse exponent vector: sorted (variable, exponent) slots, no zero
/// exponents stored. Capacity and the exponent range are fixed at desk scale.
class Monomial {
 public:
  static constexpr int kMaxSlots = 16;
  static constexpr unsigned kMaxExponent = 255;

  struct Slot {
    std::uint8_t var;
    std::uint8_t exp;
  };

  Monomial() = default;

  static Monomial one() { return Monomial(); }
  static Monomial variable(VarIndex v, unsigned exp = 1);
  static Monomial from_pairs(const std::vector<std::pair<VarIndex, unsigned>>& pairs);

  bool is_one() const { return m_size == 0; }
  int degree() const;
  unsigned exponent(VarIndex v) const;
  int slot_count() const { return m_size; }
  Slot slot(int i) const { return m_slots[static_cast<std::size_t>(i)]; }

  /// Componentwise product; throws on exponent or slot overflow.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Componentwise quotient; returns false when b does not divide a.
  bool try_divide(const Monomial& b, Monomial& out) const;

  bool divides(const Monomial& other) const;

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  std::uint8_t m_size = 0;
  std::array<Slot, kMaxSlots> m_slots{};

  void push(std::uint8_t var, unsigned exp);
};

/// Graded order refined by total degree, ties broken on the exponent vector
/// scanned from y_n down to x_0 (larger exponent at the first differing
/// variable wins). This makes 1 < x0 < x1 < ... < xn < y1 < ... < yn.
int monomial_cmp(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_cmp(a, b) < 0; }
};

}  // namespace oscgk
