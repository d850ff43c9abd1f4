#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rcalab {

using Point = std::uint32_t;

/// Permutation of {0, ..., degree-1} as an explicit image table.
///
/// Permutations act on the right: `p[x]` is the image of x and `p * q`
/// applies p first, then q. Commutators and conjugates follow the same
/// left-factor-first reading: [a, b] = a^-1 b^-1 a b and a^b = b^-1 a b.
///
/// A permutation of {0,1}^k uses the point encoding "leftmost cell is the
/// most significant bit".
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> table);

  static Perm identity(std::size_t degree);
  static Perm from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles);
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return table_.size(); }
  /// k with degree == 2^k; throws WidthMismatch otherwise.
  int width() const;
  bool is_bit_perm() const;

  Point operator[](Point x) const { return table_[x]; }
  const std::vector<Point>& table() const { return table_; }

  Perm inverse() const;
  bool is_identity() const;
  bool is_involution() const;
  bool is_even() const;
  std::vector<Point> support() const;
  std::vector<std::vector<Point>> cycles() const;
  /// lcm of cycle lengths, saturating at UINT64_MAX.
  std::uint64_t order() const;
  Perm power(long long exponent) const;

  std::string to_string() const;

  friend Perm operator*(const Perm& first, const Perm& second);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.table_ <=> b.table_; }

 private:
  std::vector<Point> table_;
};

Perm commutator(const Perm& a, const Perm& b);
Perm conjugate(const Perm& a, const Perm& by);

enum class Parity { Even, Odd };
inline Parity parity(const Perm& p) { return p.is_even() ? Parity::Even : Parity::Odd; }

/// Places a width-k permutation on bits [offset, offset+k) of a width-m word.
Perm embed(const Perm& gate, int outer_width, int offset);

/// Same gate with its bit order reversed.
Perm mirrored(const Perm& gate);

/// Extends a permutation of {0,1}^k to {0,1}^m acting on the first k bits.
inline Perm embed_leading(const Perm& gate, int outer_width) { return embed(gate, outer_width, 0); }

namespace gates {
Perm bit_not();       // width 1
Perm cnot();          // width 2: (a, b) -> (a, a xor b)
Perm toffoli();       // width 3: (a, b, c) -> (a, b, c xor ab)
Perm bit_swap();      // width 2: (a, b) -> (b, a)
}  // namespace gates

}  // namespace rcalab
