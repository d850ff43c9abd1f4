#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rcalab/perm.hpp"

namespace rcalab {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);

struct BsgsOptions {
  std::uint64_t seed = 0x5eed;
  /// Consecutive trivial random sifts that end the randomized phase.
  int random_rounds = 40;
  /// Run the Schreier-generator check after the randomized phase. When off,
  /// the chain is exact only if its order hits the orbit upper bound.
  bool deterministic = true;
  /// Base points to use first, in order.
  std::vector<Point> base_prefix{};
};

/// Base and strong generating set (stabilizer chain) of a permutation group.
class Bsgs {
 public:
  static Bsgs build(std::vector<Perm> generators, std::size_t degree, const BsgsOptions& options = {});
  static Bsgs build(std::vector<Perm> generators, const BsgsOptions& options = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Point>& base() const { return base_; }
  std::vector<Perm> strong_generators() const;
  BigInt order() const;
  /// True when the chain is known to be complete (so order and membership are exact).
  bool exact() const { return exact_; }

  bool contains(const Perm& g) const;

  /// Orbit of base point `level` under the level stabilizer, in discovery order.
  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  /// Element mapping base[level] to `x` (x must lie in the level orbit).
  Perm transversal(std::size_t level, Point x) const;
  bool in_orbit(std::size_t level, Point x) const { return levels_[level].label[x] != kOutside; }
  std::size_t depth() const { return levels_.size(); }

 private:
  static constexpr int kOutside = -1;
  static constexpr int kRoot = -2;

  // Orbit stored as a Schreier vector: label[y] = index of the generator s
  // with y = s[parent], kRoot for the base point, kOutside off the orbit.
  struct Level {
    Point base_point = 0;
    std::vector<Perm> gens;
    std::vector<Perm> inverses;
    std::vector<Point> orbit;
    std::vector<int> label;
    std::vector<int> depth;
    int max_depth = 0;
  };

  // g * u_x^-1 for x in the orbit of `level`.
  Perm strip(Perm g, std::size_t level, Point x) const;

  // Returns the residue and the level at which sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from = 0) const;
  void add_generator(const Perm& h, std::size_t level);
  void extend_orbit(Level& level, std::size_t first_new);
  void rebuild_orbit(Level& level);
  void new_level(Point base_point);
  Point pick_base_point(const Perm& h) const;
  bool complete_deterministically();
  BigInt upper_bound() const;

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Point> base_;
  std::vector<Point> base_prefix_;
  std::vector<Level> levels_;
  bool exact_ = false;
};

/// Letter of a factorization word: generator index, possibly inverted.
struct Letter {
  int generator = 0;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using LetterWord = std::vector<Letter>;

/// Left-first evaluation of a letter word.
Perm evaluate(const LetterWord& word, std::span<const Perm> generators, std::size_t degree);
LetterWord inverse(const LetterWord& word);

struct FactorizerOptions {
  std::uint64_t seed = 0xfac7;
  std::uint64_t max_rounds = 2'000'000;  // sifted candidate words
  std::size_t length_cap = 4000;
};

/// Stabilizer chain whose transversal elements carry words in the original
/// generators (filled by sifting short and random words through the chain).
class Factorizer {
 public:
  Factorizer(const Bsgs& bsgs, const FactorizerOptions& options = {});

  const Bsgs& bsgs() const { return bsgs_; }
  bool complete() const { return complete_; }
  std::size_t longest_entry() const;
  /// Sum over levels of the longest entry: an upper bound on factorization length.
  std::size_t length_bound() const;

  /// Word whose left-first evaluation equals g; nullopt when g is outside the group.
  std::optional<LetterWord> factorize(const Perm& g) const;

 private:
  struct Entry {
    LetterWord word;
    Perm perm;
  };
  bool insert(LetterWord word, Perm perm);

  Bsgs bsgs_;
  std::vector<std::vector<std::optional<Entry>>> table_;  // [level][point]
  std::vector<std::size_t> filled_;
  bool complete_ = false;
  std::size_t length_cap_;
};

/// Naive closure (BFS over products) for small groups; used as an oracle.
std::optional<std::uint64_t> closure_order(std::span<const Perm> generators, std::uint64_t limit);

}  // namespace rcalab
