#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcalab/core/block_map.hpp"

namespace rcalab {

/// Nonempty finite word over a single-track alphabet {0, ..., alphabet_size-1}.
class Word {
 public:
  explicit Word(std::vector<int> symbols, int alphabet_size = 2);
  /// Parses digits, e.g. "0111".
  static Word parse(const std::string& text, int alphabet_size = 2);

  int length() const { return static_cast<int>(symbols_.size()); }
  int alphabet_size() const { return alphabet_size_; }
  const std::vector<int>& symbols() const { return symbols_; }
  int operator[](int k) const { return symbols_[static_cast<std::size_t>(k)]; }

  Word concat(const Word& other) const;
  Word doubled() const { return concat(*this); }
  /// Value of the word read as a binary number, leftmost symbol most significant.
  std::uint32_t to_point() const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.symbols_ <=> b.symbols_; }

 private:
  std::vector<int> symbols_;
  int alphabet_size_;
};

bool is_unbordered(const Word& w);

/// Smallest d >= 1 such that two occurrences of w may start d cells apart
/// (equal to |w| exactly when w is unbordered).
int min_occurrence_gap(const Word& w);

/// Positions p in [0, length) of occurrences of w in a cyclic word.
std::vector<int> cyclic_occurrences(const Word& w, const std::vector<int>& cyclic);

/// All unbordered words of length `length`, lexicographic.
std::vector<Word> enumerate_unbordered(int length, int alphabet_size, std::uint64_t budget = default_budget());

/// Set of equal-length words, kept sorted lexicographically.
class MutuallyUnborderedFamily {
 public:
  MutuallyUnborderedFamily(std::vector<Word> words, std::optional<int> k = std::nullopt);

  const std::vector<Word>& words() const { return words_; }
  int size() const { return static_cast<int>(words_.size()); }
  int word_length() const { return words_.empty() ? 0 : words_.front().length(); }
  std::optional<int> parameter() const { return k_; }

  /// Points of {0,1}^l occupied by the family, in family order.
  std::vector<std::uint32_t> points() const;
  MutuallyUnborderedFamily prefix(int count) const;

 private:
  std::vector<Word> words_;
  std::optional<int> k_;
};

/// 0^{l-k-2} 1 v 1 for v in {0,1}^k; requires 0 <= k < (l-4)/2.
MutuallyUnborderedFamily formula_family(int length, int k);

struct OverlapWitness {
  Word first;
  Word second;
  int overlap = 0;  // length of the suffix of `first` equal to a prefix of `second`
};

struct OverlapCheck {
  bool ok = true;
  std::optional<OverlapWitness> witness;
  explicit operator bool() const { return ok; }
};

/// No nonempty proper suffix of any member equals a prefix of any member.
OverlapCheck check_mutually_unbordered(const std::vector<Word>& family);

/// Greedy backtracking search for a large mutually unbordered set of binary words.
MutuallyUnborderedFamily search_mutually_unbordered(int length, int target_size, std::uint64_t budget = default_budget());

}  // namespace rcalab
