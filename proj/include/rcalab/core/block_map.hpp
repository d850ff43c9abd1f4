#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rcalab/core/alphabet.hpp"
#include "rcalab/error.hpp"

namespace rcalab {

/// Largest rule table / enumeration the library builds unless told otherwise.
/// `RCALAB_BUDGET` in the environment overrides it.
std::uint64_t default_budget();

/// |A|^length, or nullopt when the value does not fit in 63 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t base, int exponent);

/// Sliding block code: cell i of the image is rule(x[i-memory .. i+anticipation]).
/// Neighborhood words are radix-|A| encoded with the leftmost cell most significant.
class BlockMap {
 public:
  using LocalRule = std::function<Symbol(std::span<const Symbol>)>;

  BlockMap(Alphabet alphabet, int memory, int anticipation, std::vector<std::uint8_t> rule);

  /// Tabulates `local` on every neighborhood word.
  static BlockMap tabulate(const Alphabet& alphabet, int memory, int anticipation, const LocalRule& local,
                           std::uint64_t budget = default_budget());
  static BlockMap identity(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  int memory() const { return memory_; }
  int anticipation() const { return anticipation_; }
  int diameter() const { return memory_ + 1 + anticipation_; }
  const std::vector<std::uint8_t>& rule() const { return rule_; }

  Symbol local(std::span<const Symbol> neighborhood) const;
  Symbol at_index(std::uint64_t index) const { return rule_[index]; }

  PeriodicConfig apply(const PeriodicConfig& x) const;

  /// Same map re-expressed on a wider neighborhood.
  BlockMap padded(int memory, int anticipation, std::uint64_t budget = default_budget()) const;

  friend bool operator==(const BlockMap&, const BlockMap&) = default;

 private:
  Alphabet alphabet_;
  int memory_;
  int anticipation_;
  std::vector<std::uint8_t> rule_;
};

/// Raised by `invert`. Carries two distinct periodic points with equal images
/// when non-injectivity was observed.
class NotReversibleWithinLimit : public Error {
 public:
  NotReversibleWithinLimit(const std::string& what, std::optional<std::pair<PeriodicConfig, PeriodicConfig>> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::optional<std::pair<PeriodicConfig, PeriodicConfig>>& witness() const { return witness_; }

 private:
  std::optional<std::pair<PeriodicConfig, PeriodicConfig>> witness_;
};

/// f o g: g is applied first.
BlockMap compose(const BlockMap& f, const BlockMap& g, std::uint64_t budget = default_budget());

/// Composition of a list, rightmost applied first (compose(a, b, c) = a o b o c).
BlockMap compose_all(std::span<const BlockMap> maps, std::uint64_t budget = default_budget());

/// Exact inverse found by searching inverse radii in increasing order.
BlockMap invert(const BlockMap& f, int radius_limit, std::uint64_t budget = default_budget());
BlockMap invert(const BlockMap& f);

/// Shifts one track by `power` (sigma(x)_i = x_{i+1}), others fixed.
BlockMap shift(const Alphabet& alphabet, int track, int power);

/// Bijection induced on the |A|^period points of a given period.
class PeriodicPermutation {
 public:
  PeriodicPermutation(Alphabet alphabet, int period, std::vector<std::uint64_t> image);

  int period() const { return period_; }
  const std::vector<std::uint64_t>& image() const { return image_; }
  std::uint64_t point_count() const { return image_.size(); }

  /// Multiset of cycle lengths, sorted ascending.
  std::vector<std::uint64_t> cycle_lengths() const;

  /// Least common multiple of the cycle lengths; saturates at UINT64_MAX.
  std::uint64_t order() const;

 private:
  Alphabet alphabet_;
  int period_;
  std::vector<std::uint64_t> image_;
};

PeriodicPermutation restrict_to_period(const BlockMap& f, int period, std::uint64_t budget = default_budget());

/// Encoding of a periodic word as used by PeriodicPermutation (leftmost cell most significant).
std::uint64_t encode_periodic(const PeriodicConfig& x);
PeriodicConfig decode_periodic(const Alphabet& alphabet, int period, std::uint64_t code);

/// Length of the orbit of one periodic point; nullopt if it exceeds `max_steps`.
std::optional<std::uint64_t> cycle_length(const BlockMap& f, const PeriodicConfig& x, std::uint64_t max_steps);

}  // namespace rcalab
