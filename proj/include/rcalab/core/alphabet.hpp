#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rcalab {

/// Radix code of a multi-track symbol; first track most significant.
using Symbol = std::uint32_t;

/// Product alphabet A = T_0 x T_1 x ... with every track of size >= 2.
class Alphabet {
 public:
  explicit Alphabet(std::vector<int> tracks);

  /// `count` binary tracks, e.g. 2 for B x C and 3 for B' x B x C.
  static Alphabet binary_tracks(int count);

  int size() const { return size_; }
  int track_count() const { return static_cast<int>(tracks_.size()); }
  int track_size(int track) const { return tracks_.at(static_cast<std::size_t>(track)); }
  const std::vector<int>& tracks() const { return tracks_; }

  Symbol encode(std::span<const int> components) const;
  std::vector<int> decode(Symbol symbol) const;
  int component(Symbol symbol, int track) const;
  Symbol with_component(Symbol symbol, int track, int value) const;

  std::string describe() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<int> tracks_;
  std::vector<int> weights_;  // radix weight of each track
  int size_ = 1;
};

/// Spatially periodic point of A^Z: cell j holds the symbol at every
/// position congruent to j modulo the period.
class PeriodicConfig {
 public:
  PeriodicConfig(Alphabet alphabet, std::vector<Symbol> cells);

  /// Builds a configuration from per-track rows of equal length.
  static PeriodicConfig from_tracks(const Alphabet& alphabet,
                                    const std::vector<std::vector<int>>& rows);

  const Alphabet& alphabet() const { return alphabet_; }
  int period() const { return static_cast<int>(cells_.size()); }
  const std::vector<Symbol>& cells() const { return cells_; }

  /// Symbol at any integer position.
  Symbol at(long long position) const;
  std::vector<int> track(int track) const;

  /// sigma^power, with sigma(x)_i = x_{i+1}.
  PeriodicConfig shifted(int power) const;

  std::string to_string() const;

  friend bool operator==(const PeriodicConfig&, const PeriodicConfig&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> cells_;
};

}  // namespace rcalab
