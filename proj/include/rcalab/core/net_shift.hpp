#pragma once

#include <map>
#include <string>
#include <vector>

#include "rcalab/core/alphabet.hpp"

namespace rcalab {

/// Abstract generators of the two constructions: <sigma_1, f_0> and <a, b, f_0>.
enum class Generator { Shift, ShiftInverse, Ctrl, InvolutionA, InvolutionB };

/// Serialized tokens: "s", "s-1", "f", "a", "b".
std::string token(Generator g);
Generator generator_from_token(const std::string& token);
Generator inverse(Generator g);

/// Words are applied left-factor-first: {s, f} means sigma_1, then f_0.
using GeneratorWord = std::vector<Generator>;

std::string to_string(const GeneratorWord& word);
GeneratorWord parse_word(const std::string& text);  // space or comma separated tokens

/// How a generator moves whole tracks: output track t is
/// sigma^shift[t] applied to input track source[t].
struct TrackMotion {
  std::vector<int> source;
  std::vector<long long> shift;

  static TrackMotion stationary(int tracks);
  /// `first`, then `second`.
  static TrackMotion then(const TrackMotion& first, const TrackMotion& second);
  bool permutes_tracks() const;
  friend bool operator==(const TrackMotion&, const TrackMotion&) = default;
};

/// Declared per-track contributions of each generator on an alphabet.
struct GeneratorSetting {
  Alphabet alphabet;
  std::map<Generator, TrackMotion> motions;

  /// B x C: sigma_1 shifts track 0, f_0 is stationary.
  static GeneratorSetting two_track();
  /// B' x B x C: sigma_1 shifts track 1; a swaps B' and B; b = (sigma^-1 y, sigma x) on (B', B).
  static GeneratorSetting three_track();
};

/// Cells moved per track (positive = leftward, matching sigma(x)_i = x_{i+1}).
struct NetShiftVector {
  std::vector<long long> shifts;
  /// Residual track permutation; identity unless the word swaps tracks.
  std::vector<int> track_permutation;

  bool is_zero() const;
  friend bool operator==(const NetShiftVector&, const NetShiftVector&) = default;
};

NetShiftVector net_shift(const GeneratorWord& word, const GeneratorSetting& setting);

}  // namespace rcalab
