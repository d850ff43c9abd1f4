#include "rcalab/core/net_shift.hpp"

#include <numeric>
#include <sstream>

#include "rcalab/error.hpp"

namespace rcalab {

std::string token(Generator g) {
  switch (g) {
    case Generator::Shift:
      return "s";
    case Generator::ShiftInverse:
      return "s-1";
    case Generator::Ctrl:
      return "f";
    case Generator::InvolutionA:
      return "a";
    case Generator::InvolutionB:
      return "b";
  }
  return "?";
}

Generator generator_from_token(const std::string& t) {
  if (t == "s") return Generator::Shift;
  if (t == "s-1") return Generator::ShiftInverse;
  if (t == "f") return Generator::Ctrl;
  if (t == "a") return Generator::InvolutionA;
  if (t == "b") return Generator::InvolutionB;
  throw ParseError("word", "unknown generator token '" + t + "'");
}

Generator inverse(Generator g) {
  if (g == Generator::Shift) return Generator::ShiftInverse;
  if (g == Generator::ShiftInverse) return Generator::Shift;
  return g;  // f_0, a, b are involutions
}

std::string to_string(const GeneratorWord& word) {
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << token(word[k]);
  return os.str();
}

GeneratorWord parse_word(const std::string& text) {
  GeneratorWord word;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) word.push_back(generator_from_token(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return word;
}

TrackMotion TrackMotion::stationary(int tracks) {
  TrackMotion m;
  m.source.resize(static_cast<std::size_t>(tracks));
  std::iota(m.source.begin(), m.source.end(), 0);
  m.shift.assign(static_cast<std::size_t>(tracks), 0);
  return m;
}

TrackMotion TrackMotion::then(const TrackMotion& first, const TrackMotion& second) {
  if (first.source.size() != second.source.size()) throw AlphabetMismatch("track motions of different arity");
  TrackMotion out = stationary(static_cast<int>(first.source.size()));
  for (std::size_t t = 0; t < out.source.size(); ++t) {
    auto via = static_cast<std::size_t>(second.source[t]);
    out.source[t] = first.source[via];
    out.shift[t] = second.shift[t] + first.shift[via];
  }
  return out;
}

bool TrackMotion::permutes_tracks() const {
  for (std::size_t t = 0; t < source.size(); ++t) {
    if (source[t] != static_cast<int>(t)) return true;
  }
  return false;
}

GeneratorSetting GeneratorSetting::two_track() {
  GeneratorSetting s{Alphabet::binary_tracks(2), {}};
  auto shift = TrackMotion::stationary(2);
  shift.shift[0] = 1;
  auto back = TrackMotion::stationary(2);
  back.shift[0] = -1;
  s.motions[Generator::Shift] = shift;
  s.motions[Generator::ShiftInverse] = back;
  s.motions[Generator::Ctrl] = TrackMotion::stationary(2);
  return s;
}

GeneratorSetting GeneratorSetting::three_track() {
  GeneratorSetting s{Alphabet::binary_tracks(3), {}};
  auto shift = TrackMotion::stationary(3);
  shift.shift[1] = 1;
  auto back = TrackMotion::stationary(3);
  back.shift[1] = -1;
  auto a = TrackMotion::stationary(3);
  a.source = {1, 0, 2};
  auto b = TrackMotion::stationary(3);
  b.source = {1, 0, 2};
  b.shift = {-1, 1, 0};
  s.motions[Generator::Shift] = shift;
  s.motions[Generator::ShiftInverse] = back;
  s.motions[Generator::Ctrl] = TrackMotion::stationary(3);
  s.motions[Generator::InvolutionA] = a;
  s.motions[Generator::InvolutionB] = b;
  return s;
}

bool NetShiftVector::is_zero() const {
  for (auto v : shifts) {
    if (v != 0) return false;
  }
  return true;
}

NetShiftVector net_shift(const GeneratorWord& word, const GeneratorSetting& setting) {
  TrackMotion acc = TrackMotion::stationary(setting.alphabet.track_count());
  for (Generator g : word) {
    auto it = setting.motions.find(g);
    if (it == setting.motions.end()) {
      throw UnsupportedFactor("generator '" + token(g) + "' has no declared track motion on " +
                              setting.alphabet.describe());
    }
    acc = TrackMotion::then(acc, it->second);
  }
  return {acc.shift, acc.source};
}

}  // namespace rcalab
