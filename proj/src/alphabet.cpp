#include "rcalab/core/alphabet.hpp"

#include <sstream>

#include "rcalab/error.hpp"

namespace rcalab {

Alphabet::Alphabet(std::vector<int> tracks) : tracks_(std::move(tracks)) {
  if (tracks_.empty()) throw ParameterOutOfRange("alphabet needs at least one track");
  for (int t : tracks_) {
    if (t < 2) throw ParameterOutOfRange("every track size must be >= 2");
  }
  weights_.assign(tracks_.size(), 1);
  for (std::size_t t = tracks_.size(); t-- > 0;) {
    weights_[t] = size_;
    size_ *= tracks_[t];
    if (size_ > 256) throw ParameterOutOfRange("alphabet size above 256 is not supported");
  }
}

Alphabet Alphabet::binary_tracks(int count) { return Alphabet(std::vector<int>(static_cast<std::size_t>(count), 2)); }

Symbol Alphabet::encode(std::span<const int> components) const {
  if (components.size() != tracks_.size()) throw AlphabetMismatch("component count differs from track count");
  Symbol code = 0;
  for (std::size_t t = 0; t < tracks_.size(); ++t) {
    if (components[t] < 0 || components[t] >= tracks_[t]) throw ParameterOutOfRange("track value out of range");
    code += static_cast<Symbol>(components[t] * weights_[t]);
  }
  return code;
}

std::vector<int> Alphabet::decode(Symbol symbol) const {
  std::vector<int> out(tracks_.size());
  for (std::size_t t = 0; t < tracks_.size(); ++t) out[t] = component(symbol, static_cast<int>(t));
  return out;
}

int Alphabet::component(Symbol symbol, int track) const {
  auto t = static_cast<std::size_t>(track);
  return static_cast<int>(symbol / static_cast<Symbol>(weights_[t])) % tracks_[t];
}

Symbol Alphabet::with_component(Symbol symbol, int track, int value) const {
  auto t = static_cast<std::size_t>(track);
  int old = component(symbol, track);
  return symbol + static_cast<Symbol>((value - old) * weights_[t]);
}

std::string Alphabet::describe() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < tracks_.size(); ++t) os << (t ? "x" : "") << tracks_[t];
  return os.str();
}

PeriodicConfig::PeriodicConfig(Alphabet alphabet, std::vector<Symbol> cells)
    : alphabet_(std::move(alphabet)), cells_(std::move(cells)) {
  if (cells_.empty()) throw ParameterOutOfRange("period must be positive");
  for (Symbol s : cells_) {
    if (s >= static_cast<Symbol>(alphabet_.size())) throw ParameterOutOfRange("symbol outside alphabet");
  }
}

PeriodicConfig PeriodicConfig::from_tracks(const Alphabet& alphabet, const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != alphabet.track_count()) throw AlphabetMismatch("row count differs from track count");
  const std::size_t period = rows.front().size();
  std::vector<Symbol> cells(period);
  std::vector<int> parts(rows.size());
  for (std::size_t j = 0; j < period; ++j) {
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (rows[t].size() != period) throw ParameterOutOfRange("track rows must have equal length");
      parts[t] = rows[t][j];
    }
    cells[j] = alphabet.encode(parts);
  }
  return PeriodicConfig(alphabet, std::move(cells));
}

Symbol PeriodicConfig::at(long long position) const {
  const long long p = period();
  long long r = position % p;
  if (r < 0) r += p;
  return cells_[static_cast<std::size_t>(r)];
}

std::vector<int> PeriodicConfig::track(int track) const {
  std::vector<int> out(cells_.size());
  for (std::size_t j = 0; j < cells_.size(); ++j) out[j] = alphabet_.component(cells_[j], track);
  return out;
}

PeriodicConfig PeriodicConfig::shifted(int power) const {
  std::vector<Symbol> out(cells_.size());
  for (std::size_t j = 0; j < cells_.size(); ++j) out[j] = at(static_cast<long long>(j) + power);
  return PeriodicConfig(alphabet_, std::move(out));
}

std::string PeriodicConfig::to_string() const {
  std::ostringstream os;
  for (int t = 0; t < alphabet_.track_count(); ++t) {
    if (t) os << '/';
    for (int v : track(t)) os << v;
  }
  return os.str();
}

}  // namespace rcalab
