#include "rcalab/core/block_map.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace rcalab {

namespace {

constexpr std::uint8_t kUnset = 0xFF;

// Advances a radix-`base` odometer, rightmost digit fastest.
void increment(std::vector<Symbol>& digits, Symbol base) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < base) return;
    digits[k] = 0;
  }
}

std::uint64_t horner(const Symbol* first, int length, std::uint64_t base) {
  std::uint64_t idx = 0;
  for (int k = 0; k < length; ++k) idx = idx * base + first[k];
  return idx;
}

std::uint64_t table_entries(const Alphabet& alphabet, int diameter, std::uint64_t budget, const char* what) {
  auto n = checked_power(static_cast<std::uint64_t>(alphabet.size()), diameter);
  if (!n || *n > budget) {
    throw BudgetExceeded(std::string(what) + ": table of |A|^" + std::to_string(diameter) + " entries exceeds budget " +
                         std::to_string(budget));
  }
  return *n;
}

// Image of every periodic word of the given period, or nullopt when too many.
std::optional<std::vector<std::uint64_t>> periodic_images(const BlockMap& f, int period, std::uint64_t cap) {
  auto n = checked_power(static_cast<std::uint64_t>(f.alphabet().size()), period);
  if (!n || *n > cap) return std::nullopt;
  std::vector<std::uint64_t> image(*n);
  for (std::uint64_t code = 0; code < *n; ++code) {
    image[code] = encode_periodic(f.apply(decode_periodic(f.alphabet(), period, code)));
  }
  return image;
}

// Candidate inverse radii: grouped by max(memory, anticipation), then by sum,
// larger memory first: (0,0) (1,0) (0,1) (1,1) (2,0) (0,2) (2,1) (1,2) ...
std::vector<std::pair<int, int>> candidate_radii(int limit) {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r <= limit; ++r) {
    std::vector<std::pair<int, int>> ring;
    for (int m = 0; m <= r; ++m) {
      for (int a = 0; a <= r; ++a) {
        if (std::max(m, a) == r) ring.emplace_back(m, a);
      }
    }
    std::sort(ring.begin(), ring.end(), [](auto x, auto y) {
      if (x.first + x.second != y.first + y.second) return x.first + x.second < y.first + y.second;
      return x.first > y.first;
    });
    out.insert(out.end(), ring.begin(), ring.end());
  }
  return out;
}

bool is_identity(const BlockMap& h) {
  const auto base = static_cast<Symbol>(h.alphabet().size());
  std::vector<Symbol> digits(static_cast<std::size_t>(h.diameter()), 0);
  const auto centre = static_cast<std::size_t>(h.memory());
  for (std::uint64_t idx = 0; idx < h.rule().size(); ++idx) {
    if (h.rule()[idx] != digits[centre]) return false;
    increment(digits, base);
  }
  return true;
}

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RCALAB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 24;
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, int exponent) {
  std::uint64_t v = 1;
  for (int k = 0; k < exponent; ++k) {
    if (v > (std::uint64_t{1} << 62) / base) return std::nullopt;
    v *= base;
  }
  return v;
}

BlockMap::BlockMap(Alphabet alphabet, int memory, int anticipation, std::vector<std::uint8_t> rule)
    : alphabet_(std::move(alphabet)), memory_(memory), anticipation_(anticipation), rule_(std::move(rule)) {
  if (memory_ < 0 || anticipation_ < 0) throw ParameterOutOfRange("memory and anticipation must be >= 0");
  auto n = checked_power(static_cast<std::uint64_t>(alphabet_.size()), diameter());
  if (!n || *n != rule_.size()) throw ParameterOutOfRange("rule table size must be |A|^(memory+1+anticipation)");
  for (auto s : rule_) {
    if (s >= alphabet_.size()) throw ParameterOutOfRange("rule output outside alphabet");
  }
}

BlockMap BlockMap::tabulate(const Alphabet& alphabet, int memory, int anticipation, const LocalRule& local,
                            std::uint64_t budget) {
  const int d = memory + 1 + anticipation;
  const auto n = table_entries(alphabet, d, budget, "tabulate");
  std::vector<std::uint8_t> rule(n);
  std::vector<Symbol> digits(static_cast<std::size_t>(d), 0);
  const auto base = static_cast<Symbol>(alphabet.size());
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    rule[idx] = static_cast<std::uint8_t>(local(digits));
    increment(digits, base);
  }
  return BlockMap(alphabet, memory, anticipation, std::move(rule));
}

BlockMap BlockMap::identity(const Alphabet& alphabet) {
  std::vector<std::uint8_t> rule(static_cast<std::size_t>(alphabet.size()));
  std::iota(rule.begin(), rule.end(), std::uint8_t{0});
  return BlockMap(alphabet, 0, 0, std::move(rule));
}

Symbol BlockMap::local(std::span<const Symbol> neighborhood) const {
  if (static_cast<int>(neighborhood.size()) != diameter()) throw ParameterOutOfRange("neighborhood length mismatch");
  return rule_[horner(neighborhood.data(), diameter(), static_cast<std::uint64_t>(alphabet_.size()))];
}

PeriodicConfig BlockMap::apply(const PeriodicConfig& x) const {
  if (!(x.alphabet() == alphabet_)) throw AlphabetMismatch("configuration alphabet differs from map alphabet");
  const auto base = static_cast<std::uint64_t>(alphabet_.size());
  std::vector<Symbol> out(static_cast<std::size_t>(x.period()));
  for (int j = 0; j < x.period(); ++j) {
    std::uint64_t idx = 0;
    for (int k = -memory_; k <= anticipation_; ++k) idx = idx * base + x.at(j + k);
    out[static_cast<std::size_t>(j)] = rule_[idx];
  }
  return PeriodicConfig(alphabet_, std::move(out));
}

BlockMap BlockMap::padded(int memory, int anticipation, std::uint64_t budget) const {
  if (memory < memory_ || anticipation < anticipation_) throw ParameterOutOfRange("padding cannot shrink a neighborhood");
  if (memory == memory_ && anticipation == anticipation_) return *this;
  const int d = memory + 1 + anticipation;
  const auto n = table_entries(alphabet_, d, budget, "pad");
  const auto base = static_cast<std::uint64_t>(alphabet_.size());
  const std::uint64_t low = *checked_power(base, anticipation - anticipation_);
  const auto inner = static_cast<std::uint64_t>(rule_.size());
  std::vector<std::uint8_t> rule(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) rule[idx] = rule_[(idx / low) % inner];
  return BlockMap(alphabet_, memory, anticipation, std::move(rule));
}

BlockMap compose(const BlockMap& f, const BlockMap& g, std::uint64_t budget) {
  if (!(f.alphabet() == g.alphabet())) throw AlphabetMismatch("compose: alphabets differ");
  const int memory = f.memory() + g.memory();
  const int anticipation = f.anticipation() + g.anticipation();
  const int d = memory + 1 + anticipation;
  const auto n = table_entries(f.alphabet(), d, budget, "compose");
  const auto base = static_cast<std::uint64_t>(f.alphabet().size());
  const int df = f.diameter();
  const int dg = g.diameter();
  std::vector<std::uint8_t> rule(n);
  std::vector<Symbol> digits(static_cast<std::size_t>(d), 0);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::uint64_t fidx = 0;
    for (int s = 0; s < df; ++s) fidx = fidx * base + g.at_index(horner(digits.data() + s, dg, base));
    rule[idx] = static_cast<std::uint8_t>(f.at_index(fidx));
    increment(digits, static_cast<Symbol>(base));
  }
  return BlockMap(f.alphabet(), memory, anticipation, std::move(rule));
}

BlockMap compose_all(std::span<const BlockMap> maps, std::uint64_t budget) {
  if (maps.empty()) throw ParameterOutOfRange("compose_all needs at least one map");
  BlockMap acc = maps.back();
  for (std::size_t k = maps.size() - 1; k-- > 0;) acc = compose(maps[k], acc, budget);
  return acc;
}

BlockMap invert(const BlockMap& f, int radius_limit, std::uint64_t budget) {
  if (radius_limit < 0) throw ParameterOutOfRange("radius_limit must be >= 0");
  const Alphabet& alphabet = f.alphabet();
  const auto base = static_cast<std::uint64_t>(alphabet.size());

  // Cheap injectivity refutation on short periods first.
  const std::uint64_t periodic_cap = std::min<std::uint64_t>(budget, std::uint64_t{1} << 16);
  for (int p = 1;; ++p) {
    auto image = periodic_images(f, p, periodic_cap);
    if (!image) break;
    std::vector<std::uint64_t> seen(image->size(), UINT64_MAX);
    for (std::uint64_t code = 0; code < image->size(); ++code) {
      auto& slot = seen[(*image)[code]];
      if (slot != UINT64_MAX) {
        throw NotReversibleWithinLimit(
            "map is not injective: two period-" + std::to_string(p) + " points share an image",
            std::make_pair(decode_periodic(alphabet, p, slot), decode_periodic(alphabet, p, code)));
      }
      slot = code;
    }
  }

  const int df = f.diameter();
  for (auto [mi, ai] : candidate_radii(radius_limit)) {
    const int window = mi + 1 + ai;
    const int span = f.memory() + mi + 1 + f.anticipation() + ai;
    auto count = checked_power(base, span);
    if (!count || *count > budget) {
      throw BudgetExceeded("invert: candidate radius (" + std::to_string(mi) + "," + std::to_string(ai) +
                           ") needs |A|^" + std::to_string(span) + " preimages");
    }
    std::vector<std::uint8_t> rule(*checked_power(base, window), kUnset);
    std::vector<Symbol> digits(static_cast<std::size_t>(span), 0);
    const auto centre = static_cast<std::size_t>(f.memory() + mi);
    bool consistent = true;
    for (std::uint64_t idx = 0; idx < *count && consistent; ++idx) {
      std::uint64_t img = 0;
      for (int q = 0; q < window; ++q) img = img * base + f.at_index(horner(digits.data() + q, df, base));
      auto& slot = rule[img];
      if (slot == kUnset) {
        slot = static_cast<std::uint8_t>(digits[centre]);
      } else if (slot != digits[centre]) {
        consistent = false;
      }
      increment(digits, static_cast<Symbol>(base));
    }
    if (!consistent) continue;
    for (auto& s : rule) {
      if (s == kUnset) s = 0;
    }
    BlockMap g(alphabet, mi, ai, std::move(rule));
    if (is_identity(compose(g, f, budget)) && is_identity(compose(f, g, budget))) return g;
  }
  throw NotReversibleWithinLimit("no inverse with radius <= " + std::to_string(radius_limit), std::nullopt);
}

BlockMap invert(const BlockMap& f) { return invert(f, 2 * (f.memory() + f.anticipation()) + 2); }

BlockMap shift(const Alphabet& alphabet, int track, int power) {
  if (track < 0 || track >= alphabet.track_count()) throw ParameterOutOfRange("shift: track index out of range");
  const int memory = std::max(0, -power);
  const int anticipation = std::max(0, power);
  return BlockMap::tabulate(alphabet, memory, anticipation, [&](std::span<const Symbol> nb) {
    const Symbol centre = nb[static_cast<std::size_t>(memory)];
    const Symbol source = nb[static_cast<std::size_t>(memory + power)];
    return alphabet.with_component(centre, track, alphabet.component(source, track));
  });
}

std::uint64_t encode_periodic(const PeriodicConfig& x) {
  const auto base = static_cast<std::uint64_t>(x.alphabet().size());
  return horner(x.cells().data(), x.period(), base);
}

PeriodicConfig decode_periodic(const Alphabet& alphabet, int period, std::uint64_t code) {
  std::vector<Symbol> cells(static_cast<std::size_t>(period));
  const auto base = static_cast<std::uint64_t>(alphabet.size());
  for (int j = period; j-- > 0;) {
    cells[static_cast<std::size_t>(j)] = static_cast<Symbol>(code % base);
    code /= base;
  }
  return PeriodicConfig(alphabet, std::move(cells));
}

PeriodicPermutation::PeriodicPermutation(Alphabet alphabet, int period, std::vector<std::uint64_t> image)
    : alphabet_(std::move(alphabet)), period_(period), image_(std::move(image)) {}

std::vector<std::uint64_t> PeriodicPermutation::cycle_lengths() const {
  std::vector<std::uint64_t> lengths;
  std::vector<bool> seen(image_.size(), false);
  for (std::uint64_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::uint64_t p = start; !seen[p]; p = image_[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t PeriodicPermutation::order() const {
  std::uint64_t acc = 1;
  for (auto len : cycle_lengths()) {
    std::uint64_t g = std::gcd(acc, len);
    if (acc / g > UINT64_MAX / len) return UINT64_MAX;
    acc = acc / g * len;
  }
  return acc;
}

PeriodicPermutation restrict_to_period(const BlockMap& f, int period, std::uint64_t budget) {
  if (period < 1) throw ParameterOutOfRange("period must be positive");
  auto image = periodic_images(f, period, budget);
  if (!image) throw BudgetExceeded("restrict_to_period: |A|^" + std::to_string(period) + " points exceed budget");
  std::vector<bool> hit(image->size(), false);
  for (auto y : *image) {
    if (hit[y]) throw PreconditionViolation("restrict_to_period: map is not injective on this period");
    hit[y] = true;
  }
  return PeriodicPermutation(f.alphabet(), period, std::move(*image));
}

std::optional<std::uint64_t> cycle_length(const BlockMap& f, const PeriodicConfig& x, std::uint64_t max_steps) {
  PeriodicConfig y = f.apply(x);
  for (std::uint64_t steps = 1; steps <= max_steps; ++steps) {
    if (y == x) return steps;
    y = f.apply(y);
  }
  return std::nullopt;
}

}  // namespace rcalab
