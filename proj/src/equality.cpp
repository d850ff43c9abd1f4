#include "rcalab/core/equality.hpp"

#include <algorithm>
#include <random>

namespace rcalab {

namespace {

std::vector<Symbol> decode_word(std::uint64_t idx, int length, std::uint64_t base) {
  std::vector<Symbol> word(static_cast<std::size_t>(length));
  for (int k = length; k-- > 0;) {
    word[static_cast<std::size_t>(k)] = static_cast<Symbol>(idx % base);
    idx /= base;
  }
  return word;
}

// Rule output of `f` read from a neighborhood index of the common (memory, anticipation).
struct PaddedView {
  const BlockMap& map;
  std::uint64_t low;    // |A|^(anticipation - map.anticipation)
  std::uint64_t inner;  // |A|^map.diameter
  Symbol operator()(std::uint64_t idx) const { return map.at_index((idx / low) % inner); }
};

PaddedView view(const BlockMap& f, int anticipation) {
  const auto base = static_cast<std::uint64_t>(f.alphabet().size());
  return {f, *checked_power(base, anticipation - f.anticipation()), f.rule().size()};
}

}  // namespace

std::string to_string(EqualityMode mode) {
  switch (mode) {
    case EqualityMode::ExhaustiveTable:
      return "ExhaustiveTable";
    case EqualityMode::PeriodicSample:
      return "PeriodicSample";
    case EqualityMode::Randomized:
      return "Randomized";
  }
  return "?";
}

EqualityMode equality_mode_from_string(const std::string& name) {
  if (name == "ExhaustiveTable") return EqualityMode::ExhaustiveTable;
  if (name == "PeriodicSample") return EqualityMode::PeriodicSample;
  if (name == "Randomized") return EqualityMode::Randomized;
  throw ParseError("policy.mode", "unknown equality mode '" + name + "'");
}

Verdict equal(const BlockMap& f, const BlockMap& g, const EqualityPolicy& policy) {
  if (!(f.alphabet() == g.alphabet())) throw AlphabetMismatch("equal: alphabets differ");
  const int memory = std::max(f.memory(), g.memory());
  const int anticipation = std::max(f.anticipation(), g.anticipation());
  const int d = memory + 1 + anticipation;
  const auto base = static_cast<std::uint64_t>(f.alphabet().size());
  const auto vf = view(f, anticipation);
  const auto vg = view(g, anticipation);

  Verdict v;
  v.method = to_string(policy.mode);
  switch (policy.mode) {
    case EqualityMode::ExhaustiveTable: {
      auto n = checked_power(base, d);
      if (!n || *n > policy.budget) {
        throw BudgetExceeded("equal: |A|^" + std::to_string(d) + " neighborhoods exceed budget " +
                             std::to_string(policy.budget));
      }
      v.proof = true;
      for (std::uint64_t idx = 0; idx < *n; ++idx) {
        if (vf(idx) != vg(idx)) {
          v.evidence = idx + 1;
          v.counterexample = decode_word(idx, d, base);
          return v;
        }
      }
      v.evidence = *n;
      v.equal = true;
      return v;
    }
    case EqualityMode::Randomized: {
      std::mt19937_64 rng(policy.seed);
      std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(base - 1));
      for (std::uint64_t s = 0; s < policy.budget; ++s) {
        std::uint64_t idx = 0;
        for (int k = 0; k < d; ++k) idx = idx * base + sym(rng);
        if (vf(idx) != vg(idx)) {
          v.evidence = s + 1;
          v.counterexample = decode_word(idx, d, base);
          return v;
        }
      }
      v.evidence = policy.budget;
      v.equal = true;
      return v;
    }
    case EqualityMode::PeriodicSample: {
      std::mt19937_64 rng(policy.seed);
      std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(base - 1));
      std::uniform_int_distribution<int> per(1, std::max(2 * d, 8));
      for (std::uint64_t s = 0; s < policy.budget; ++s) {
        std::vector<Symbol> cells(static_cast<std::size_t>(per(rng)));
        for (auto& c : cells) c = sym(rng);
        PeriodicConfig x(f.alphabet(), cells);
        if (!(f.apply(x) == g.apply(x))) {
          v.evidence = s + 1;
          v.counterexample = cells;
          return v;
        }
      }
      v.evidence = policy.budget;
      v.equal = true;
      return v;
    }
  }
  return v;
}

}  // namespace rcalab
