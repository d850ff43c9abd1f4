#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcalab/core/block_map.hpp"

namespace rcalab {

enum class EqualityMode { ExhaustiveTable, PeriodicSample, Randomized };

struct EqualityPolicy {
  EqualityMode mode = EqualityMode::ExhaustiveTable;
  std::uint64_t budget = default_budget();
  std::uint64_t seed = 0;

  static EqualityPolicy exhaustive(std::uint64_t budget = default_budget()) {
    return {EqualityMode::ExhaustiveTable, budget, 0};
  }
};

std::string to_string(EqualityMode mode);
EqualityMode equality_mode_from_string(const std::string& name);

/// Outcome of an equality check. `proof` is false for sampled verdicts.
struct Verdict {
  bool equal = false;
  bool proof = false;
  std::uint64_t evidence = 0;  // table entries compared, or samples drawn
  std::string method;
  /// Neighborhood word (ExhaustiveTable / Randomized) or periodic point
  /// (PeriodicSample) on which the two maps disagree.
  std::optional<std::vector<Symbol>> counterexample;
  std::string detail;

  explicit operator bool() const { return equal; }
  std::string provenance() const { return proof ? "exhaustive" : "probabilistic"; }
};

Verdict equal(const BlockMap& f, const BlockMap& g, const EqualityPolicy& policy = EqualityPolicy{});

}  // namespace rcalab
