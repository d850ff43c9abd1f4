#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcalab/bsgs.hpp"
#include "rcalab/core/block_map.hpp"
#include "rcalab/core/equality.hpp"
#include "rcalab/words.hpp"

namespace rcalab {

constexpr int kMaxTranslateWidth = 10;

/// F placed at bit offsets 0..m-n of an m-bit window.
std::vector<Perm> translate_generators(const Perm& gate, int m);

/// Throws BudgetExceeded for m > kMaxTranslateWidth.
Bsgs translate_group(const Perm& gate, int m, const BsgsOptions& options = {});

/// 3-cycles (0 1 i), i = 2..2^k-1: a generating set of Alt({0,1}^k).
std::vector<Perm> alternating_generators(int width);

/// Whether G contains every even permutation of the first `inner` bits
/// (acting trivially on the remaining bits).
bool contains_localized_alt(const Bsgs& group, int inner);

struct InvolutionSearchOptions {
  std::uint64_t seed = 1;
  /// Involutions examined; all of them when the family is smaller.
  std::uint64_t max_candidates = 2000;
  /// Stop after this many hits (0 = keep going).
  std::size_t max_hits = 0;
};

struct InvolutionSearch {
  std::vector<Perm> candidates;
  std::uint64_t examined = 0;
  std::uint64_t population = 0;  // involutions of the given width (saturating)
  bool exhaustive = false;
};

/// Involutions F of width n with contains_localized_alt(translate_group(F, m_test), m_test - 2).
/// Candidates are finitely verified only.
InvolutionSearch search_universal_involution(int n, int m_test, const InvolutionSearchOptions& options = {});

/// A fixed involution of width 3 found by the search, used when none is configured.
Perm default_involution();

struct NamedGate {
  std::string name;
  Perm perm;
};

/// Gates placed on contiguous windows only.
class GateSet {
 public:
  explicit GateSet(std::vector<NamedGate> gates);
  /// NOT, CNOT and Toffoli in both bit orientations.
  static GateSet standard();
  /// Looks up a built-in set by name ("standard", "one-way").
  static GateSet named(const std::string& name);

  const std::vector<NamedGate>& gates() const { return gates_; }
  const NamedGate& gate(const std::string& name) const;
  int max_width() const;

 private:
  std::vector<NamedGate> gates_;
};

struct GateApplication {
  std::string gate;
  int offset = 0;
  friend bool operator==(const GateApplication&, const GateApplication&) = default;
};
using GateSequence = std::vector<GateApplication>;

/// Left-to-right replay of a gate sequence on an m-bit window.
Perm replay(const GateSequence& sequence, const GateSet& gates, int width);

/// Placed gate group on m bits together with a word table for factorization.
class GateSynthesizer {
 public:
  GateSynthesizer(GateSet gates, int width, const FactorizerOptions& options = {});

  const Bsgs& group() const { return bsgs_; }
  int width() const { return width_; }
  const GateSet& gates() const { return gates_; }
  /// Longest possible output: sum over levels of the longest table entry.
  std::size_t length_bound() const { return length_bound_; }

  /// Throws NotEven and NotInGeneratedGroup; the result is replay-verified.
  GateSequence decompose(const Perm& target) const;

 private:
  GateSet gates_;
  int width_;
  std::vector<GateApplication> placements_;
  Bsgs bsgs_;
  std::optional<Factorizer> factorizer_;
  std::size_t length_bound_ = 0;
};

GateSequence decompose_even_perm(const Perm& target, const GateSet& gates = GateSet::standard());

struct GenerationCheck {
  bool ok = false;
  BigInt order;
  BigInt expected;
  std::size_t generators = 0;
};

/// Commutators of pairs of Alt(U) generators generate Alt(U); works on |U| points.
/// Throws FamilyTooSmall when |U| < 5.
GenerationCheck commutator_generation_check(const MutuallyUnborderedFamily& family);

/// Normal closure of `seed` under Alt({0,1}^l) equals Alt({0,1}^l). Needs 3 <= l <= 4.
GenerationCheck normal_closure_check(int ell, const Perm& seed);

struct TwoInvolutions {
  BlockMap a;
  BlockMap b;
  /// sigma_0^-1 x sigma_1 on B' x B x C.
  BlockMap target;
  Verdict a_squared;
  Verdict b_squared;
  /// "a then b" and "b then a" compared with the target.
  Verdict a_then_b;
  Verdict b_then_a;
  std::string passing_order;  // "a then b", "b then a" or ""
  bool ok() const;
};

/// a swaps tracks B' and B; b maps (x, y) on (B', B) to (sigma^-1 y, sigma x).
TwoInvolutions two_involution_shift_decomposition(const Alphabet& alphabet = Alphabet({2, 2, 2}));

}  // namespace rcalab
