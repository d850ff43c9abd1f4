#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rcalab/core/equality.hpp"
#include "rcalab/ctrl.hpp"

namespace rcalab {

/// sigma_1^power on the two-track alphabet.
struct ShiftPower {
  long long power = 0;
  friend bool operator==(const ShiftPower&, const ShiftPower&) = default;
};

/// One factor of a product on B x C. Products are read left-factor-first.
using Factor = std::variant<CtrlDescriptor, ShiftPower>;

Factor inverse(const Factor& f);
/// Inverse of a product: reversed, each factor inverted.
std::vector<Factor> inverse(std::span<const Factor> product);

/// A product after all shifts have been moved to the end and consecutive ctrl
/// factors acting on the same block have been merged.
///
/// Blocks are the l-cell windows [p + base + m*l, p + base + (m+1)*l) attached
/// to an occurrence p of w; every factor window lies inside one block.
class AlignedNormalForm {
 public:
  struct BlockFactor {
    bool doubled = false;  // control ww instead of w
    int block = 0;         // m
    Perm perm;             // acts on the l-bit block content
  };

  long long shift() const { return shift_; }
  int base() const { return base_; }
  const Word& word() const { return word_; }
  const std::vector<BlockFactor>& factors() const { return factors_; }

  /// Partially overlapping blocks can never be active together.
  bool separated() const { return separated_; }
  const std::string& separation_detail() const { return separation_detail_; }

  /// Net permutation of block `block` relative to an occurrence at 0, given the
  /// set of occurrence positions (all multiples of l).
  Perm net(int block, const std::set<long long>& occurrences) const;

  /// Positions (relative to an anchor occurrence at 0 on block `block`) whose
  /// occurrence status can change net(block, .).
  std::set<long long> relevant_positions(int block) const;

  std::vector<int> blocks() const;

  friend AlignedNormalForm symbolic_product(std::span<const Factor>, const Word&, std::optional<int>);

 private:
  long long shift_ = 0;
  int base_ = 0;
  Word word_{std::vector<int>{0}};
  std::vector<BlockFactor> factors_;
  bool separated_ = true;
  std::string separation_detail_;
};

/// Smallest base in [0, l) that places every factor window inside one block,
/// or nullopt when the product is not block-aligned.
std::optional<int> block_base(std::span<const Factor> product, const Word& w);

/// Throws UnsupportedFactor for controls other than w / ww and BudgetExceeded
/// when no block base exists.
AlignedNormalForm symbolic_product(std::span<const Factor> product, const Word& w,
                                   std::optional<int> base = std::nullopt);

enum class ProductStatus { Equal, NotEqual, Inconclusive };
std::string to_string(ProductStatus s);

struct ProductVerdict {
  ProductStatus status = ProductStatus::Inconclusive;
  bool proof = false;
  std::string method;  // "aligned", "exhaustive", "witness-search"
  std::optional<PeriodicConfig> witness;
  std::string detail;
  bool equal() const { return status == ProductStatus::Equal; }
};

struct EvaluatorOptions {
  std::uint64_t budget = default_budget();
  std::uint64_t seed = 1;
  int witness_attempts = 200;
};

/// Exact comparison of two products over one unbordered w.
ProductVerdict compare_products(std::span<const Factor> lhs, std::span<const Factor> rhs, const Word& w,
                                const EvaluatorOptions& options = {});

/// Direct simulation of a product on a periodic point of B x C.
PeriodicConfig simulate(std::span<const Factor> product, const PeriodicConfig& x);

/// Rule table of a product (rightmost-first composition of compiled factors).
BlockMap compile_product(std::span<const Factor> product, std::uint64_t budget = default_budget());

}  // namespace rcalab
