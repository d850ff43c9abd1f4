#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcalab/evaluator.hpp"

namespace rcalab {

/// How [a, b] is read as a product of four factors (left factor applied first).
enum class CommutatorExpansion {
  InverseFirst,  // a^-1 b^-1 a b
  InverseLast,   // a b a^-1 b^-1
};

std::string to_string(CommutatorExpansion e);

Perm commutator(const Perm& a, const Perm& b, CommutatorExpansion expansion);
std::vector<Factor> commutator(const Factor& a, const Factor& b, CommutatorExpansion expansion);

struct IdentityCheck {
  ProductVerdict verdict;
  bool precondition_met = true;
  std::string precondition_detail;
  std::vector<Factor> lhs;
  std::vector<Factor> rhs;
  bool equal() const { return verdict.equal(); }
};

/// [ctrl p1 [w]_i, ctrl p2 [w]_{i+l}] against ctrl [p1, p2] [ww]_i. Supports outside
/// U are reported in `precondition_detail`; the comparison runs regardless.
IdentityCheck verify_commutator_identity(const Perm& p1, const Perm& p2, const Word& w, int i,
                                         const MutuallyUnborderedFamily& family,
                                         OffsetConvention convention = OffsetConvention::OccurrenceAtOffset,
                                         CommutatorExpansion expansion = CommutatorExpansion::InverseFirst,
                                         const EvaluatorOptions& options = {});

/// (ctrl p1 [ww]_i)^(ctrl p2 [w]_i) against ctrl p1^p2 [ww]_i.
IdentityCheck verify_conjugation_identity(const Perm& p1, const Perm& p2, const Word& w, int i,
                                          OffsetConvention convention = OffsetConvention::OccurrenceAtOffset,
                                          const EvaluatorOptions& options = {});

/// sigma_1^t f sigma_1^-t as a product, where f = ctrl F [w]_0.
std::vector<Factor> shifted_conjugate(const CtrlDescriptor& f0, long long t);

struct ConventionTrial {
  OffsetConvention convention;
  CommutatorExpansion expansion;
  bool conjugates_ok = false;   // f0^(sigma_1^i) = ctrl F [w]_{-i} for |i| <= 2
  bool commutator_ok = false;   // commutator identity on sampled 3-cycles
  bool conjugation_ok = false;  // conjugation identity on sampled pairs
  bool ok() const { return conjugates_ok && commutator_ok && conjugation_ok; }
};

struct ConventionSelection {
  std::vector<ConventionTrial> trials;
  bool found = false;
  OffsetConvention convention = OffsetConvention::OccurrenceAtOffset;
  CommutatorExpansion expansion = CommutatorExpansion::InverseFirst;
};

/// Tries both offset conventions and both commutator expansions on the construction's
/// relations with w = 0^{l-1}1 and U = formula_family(l, 2); needs l >= 9.
ConventionSelection select_offset_convention(int ell = 9, std::uint64_t seed = 7, int samples = 4);

}  // namespace rcalab
