#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rcalab/core/net_shift.hpp"
#include "rcalab/groups.hpp"
#include "rcalab/identities.hpp"

namespace rcalab {

/// Factors of a word in {s, s-1, f}, with f = f0. Runs of shifts are merged.
std::vector<Factor> realize(const GeneratorWord& word, const CtrlDescriptor& f0);

GeneratorWord inverse(const GeneratorWord& word);

/// Even permutation as a left-first product of 3-cycles.
std::vector<Perm> three_cycle_factors(const Perm& even);

struct CertificateParams {
  Word w;
  Perm involution;  // F
  /// Needed for ww targets; must be mutually unbordered with at least 5 words of length l.
  std::optional<MutuallyUnborderedFamily> family{};
  OffsetConvention convention = OffsetConvention::OccurrenceAtOffset;
  CommutatorExpansion expansion = CommutatorExpansion::InverseFirst;
  EvaluatorOptions evaluator{};
  FactorizerOptions factorizer{};
  /// Products longer than this are verified lemma by lemma only.
  std::size_t replay_limit = 400'000;
};

struct CertificateStage {
  std::string name;
  bool verified = false;
  std::string detail;
};

/// Word in the generators together with the evidence that it evaluates to `target`.
struct GenWordCert {
  GeneratorWord word;
  CtrlDescriptor target;
  bool verified = false;
  /// "aligned-exact" when the full word was replayed, "lemma-exact" when
  /// only the verified lemmas were composed.
  std::string policy;
  std::vector<CertificateStage> stages;
};

/// Reuses translate groups and factorization tables across targets.
class Certifier {
 public:
  explicit Certifier(CertificateParams params);

  const CertificateParams& params() const { return params_; }
  CtrlDescriptor f0() const;

  /// Throws NotReachable with the failing stage.
  GenWordCert certify(const CtrlDescriptor& target);

 private:
  struct Placed {
    Bsgs group;
    std::unique_ptr<Factorizer> words;
  };
  Placed& placed(int width);
  // Word for ctrl perm [w] with the given window shift, verified in stages.
  GeneratorWord single_control(const Perm& perm, long long window_shift, std::vector<CertificateStage>& stages,
                               const std::string& label);
  GenWordCert finish(GeneratorWord word, const CtrlDescriptor& target, std::vector<CertificateStage> stages,
                     bool lemmas_ok);

  CertificateParams params_;
  std::vector<std::optional<Placed>> placed_;  // by width
};

GenWordCert generator_word_certificate(const CtrlDescriptor& target, const CertificateParams& params);

}  // namespace rcalab
