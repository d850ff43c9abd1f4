#include "rcalab/identities.hpp"

#include <algorithm>
#include <random>

#include "rcalab/error.hpp"

namespace rcalab {

std::string to_string(CommutatorExpansion e) {
  return e == CommutatorExpansion::InverseFirst ? "a^-1 b^-1 a b" : "a b a^-1 b^-1";
}

Perm commutator(const Perm& a, const Perm& b, CommutatorExpansion expansion) {
  if (expansion == CommutatorExpansion::InverseFirst) return commutator(a, b);
  return a * b * a.inverse() * b.inverse();
}

std::vector<Factor> commutator(const Factor& a, const Factor& b, CommutatorExpansion expansion) {
  if (expansion == CommutatorExpansion::InverseFirst) return {inverse(a), inverse(b), a, b};
  return {a, b, inverse(a), inverse(b)};
}

namespace {

std::string support_outside(const Perm& p, const MutuallyUnborderedFamily& family) {
  const auto points = family.points();
  std::string out;
  for (Point x : p.support()) {
    if (std::find(points.begin(), points.end(), x) == points.end()) {
      if (!out.empty()) out += ", ";
      out += std::to_string(x);
    }
  }
  return out;
}

}  // namespace

IdentityCheck verify_commutator_identity(const Perm& p1, const Perm& p2, const Word& w, int i,
                                         const MutuallyUnborderedFamily& family, OffsetConvention convention,
                                         CommutatorExpansion expansion, const EvaluatorOptions& options) {
  if (!is_unbordered(w)) throw PreconditionViolation("commutator identity needs an unbordered w");
  const int ell = w.length();
  if (p1.width() != ell || p2.width() != ell) throw WidthMismatch("identity needs l-bit permutations");
  IdentityCheck out;
  if (family.word_length() != ell) {
    out.precondition_met = false;
    out.precondition_detail = "family words have length " + std::to_string(family.word_length());
  } else if (!check_mutually_unbordered(family.words())) {
    out.precondition_met = false;
    out.precondition_detail = "family is not mutually unbordered";
  } else {
    const std::string a = support_outside(p1, family);
    const std::string b = support_outside(p2, family);
    if (!a.empty() || !b.empty()) {
      out.precondition_met = false;
      out.precondition_detail = "points outside U: {" + a + "} / {" + b + "}";
    }
  }
  const Factor f1 = make_descriptor(p1, w, i, convention);
  const Factor f2 = make_descriptor(p2, w, i + ell, convention);
  out.lhs = commutator(f1, f2, expansion);
  out.rhs = {make_descriptor(commutator(p1, p2, expansion), w.doubled(), i, convention)};
  out.verdict = compare_products(out.lhs, out.rhs, w, options);
  return out;
}

IdentityCheck verify_conjugation_identity(const Perm& p1, const Perm& p2, const Word& w, int i,
                                          OffsetConvention convention, const EvaluatorOptions& options) {
  if (!is_unbordered(w)) throw PreconditionViolation("conjugation identity needs an unbordered w");
  const int ell = w.length();
  if (p1.width() != ell || p2.width() != ell) throw WidthMismatch("identity needs l-bit permutations");
  IdentityCheck out;
  const Factor x = make_descriptor(p1, w.doubled(), i, convention);
  const Factor c = make_descriptor(p2, w, i, convention);
  out.lhs = {inverse(c), x, c};
  out.rhs = {make_descriptor(conjugate(p1, p2), w.doubled(), i, convention)};
  out.verdict = compare_products(out.lhs, out.rhs, w, options);
  return out;
}

std::vector<Factor> shifted_conjugate(const CtrlDescriptor& f0, long long t) {
  std::vector<Factor> out;
  if (t != 0) out.emplace_back(ShiftPower{t});
  out.emplace_back(f0);
  if (t != 0) out.emplace_back(ShiftPower{-t});
  return out;
}

ConventionSelection select_offset_convention(int ell, std::uint64_t seed, int samples) {
  const auto family = formula_family(ell, 2);
  std::vector<int> bits(static_cast<std::size_t>(ell), 0);
  bits.back() = 1;
  const Word w(bits);
  const std::size_t degree = std::size_t{1} << ell;
  const auto points = family.points();

  std::mt19937_64 rng(seed);
  auto three_cycle_on_family = [&] {
    auto pts = points;
    std::shuffle(pts.begin(), pts.end(), rng);
    return Perm::from_cycles(degree, std::vector<std::vector<Point>>{{pts[0], pts[1], pts[2]}});
  };
  auto random_even = [&] {
    std::vector<Point> table(degree);
    for (std::size_t k = 0; k < degree; ++k) table[k] = static_cast<Point>(k);
    std::shuffle(table.begin(), table.end(), rng);
    Perm p(table);
    if (!p.is_even()) std::swap(table[0], table[1]);
    return Perm(table);
  };
  std::vector<std::pair<Perm, Perm>> cycle_pairs, even_pairs;
  for (int s = 0; s < samples; ++s) {
    cycle_pairs.emplace_back(three_cycle_on_family(), three_cycle_on_family());
    even_pairs.emplace_back(random_even(), random_even());
  }
  // A non-involutive F distinguishes conjugation directions.
  const Perm f_perm = Perm::from_cycles(8, {{1, 2, 3}});

  ConventionSelection out;
  for (auto convention : {OffsetConvention::OccurrenceAtOffset, OffsetConvention::WindowAtOffset}) {
    bool conjugates_ok = true;
    const CtrlDescriptor f0 = make_descriptor(f_perm, w, 0, convention);
    for (int i = -2; i <= 2 && conjugates_ok; ++i) {
      // f0^(sigma_1^i) = sigma_1^-i f0 sigma_1^i in left-first order.
      const std::vector<Factor> rhs{make_descriptor(f_perm, w, -i, convention)};
      conjugates_ok = compare_products(shifted_conjugate(f0, -i), rhs, w).equal();
    }
    bool conjugation_ok = true;
    for (const auto& [a, b] : even_pairs) {
      for (int i = -1; i <= 1 && conjugation_ok; ++i) {
        conjugation_ok = verify_conjugation_identity(a, b, w, i, convention).equal();
      }
    }
    for (auto expansion : {CommutatorExpansion::InverseFirst, CommutatorExpansion::InverseLast}) {
      ConventionTrial trial{convention, expansion};
      trial.conjugates_ok = conjugates_ok;
      trial.conjugation_ok = conjugation_ok;
      trial.commutator_ok = true;
      for (const auto& [a, b] : cycle_pairs) {
        for (int i = -1; i <= 1 && trial.commutator_ok; ++i) {
          trial.commutator_ok = verify_commutator_identity(a, b, w, i, family, convention, expansion).equal();
        }
      }
      if (trial.ok() && !out.found) {
        out.found = true;
        out.convention = convention;
        out.expansion = expansion;
      }
      out.trials.push_back(trial);
    }
  }
  return out;
}

}  // namespace rcalab
