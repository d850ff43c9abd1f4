#include "rcalab/certificate.hpp"

#include <algorithm>
#include <array>

#include "rcalab/error.hpp"

namespace rcalab {

std::vector<Factor> realize(const GeneratorWord& word, const CtrlDescriptor& f0) {
  std::vector<Factor> out;
  long long pending = 0;
  auto flush = [&] {
    if (pending != 0) out.emplace_back(ShiftPower{pending});
    pending = 0;
  };
  for (Generator g : word) {
    switch (g) {
      case Generator::Shift:
        ++pending;
        break;
      case Generator::ShiftInverse:
        --pending;
        break;
      case Generator::Ctrl:
        flush();
        out.emplace_back(f0);
        break;
      default:
        throw UnsupportedFactor("generator '" + token(g) + "' has no ctrl-evaluator semantics on B x C");
    }
  }
  flush();
  return out;
}

GeneratorWord inverse(const GeneratorWord& word) {
  GeneratorWord out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

namespace {

void append_reduced(GeneratorWord& into, const GeneratorWord& tail) {
  for (Generator g : tail) {
    const bool cancels = !into.empty() && ((into.back() == Generator::Shift && g == Generator::ShiftInverse) ||
                                           (into.back() == Generator::ShiftInverse && g == Generator::Shift));
    if (cancels) {
      into.pop_back();
    } else {
      into.push_back(g);
    }
  }
}

GeneratorWord shift_word(long long t) {
  return GeneratorWord(static_cast<std::size_t>(t < 0 ? -t : t), t < 0 ? Generator::ShiftInverse : Generator::Shift);
}

Perm transposition(std::size_t degree, Point a, Point b) {
  return Perm::from_cycles(degree, std::vector<std::vector<Point>>{{a, b}});
}

// (x y z) read from a 3-cycle, starting at its smallest moved point.
std::array<Point, 3> cycle_points(const Perm& c) {
  const Point x = c.support().front();
  return {x, c[x], c[c[x]]};
}

int offset_for(long long window_shift, OffsetConvention convention) {
  return static_cast<int>(convention == OffsetConvention::OccurrenceAtOffset ? -window_shift : window_shift);
}

}  // namespace

std::vector<Perm> three_cycle_factors(const Perm& even) {
  if (!even.is_even()) throw NotEven("3-cycle factorization needs an even permutation");
  const std::size_t degree = even.degree();
  // Cycle (a1 ... ak) = (a1 a2)(a1 a3)...(a1 ak) in left-first order.
  std::vector<std::pair<Point, Point>> swaps;
  for (const auto& cycle : even.cycles()) {
    for (std::size_t k = 1; k < cycle.size(); ++k) swaps.emplace_back(cycle[0], cycle[k]);
  }
  std::vector<Perm> out;
  for (std::size_t k = 0; k + 1 < swaps.size(); k += 2) {
    const auto [a, b] = swaps[k];
    const auto [c, d] = swaps[k + 1];
    const Perm first = transposition(degree, a, b);
    const Perm second = transposition(degree, c, d);
    if (a == c || a == d || b == c || b == d) {
      out.push_back(first * second);
    } else {
      const Perm bridge = transposition(degree, a, c);
      out.push_back(first * bridge);
      out.push_back(bridge * second);
    }
  }
  Perm check = Perm::identity(degree);
  for (const auto& c : out) check = check * c;
  if (check != even) throw PreconditionViolation("3-cycle factorization failed to replay");
  return out;
}

Certifier::Certifier(CertificateParams params) : params_(std::move(params)) {
  if (!is_unbordered(params_.w)) throw PreconditionViolation("certificates need an unbordered w");
  if (!params_.involution.is_involution()) throw PreconditionViolation("F must be an involution");
  if (params_.involution.width() > params_.w.length()) throw WidthMismatch("F is wider than w");
}

CtrlDescriptor Certifier::f0() const { return make_descriptor(params_.involution, params_.w, 0, params_.convention); }

Certifier::Placed& Certifier::placed(int width) {
  if (static_cast<std::size_t>(width) >= placed_.size()) placed_.resize(static_cast<std::size_t>(width) + 1);
  auto& slot = placed_[static_cast<std::size_t>(width)];
  if (!slot) {
    Bsgs group = translate_group(params_.involution, width);
    auto words = std::make_unique<Factorizer>(group, params_.factorizer);
    if (!words->complete()) throw NotReachable("translate factorization", "word table did not fill within budget");
    slot.emplace(Placed{std::move(group), std::move(words)});
  }
  return *slot;
}

GeneratorWord Certifier::single_control(const Perm& perm, long long window_shift,
                                        std::vector<CertificateStage>& stages, const std::string& label) {
  const int width = perm.width();
  const int n = params_.involution.width();
  if (width < n) throw NotReachable("translate factorization", "target window narrower than F");
  const Word& w = params_.w;
  const auto conv = params_.convention;
  const CtrlDescriptor target = make_descriptor(perm, w, offset_for(window_shift, conv), conv);

  Placed& p = placed(width);
  if (!p.group.contains(perm)) {
    throw NotReachable("translate factorization",
                       label + ": permutation is outside the group generated by translates of F on " +
                           std::to_string(width) + " bits");
  }
  const auto letters = p.words->factorize(perm);
  if (!letters) throw NotReachable("translate factorization", label + ": factorization failed");
  const auto generators = translate_generators(params_.involution, width);
  const bool replays = evaluate(*letters, generators, perm.degree()) == perm;
  stages.push_back({"factorization " + label, replays,
                    std::to_string(letters->size()) + " translates of F; window replay " + (replays ? "ok" : "failed")});

  // Each used translate is f0 conjugated by a power of sigma_1.
  std::vector<int> used;
  for (const auto& l : *letters) used.push_back(l.generator);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  const CtrlDescriptor f = f0();
  bool conjugates_ok = true;
  std::string detail;
  for (int j : used) {
    const long long t = -(window_shift + j);
    const std::vector<Factor> rhs{make_descriptor(params_.involution, w, offset_for(window_shift + j, conv), conv)};
    const bool ok = compare_products(shifted_conjugate(f, t), rhs, w, params_.evaluator).equal();
    conjugates_ok = conjugates_ok && ok;
    detail += (detail.empty() ? "" : ", ") + std::string("bit ") + std::to_string(j) + (ok ? " ok" : " failed");
  }
  stages.push_back({"conjugates " + label, conjugates_ok, detail});

  std::vector<Factor> placements;
  GeneratorWord word;
  for (const auto& l : *letters) {
    const long long ws = window_shift + l.generator;
    placements.emplace_back(make_descriptor(params_.involution, w, offset_for(ws, conv), conv));
    append_reduced(word, shift_word(-ws));
    word.push_back(Generator::Ctrl);
    append_reduced(word, shift_word(ws));
  }
  if (placements.size() <= params_.replay_limit) {
    const std::vector<Factor> rhs{target};
    const auto v = compare_products(placements, rhs, w, params_.evaluator);
    stages.push_back({"placement " + label, v.equal(), v.method + ": " + to_string(v.status)});
  }
  return word;
}

GenWordCert Certifier::finish(GeneratorWord word, const CtrlDescriptor& target, std::vector<CertificateStage> stages,
                              bool lemmas_ok) {
  GenWordCert cert{{}, target, false, "", {}};
  const auto factors = realize(word, f0());
  if (factors.size() <= params_.replay_limit) {
    const std::vector<Factor> rhs{target};
    const auto v = compare_products(factors, rhs, params_.w, params_.evaluator);
    stages.push_back({"end-to-end", v.equal(), v.method + ": " + to_string(v.status) + ", " +
                                                    std::to_string(word.size()) + " letters"});
    cert.policy = "aligned-exact";
    cert.verified = v.equal() && lemmas_ok;
  } else {
    stages.push_back({"end-to-end", lemmas_ok, "skipped: " + std::to_string(factors.size()) +
                                                   " factors exceed the replay limit; lemmas composed"});
    cert.policy = "lemma-exact";
    cert.verified = lemmas_ok;
  }
  cert.word = std::move(word);
  cert.stages = std::move(stages);
  return cert;
}

GenWordCert Certifier::certify(const CtrlDescriptor& target) {
  const Word& w = params_.w;
  std::vector<CertificateStage> stages;
  auto all_ok = [&] {
    return std::all_of(stages.begin(), stages.end(), [](const CertificateStage& s) { return s.verified; });
  };

  if (target.control == w) {
    auto word = single_control(target.perm, target.window_shift(), stages, "target");
    const bool ok = all_ok();
    return finish(std::move(word), target, std::move(stages), ok);
  }
  if (target.control != w.doubled()) {
    throw NotReachable("control", "target control is neither w nor ww");
  }

  const int ell = w.length();
  const Perm& pi = target.perm;
  if (pi.width() != ell) throw NotReachable("control", "ww targets need an l-bit window");
  if (!pi.is_even()) throw NotReachable("alternating", "ww targets are reached for even permutations only");
  if (!params_.family || params_.family->size() < 5 || params_.family->word_length() != ell ||
      !check_mutually_unbordered(params_.family->words())) {
    throw NotReachable("commutator", "needs a mutually unbordered family of at least 5 words of length l");
  }
  const auto& family = *params_.family;
  const auto conv = target.convention;
  const int i = target.offset;
  const std::size_t degree = pi.degree();

  // A 3-cycle on U written as a commutator of two 3-cycles on U.
  const auto points = family.points();
  std::vector<Perm> cycles_on_u;
  for (Point x : points) {
    for (Point y : points) {
      for (Point z : points) {
        if (x < y && x < z && y != z) {
          cycles_on_u.push_back(Perm::from_cycles(degree, std::vector<std::vector<Point>>{{x, y, z}}));
        }
      }
    }
  }
  std::optional<std::array<Perm, 3>> lemma;
  for (const auto& a : cycles_on_u) {
    for (const auto& b : cycles_on_u) {
      Perm c = commutator(a, b, params_.expansion);
      if (c.support().size() == 3) {
        lemma = std::array<Perm, 3>{a, b, c};
        break;
      }
    }
    if (lemma) break;
  }
  if (!lemma) throw NotReachable("commutator", "no 3-cycle on U is a commutator of 3-cycles on U");
  const auto& [a, b, base] = *lemma;

  const auto ia = make_descriptor(a, w, i, conv);
  const auto ib = make_descriptor(b, w, i + ell, conv);
  const GeneratorWord word_a = single_control(a, ia.window_shift(), stages, "commutator left");
  const GeneratorWord word_b = single_control(b, ib.window_shift(), stages, "commutator right");
  const auto comm_check = verify_commutator_identity(a, b, w, i, family, conv, params_.expansion, params_.evaluator);
  stages.push_back({"commutator identity", comm_check.equal() && comm_check.precondition_met,
                    comm_check.verdict.method + ": " + to_string(comm_check.verdict.status)});
  GeneratorWord comm;
  if (params_.expansion == CommutatorExpansion::InverseFirst) {
    append_reduced(comm, inverse(word_a));
    append_reduced(comm, inverse(word_b));
    append_reduced(comm, word_a);
    append_reduced(comm, word_b);
  } else {
    append_reduced(comm, word_a);
    append_reduced(comm, word_b);
    append_reduced(comm, inverse(word_a));
    append_reduced(comm, inverse(word_b));
  }

  const auto base_points = cycle_points(base);
  std::vector<Factor> pieces;
  GeneratorWord word;
  int index = 0;
  for (const Perm& c : three_cycle_factors(pi)) {
    // Even g with base^g = c, i.e. g maps the base cycle points onto those of c.
    const auto target_points = cycle_points(c);
    std::vector<Point> table(degree, static_cast<Point>(-1));
    std::vector<bool> taken(degree, false);
    for (int k = 0; k < 3; ++k) {
      table[base_points[static_cast<std::size_t>(k)]] = target_points[static_cast<std::size_t>(k)];
      taken[target_points[static_cast<std::size_t>(k)]] = true;
    }
    Point next = 0;
    std::vector<Point> free_domain;
    for (Point x = 0; x < degree; ++x) {
      if (table[x] != static_cast<Point>(-1)) continue;
      while (taken[next]) ++next;
      table[x] = next;
      taken[next] = true;
      free_domain.push_back(x);
    }
    if (!Perm(table).is_even()) std::swap(table[free_domain[0]], table[free_domain[1]]);
    const Perm g(table);
    if (conjugate(base, g) != c) throw NotReachable("conjugation", "conjugator construction failed");

    const std::string label = "conjugator " + std::to_string(index);
    const auto ig = make_descriptor(g, w, i, conv);
    const GeneratorWord word_g = single_control(g, ig.window_shift(), stages, label);
    const auto conj_check = verify_conjugation_identity(base, g, w, i, conv, params_.evaluator);
    stages.push_back({"conjugation identity " + std::to_string(index), conj_check.equal(),
                      conj_check.verdict.method + ": " + to_string(conj_check.verdict.status)});
    append_reduced(word, inverse(word_g));
    append_reduced(word, comm);
    append_reduced(word, word_g);
    pieces.emplace_back(make_descriptor(c, w.doubled(), i, conv));
    ++index;
  }
  const std::vector<Factor> rhs{target};
  const auto product = compare_products(pieces, rhs, w, params_.evaluator);
  stages.push_back({"3-cycle product", product.equal(),
                    std::to_string(pieces.size()) + " factors; " + product.method + ": " + to_string(product.status)});
  const bool ok = all_ok();
  return finish(std::move(word), target, std::move(stages), ok);
}

GenWordCert generator_word_certificate(const CtrlDescriptor& target, const CertificateParams& params) {
  return Certifier(params).certify(target);
}

}  // namespace rcalab
