#include "rcalab/groups.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "rcalab/error.hpp"

namespace rcalab {

std::vector<Perm> translate_generators(const Perm& gate, int m) {
  const int n = gate.width();
  if (n > m) throw PreconditionViolation("gate wider than the window");
  std::vector<Perm> out;
  for (int offset = 0; offset + n <= m; ++offset) out.push_back(embed(gate, m, offset));
  return out;
}

Bsgs translate_group(const Perm& gate, int m, const BsgsOptions& options) {
  if (m > kMaxTranslateWidth) {
    throw BudgetExceeded("translate group on " + std::to_string(m) + " bits exceeds the " +
                         std::to_string(kMaxTranslateWidth) + "-bit domain budget");
  }
  return Bsgs::build(translate_generators(gate, m), std::size_t{1} << m, options);
}

std::vector<Perm> alternating_generators(int width) {
  const std::size_t degree = std::size_t{1} << width;
  std::vector<Perm> out;
  for (Point i = 2; i < degree; ++i) {
    out.push_back(Perm::from_cycles(degree, std::vector<std::vector<Point>>{{0, 1, i}}));
  }
  return out;
}

bool contains_localized_alt(const Bsgs& group, int inner) {
  const std::size_t degree = group.degree();
  int outer = 0;
  while ((std::size_t{1} << outer) < degree) ++outer;
  if ((std::size_t{1} << outer) != degree) throw WidthMismatch("group degree is not a power of two");
  if (inner > outer) throw PreconditionViolation("inner width exceeds the group width");
  if (inner < 2) return true;  // Alt of at most two points is trivial
  for (const auto& g : alternating_generators(inner)) {
    if (!group.contains(embed_leading(g, outer))) return false;
  }
  return true;
}

namespace {

std::uint64_t involution_count(std::size_t points) {
  // a(n) = a(n-1) + (n-1) a(n-2), saturating.
  std::uint64_t prev = 1, cur = 1;
  for (std::size_t n = 2; n <= points; ++n) {
    const unsigned __int128 next = static_cast<unsigned __int128>(cur) + static_cast<unsigned __int128>(n - 1) * prev;
    prev = cur;
    cur = next > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(next);
  }
  return cur;
}

void enumerate_involutions(std::vector<Point>& table, std::size_t from, const std::function<bool(const Perm&)>& visit,
                           bool& stop) {
  while (from < table.size() && table[from] != static_cast<Point>(-1)) ++from;
  if (stop) return;
  if (from == table.size()) {
    stop = !visit(Perm(table));
    return;
  }
  table[from] = static_cast<Point>(from);
  enumerate_involutions(table, from + 1, visit, stop);
  table[from] = static_cast<Point>(-1);
  for (std::size_t j = from + 1; j < table.size() && !stop; ++j) {
    if (table[j] != static_cast<Point>(-1)) continue;
    table[from] = static_cast<Point>(j);
    table[j] = static_cast<Point>(from);
    enumerate_involutions(table, from + 1, visit, stop);
    table[from] = table[j] = static_cast<Point>(-1);
  }
}

Perm random_involution(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Point> order(degree);
  std::iota(order.begin(), order.end(), Point{0});
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t pairs = rng() % (degree / 2 + 1);
  std::vector<Point> table(degree);
  std::iota(table.begin(), table.end(), Point{0});
  for (std::size_t k = 0; k < pairs; ++k) {
    const Point a = order[2 * k], b = order[2 * k + 1];
    table[a] = b;
    table[b] = a;
  }
  return Perm(table);
}

}  // namespace

InvolutionSearch search_universal_involution(int n, int m_test, const InvolutionSearchOptions& options) {
  if (n > m_test) throw PreconditionViolation("involution width exceeds the test window");
  if (n < 1) throw ParameterOutOfRange("involution width must be positive");
  if (m_test > kMaxTranslateWidth) throw BudgetExceeded("test window beyond the domain budget");
  const std::size_t degree = std::size_t{1} << n;
  InvolutionSearch out;
  out.population = involution_count(degree);
  out.exhaustive = out.population <= options.max_candidates;

  auto test = [&](const Perm& f) {
    ++out.examined;
    if (f.is_identity()) return true;
    // Sifting to the identity is a membership proof even in an incomplete
    // chain, so hits are exact; misses may be false negatives.
    BsgsOptions bo;
    bo.seed = options.seed + out.examined;
    bo.deterministic = false;
    if (contains_localized_alt(translate_group(f, m_test, bo), m_test - 2)) out.candidates.push_back(f);
    return options.max_hits == 0 || out.candidates.size() < options.max_hits;
  };

  if (out.exhaustive) {
    std::vector<Point> table(degree, static_cast<Point>(-1));
    bool stop = false;
    enumerate_involutions(table, 0, test, stop);
  } else {
    std::mt19937_64 rng(options.seed);
    while (out.examined < options.max_candidates) {
      if (!test(random_involution(degree, rng))) break;
    }
  }
  return out;
}

Perm default_involution() {
  // First hit of the exhaustive width-3 search at m_test = 6.
  return Perm::from_cycles(8, {{0, 1}, {3, 4}, {5, 7}});
}

GateSet::GateSet(std::vector<NamedGate> gates) : gates_(std::move(gates)) {
  if (gates_.empty()) throw PreconditionViolation("empty gate set");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    gates_[i].perm.width();
    for (std::size_t j = 0; j < i; ++j) {
      if (gates_[i].name == gates_[j].name) throw PreconditionViolation("duplicate gate name " + gates_[i].name);
    }
  }
}

GateSet GateSet::standard() {
  return GateSet({{"not", gates::bit_not()},
                  {"cnot", gates::cnot()},
                  {"cnot_r", mirrored(gates::cnot())},
                  {"toffoli", gates::toffoli()},
                  {"toffoli_r", mirrored(gates::toffoli())}});
}

GateSet GateSet::named(const std::string& name) {
  if (name == "standard") return standard();
  if (name == "one-way") return GateSet({{"not", gates::bit_not()}, {"cnot", gates::cnot()}, {"toffoli", gates::toffoli()}});
  throw ParseError("gates", "unknown gate set '" + name + "'");
}

const NamedGate& GateSet::gate(const std::string& name) const {
  for (const auto& g : gates_) {
    if (g.name == name) return g;
  }
  throw ParseError("gate", "unknown gate '" + name + "'");
}

int GateSet::max_width() const {
  int out = 0;
  for (const auto& g : gates_) out = std::max(out, g.perm.width());
  return out;
}

Perm replay(const GateSequence& sequence, const GateSet& gates, int width) {
  Perm out = Perm::identity(std::size_t{1} << width);
  for (const auto& step : sequence) out = out * embed(gates.gate(step.gate).perm, width, step.offset);
  return out;
}

GateSynthesizer::GateSynthesizer(GateSet gates, int width, const FactorizerOptions& options)
    : gates_(std::move(gates)), width_(width) {
  if (gates_.max_width() > width) throw PreconditionViolation("gate wider than the target width");
  if (width > kMaxTranslateWidth) throw BudgetExceeded("gate synthesis width beyond the domain budget");
  std::vector<Perm> generators;
  for (const auto& g : gates_.gates()) {
    for (int offset = 0; offset + g.perm.width() <= width; ++offset) {
      placements_.push_back({g.name, offset});
      generators.push_back(embed(g.perm, width, offset));
    }
  }
  bsgs_ = Bsgs::build(std::move(generators), std::size_t{1} << width);
  factorizer_.emplace(bsgs_, options);
  if (!factorizer_->complete()) throw BudgetExceeded("factorization table did not fill");
  length_bound_ = factorizer_->length_bound();
  std::size_t worst_inverse = 1;
  for (const auto& g : gates_.gates()) {
    worst_inverse = std::max<std::size_t>(worst_inverse, g.perm.order() - 1);
  }
  length_bound_ *= worst_inverse;
}

GateSequence GateSynthesizer::decompose(const Perm& target) const {
  if (target.width() != width_) throw WidthMismatch("target width differs from the synthesizer width");
  if (!target.is_even()) throw NotEven("target permutation is odd");
  if (!bsgs_.contains(target)) throw NotInGeneratedGroup("target is outside the placed gate group");
  auto word = factorizer_->factorize(target);
  if (!word) throw NotInGeneratedGroup("factorization failed");
  GateSequence out;
  for (const auto& letter : *word) {
    const auto& placement = placements_[static_cast<std::size_t>(letter.generator)];
    const std::uint64_t copies = letter.inverse ? gates_.gate(placement.gate).perm.order() - 1 : 1;
    for (std::uint64_t c = 0; c < copies; ++c) out.push_back(placement);
  }
  if (replay(out, gates_, width_) != target) throw NotInGeneratedGroup("replay check failed");
  return out;
}

GateSequence decompose_even_perm(const Perm& target, const GateSet& gates) {
  if (!target.is_even()) throw NotEven("target permutation is odd");
  if (target.is_identity()) return {};
  return GateSynthesizer(gates, target.width()).decompose(target);
}

GenerationCheck commutator_generation_check(const MutuallyUnborderedFamily& family) {
  const int size = family.size();
  if (size < 5) {
    throw FamilyTooSmall("family of size " + std::to_string(size) + " is below the required 5");
  }
  const std::size_t degree = static_cast<std::size_t>(size);
  std::vector<Perm> cycles;
  for (Point i = 0; i < degree; ++i) {
    for (Point j = 0; j < degree; ++j) {
      for (Point k = 0; k < degree; ++k) {
        if (i < j && i < k && j != k) {
          cycles.push_back(Perm::from_cycles(degree, std::vector<std::vector<Point>>{{i, j, k}}));
        }
      }
    }
  }
  std::set<Perm> distinct;
  for (const auto& a : cycles) {
    for (const auto& b : cycles) {
      Perm c = commutator(a, b);
      if (!c.is_identity()) distinct.insert(std::move(c));
    }
  }
  std::vector<Perm> commutators(distinct.begin(), distinct.end());
  GenerationCheck out;
  out.generators = commutators.size();
  out.order = Bsgs::build(std::move(commutators), degree).order();
  out.expected = factorial(static_cast<unsigned>(size)) / 2;
  out.ok = out.order == out.expected;
  return out;
}

GenerationCheck normal_closure_check(int ell, const Perm& seed) {
  if (ell < 3) throw PreconditionViolation("Alt({0,1}^l) is simple only for l >= 3");
  if (ell > 4) throw BudgetExceeded("normal closure is budget-limited to l <= 4");
  if (seed.width() != ell) throw WidthMismatch("seed must act on {0,1}^l");
  if (!seed.is_even()) throw NotEven("seed must be an even permutation");
  const std::size_t degree = std::size_t{1} << ell;
  const auto alt = alternating_generators(ell);
  std::vector<Perm> gens{seed};
  Bsgs closure = Bsgs::build(gens, degree);
  for (bool grew = true; grew;) {
    grew = false;
    const auto current = gens;
    for (const auto& g : current) {
      for (const auto& a : alt) {
        Perm c = conjugate(g, a);
        if (closure.contains(c)) continue;
        gens.push_back(std::move(c));
        closure = Bsgs::build(gens, degree);
        grew = true;
      }
    }
  }
  GenerationCheck out;
  out.generators = gens.size();
  out.order = closure.order();
  out.expected = factorial(static_cast<unsigned>(degree)) / 2;
  out.ok = out.order == out.expected;
  return out;
}

bool TwoInvolutions::ok() const {
  return a_squared.equal && b_squared.equal && !passing_order.empty();
}

TwoInvolutions two_involution_shift_decomposition(const Alphabet& alphabet) {
  if (alphabet.track_count() < 2 || alphabet.track_size(0) != 2 || alphabet.track_size(1) != 2) {
    throw AlphabetMismatch("two-involution decomposition needs two leading binary tracks");
  }
  auto a = BlockMap::tabulate(alphabet, 0, 0, [&](std::span<const Symbol> nb) {
    const Symbol s = nb[0];
    const Symbol t = alphabet.with_component(s, 0, alphabet.component(s, 1));
    return alphabet.with_component(t, 1, alphabet.component(s, 0));
  });
  // b(x, y) = (sigma^-1 y, sigma x): new x_i = y_{i-1}, new y_i = x_{i+1}.
  auto b = BlockMap::tabulate(alphabet, 1, 1, [&](std::span<const Symbol> nb) {
    const Symbol t = alphabet.with_component(nb[1], 0, alphabet.component(nb[0], 1));
    return alphabet.with_component(t, 1, alphabet.component(nb[2], 0));
  });
  auto target = compose(shift(alphabet, 0, -1), shift(alphabet, 1, 1));
  const auto policy = EqualityPolicy::exhaustive();
  const auto id = BlockMap::identity(alphabet);
  TwoInvolutions out{a, b, target, equal(compose(a, a), id, policy), equal(compose(b, b), id, policy),
                     equal(compose(b, a), target, policy), equal(compose(a, b), target, policy), ""};
  if (out.a_then_b.equal) {
    out.passing_order = "a then b";
  } else if (out.b_then_a.equal) {
    out.passing_order = "b then a";
  }
  return out;
}

}  // namespace rcalab
