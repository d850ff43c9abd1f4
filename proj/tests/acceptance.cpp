// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rcalab/certificate.hpp"
#include "rcalab/error.hpp"

using namespace rcalab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> body;
};

using Clock = std::chrono::steady_clock;

const Alphabet kTwoTrack = Alphabet::binary_tracks(2);

Perm random_even(int width, std::mt19937_64& rng) {
  std::vector<Point> table(std::size_t{1} << width);
  std::iota(table.begin(), table.end(), Point{0});
  std::shuffle(table.begin(), table.end(), rng);
  if (!Perm(table).is_even()) std::swap(table[0], table[1]);
  return Perm(table);
}

Perm random_three_cycle(std::size_t degree, std::vector<Point> points, std::mt19937_64& rng) {
  std::shuffle(points.begin(), points.end(), rng);
  return Perm::from_cycles(degree, std::vector<std::vector<Point>>{{points[0], points[1], points[2]}});
}

Outcome involution_relations() {
  std::ostringstream detail;
  bool pass = true;
  double worst = 0;
  const std::vector<std::pair<std::string, Perm>> gates{{"bit-swap", gates::bit_swap()}, {"toffoli", gates::toffoli()}};
  for (int ell : {3, 4}) {
    std::vector<int> bits(static_cast<std::size_t>(ell), 0);
    bits.back() = 1;
    const Word w(bits);
    for (const auto& [name, F] : gates) {
      const auto start = Clock::now();
      const BlockMap f0 = compile(make_descriptor(F, w, 0));
      const auto v = equal(compose(f0, f0), BlockMap::identity(kTwoTrack), EqualityPolicy::exhaustive());
      worst = std::max(worst, std::chrono::duration<double>(Clock::now() - start).count());
      pass = pass && v.equal && v.proof;
      detail << "l=" << ell << " " << name << ":" << (v.equal ? "id" : "not id") << " ";
    }
  }
  const auto start = Clock::now();
  const auto pair = two_involution_shift_decomposition();
  const double ab = std::chrono::duration<double>(Clock::now() - start).count();
  pass = pass && pair.a_squared.equal && pair.b_squared.equal && pair.a_squared.proof && pair.b_squared.proof;
  pass = pass && worst < 1.0 && ab < 1.0;
  detail << "a^2=" << (pair.a_squared.equal ? "id" : "not id") << " b^2=" << (pair.b_squared.equal ? "id" : "not id")
         << " slowest f0 check " << worst << "s";
  return {pass, detail.str()};
}

Outcome two_involution_factorization() {
  const auto pair = two_involution_shift_decomposition();
  const bool proof = pair.passing_order == "a then b" ? pair.a_then_b.proof : pair.b_then_a.proof;
  return {pair.ok() && proof,
          "passing order: " + (pair.passing_order.empty() ? std::string("none") : pair.passing_order) +
              "; other order " + ((pair.a_then_b.equal && pair.b_then_a.equal) ? "also equal" : "differs")};
}

Outcome commutator_identity() {
  const auto family = formula_family(9, 2);
  const auto points = family.points();
  const Word w = family.words().front();
  const std::size_t degree = std::size_t{1} << 9;
  std::mt19937_64 rng(2024);
  int cases = 0, equal_cases = 0, aligned = 0;
  for (int s = 0; s < 50; ++s) {
    const Perm a = random_three_cycle(degree, points, rng);
    const Perm b = random_three_cycle(degree, points, rng);
    for (int i = -2; i <= 2; ++i) {
      const auto v = verify_commutator_identity(a, b, w, i, family);
      ++cases;
      equal_cases += v.equal() ? 1 : 0;
      aligned += v.verdict.method == "aligned" ? 1 : 0;
    }
  }
  return {equal_cases == cases && aligned == cases, std::to_string(equal_cases) + "/" + std::to_string(cases) +
                                                        " Equal, " + std::to_string(aligned) + " via aligned evaluator"};
}

Outcome conjugation_identity() {
  std::vector<int> bits(9, 0);
  bits.back() = 1;
  const Word w(bits);
  std::mt19937_64 rng(4096);
  int cases = 0, equal_cases = 0;
  for (int s = 0; s < 50; ++s) {
    const Perm a = random_even(9, rng);
    const Perm b = random_even(9, rng);
    for (int i = -2; i <= 2; ++i) {
      const auto v = verify_conjugation_identity(a, b, w, i);
      ++cases;
      equal_cases += (v.equal() && v.verdict.proof) ? 1 : 0;
    }
  }
  return {equal_cases == cases, std::to_string(equal_cases) + "/" + std::to_string(cases) + " Equal"};
}

Outcome evaluator_soundness() {
  const Word w = Word::parse("001");
  std::mt19937_64 rng(77);
  int trials = 0, agree = 0, equal_pairs = 0, regenerated = 0;
  auto random_factor = [&]() -> Factor {
    if (rng() % 3 == 0) return ShiftPower{static_cast<long long>(rng() % 3) - 1};
    const int width = 1 + static_cast<int>(rng() % 3);
    std::vector<Point> table(std::size_t{1} << width);
    std::iota(table.begin(), table.end(), Point{0});
    std::shuffle(table.begin(), table.end(), rng);
    return make_descriptor(Perm(table), w, static_cast<int>(rng() % 5) - 2);
  };
  while (trials < 20) {
    std::vector<Factor> lhs;
    for (std::size_t k = 1 + rng() % 4; k > 0; --k) lhs.push_back(random_factor());
    std::vector<Factor> rhs;
    if (trials % 2 == 0) {
      // Equal by construction: each ctrl factor d is written as s^j (d conjugated back by j) s^-j.
      for (const auto& f : lhs) {
        if (const auto* d = std::get_if<CtrlDescriptor>(&f); d && rng() % 2 == 0) {
          const int j = static_cast<int>(rng() % 3) - 1;
          rhs.push_back(ShiftPower{j});
          rhs.push_back(conjugate_offset(*d, -j));
          rhs.push_back(ShiftPower{-j});
        } else {
          rhs.push_back(f);
        }
      }
    } else {
      rhs = lhs;
      rhs[rng() % rhs.size()] = random_factor();
    }
    std::optional<BlockMap> cl, cr;
    try {
      cl = compile_product(lhs);
      cr = compile_product(rhs);
    } catch (const BudgetExceeded&) {
      ++regenerated;  // composed diameter far above the cap
      continue;
    }
    const int memory = std::max(cl->memory(), cr->memory());
    const int anticipation = std::max(cl->anticipation(), cr->anticipation());
    const auto verdict = compare_products(lhs, rhs, w);
    if (memory + 1 + anticipation > 11 || verdict.method != "aligned" ||
        verdict.status == ProductStatus::Inconclusive) {
      ++regenerated;
      continue;
    }
    const auto oracle = equal(cl->padded(memory, anticipation), cr->padded(memory, anticipation),
                              EqualityPolicy::exhaustive());
    ++trials;
    if (oracle.equal == verdict.equal()) ++agree;
    if (oracle.equal) ++equal_pairs;
  }
  return {agree == 20, std::to_string(agree) + "/20 agree (" + std::to_string(equal_pairs) + " equal pairs, " +
                           std::to_string(regenerated) + " draws regenerated)"};
}

Outcome gate_backbone() {
  const GateSet gates = GateSet::standard();
  std::vector<Perm> placed;
  for (const auto& g : gates.gates()) {
    for (int o = 0; o + g.perm.width() <= 4; ++o) placed.push_back(embed(g.perm, 4, o));
  }
  const Bsgs group = Bsgs::build(placed, 16);
  std::uint64_t alt16 = 1;
  for (std::uint64_t k = 3; k <= 16; ++k) alt16 *= k;
  const bool order_ok = group.exact() && group.order() == BigInt(alt16) && alt16 == 10461394944000ULL;
  GateSynthesizer synth(gates, 4);
  std::mt19937_64 rng(31337);
  int ok = 0;
  for (int t = 0; t < 25; ++t) {
    const Perm target = random_even(4, rng);
    if (replay(synth.decompose(target), gates, 4) == target) ++ok;
  }
  return {order_ok && ok == 25, "order " + group.order().str() + " vs 16!/2 = " + std::to_string(alt16) +
                                    ", round trips " + std::to_string(ok) + "/25"};
}

Outcome commutator_generation() {
  const auto eight = formula_family(11, 3);
  const auto five = eight.prefix(5);
  const auto r5 = commutator_generation_check(five);
  const auto r8 = commutator_generation_check(eight);
  bool rejected = false;
  try {
    commutator_generation_check(formula_family(9, 2));
  } catch (const FamilyTooSmall&) {
    rejected = true;
  }
  return {r5.ok && r8.ok && r5.order == 60 && r8.order == 20160 && rejected,
          "|U|=5 -> " + r5.order.str() + ", |U|=8 -> " + r8.order.str() + ", |U|=4 " +
              (rejected ? "rejected" : "accepted")};
}

Outcome simplicity() {
  const auto r = normal_closure_check(3, Perm::from_cycles(8, {{0, 1, 2}}));
  return {r.ok && r.order == 20160, "closure order " + r.order.str()};
}

Outcome certificates() {
  const Word w = Word::parse("000001");
  CertificateParams params{.w = w, .involution = default_involution()};
  Certifier certifier(params);
  const auto gens = translate_generators(params.involution, 6);
  std::mt19937_64 rng(99);
  int verified = 0;
  std::size_t longest = 0;
  for (int t = 0; t < 5; ++t) {
    Perm pi = Perm::identity(64);
    for (int step = 0; step < 400; ++step) pi = pi * gens[rng() % gens.size()];
    const auto cert = certifier.certify(make_descriptor(pi, w, 0));
    longest = std::max(longest, cert.word.size());
    if (cert.verified) ++verified;
  }
  return {verified == 5, std::to_string(verified) + "/5 verified, F = " + params.involution.to_string() +
                             ", longest word " + std::to_string(longest) + " letters"};
}

Outcome quotient_relations() {
  const BlockMap sigma1 = shift(kTwoTrack, 0, 1);
  std::vector<int> row(33, 0);
  row[0] = 1;
  const auto x = PeriodicConfig::from_tracks(kTwoTrack, {row, std::vector<int>(33, 0)});
  const auto cycle = cycle_length(sigma1, x, 64);
  const Word w = Word::parse("001");
  const BlockMap f0 = compile(make_descriptor(gates::toffoli(), w, 0));
  const bool f0_involution = equal(compose(f0, f0), BlockMap::identity(kTwoTrack)).equal;
  const auto pair = two_involution_shift_decomposition();
  const bool ok = cycle && *cycle == 33 && f0_involution && pair.a_squared.equal && pair.b_squared.equal;
  return {ok, "sigma_1 cycle " + (cycle ? std::to_string(*cycle) : std::string("none")) +
                  "; relations f0^2 = a^2 = b^2 = 1 with sigma_1 of order > 32"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "involution relations", 4.0, involution_relations},
      {2, "two-involution factorization", 1.0, two_involution_factorization},
      {3, "commutator identity", 30.0, commutator_identity},
      {4, "conjugation identity", 60.0, conjugation_identity},
      {5, "evaluator soundness", 120.0, evaluator_soundness},
      {6, "gate universality backbone", 60.0, gate_backbone},
      {7, "|U| >= 5 generation step", 60.0, commutator_generation},
      {8, "simplicity step", 60.0, simplicity},
      {9, "certificate pipeline", 300.0, certificates},
      {10, "quotient relations", 5.0, quotient_relations},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = elapsed < c.limit_s;
    const bool pass = out.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d (%s): %s [%.2fs, limit %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                out.detail.c_str(), elapsed, c.limit_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
