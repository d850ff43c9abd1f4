#include <numeric>
#include <random>

#include "doctest.h"
#include "rcalab/error.hpp"
#include "rcalab/groups.hpp"

using namespace rcalab;

TEST_SUITE("groups") {
  TEST_CASE("alternating generators generate Alt") {
    for (int k = 2; k <= 4; ++k) {
      const auto gens = alternating_generators(k);
      CHECK(Bsgs::build(gens, std::size_t{1} << k).order() == factorial(1u << k) / 2);
    }
  }

  TEST_CASE("translate group of the built-in involution") {
    const Perm F = default_involution();
    CHECK(F.is_involution());
    CHECK(F.width() == 3);
    const Bsgs g = translate_group(F, 6);
    CHECK(contains_localized_alt(g, 4));
    CHECK(g.order() == factorial(64) / 2);
    CHECK(translate_generators(F, 6).size() == 4);
    CHECK_THROWS_AS(translate_group(F, kMaxTranslateWidth + 1), BudgetExceeded);
  }

  TEST_CASE("wire permutations are never universal") {
    // A bit swap only permutes coordinates: the group has order at most m!.
    const Bsgs g = translate_group(gates::bit_swap(), 5);
    CHECK(g.order() == 120);
    CHECK_FALSE(contains_localized_alt(g, 3));
  }

  TEST_CASE("involution search at width 2 finds nothing") {
    // Width-2 involutions are affine, so their translates stay affine.
    const auto found = search_universal_involution(2, 5);
    CHECK(found.exhaustive);
    CHECK(found.examined == found.population);
    CHECK(found.candidates.empty());
  }

  TEST_CASE("involution search at width 3 finds the built-in involution first") {
    const auto found = search_universal_involution(3, 6, {.seed = 1, .max_candidates = 2000, .max_hits = 1});
    REQUIRE(found.candidates.size() == 1);
    CHECK(found.candidates.front() == default_involution());
    CHECK(found.population == 764);
  }

  TEST_CASE("gate sets") {
    const auto standard = GateSet::standard();
    CHECK(standard.max_width() == 3);
    CHECK(standard.gate("toffoli").perm == gates::toffoli());
    CHECK_THROWS_AS(GateSet::named("nope"), ParseError);
    // One-way placements give a small group; the naive closure confirms the order.
    const auto oneway = GateSet::named("one-way");
    std::vector<Perm> placed;
    for (const auto& g : oneway.gates()) {
      for (int o = 0; o + g.perm.width() <= 4; ++o) placed.push_back(embed(g.perm, 4, o));
    }
    const auto naive = closure_order(placed, 1'000'000);
    REQUIRE(naive.has_value());
    CHECK(Bsgs::build(placed, 16).order() == BigInt(*naive));
    CHECK(*naive < 10461394944000ULL);
  }

  TEST_CASE("gate decomposition round trips and rejects odd targets") {
    GateSynthesizer synth(GateSet::standard(), 4);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
      std::vector<Point> table(16);
      std::iota(table.begin(), table.end(), Point{0});
      std::shuffle(table.begin(), table.end(), rng);
      Perm target(table);
      if (!target.is_even()) target = target * Perm::from_cycles(16, {{0, 1}});
      const auto seq = synth.decompose(target);
      CHECK(replay(seq, synth.gates(), 4) == target);
      CHECK(seq.size() <= synth.length_bound());
    }
    CHECK_THROWS_AS(synth.decompose(Perm::from_cycles(16, {{0, 1}})), NotEven);
    CHECK_THROWS_AS(synth.decompose(Perm::identity(8)), WidthMismatch);
    CHECK(decompose_even_perm(Perm::identity(16)).empty());
    GateSynthesizer oneway(GateSet::named("one-way"), 4);
    CHECK_THROWS_AS(oneway.decompose(Perm::from_cycles(16, {{0, 1, 2}})), NotInGeneratedGroup);
  }

  TEST_CASE("commutators of 3-cycles on U generate Alt(U)") {
    const auto eight = formula_family(11, 3);
    const auto r5 = commutator_generation_check(eight.prefix(5));
    CHECK(r5.ok);
    CHECK(r5.order == 60);
    const auto r8 = commutator_generation_check(eight);
    CHECK(r8.ok);
    CHECK(r8.order == 20160);
    CHECK_THROWS_AS(commutator_generation_check(formula_family(9, 2)), FamilyTooSmall);
  }

  TEST_CASE("normal closure of a single 3-cycle") {
    const auto r3 = normal_closure_check(3, Perm::from_cycles(8, {{5, 6, 7}}));
    CHECK(r3.ok);
    CHECK(r3.order == 20160);
    const auto r4 = normal_closure_check(4, Perm::from_cycles(16, {{0, 9, 15}}));
    CHECK(r4.ok);
    CHECK(r4.order == factorial(16) / 2);
    CHECK_THROWS_AS(normal_closure_check(2, Perm::from_cycles(4, {{0, 1, 2}})), PreconditionViolation);
    CHECK_THROWS_AS(normal_closure_check(3, Perm::from_cycles(8, {{0, 1}})), NotEven);
  }

  TEST_CASE("shift as a product of two involutions") {
    const auto r = two_involution_shift_decomposition();
    CHECK(r.a_squared.equal);
    CHECK(r.b_squared.equal);
    CHECK(r.ok());
    CHECK(r.passing_order == "a then b");
    CHECK(equal(compose(r.b, r.a), r.target).equal);
  }
}
