#include <random>

#include "doctest.h"
#include "rcalab/core/block_map.hpp"
#include "rcalab/core/equality.hpp"
#include "rcalab/core/net_shift.hpp"

using namespace rcalab;

namespace {

PeriodicConfig random_point(const Alphabet& a, int period, std::mt19937_64& rng) {
  std::vector<Symbol> cells(static_cast<std::size_t>(period));
  for (auto& c : cells) c = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(a.size()));
  return PeriodicConfig(a, cells);
}

// Cell-by-cell application of a local rule, independent of BlockMap::apply.
PeriodicConfig naive_apply(const BlockMap& f, const PeriodicConfig& x) {
  std::vector<Symbol> out;
  for (int i = 0; i < x.period(); ++i) {
    std::vector<Symbol> nb;
    for (int d = -f.memory(); d <= f.anticipation(); ++d) nb.push_back(x.at(i + d));
    out.push_back(f.local(nb));
  }
  return PeriodicConfig(x.alphabet(), out);
}

BlockMap xor_right(const Alphabet& a) {
  // Track 0 becomes x0 xor y1 (y = track 1 one cell to the right): reversible.
  return BlockMap::tabulate(a, 0, 1, [&](std::span<const Symbol> nb) {
    const int x0 = a.component(nb[0], 0);
    const int y1 = a.component(nb[1], 1);
    return a.with_component(nb[0], 0, x0 ^ y1);
  });
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("alphabet encode/decode round trip") {
    const Alphabet a({2, 3, 2});
    CHECK(a.size() == 12);
    for (Symbol s = 0; s < 12; ++s) CHECK(a.encode(a.decode(s)) == s);
    CHECK_THROWS_AS(Alphabet({1, 0}), Error);
  }

  TEST_CASE("shift moves the selected track only") {
    const Alphabet a = Alphabet::binary_tracks(2);
    const auto x = PeriodicConfig::from_tracks(a, {{1, 0, 0, 0, 0}, {0, 1, 1, 0, 1}});
    const auto y = shift(a, 0, 1).apply(x);
    CHECK(y.track(0) == std::vector<int>{0, 0, 0, 0, 1});
    CHECK(y.track(1) == x.track(1));
  }

  TEST_CASE("compose agrees with sequential application on periodic points") {
    const Alphabet a = Alphabet::binary_tracks(2);
    const BlockMap f = xor_right(a);
    const BlockMap g = shift(a, 1, -1);
    const BlockMap fg = compose(f, g);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
      const auto x = random_point(a, 3 + static_cast<int>(rng() % 9), rng);
      CHECK(fg.apply(x) == naive_apply(f, naive_apply(g, x)));
    }
  }

  TEST_CASE("invert produces a two-sided inverse") {
    const Alphabet a = Alphabet::binary_tracks(2);
    const BlockMap f = compose(xor_right(a), shift(a, 0, 2));
    const BlockMap inv = invert(f);
    CHECK(equal(compose(inv, f), BlockMap::identity(a)).equal);
    CHECK(equal(compose(f, inv), BlockMap::identity(a)).equal);
  }

  TEST_CASE("invert rejects a non-injective map") {
    const Alphabet a = Alphabet::binary_tracks(1);
    const BlockMap majority = BlockMap::tabulate(a, 1, 1, [](std::span<const Symbol> nb) {
      return static_cast<Symbol>(nb[0] + nb[1] + nb[2] >= 2 ? 1 : 0);
    });
    CHECK_THROWS_AS(invert(majority, 3), NotReversibleWithinLimit);
  }

  TEST_CASE("equality modes") {
    const Alphabet a = Alphabet::binary_tracks(2);
    const BlockMap f = xor_right(a);
    const BlockMap padded = f.padded(2, 3);
    const auto exact = equal(f, padded);
    CHECK(exact.equal);
    CHECK(exact.proof);
    const BlockMap g = shift(a, 0, 1);
    const auto differ = equal(f, g);
    CHECK_FALSE(differ.equal);
    REQUIRE(differ.counterexample.has_value());
    const auto sampled = equal(f, g, {EqualityMode::PeriodicSample, default_budget(), 7});
    CHECK_FALSE(sampled.equal);
    const auto random_same = equal(f, padded, {EqualityMode::Randomized, default_budget(), 7});
    CHECK(random_same.equal);
    CHECK_FALSE(random_same.proof);
    CHECK(equality_mode_from_string(to_string(EqualityMode::PeriodicSample)) == EqualityMode::PeriodicSample);
  }

  TEST_CASE("periodic restriction of a shift") {
    const Alphabet a = Alphabet::binary_tracks(1);
    const auto p = restrict_to_period(shift(a, 0, 1), 6);
    CHECK(p.point_count() == 64);
    CHECK(p.order() == 6);
    std::vector<int> row(33, 0);
    row[0] = 1;
    CHECK(cycle_length(shift(a, 0, 1), PeriodicConfig::from_tracks(a, {row}), 100) == 33);
    CHECK(decode_periodic(a, 6, encode_periodic(PeriodicConfig::from_tracks(a, {{1, 0, 1, 1, 0, 0}}))) ==
          PeriodicConfig::from_tracks(a, {{1, 0, 1, 1, 0, 0}}));
  }

  TEST_CASE("table budget is enforced") {
    const Alphabet a = Alphabet::binary_tracks(2);
    CHECK_THROWS_AS(shift(a, 0, 1).padded(20, 20, 1000), BudgetExceeded);
  }

  TEST_CASE("net shift of generator words") {
    const auto two = GeneratorSetting::two_track();
    CHECK(net_shift(parse_word("s s f s-1"), two).shifts == std::vector<long long>{1, 0});
    CHECK(net_shift(parse_word("s-1 f s"), two).is_zero());
    const auto three = GeneratorSetting::three_track();
    // a b composes to sigma_0^-1 x sigma_1 on the first two tracks.
    const auto ab = net_shift(parse_word("a b"), three);
    CHECK_FALSE(ab.is_zero());
    CHECK(net_shift(parse_word("a a"), three).is_zero());
    CHECK(net_shift(parse_word("b b"), three).is_zero());
    CHECK(to_string(parse_word("s f s-1")) == "s f s-1");
    CHECK_THROWS_AS(generator_from_token("x"), ParseError);
  }
}
