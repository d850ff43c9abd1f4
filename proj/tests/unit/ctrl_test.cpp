#include <array>
#include <numeric>
#include <random>

#include "doctest.h"
#include "rcalab/evaluator.hpp"

using namespace rcalab;

namespace {

const Alphabet kAB = Alphabet::binary_tracks(2);

PeriodicConfig random_point(int period, std::mt19937_64& rng) {
  std::vector<int> c(static_cast<std::size_t>(period)), t(static_cast<std::size_t>(period));
  for (auto& v : c) v = static_cast<int>(rng() & 1u);
  for (auto& v : t) v = static_cast<int>(rng() & 1u);
  return PeriodicConfig::from_tracks(kAB, {c, t});
}

// Reference semantics: every occurrence of u at p rewrites target cells
// [p - i, p - i + width), leftmost cell as the most significant bit.
PeriodicConfig reference_ctrl(const Perm& perm, const Word& u, int i, const PeriodicConfig& x) {
  const int n = x.period();
  const auto control = x.track(0);
  auto target = x.track(1);
  const auto before = target;
  const int width = perm.width();
  for (int p = 0; p < n; ++p) {
    bool hit = true;
    for (int k = 0; k < u.length() && hit; ++k) hit = control[static_cast<std::size_t>((p + k) % n)] == u[k];
    if (!hit) continue;
    Point in = 0;
    for (int k = 0; k < width; ++k) {
      in = (in << 1) | static_cast<Point>(before[static_cast<std::size_t>(((p - i + k) % n + n) % n)]);
    }
    const Point out = perm[in];
    for (int k = 0; k < width; ++k) {
      target[static_cast<std::size_t>(((p - i + k) % n + n) % n)] = static_cast<int>((out >> (width - 1 - k)) & 1u);
    }
  }
  return PeriodicConfig::from_tracks(kAB, {control, target});
}

}  // namespace

TEST_SUITE("ctrl") {
  TEST_CASE("compiled ctrl, direct application and the reference agree") {
    std::mt19937_64 rng(21);
    const Word w = Word::parse("0001");
    for (int t = 0; t < 20; ++t) {
      std::vector<Point> table(8);
      std::iota(table.begin(), table.end(), Point{0});
      std::shuffle(table.begin(), table.end(), rng);
      const Perm perm(table);
      const int offset = static_cast<int>(rng() % 7) - 3;
      const auto d = make_descriptor(perm, w, offset);
      const BlockMap f = compile(d);
      for (int s = 0; s < 10; ++s) {
        const auto x = random_point(8 + static_cast<int>(rng() % 20), rng);
        const auto expected = reference_ctrl(perm, w, offset, x);
        CHECK(apply(d, x) == expected);
        CHECK(f.apply(x) == expected);
      }
    }
  }

  TEST_CASE("window-at-offset is the mirrored convention") {
    const Word w = Word::parse("001");
    const Perm p = gates::cnot();
    const auto a = make_descriptor(p, w, 2, OffsetConvention::WindowAtOffset);
    const auto b = make_descriptor(p, w, -2, OffsetConvention::OccurrenceAtOffset);
    CHECK(a.window_shift() == b.window_shift());
    CHECK(equal(compile(a), compile(b)).equal);
  }

  TEST_CASE("inverse descriptor inverts the map") {
    const Word w = Word::parse("001");
    const auto d = make_descriptor(Perm::from_cycles(8, {{1, 2, 5, 6}}), w, 0);
    CHECK(equal(compose(compile(d.inverse()), compile(d)), BlockMap::identity(kAB)).equal);
  }

  TEST_CASE("overlapping windows are rejected") {
    // 010 occurs at gaps of 2, narrower than a 3-bit window.
    CHECK_THROWS_AS(make_descriptor(gates::toffoli(), Word::parse("010"), 0), OverlappingWindows);
    CHECK_NOTHROW(make_descriptor(gates::toffoli(), Word::parse("001"), 0));
  }

  TEST_CASE("conjugate_offset matches shift conjugation") {
    const Word w = Word::parse("0001");
    const auto d = make_descriptor(Perm::from_cycles(8, {{0, 3, 5}}), w, 0);
    for (int j = -2; j <= 2; ++j) {
      const BlockMap lhs = compile(conjugate_offset(d, j));
      const std::array<BlockMap, 3> parts{shift(kAB, 0, -j), compile(d), shift(kAB, 0, j)};
      CHECK(equal(lhs, compose_all(parts)).equal);
    }
  }

  TEST_CASE("ww control acts on l-bit windows") {
    const Word w = Word::parse("001");
    const Perm p = Perm::from_cycles(8, {{0, 7}});
    const auto ww = ww_control(p, w, 0);
    CHECK(ww.descriptor.control == w.doubled());
    std::mt19937_64 rng(4);
    for (int s = 0; s < 20; ++s) {
      const auto x = random_point(12 + static_cast<int>(rng() % 8), rng);
      CHECK(ww.map.apply(x) == reference_ctrl(p, w.doubled(), 0, x));
    }
  }
}

TEST_SUITE("evaluator") {
  TEST_CASE("aligned evaluation agrees with compiled tables") {
    const Word w = Word::parse("001");
    const auto f = make_descriptor(gates::toffoli(), w, 0);
    const auto g = make_descriptor(gates::cnot(), w, -1);
    const std::vector<Factor> fg{f, g};
    const std::vector<Factor> gf{g, f};
    const auto v = compare_products(fg, gf, w);
    CHECK(v.method == "aligned");
    const bool oracle = equal(compile_product(fg), compile_product(gf)).equal;
    CHECK(v.equal() == oracle);
    const std::vector<Factor> ff{f, f};
    CHECK(compare_products(ff, {}, w).equal());
  }

  TEST_CASE("net shift mismatch yields a witness") {
    const Word w = Word::parse("0001");
    const std::vector<Factor> lhs{ShiftPower{1}};
    const std::vector<Factor> rhs{ShiftPower{2}};
    const auto v = compare_products(lhs, rhs, w);
    CHECK(v.status == ProductStatus::NotEqual);
    REQUIRE(v.witness.has_value());
    CHECK(simulate(lhs, *v.witness) != simulate(rhs, *v.witness));
  }

  TEST_CASE("disagreements carry a checked periodic witness") {
    const Word w = Word::parse("00001");
    const std::vector<Factor> lhs{make_descriptor(Perm::from_cycles(8, {{0, 1, 2}}), w, 0)};
    const std::vector<Factor> rhs{make_descriptor(Perm::from_cycles(8, {{0, 2, 1}}), w, 0)};
    const auto v = compare_products(lhs, rhs, w);
    CHECK(v.status == ProductStatus::NotEqual);
    CHECK(v.proof);
    REQUIRE(v.witness.has_value());
    CHECK(simulate(lhs, *v.witness) != simulate(rhs, *v.witness));
  }

  TEST_CASE("simulate agrees with compiled products") {
    const Word w = Word::parse("001");
    const std::vector<Factor> prod{make_descriptor(gates::toffoli(), w, 1), ShiftPower{-1},
                                   make_descriptor(gates::cnot(), w, 0)};
    const BlockMap table = compile_product(prod);
    std::mt19937_64 rng(8);
    for (int s = 0; s < 30; ++s) {
      const auto x = random_point(9 + static_cast<int>(rng() % 10), rng);
      CHECK(table.apply(x) == simulate(prod, x));
      CHECK(simulate(inverse(std::span<const Factor>(prod)), simulate(prod, x)) == x);
    }
  }

  TEST_CASE("bordered control words are refused") {
    const std::vector<Factor> none;
    CHECK_THROWS_AS(compare_products(none, none, Word::parse("0101")), PreconditionViolation);
  }
}
