#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "rcalab/error.hpp"
#include "rcalab/perm.hpp"

using namespace rcalab;

namespace {

Perm random_perm(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Point> t(degree);
  std::iota(t.begin(), t.end(), Point{0});
  std::shuffle(t.begin(), t.end(), rng);
  return Perm(t);
}

// Parity by counting inversions.
bool even_by_inversions(const Perm& p) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    for (std::size_t j = i + 1; j < p.degree(); ++j) inv += p[static_cast<Point>(i)] > p[static_cast<Point>(j)];
  }
  return inv % 2 == 0;
}

}  // namespace

TEST_SUITE("perm") {
  TEST_CASE("product applies the left factor first") {
    const Perm a = Perm::from_cycles(4, {{0, 1}});
    const Perm b = Perm::from_cycles(4, {{1, 2}});
    CHECK((a * b)[0] == 2);  // 0 -a-> 1 -b-> 2
    CHECK((b * a)[0] == 1);
  }

  TEST_CASE("group axioms and parity on random permutations") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
      const Perm a = random_perm(12, rng), b = random_perm(12, rng), c = random_perm(12, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a * a.inverse()).is_identity());
      CHECK(a.is_even() == even_by_inversions(a));
      CHECK((a * b).is_even() == (a.is_even() == b.is_even()));
      CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
      CHECK(conjugate(a, b) == b.inverse() * a * b);
      CHECK(commutator(a, b).is_even());
      CHECK(a.power(5) == a * a * a * a * a);
      CHECK(a.power(-2) == (a * a).inverse());
    }
  }

  TEST_CASE("cycles round trip") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
      const Perm a = random_perm(16, rng);
      CHECK(Perm::from_cycles(16, a.cycles()) == a);
    }
    CHECK(Perm::from_cycles(8, {{0, 1}, {3, 4}, {5, 7}}).to_string() == "(0 1)(3 4)(5 7)");
    CHECK_THROWS_AS(Perm::from_cycles(4, {{0, 1}, {1, 2}}), Error);
    CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0}), Error);
  }

  TEST_CASE("gates act on bit tuples as documented") {
    // Bit 0 is the most significant bit of a point.
    CHECK(gates::bit_not()[0] == 1);
    CHECK(gates::cnot()[0b10] == 0b11);
    CHECK(gates::cnot()[0b01] == 0b01);
    CHECK(gates::toffoli()[0b110] == 0b111);
    CHECK(gates::toffoli()[0b100] == 0b100);
    CHECK(gates::bit_swap()[0b10] == 0b01);
    CHECK(gates::toffoli().is_even() == false);
    CHECK(gates::cnot().is_involution());
  }

  TEST_CASE("embedding is a homomorphism and places bits by offset") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 10; ++t) {
      const Perm a = random_perm(8, rng), b = random_perm(8, rng);
      for (int o = 0; o <= 2; ++o) CHECK(embed(a * b, 5, o) == embed(a, 5, o) * embed(b, 5, o));
    }
    const Perm x = embed(gates::bit_not(), 3, 1);
    CHECK(x[0b000] == 0b010);
    // An odd gate becomes even once a free bit exists.
    CHECK(embed(gates::toffoli(), 4, 0).is_even());
    CHECK(mirrored(gates::cnot())[0b01] == 0b11);
    CHECK_THROWS_AS(embed(gates::toffoli(), 2, 0), WidthMismatch);
  }
}
