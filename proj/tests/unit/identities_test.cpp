#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "rcalab/identities.hpp"

using namespace rcalab;

namespace {

Word tail_one(int ell) {
  std::vector<int> bits(static_cast<std::size_t>(ell), 0);
  bits.back() = 1;
  return Word(bits);
}

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("perm commutator expansions") {
    const Perm a = Perm::from_cycles(8, {{0, 1, 2}});
    const Perm b = Perm::from_cycles(8, {{2, 3, 4}});
    CHECK(commutator(a, b, CommutatorExpansion::InverseFirst) == commutator(a, b));
    const Perm last = commutator(a, b, CommutatorExpansion::InverseLast);
    CHECK(last == a * b * a.inverse() * b.inverse());
  }

  TEST_CASE("commutator identity holds on U and fails against a wrong right-hand side") {
    const auto family = formula_family(9, 2);
    const Word w = tail_one(9);
    const auto pts = family.points();
    const Perm a = Perm::from_cycles(512, {{pts[0], pts[1], pts[2]}});
    const Perm b = Perm::from_cycles(512, {{pts[1], pts[2], pts[3]}});
    const auto v = verify_commutator_identity(a, b, w, 0, family);
    CHECK(v.precondition_met);
    CHECK(v.equal());
    CHECK(v.verdict.proof);

    // Negative control: the right-hand side moved one cell.
    std::vector<Factor> wrong{make_descriptor(commutator(a, b), w.doubled(), 1)};
    const auto bad = compare_products(v.lhs, wrong, w);
    CHECK(bad.status == ProductStatus::NotEqual);
  }

  TEST_CASE("conjugation identity on random even pairs, with a negative control") {
    const Word w = tail_one(9);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
      std::vector<Point> table(512);
      std::iota(table.begin(), table.end(), Point{0});
      std::shuffle(table.begin(), table.end(), rng);
      Perm a(table);
      if (!a.is_even()) a = a * Perm::from_cycles(512, {{0, 1}});
      const Perm b = Perm::from_cycles(512, {{3, 70, 400}});
      for (int i = -2; i <= 2; ++i) {
        const auto v = verify_conjugation_identity(a, b, w, i);
        CHECK(v.equal());
      }
      const auto v = verify_conjugation_identity(a, b, w, 0);
      std::vector<Factor> wrong{make_descriptor(a, w.doubled(), 0)};
      if (conjugate(a, b) != a) CHECK(compare_products(v.lhs, wrong, w).status == ProductStatus::NotEqual);
    }
  }

  TEST_CASE("supports outside U are reported") {
    const auto family = formula_family(9, 2);
    const Perm a = Perm::from_cycles(512, {{0, 1, 2}});
    const Perm b = Perm::from_cycles(512, {{1, 2, 3}});
    const auto v = verify_commutator_identity(a, b, tail_one(9), 0, family);
    CHECK_FALSE(v.precondition_met);
    CHECK_FALSE(v.precondition_detail.empty());
  }

  TEST_CASE("shifted conjugates match the occurrence-at-offset descriptors") {
    const Word w = tail_one(9);
    const auto f0 = make_descriptor(Perm::from_cycles(8, {{1, 2, 3}}), w, 0);
    for (int t = -2; t <= 2; ++t) {
      const std::vector<Factor> rhs{make_descriptor(f0.perm, w, t)};
      CHECK(compare_products(shifted_conjugate(f0, t), rhs, w).equal());
    }
  }

  TEST_CASE("convention selection picks occurrence-at-offset") {
    const auto sel = select_offset_convention();
    REQUIRE(sel.found);
    CHECK(sel.convention == OffsetConvention::OccurrenceAtOffset);
    for (const auto& t : sel.trials) {
      if (t.convention == OffsetConvention::WindowAtOffset) CHECK_FALSE(t.ok());
    }
  }
}
