#include <doctest.h>

#include "meshwork/semigroup.hpp"

using namespace meshwork;

namespace {

Semigroup z(std::size_t n) {
  return standard_semigroup(SemigroupKind::cyclic_group, n);
}

}  // namespace

TEST_CASE("cayley validation accepts the two-element group and left-zero") {
  CHECK_NOTHROW(Semigroup::validated(2, {{0, 1}, {1, 0}}));
  CHECK_NOTHROW(Semigroup::validated(2, {{0, 0}, {1, 1}}));
}

TEST_CASE("cayley validation reports the first non-associative triple") {
  // (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1; (0,0,0) happens to associate
  try {
    Semigroup::validated(2, {{1, 0}, {0, 0}});
    FAIL("expected a non-associativity report");
  } catch (const NonAssociative& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 0);
    CHECK(e.k == 1);
  }
}

TEST_CASE("cayley validation rejects out-of-range entries") {
  try {
    Semigroup::validated(2, {{0, 2}, {1, 0}});
    FAIL("expected a range error");
  } catch (const OutOfRangeEntry& e) {
    CHECK(e.row == 0);
    CHECK(e.col == 1);
  }
}

TEST_CASE("preimage matches hand expansion") {
  Semigroup z3 = z(3);
  CHECK(preimage(1, Subset::of(z3, {0})) == Subset::of(z3, {2}));

  Semigroup lz = standard_semigroup(SemigroupKind::left_zero, 2);
  // h*x = h, so the preimage of {a} under a is everything
  CHECK(preimage(0, Subset::of(lz, {0})) == Subset::full(lz));
  CHECK(preimage(1, Subset::of(lz, {0})).empty());

  CHECK(preimage(2, Subset::full(z3)) == Subset::full(z3));
}

TEST_CASE("minimal left ideals of the standard two-element semigroups") {
  Semigroup lz = standard_semigroup(SemigroupKind::left_zero, 2);
  auto lz_ls = minimal_left_ideals(Subset::full(lz));
  REQUIRE(lz_ls.size() == 1);
  CHECK(lz_ls[0] == Subset::full(lz));

  Semigroup rz = standard_semigroup(SemigroupKind::right_zero, 2);
  auto rz_ls = minimal_left_ideals(Subset::full(rz));
  REQUIRE(rz_ls.size() == 2);
  CHECK(rz_ls[0] == Subset::of(rz, {0}));
  CHECK(rz_ls[1] == Subset::of(rz, {1}));

  Semigroup z3 = z(3);
  auto z3_ls = minimal_left_ideals(Subset::full(z3));
  REQUIRE(z3_ls.size() == 1);
  CHECK(z3_ls[0] == Subset::full(z3));
}

TEST_CASE("minimal left ideals reject non-closed subsets") {
  Semigroup z2 = z(2);
  CHECK_THROWS_AS(minimal_left_ideals(Subset::of(z2, {1})), NotASubsemigroup);
}

TEST_CASE("smallest ideal on the worked examples") {
  Semigroup chain = standard_semigroup(SemigroupKind::meet_semilattice_chain, 2);
  CHECK(smallest_ideal(Subset::full(chain)) == Subset::of(chain, {0}));

  Semigroup rz = standard_semigroup(SemigroupKind::right_zero, 2);
  CHECK(smallest_ideal(Subset::full(rz)) == Subset::full(rz));

  for (std::size_t n = 2; n <= 5; ++n) {
    Semigroup g = z(n);
    CHECK(smallest_ideal(Subset::full(g)) == Subset::full(g));
  }
}

TEST_CASE("idempotents on the worked examples") {
  CHECK(idempotents(Subset::full(z(2))) == Subset::of(z(2), {0}));
  Semigroup chain = standard_semigroup(SemigroupKind::meet_semilattice_chain, 2);
  CHECK(idempotents(Subset::full(chain)) == Subset::full(chain));
  Semigroup lz = standard_semigroup(SemigroupKind::left_zero, 2);
  CHECK(idempotents(Subset::full(lz)) == Subset::full(lz));
}

TEST_CASE("standard semigroup tables") {
  Semigroup z3 = z(3);
  CHECK(z3.mul(1, 2) == 0);
  CHECK(z3.mul(2, 2) == 1);

  Semigroup lz = standard_semigroup(SemigroupKind::left_zero, 2);
  CHECK(lz.mul(0, 1) == 0);
  CHECK(lz.mul(1, 0) == 1);

  Semigroup band = standard_semigroup(SemigroupKind::rectangular_band, 2);
  CHECK(band.size() == 4);
  CHECK(idempotents(Subset::full(band)) == Subset::full(band));
  // (0,1)*(1,0) = (0,0): index 1 * index 2 = index 0
  CHECK(band.mul(1, 2) == 0);

  CHECK_THROWS_AS(standard_semigroup(SemigroupKind::full_transformation, 5),
                  SizeLimit);
}

TEST_CASE("full transformation monoid composes correctly") {
  Semigroup t2 = standard_semigroup(SemigroupKind::full_transformation, 2);
  REQUIRE(t2.size() == 4);
  // encoding: f = f(0) + 2*f(1); 2 is the identity, 1 is the swap
  std::size_t id = 2, swap = 1;
  CHECK(t2.mul(id, swap) == swap);
  CHECK(t2.mul(swap, id) == swap);
  CHECK(t2.mul(swap, swap) == id);
}

TEST_CASE("smallest ideal is two-sided and minimal among two-sided ideals") {
  for (const Semigroup& sg : standard_roster(6)) {
    Subset t = Subset::full(sg);
    Subset k = smallest_ideal(t);
    CHECK(product_set(t, k).subset_of(k));
    CHECK(product_set(k, t).subset_of(k));
    if (sg.size() <= 6) {
      // exhaustive scan over candidate two-sided ideals
      Subset i(sg);
      while (i.increment()) {
        if (product_set(t, i).subset_of(i) && product_set(i, t).subset_of(i))
          CHECK(k.subset_of(i));
      }
    }
  }
}

TEST_CASE("every minimal left ideal owns an idempotent") {
  for (const Semigroup& sg : standard_roster(6))
    for (const Subset& l : minimal_left_ideals(Subset::full(sg)))
      CHECK(!idempotents(l).empty());
}

TEST_CASE("preimage distributes over union and intersection") {
  for (const Semigroup& sg : standard_roster(4)) {
    if (sg.size() > 4) continue;
    Subset a(sg);
    do {
      Subset b(sg);
      do {
        for (std::size_t h = 0; h < sg.size(); ++h) {
          CHECK(preimage(h, a & b) == (preimage(h, a) & preimage(h, b)));
          CHECK(preimage(h, a | b) == (preimage(h, a) | preimage(h, b)));
        }
      } while (b.increment());
    } while (a.increment());
  }
}

TEST_CASE("subset ordering is numeric on the bit vector") {
  Semigroup z3 = z(3);
  CHECK(Subset::of(z3, {0}) < Subset::of(z3, {1}));
  CHECK(Subset::of(z3, {1}) < Subset::of(z3, {0, 1}));
  CHECK(Subset::of(z3, {0, 1}) < Subset::of(z3, {2}));
}
