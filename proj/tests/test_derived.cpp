#include <doctest.h>

#include "meshwork/derived.hpp"

using namespace meshwork;

namespace {

Semigroup z(std::size_t n) {
  return standard_semigroup(SemigroupKind::cyclic_group, n);
}

}  // namespace

TEST_CASE("derived sets along the improper collections") {
  Semigroup z3 = z(3);
  Subset a = Subset::of(z3, {0, 2});
  CHECK(derived_set(a, Collection(z3)).empty());
  CHECK(derived_set(a, Collection::powerset(z3)) == Subset::full(z3));
}

TEST_CASE("derived set along a point ultrafilter, computed by hand") {
  Semigroup z3 = z(3);
  // h + 1 = 0 only for h = 2
  CHECK(derived_set(Subset::of(z3, {0}), Collection::point_ultrafilter(z3, 1)) ==
        Subset::of(z3, {2}));

  Semigroup lz = standard_semigroup(SemigroupKind::left_zero, 2);
  CHECK(derived_set(Subset::of(lz, {0}), Collection::point_ultrafilter(lz, 0)) ==
        Subset::of(lz, {0}));
}

TEST_CASE("products of point ultrafilters follow the semigroup") {
  for (const Semigroup& sg : standard_roster(4)) {
    for (std::size_t x = 0; x < sg.size(); ++x)
      for (std::size_t y = 0; y < sg.size(); ++y)
        CHECK(collection_product(Collection::point_ultrafilter(sg, x),
                                 Collection::point_ultrafilter(sg, y)) ==
              Collection::point_ultrafilter(sg, sg.mul(x, y)));
  }
}

TEST_CASE("product tables for improper operands") {
  Semigroup z2 = z(2);
  Collection none(z2), all = Collection::powerset(z2);
  for (const Collection& g : all_collections(z2)) {
    CHECK(collection_product(none, g).empty());
    CHECK(collection_product(all, g) == all);
  }
  Collection proper = Collection::point_ultrafilter(z2, 0);
  CHECK(collection_product(proper, none).empty());
  CHECK(collection_product(all, none) == all);
  CHECK(collection_product(proper, all) == all);  // S is a member of proper
  Collection no_s(z2, {Subset::of(z2, {0})});
  CHECK(collection_product(no_s, all).empty());
}

TEST_CASE("translation invariance on the worked examples") {
  Semigroup z2 = z(2);
  CHECK(is_translation_invariant(Collection::just_full(z2)));
  CHECK(is_translation_invariant(Collection::powerset(z2)));
  CHECK(!is_translation_invariant(Collection::point_ultrafilter(z2, 0)));
}

TEST_CASE("idempotent collections on the worked examples") {
  Semigroup z2 = z(2);
  CHECK(is_idempotent_collection(Collection::point_ultrafilter(z2, 0)));
  CHECK(!is_idempotent_collection(Collection::point_ultrafilter(z2, 1)));

  Semigroup chain = standard_semigroup(SemigroupKind::meet_semilattice_chain, 2);
  CHECK(is_idempotent_collection(Collection::point_ultrafilter(chain, 1)));
}

TEST_CASE("translation invariant non-stacks need not be idempotent") {
  // both singletons, but not the full set: invariant yet not idempotent
  Semigroup z2 = z(2);
  Collection c(z2, {Subset::of(z2, {0}), Subset::of(z2, {1})});
  CHECK(is_translation_invariant(c));
  CHECK(!is_idempotent_collection(c));
}

TEST_CASE("principal filters multiply through their kernels") {
  // up(B1) * up(B2) = up(B1 * B2) on every small standard semigroup
  for (const Semigroup& sg : standard_roster(4)) {
    Subset b1(sg);
    while (b1.increment()) {
      Subset b2(sg);
      while (b2.increment()) {
        Collection lhs =
            collection_product(Collection::principal_filter(sg, b1),
                               Collection::principal_filter(sg, b2));
        CHECK(lhs == Collection::principal_filter(sg, product_set(b1, b2)));
      }
    }
  }
}
