#include <doctest.h>

#include "meshwork/relative.hpp"

using namespace meshwork;

namespace {

Semigroup z(std::size_t n) {
  return standard_semigroup(SemigroupKind::cyclic_group, n);
}

Semigroup chain2() {
  return standard_semigroup(SemigroupKind::meet_semilattice_chain, 2);
}

}  // namespace

TEST_CASE("relative syndetic tester on the worked examples") {
  Semigroup lz = standard_semigroup(SemigroupKind::left_zero, 2);
  Collection full_lz = Collection::just_full(lz);
  CHECK(is_rel_syndetic(Subset::of(lz, {0}), full_lz, full_lz));

  Semigroup z2 = z(2);
  Collection full_z2 = Collection::just_full(z2);
  CHECK(is_rel_syndetic(Subset::of(z2, {1}), full_z2, full_z2));

  // empty family of constraints: everything qualifies
  Collection none(z2);
  Subset a(z2);
  do {
    CHECK(is_rel_syndetic(a, none, full_z2));
  } while (a.increment());
}

TEST_CASE("relative thick tester on the worked examples") {
  Semigroup lz = standard_semigroup(SemigroupKind::left_zero, 2);
  Collection full_lz = Collection::just_full(lz);
  CHECK(!is_rel_thick(Subset::of(lz, {0}), full_lz, full_lz));
  CHECK(is_rel_thick(Subset::full(lz), full_lz, full_lz));

  Semigroup z2 = z(2);
  Collection full_z2 = Collection::just_full(z2);
  CHECK(!is_rel_thick(Subset::of(z2, {1}), full_z2, full_z2));
}

TEST_CASE("syndetic, thick and piecewise tables on the left-zero pair") {
  Semigroup lz = standard_semigroup(SemigroupKind::left_zero, 2);
  Collection full = Collection::just_full(lz);
  Collection syn = syn_collection(full, full);
  CHECK(syn == Collection(lz, {Subset::of(lz, {0}), Subset::of(lz, {1}),
                               Subset::full(lz)}));
  Collection thick = thick_collection(full, full);
  CHECK(thick == Collection::just_full(lz));
  CHECK(ps_collection(full, full) == syn);
}

TEST_CASE("syndetic against the improper left side is empty") {
  Semigroup z2 = z(2);
  for (const Collection& g : all_collections(z2))
    CHECK(syn_collection(Collection::powerset(z2), g).empty());
}

TEST_CASE("mesh duality between relative syndetic and thick, exhaustively") {
  Semigroup z2 = z(2);
  for (const Collection& f : all_collections(z2))
    for (const Collection& g : all_collections(z2))
      CHECK(mesh(syn_collection(f, g)) == thick_collection(f, g));
}

TEST_CASE("fast testers agree with the definitional scans") {
  Semigroup z3 = z(3);
  SplitMix64 rng(5);
  for (int i = 0; i < 500; ++i) {
    Collection f = sample_collection(z3, rng);
    Collection g = sample_collection(z3, rng);
    Subset a = sample_subset(z3, rng);
    CHECK(is_rel_syndetic(a, f, g) == is_rel_syndetic_scan(a, f, g));
    CHECK(is_rel_thick(a, f, g) == is_rel_thick_scan(a, f, g));
  }
}

TEST_CASE("maximal filter characterization agrees on small proper stacks") {
  Semigroup z2 = z(2);
  for (const Collection& f : all_stacks(z2))
    for (const Collection& g : all_stacks(z2)) {
      if (f.empty() || f.contains_empty_set()) continue;
      if (g.empty() || g.contains_empty_set()) continue;
      Subset a(z2);
      do {
        CHECK(is_rel_syndetic(a, f, g) == syn_via_maximal_filters(a, f, g));
        CHECK(is_rel_thick(a, f, g) == thick_via_maximal_filters(a, f, g));
      } while (a.increment());
    }
}

TEST_CASE("maximal filter characterization handles one-sided improper input") {
  // right side empty: the powerset mesh carries the lone improper filter
  Semigroup z2 = z(2);
  Collection none(z2);
  Collection proper = Collection::just_full(z2);
  Subset a(z2);
  do {
    CHECK(syn_via_maximal_filters(a, proper, none) ==
          is_rel_syndetic(a, proper, none));
    CHECK(syn_via_maximal_filters(a, none, proper) ==
          is_rel_syndetic(a, none, proper));
  } while (a.increment());
}

TEST_CASE("the doubly improper pair defeats the maximal filter route") {
  // both sides the full powerset: the formula sees no filters at all and
  // reports everything syndetic, while nothing is
  Semigroup z2 = z(2);
  Collection all = Collection::powerset(z2);
  CHECK(syn_collection(all, all).empty());
  CHECK(syn_via_maximal_filters(Subset::of(z2, {0}), all, all));
}

TEST_CASE("product filters on the worked examples") {
  Semigroup z2 = z(2);
  CHECK(is_product_filter(Collection::just_full(z2)));
  CHECK(!is_product_filter(Collection::point_ultrafilter(z2, 1)));
  CHECK(is_product_filter(Collection::point_ultrafilter(chain2(), 0)));
  CHECK_THROWS_AS(is_product_filter(Collection(z2, {Subset::of(z2, {0})})),
                  NotAFilter);
}

TEST_CASE("product filter criterion matches kernel closure on all filters") {
  for (const Semigroup& sg : standard_roster(4)) {
    for (const Collection& f : all_proper_filters(sg))
      CHECK(is_product_filter(f) == is_subsemigroup(filter_kernel(f)));
  }
}

TEST_CASE("classify_full fills the product filter flag") {
  Semigroup chain = chain2();
  ClassFlags f = classify_full(Collection::point_ultrafilter(chain, 0));
  CHECK(f.product_filter);
  ClassFlags g = classify_full(Collection::point_ultrafilter(z(2), 1));
  CHECK(!g.product_filter);
}

TEST_CASE("wedge of product filters honors and checks its premises") {
  Semigroup chain = chain2();
  Collection full = Collection::just_full(chain);
  Collection at0 = Collection::point_ultrafilter(chain, 0);
  CHECK(wedge_of_product_filters(full, full) == full);
  CHECK(wedge_of_product_filters(full, at0) == at0);
  Collection at1 = Collection::point_ultrafilter(chain, 1);
  CHECK_THROWS_AS(wedge_of_product_filters(at0, at1), HypothesisViolated);
}

TEST_CASE("the preorder is reflexive, and degenerate on groups") {
  Semigroup z3 = z(3);
  Collection full = Collection::just_full(z3);
  for (std::size_t p = 0; p < 3; ++p) {
    CHECK(preorder_le(p, p, full));
    for (std::size_t q = 0; q < 3; ++q) CHECK(preorder_le(p, q, full));
  }
  CHECK_THROWS_AS(preorder_le(0, 1, Collection(z3, {Subset::of(z3, {0})})),
                  NotAStack);
}

TEST_CASE("extremal points on the two-element chain") {
  Semigroup chain = chain2();
  Collection full = Collection::just_full(chain);
  ExtremalElements e = extremal_ultrafilters(full, full);
  CHECK(e.maximal == Subset::of(chain, {0}));
  CHECK(e.minimal == Subset::of(chain, {1}));
  CHECK(maximal_via_minimal_left_ideals(full, full) == Subset::of(chain, {0}));
}

TEST_CASE("extremal points on groups are everything") {
  Semigroup z4 = z(4);
  Collection full = Collection::just_full(z4);
  ExtremalElements e = extremal_ultrafilters(full, full);
  CHECK(e.minimal == Subset::full(z4));
  CHECK(e.maximal == Subset::full(z4));
}

TEST_CASE("a single kernel point is both minimal and maximal") {
  Semigroup z2 = z(2);
  Collection full = Collection::just_full(z2);
  Collection at0 = Collection::point_ultrafilter(z2, 0);
  ExtremalElements e = extremal_ultrafilters(full, at0);
  CHECK(e.minimal == Subset::of(z2, {0}));
  CHECK(e.maximal == Subset::of(z2, {0}));
}
