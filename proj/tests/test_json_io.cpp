#include <doctest.h>

#include "meshwork/json_io.hpp"

using namespace meshwork;

TEST_CASE("cayley tables round-trip through json") {
  Semigroup z3 = standard_semigroup(SemigroupKind::cyclic_group, 3);
  ordered_json j = semigroup_to_json(z3);
  Semigroup back = semigroup_from_json(j);
  CHECK(back.size() == 3);
  CHECK(back.table() == z3.table());
  CHECK(back.name() == z3.name());
}

TEST_CASE("malformed tables raise parse or validation errors") {
  CHECK_THROWS_AS(semigroup_from_json(parse_json("{}", "<t>")), ParseError);
  CHECK_THROWS_AS(
      semigroup_from_json(parse_json("{\"table\": [[0,2],[1,0]]}", "<t>")),
      OutOfRangeEntry);
  CHECK_THROWS_AS(
      semigroup_from_json(parse_json("{\"table\": [[1,0],[0,0]]}", "<t>")),
      NonAssociative);
  CHECK_THROWS_AS(parse_json("{oops", "<t>"), ParseError);
}

TEST_CASE("subsets and collections parse from the file grammar") {
  Semigroup z3 = standard_semigroup(SemigroupKind::cyclic_group, 3);
  Subset s = subset_from_json(z3, parse_json("[0,2]", "<s>"));
  CHECK(s == Subset::of(z3, {0, 2}));
  CHECK_THROWS_AS(subset_from_json(z3, parse_json("[3]", "<s>")), ParseError);

  Collection c =
      collection_from_json(z3, parse_json("{\"sets\": [[0],[0,1]]}", "<c>"));
  CHECK(c.size() == 2);
  // the empty inner array is the empty set as a member
  Collection with_empty =
      collection_from_json(z3, parse_json("{\"sets\": [[]]}", "<c>"));
  CHECK(with_empty.contains_empty_set());
  Collection none = collection_from_json(z3, parse_json("{\"sets\": []}", "<c>"));
  CHECK(none.empty());
  // bare arrays are accepted as inline literals
  Collection bare = collection_from_json(z3, parse_json("[[1]]", "<c>"));
  CHECK(bare.contains(Subset::of(z3, {1})));
}

TEST_CASE("collections serialize members in value order") {
  Semigroup z2 = standard_semigroup(SemigroupKind::cyclic_group, 2);
  Collection c(z2, {Subset::full(z2), Subset::of(z2, {0})});
  CHECK(collection_to_json(c).dump() == "{\"sets\":[[0],[0,1]]}");
}
