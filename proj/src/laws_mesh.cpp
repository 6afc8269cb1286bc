#include "law_support.hpp"

namespace meshwork {

using namespace laws;

void register_mesh_laws(std::vector<Law>& out) {
  out.push_back(make_law(
      "prop-mesh-galois",
      "C1 <= mesh(C2) iff C2 <= mesh(C1)", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& a, const Collection& b) {
            r.check(a.subset_of(mesh(b)) == b.subset_of(mesh(a)));
          });
        });
      }));

  out.push_back(make_law(
      "cor-mesh-operator-a", "C <= mesh(mesh(C))", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            r.check(c.subset_of(mesh(mesh(c))));
          });
        });
      }));

  out.push_back(make_law(
      "cor-mesh-operator-b",
      "C1 <= C2 implies mesh antitone and double mesh isotone", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& a, const Collection& b) {
            bool ok = true;
            if (a.subset_of(b))
              ok = mesh(b).subset_of(mesh(a)) &&
                   mesh(mesh(a)).subset_of(mesh(mesh(b)));
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "cor-mesh-operator-b-improper",
      "empty set membership and properness transfer across mesh", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            Collection m = mesh(c);
            r.check(c.contains_empty_set() == m.empty() &&
                    is_proper(c) == is_proper(m));
          });
        });
      }));

  out.push_back(make_law(
      "cor-mesh-operator-c", "mesh(C) = mesh(mesh(mesh(C)))", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            r.check(mesh(c) == mesh(mesh(mesh(c))));
          });
        });
      }));

  out.push_back(make_law(
      "cor-mesh-operator-c-closure",
      "C1 <= closure(C2) iff closure(C1) <= closure(C2)", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& a, const Collection& b) {
            Collection bb = mesh(mesh(b));
            r.check(a.subset_of(bb) == mesh(mesh(a)).subset_of(bb));
          });
        });
      }));

  out.push_back(make_law(
      "cor-mesh-operator-d",
      "fixed points of double mesh are exactly the mesh images", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          if (sg.size() > r.config().exhaustive_all_max_n) {
            // set-level equality needs the full space; spot-check instead
            over_collections(r, sg, [&](const Collection& c) {
              Collection m = mesh(c);
              r.check(m == mesh(mesh(m)));
            });
            return;
          }
          r.begin_instance([&] { return base_desc(sg); });
          guarded(r, [&] {
            std::vector<Collection> fixed, image;
            for (const Collection& c : all_collections(sg)) {
              if (c == mesh(mesh(c))) fixed.push_back(c);
              Collection m = mesh(c);
              if (std::find(image.begin(), image.end(), m) == image.end())
                image.push_back(m);
            }
            bool ok = fixed.size() == image.size();
            for (const Collection& c : fixed)
              if (ok && std::find(image.begin(), image.end(), c) == image.end())
                ok = false;
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "cor-mesh-operator-e",
      "mesh(C) is the largest collection whose mesh contains C", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& c, const Collection& d) {
            bool ok = !c.subset_of(mesh(d)) || d.subset_of(mesh(c));
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "obs-mesh-extremes",
      "mesh swaps the empty collection and the full powerset", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          r.begin_instance([&] { return base_desc(sg); });
          guarded(r, [&] {
            r.check(mesh(Collection(sg)) == Collection::powerset(sg) &&
                    mesh(Collection::powerset(sg)) == Collection(sg));
          });
        });
      }));

  out.push_back(make_law(
      "cor-mesh-operator-f",
      "mesh of a union is the intersection of meshes", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& a, const Collection& b) {
            r.check(mesh(a.union_with(b)) == mesh(a).intersect_with(mesh(b)));
          });
        });
      }));

  out.push_back(make_law(
      "prop-stack-a",
      "mesh and double mesh are stacks, proper iff the input is", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            Collection m = mesh(c);
            r.check(m.flags().stack && mesh(m).flags().stack &&
                    is_proper(c) == is_proper(m));
          });
        });
      }));

  out.push_back(make_law(
      "prop-stack-b",
      "for stacks, A meshes C iff the complement of A is not a member",
      {"stack_c"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("stack_c", c.flags().stack)) return;
            Collection m = mesh(c);
            for (const Subset& a : all_subsets(sg))
              if (m.contains(a) != !c.contains(a.complement())) {
                r.check(false, "A = " + subset_to_json(a).dump());
                return;
              }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-stack-c", "double mesh is the upward closure", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            r.check(stack_closure(c) == mesh(mesh(c)));
          });
        });
      }));

  out.push_back(make_law(
      "prop-stack-d", "C is a stack iff fixed by upward closure", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            r.check(c.flags().stack == (c == stack_closure(c)));
          });
        });
      }));

  out.push_back(make_law(
      "prop-stack-e",
      "for stacks, mesh of an intersection is the union of meshes",
      {"stack_c1", "stack_c2"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& a, const Collection& b) {
            if (!r.hyp("stack_c1", a.flags().stack)) return;
            if (!r.hyp("stack_c2", b.flags().stack)) return;
            r.check(mesh(a.intersect_with(b)) == mesh(a).union_with(mesh(b)));
          });
        });
      }));

  out.push_back(make_law(
      "prop-filter-grill-a", "a stack is a filter iff its mesh is a grill",
      {"stack_c"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("stack_c", c.flags().stack)) return;
            r.check(c.flags().filter == mesh(c).flags().grill);
          });
        });
      }));

  out.push_back(make_law(
      "prop-filter-grill-b",
      "a filter is proper iff contained in its own mesh", {"filter_c"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("filter_c", c.flags().filter)) return;
            r.check(c.flags().proper == c.subset_of(mesh(c)));
          });
        });
      }));

  out.push_back(make_law(
      "prop-filter-grill-c",
      "a filter is an ultrafilter iff it equals its mesh", {"filter_c"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("filter_c", c.flags().filter)) return;
            r.check(c.flags().ultrafilter == (c == mesh(c)));
          });
        });
      }));

  out.push_back(make_law(
      "prop-filter-grill-d",
      "a filter is an ultrafilter iff membership flips on complement",
      {"filter_c"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("filter_c", c.flags().filter)) return;
            bool flips = true;
            for (const Subset& a : all_subsets(sg))
              if (c.contains(a) != !c.contains(a.complement())) {
                flips = false;
                break;
              }
            r.check(c.flags().ultrafilter == flips);
          });
        });
      }));

  out.push_back(make_law(
      "prop-filter-grill-e",
      "ultrafilters are exactly the maximal proper filters",
      {"filter_c", "proper_c"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("filter_c", c.flags().filter)) return;
            if (!r.hyp("proper_c", c.flags().proper)) return;
            bool maximal = true;
            for (const Collection& f : all_proper_filters(sg))
              if (c.subset_of(f) && !(f == c)) {
                maximal = false;
                break;
              }
            r.check(c.flags().ultrafilter == maximal);
          });
        });
      }));

  out.push_back(make_law(
      "obs-wedge-identity-zero",
      "the singleton full set is the wedge identity, the empty collection its zero",
      {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            r.check(meet_wedge(Collection::just_full(sg), c) == c &&
                    meet_wedge(Collection(sg), c).empty());
          });
        });
      }));

  out.push_back(make_law(
      "obs-wedge-commutative", "the wedge commutes", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& a, const Collection& b) {
            r.check(meet_wedge(a, b) == meet_wedge(b, a));
          });
        });
      }));

  out.push_back(make_law(
      "obs-wedge-associative", "the wedge associates", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_triples(r, sg, [&](const Collection& a, const Collection& b,
                                             const Collection& c) {
            r.check(meet_wedge(meet_wedge(a, b), c) ==
                    meet_wedge(a, meet_wedge(b, c)));
          });
        });
      }));

  out.push_back(make_law(
      "obs-wedge-filter-iff",
      "a nonempty stack is a filter iff closed under its own wedge",
      {"stack_c", "nonempty_c"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("stack_c", c.flags().stack)) return;
            if (!r.hyp("nonempty_c", !c.empty())) return;
            r.check(c.flags().filter == meet_wedge(c, c).subset_of(c));
          });
        });
      }));

  out.push_back(make_law(
      "prop-binary-operation",
      "wedge adjunction: C wedge C1 <= C2 iff C1 <= mesh(C wedge mesh(C2))",
      {"stack_c2", "stack_c3"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_triples(r, sg, [&](const Collection& f, const Collection& f1,
                                             const Collection& f2) {
            if (!r.hyp("stack_c2", f1.flags().stack)) return;
            if (!r.hyp("stack_c3", f2.flags().stack)) return;
            bool lhs = meet_wedge(f, f1).subset_of(f2);
            bool rhs = f1.subset_of(mesh(meet_wedge(f, mesh(f2))));
            r.check(lhs == rhs);
          });
        });
      }));

  out.push_back(make_law(
      "prop-grill-a",
      "a wedge of stacks is a stack; nonempty iff both are; then contains their union",
      {"stack_c1", "stack_c2"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& a, const Collection& b) {
            if (!r.hyp("stack_c1", a.flags().stack)) return;
            if (!r.hyp("stack_c2", b.flags().stack)) return;
            Collection w = meet_wedge(a, b);
            bool ok = w.flags().stack &&
                      (!w.empty()) == (!a.empty() && !b.empty());
            if (ok && !a.empty() && !b.empty())
              ok = a.union_with(b).subset_of(w);
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "prop-grill-a-iii",
      "a wedge of nonempty stacks avoids the empty set iff they mesh and both avoid it",
      {"stack_c1", "stack_c2", "nonempty_c1", "nonempty_c2"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& a, const Collection& b) {
            if (!r.hyp("stack_c1", a.flags().stack)) return;
            if (!r.hyp("stack_c2", b.flags().stack)) return;
            if (!r.hyp("nonempty_c1", !a.empty())) return;
            if (!r.hyp("nonempty_c2", !b.empty())) return;
            bool lhs = !meet_wedge(a, b).contains_empty_set();
            bool rhs = a.subset_of(mesh(b)) && !a.contains_empty_set() &&
                       !b.contains_empty_set();
            r.check(lhs == rhs);
          });
        });
      }));

  out.push_back(make_law(
      "prop-grill-b",
      "a stack wedged with its mesh is a grill, proper iff the stack is",
      {"stack_c"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("stack_c", c.flags().stack)) return;
            Collection g = meet_wedge(c, mesh(c));
            r.check(g.flags().grill && is_proper(g) == is_proper(c));
          });
        });
      }));

  out.push_back(make_law(
      "prop-grill-b-galois",
      "C wedge C1 <= C iff (C wedge mesh(C)) <= mesh(C1)",
      {"stack_c1", "stack_c2"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& c, const Collection& c1) {
            if (!r.hyp("stack_c1", c.flags().stack)) return;
            if (!r.hyp("stack_c2", c1.flags().stack)) return;
            bool lhs = meet_wedge(c, c1).subset_of(c);
            bool rhs = meet_wedge(c, mesh(c)).subset_of(mesh(c1));
            r.check(lhs == rhs);
          });
        });
      }));
}

}  // namespace meshwork
