#include "law_support.hpp"

namespace meshwork {

using namespace laws;

void register_derived_laws(std::vector<Law>& out) {
  out.push_back(make_law(
      "obs-derived-improper",
      "derived sets along the improper collections are empty resp. full", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          r.begin_instance([&] { return base_desc(sg); });
          guarded(r, [&] {
            Collection none(sg), all = Collection::powerset(sg);
            for (const Subset& a : all_subsets(sg))
              if (!derived_set(a, none).empty() ||
                  !derived_set(a, all).is_full()) {
                r.check(false, "A = " + subset_to_json(a).dump());
                return;
              }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-a-i",
      "derived set of an intersection sits inside the intersection of derived sets",
      {"stack_f"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("stack_f", c.flags().stack)) return;
            for (const Subset& a1 : all_subsets(sg))
              for (const Subset& a2 : all_subsets(sg))
                if (!derived_set(a1 & a2, c)
                         .subset_of(derived_set(a1, c) & derived_set(a2, c))) {
                  r.check(false, "A1 = " + subset_to_json(a1).dump() +
                                     ", A2 = " + subset_to_json(a2).dump());
                  return;
                }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-a-i-equality",
      "along a filter the derived set of an intersection is the intersection",
      {"stack_f", "filter_f"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("stack_f", c.flags().stack)) return;
            if (!r.hyp("filter_f", c.flags().filter)) return;
            for (const Subset& a1 : all_subsets(sg))
              for (const Subset& a2 : all_subsets(sg))
                if (!(derived_set(a1 & a2, c) ==
                      (derived_set(a1, c) & derived_set(a2, c)))) {
                  r.check(false, "A1 = " + subset_to_json(a1).dump() +
                                     ", A2 = " + subset_to_json(a2).dump());
                  return;
                }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-a-ii",
      "the union of derived sets sits inside the derived set of the union",
      {"stack_f"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("stack_f", c.flags().stack)) return;
            for (const Subset& a1 : all_subsets(sg))
              for (const Subset& a2 : all_subsets(sg))
                if (!(derived_set(a1, c) | derived_set(a2, c))
                         .subset_of(derived_set(a1 | a2, c))) {
                  r.check(false);
                  return;
                }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-a-ii-equality",
      "along a grill the derived set of a union is the union", {"stack_f", "grill_f"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("stack_f", c.flags().stack)) return;
            if (!r.hyp("grill_f", c.flags().grill)) return;
            for (const Subset& a1 : all_subsets(sg))
              for (const Subset& a2 : all_subsets(sg))
                if (!(derived_set(a1 | a2, c) ==
                      (derived_set(a1, c) | derived_set(a2, c)))) {
                  r.check(false);
                  return;
                }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-a-iii",
      "along a point ultrafilter derived sets respect meets and joins", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          for (std::size_t x = 0; x < sg.size(); ++x) {
            r.begin_instance([&] {
              ordered_json j = base_desc(sg);
              j["point"] = x;
              return j;
            });
            guarded(r, [&] {
              Collection q = Collection::point_ultrafilter(sg, x);
              for (const Subset& a1 : all_subsets(sg))
                for (const Subset& a2 : all_subsets(sg)) {
                  bool meets = derived_set(a1 & a2, q) ==
                               (derived_set(a1, q) & derived_set(a2, q));
                  bool joins = derived_set(a1 | a2, q) ==
                               (derived_set(a1, q) | derived_set(a2, q));
                  if (!meets || !joins) {
                    r.check(false);
                    return;
                  }
                }
              r.check(true);
            });
          }
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-a-iv",
      "pointwise meet of derived sets refines the derived set along the wedge",
      {"stack_c1", "stack_c2"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("stack_c1", f.flags().stack)) return;
            if (!r.hyp("stack_c2", g.flags().stack)) return;
            Collection w = meet_wedge(f, g);
            for (const Subset& a1 : all_subsets(sg))
              for (const Subset& a2 : all_subsets(sg))
                if (!(derived_set(a1, f) & derived_set(a2, g))
                         .subset_of(derived_set(a1 & a2, w))) {
                  r.check(false);
                  return;
                }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-b-i",
      "complement duality: (S-A)'(C) = S - A'(mesh C) for stacks", {"stack_f"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("stack_f", c.flags().stack)) return;
            Collection m = mesh(c);
            for (const Subset& a : all_subsets(sg))
              if (!(derived_set(a.complement(), c) ==
                    derived_set(a, m).complement())) {
                r.check(false, "A = " + subset_to_json(a).dump());
                return;
              }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-b-ii",
      "along a proper filter the derived complement avoids the derived set",
      {"filter_f", "proper_f"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("filter_f", c.flags().filter)) return;
            if (!r.hyp("proper_f", c.flags().proper)) return;
            for (const Subset& a : all_subsets(sg))
              if (!derived_set(a.complement(), c)
                       .subset_of(derived_set(a, c).complement())) {
                r.check(false);
                return;
              }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-b-iii",
      "along a proper grill the derived set complement embeds into the derived complement",
      {"grill_f", "proper_f"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("grill_f", c.flags().grill)) return;
            if (!r.hyp("proper_f", c.flags().proper)) return;
            for (const Subset& a : all_subsets(sg))
              if (!derived_set(a, c).complement().subset_of(
                      derived_set(a.complement(), c))) {
                r.check(false);
                return;
              }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-b-iv",
      "point ultrafilters commute with complement and difference", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          for (std::size_t x = 0; x < sg.size(); ++x) {
            r.begin_instance([&] {
              ordered_json j = base_desc(sg);
              j["point"] = x;
              return j;
            });
            guarded(r, [&] {
              Collection q = Collection::point_ultrafilter(sg, x);
              for (const Subset& a : all_subsets(sg)) {
                if (!(derived_set(a.complement(), q) ==
                      derived_set(a, q).complement())) {
                  r.check(false);
                  return;
                }
                for (const Subset& b : all_subsets(sg))
                  if (!(derived_set(a - b, q) ==
                        (derived_set(a, q) - derived_set(b, q)))) {
                    r.check(false);
                    return;
                  }
              }
              r.check(true);
            });
          }
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-c-i",
      "derived sets grow with the collection", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& a, const Collection& b) {
            if (!a.subset_of(b)) {
              r.check(true);
              return;
            }
            for (const Subset& s : all_subsets(sg))
              if (!derived_set(s, a).subset_of(derived_set(s, b))) {
                r.check(false);
                return;
              }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-c-ii",
      "derived sets respect unions and intersections of collections", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& a, const Collection& b) {
            Collection u = a.union_with(b), i = a.intersect_with(b);
            for (const Subset& s : all_subsets(sg)) {
              if (!(derived_set(s, u) == (derived_set(s, a) | derived_set(s, b))) ||
                  !(derived_set(s, i) == (derived_set(s, a) & derived_set(s, b)))) {
                r.check(false);
                return;
              }
            }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-c-iii",
      "along a stack derived sets grow with the set", {"stack_f"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("stack_f", c.flags().stack)) return;
            for (const Subset& a1 : all_subsets(sg))
              for (const Subset& a2 : all_subsets(sg)) {
                if (!a1.subset_of(a2)) continue;
                if (!derived_set(a1, c).subset_of(derived_set(a2, c))) {
                  r.check(false);
                  return;
                }
              }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-d",
      "derived sets commute with left-translation preimages", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            for (const Subset& a : all_subsets(sg))
              for (std::size_t g = 0; g < sg.size(); ++g)
                if (!(derived_set(preimage(g, a), c) ==
                      preimage(g, derived_set(a, c)))) {
                  r.check(false, "g = " + std::to_string(g));
                  return;
                }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "obs-product-improper",
      "product tables for the improper collections on either side", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            Collection none(sg), all = Collection::powerset(sg);
            bool ok = collection_product(none, c).empty() &&
                      collection_product(all, c) == all;
            Collection right_none = collection_product(c, none);
            ok = ok && (c.contains_empty_set() ? right_none == all
                                               : right_none.empty());
            Collection right_all = collection_product(c, all);
            ok = ok && (c.contains(Subset::full(sg)) ? right_all == all
                                                     : right_all.empty());
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "prin-product",
      "products of point ultrafilters track the semigroup product", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          for (std::size_t x = 0; x < sg.size(); ++x)
            for (std::size_t y = 0; y < sg.size(); ++y) {
              r.begin_instance([&] {
                ordered_json j = base_desc(sg);
                j["x"] = x;
                j["y"] = y;
                return j;
              });
              guarded(r, [&] {
                Collection px = Collection::point_ultrafilter(sg, x);
                Collection py = Collection::point_ultrafilter(sg, y);
                r.check(collection_product(px, py) ==
                        Collection::point_ultrafilter(sg, sg.mul(x, y)));
              });
            }
        });
      }));

  out.push_back(make_law(
      "cor-derived-set-a-ii",
      "deriving along a product composes the derivations", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            Collection fg = collection_product(f, g);
            for (const Subset& a : all_subsets(sg))
              if (!(derived_set(a, fg) == derived_set(derived_set(a, g), f))) {
                r.check(false, "A = " + subset_to_json(a).dump());
                return;
              }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "cor-derived-set-a-iii", "the collection product associates", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_triples(r, sg, [&](const Collection& f, const Collection& g,
                                             const Collection& h) {
            r.check(collection_product(f, collection_product(g, h)) ==
                    collection_product(collection_product(f, g), h));
          });
        });
      }));

  out.push_back(make_law(
      "cor-derived-set-b",
      "the product is isotone in its left argument", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_triples(r, sg, [&](const Collection& f1, const Collection& f2,
                                             const Collection& g) {
            bool ok = !f1.subset_of(f2) ||
                      collection_product(f1, g).subset_of(collection_product(f2, g));
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "cor-derived-set-c",
      "with a stack on the left the product is isotone on the right",
      {"stack_c1"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_triples(r, sg, [&](const Collection& f, const Collection& g1,
                                             const Collection& g2) {
            if (!r.hyp("stack_c1", f.flags().stack)) return;
            bool ok = !g1.subset_of(g2) ||
                      collection_product(f, g1).subset_of(collection_product(f, g2));
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "cor-derived-set-d-i",
      "a product of stacks is a stack, proper when both are",
      {"stack_c1", "stack_c2"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("stack_c1", f.flags().stack)) return;
            if (!r.hyp("stack_c2", g.flags().stack)) return;
            Collection p = collection_product(f, g);
            bool ok = p.flags().stack;
            if (ok && is_proper(f) && is_proper(g)) ok = is_proper(p);
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "cor-derived-set-d-ii",
      "mesh distributes over products of stacks", {"stack_c1", "stack_c2"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("stack_c1", f.flags().stack)) return;
            if (!r.hyp("stack_c2", g.flags().stack)) return;
            r.check(mesh(collection_product(f, g)) ==
                    collection_product(mesh(f), mesh(g)));
          });
        });
      }));

  out.push_back(make_law(
      "cor-derived-set-d-iii-filters",
      "a product of filters is a filter", {"filter_c1", "filter_c2"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("filter_c1", f.flags().filter)) return;
            if (!r.hyp("filter_c2", g.flags().filter)) return;
            r.check(collection_product(f, g).flags().filter);
          });
        });
      }));

  out.push_back(make_law(
      "cor-derived-set-d-iii-grills",
      "a product of grills is a grill", {"grill_c1", "grill_c2"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("grill_c1", f.flags().grill)) return;
            if (!r.hyp("grill_c2", g.flags().grill)) return;
            r.check(collection_product(f, g).flags().grill);
          });
        });
      }));

  out.push_back(make_law(
      "cor-derived-set-e-i",
      "wedges of products refine the product of wedges",
      {"stack_c1", "stack_c2", "stack_c3", "stack_c4"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_quads(r, sg, [&](const Collection& f1, const Collection& f2,
                                           const Collection& g1, const Collection& g2) {
            if (!r.hyp("stack_c1", f1.flags().stack)) return;
            if (!r.hyp("stack_c2", f2.flags().stack)) return;
            if (!r.hyp("stack_c3", g1.flags().stack)) return;
            if (!r.hyp("stack_c4", g2.flags().stack)) return;
            Collection lhs = meet_wedge(collection_product(f1, g1),
                                        collection_product(f2, g2));
            Collection rhs = collection_product(meet_wedge(f1, f2),
                                                meet_wedge(g1, g2));
            r.check(lhs.subset_of(rhs));
          });
        });
      }));

  out.push_back(make_law(
      "cor-derived-set-e-ii",
      "the wedge preserves translation invariance of stacks",
      {"stack_c1", "stack_c2", "ti_c1", "ti_c2"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f1, const Collection& f2) {
            if (!r.hyp("stack_c1", f1.flags().stack)) return;
            if (!r.hyp("stack_c2", f2.flags().stack)) return;
            if (!r.hyp("ti_c1", is_translation_invariant(f1))) return;
            if (!r.hyp("ti_c2", is_translation_invariant(f2))) return;
            r.check(is_translation_invariant(meet_wedge(f1, f2)));
          });
        });
      }));

  out.push_back(make_law(
      "cor-derived-set-e-iii",
      "the wedge preserves idempotency of stacks",
      {"stack_c1", "stack_c2", "idem_c1", "idem_c2"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f1, const Collection& f2) {
            if (!r.hyp("stack_c1", f1.flags().stack)) return;
            if (!r.hyp("stack_c2", f2.flags().stack)) return;
            if (!r.hyp("idem_c1", is_idempotent_collection(f1))) return;
            if (!r.hyp("idem_c2", is_idempotent_collection(f2))) return;
            r.check(is_idempotent_collection(meet_wedge(f1, f2)));
          });
        });
      }));

  out.push_back(make_law(
      "obs-ti-implies-idem",
      "translation invariant stacks are idempotent", {"stack_f"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            if (!r.hyp("stack_f", c.flags().stack)) return;
            r.check(!is_translation_invariant(c) || is_idempotent_collection(c));
          });
        });
      }));
}

}  // namespace meshwork
