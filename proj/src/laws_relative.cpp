#include "law_support.hpp"

namespace meshwork {

using namespace laws;

namespace {

// Maximal filters inside mesh(G); the improper filter is the lone one when
// mesh(G) is the whole powerset.
std::vector<Collection> maximal_filters_in_mesh_of(const Collection& g) {
  const Semigroup& sg = g.universe();
  Collection m = mesh(g);
  if (m.contains_empty_set()) return {Collection::powerset(sg)};
  std::vector<Collection> out;
  for (const Subset& b : m.minimal_members())
    out.push_back(Collection::principal_filter(sg, b));
  return out;
}

}  // namespace

void register_relative_laws(std::vector<Law>& out) {
  out.push_back(make_law(
      "prop-assumption-of-stack",
      "syndetic and thick collections only see the stack closures", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            Collection fc = stack_closure(f), gc = stack_closure(g);
            Collection syn = syn_collection(f, g);
            bool ok = syn == syn_collection(fc, g) &&
                      syn == syn_collection(f, gc) &&
                      syn == syn_collection(fc, gc);
            if (ok) {
              Collection th = thick_collection(f, g);
              ok = th == thick_collection(fc, g) &&
                   th == thick_collection(f, gc) &&
                   th == thick_collection(fc, gc);
            }
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "prop-relative-syndetic-thick-a",
      "the relative syndetic collection is a stack, proper when both inputs are",
      {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            Collection syn = syn_collection(f, g);
            bool ok = syn.flags().stack;
            if (ok && is_proper(f) && is_proper(g)) ok = is_proper(syn);
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "prop-relative-syndetic-thick-b",
      "mesh duality between relative syndetic and relative thick", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            r.check(mesh(syn_collection(f, g)) == thick_collection(f, g));
          });
        });
      }));

  out.push_back(make_law(
      "obs-syn-improper",
      "relative syndetic tables for improper operands", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& c) {
            Collection none(sg), all = Collection::powerset(sg);
            Collection just_empty(sg, {Subset(sg)});
            bool ok = syn_collection(none, c) == all &&
                      syn_collection(all, c).empty() &&
                      syn_collection(just_empty, c).empty();
            Collection left_none = syn_collection(c, none);
            ok = ok && (c.empty() ? left_none == all : left_none.empty());
            Collection left_all = syn_collection(c, all);
            ok = ok && (c.contains_empty_set() ? left_all.empty()
                                               : left_all == all);
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "thm-relative-syndetic-thick-a",
      "relative syndetic = derived-set test against every maximal filter in the mesh",
      {"stack_f", "stack_g", "proper_f", "proper_g"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("stack_f", f.flags().stack)) return;
            if (!r.hyp("stack_g", g.flags().stack)) return;
            if (!r.hyp("proper_f", is_proper(f))) return;
            if (!r.hyp("proper_g", is_proper(g))) return;
            std::vector<Collection> hs = maximal_filters_in_mesh_of(g);
            std::vector<Collection> hms;
            for (const Collection& h : hs) hms.push_back(mesh(h));
            Collection fm = mesh(f);
            for (const Subset& a : all_subsets(sg)) {
              bool direct = is_rel_syndetic(a, f, g);
              bool via = true;
              for (const Collection& hm : hms)
                if (!fm.contains(derived_set(a, hm))) {
                  via = false;
                  break;
                }
              if (direct != via) {
                r.check(false, "A = " + subset_to_json(a).dump());
                return;
              }
            }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "thm-relative-syndetic-thick-b",
      "relative thick = derived-set test against some maximal filter in the mesh",
      {"stack_f", "stack_g", "proper_f", "proper_g"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("stack_f", f.flags().stack)) return;
            if (!r.hyp("stack_g", g.flags().stack)) return;
            if (!r.hyp("proper_f", is_proper(f))) return;
            if (!r.hyp("proper_g", is_proper(g))) return;
            std::vector<Collection> hs = maximal_filters_in_mesh_of(g);
            for (const Subset& a : all_subsets(sg)) {
              bool direct = is_rel_thick(a, f, g);
              bool via = false;
              for (const Collection& h : hs)
                if (f.contains(derived_set(a, h))) {
                  via = true;
                  break;
                }
              if (direct != via) {
                r.check(false, "A = " + subset_to_json(a).dump());
                return;
              }
            }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "cor-relative-syndetic-thick",
      "with a filter on the right, kernel points decide syndetic and thick",
      {"stack_f", "filter_g", "proper_f", "proper_g"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("stack_f", f.flags().stack)) return;
            if (!r.hyp("filter_g", g.flags().filter)) return;
            if (!r.hyp("proper_f", is_proper(f))) return;
            if (!r.hyp("proper_g", is_proper(g))) return;
            Subset gbar = filter_kernel(g);
            Collection fm = mesh(f);
            for (const Subset& a : all_subsets(sg)) {
              bool syn_direct = is_rel_syndetic(a, f, g);
              bool syn_via = true;
              bool thick_via = false;
              for (std::size_t q : gbar.elements()) {
                Subset d = derived_set(a, Collection::point_ultrafilter(sg, q));
                if (!fm.contains(d)) syn_via = false;
                if (f.contains(d)) thick_via = true;
              }
              bool thick_direct = is_rel_thick(a, f, g);
              if (syn_direct != syn_via || thick_direct != thick_via) {
                r.check(false, "A = " + subset_to_json(a).dump());
                return;
              }
            }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "cor-relative-syndetic-thick-product",
      "syndetic against the mesh is the product of meshes; thick against it, the product",
      {"stack_f", "filter_g"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("stack_f", f.flags().stack)) return;
            if (!r.hyp("filter_g", g.flags().filter)) return;
            Collection gm = mesh(g);
            bool ok = syn_collection(f, gm) ==
                          collection_product(mesh(f), gm) &&
                      thick_collection(f, gm) == collection_product(f, g);
            r.check(ok);
          });
        });
      }));

  out.push_back(make_law(
      "problem-preorder",
      "the derived-product relation is reflexive and transitive",
      {"stack_f", "proper_f"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& f) {
            if (!r.hyp("stack_f", f.flags().stack)) return;
            if (!r.hyp("proper_f", is_proper(f))) return;
            std::vector<Collection> prods;
            for (std::size_t x = 0; x < sg.size(); ++x)
              prods.push_back(collection_product(
                  f, Collection::point_ultrafilter(sg, x)));
            auto le = [&](std::size_t p, std::size_t q) {
              return prods[p].subset_of(prods[q]);
            };
            for (std::size_t p = 0; p < sg.size(); ++p) {
              if (!le(p, p)) {
                r.check(false, "reflexivity at " + std::to_string(p));
                return;
              }
              for (std::size_t q = 0; q < sg.size(); ++q)
                for (std::size_t s = 0; s < sg.size(); ++s)
                  if (le(p, q) && le(q, s) && !le(p, s)) {
                    r.check(false, "transitivity");
                    return;
                  }
            }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "thm-maximal-elements",
      "preorder-maximal against the kernel iff the kernel translate is a minimal left ideal",
      {"f_proper", "f_product", "fbar_q_stable"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          std::vector<Collection> fs;
          if (sg.size() <= r.config().exhaustive_filter_max_n) {
            fs = filter_space(sg);
          } else {
            for (std::uint64_t i = 0; i < r.config().sample_count; ++i) {
              SplitMix64 rng = r.instance_rng(sg, i);
              fs.push_back(sample_filter(sg, rng));
            }
          }
          for (const Collection& f : fs)
            for (std::size_t q = 0; q < sg.size(); ++q) {
              r.begin_instance([&] {
                ordered_json j = base_desc(sg);
                j["F"] = collection_to_json(f);
                j["q"] = q;
                return j;
              });
              guarded(r, [&] {
                if (!r.hyp("f_proper", f.flags().proper)) return;
                if (!r.hyp("f_product", is_product_filter(f))) return;
                Subset fbar = filter_kernel(f);
                Subset fq = product_set(fbar, Subset::single(sg, q));
                if (!r.hyp("fbar_q_stable", fq.subset_of(fbar))) return;
                Collection prod_q = collection_product(
                    f, Collection::point_ultrafilter(sg, q));
                bool maximal = true;
                for (std::size_t p : fbar.elements()) {
                  Collection prod_p = collection_product(
                      f, Collection::point_ultrafilter(sg, p));
                  if (prod_q.subset_of(prod_p) && !prod_p.subset_of(prod_q)) {
                    maximal = false;
                    break;
                  }
                }
                std::vector<Subset> mins = minimal_left_ideals(fbar);
                bool min_ideal =
                    std::find(mins.begin(), mins.end(), fq) != mins.end();
                r.check(maximal == min_ideal);
              });
            }
        });
      }));

  out.push_back(make_law(
      "def-product-filter-criterion",
      "a proper filter is a product filter iff its kernel is a subsemigroup",
      {"f_proper"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filters(r, sg, [&](const Collection& f) {
            if (!r.hyp("f_proper", f.flags().proper)) return;
            r.check(is_product_filter(f) ==
                    is_subsemigroup(filter_kernel(f)));
          });
        });
      }));

  out.push_back(make_law(
      "prop-product-filters",
      "the wedge of meshing proper product filters is a product filter",
      {"f_proper", "g_proper", "f_product", "g_product", "f_meshes_g"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f1, const Collection& f2) {
            if (!r.hyp("f_proper", f1.flags().proper)) return;
            if (!r.hyp("g_proper", f2.flags().proper)) return;
            if (!r.hyp("f_product", is_product_filter(f1))) return;
            if (!r.hyp("g_product", is_product_filter(f2))) return;
            if (!r.hyp("f_meshes_g", f1.subset_of(mesh(f2)))) return;
            Collection w = meet_wedge(f1, f2);
            r.check(w.flags().filter && is_product_filter(w));
          });
        });
      }));

  out.push_back(make_law(
      "lem-f-condition-translation",
      "under the syndetic condition the filter embeds into its kernel-point products",
      {"f_proper", "g_proper", "f_condition"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("f_proper", f.flags().proper)) return;
            if (!r.hyp("g_proper", g.flags().proper)) return;
            Collection fm = mesh(f);
            bool cond = true;
            for (const Subset& a : f.members())
              if (!is_rel_syndetic(a, fm, g)) {
                cond = false;
                break;
              }
            if (!r.hyp("f_condition", cond)) return;
            for (std::size_t p : filter_kernel(g).elements())
              if (!f.subset_of(collection_product(
                      f, Collection::point_ultrafilter(sg, p)))) {
                r.check(false, "p = " + std::to_string(p));
                return;
              }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "prop-derived-set-relative-syndetic",
      "three equivalent readings of a relatively syndetic derived set",
      {"stack_f", "proper_f", "filter_g", "proper_g"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("stack_f", f.flags().stack)) return;
            if (!r.hyp("proper_f", is_proper(f))) return;
            if (!r.hyp("filter_g", g.flags().filter)) return;
            if (!r.hyp("proper_g", g.flags().proper)) return;
            Collection syn_fg = syn_collection(f, g);
            for (std::size_t q = 0; q < sg.size(); ++q) {
              Collection up_q = Collection::point_ultrafilter(sg, q);
              Collection thick_gq = thick_collection(g, up_q);
              for (const Subset& a : all_subsets(sg)) {
                bool one = syn_fg.contains(derived_set(a, up_q));
                bool two = is_rel_thick(a, syn_fg, up_q);
                bool three = is_rel_syndetic(a, f, thick_gq);
                if (one != two || two != three) {
                  r.check(false, "q = " + std::to_string(q) +
                                     ", A = " + subset_to_json(a).dump());
                  return;
                }
              }
            }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "lem-derived-set-relative-syndetic-a",
      "along a product filter, derived sets of relatively syndetic sets stay syndetic",
      {"stack_f", "proper_f", "filter_g", "proper_g", "g_product"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("stack_f", f.flags().stack)) return;
            if (!r.hyp("proper_f", is_proper(f))) return;
            if (!r.hyp("filter_g", g.flags().filter)) return;
            if (!r.hyp("proper_g", g.flags().proper)) return;
            if (!r.hyp("g_product", g.flags().filter && is_product_filter(g)))
              return;
            Collection syn_fg = syn_collection(f, g);
            Subset gbar = filter_kernel(g);
            for (const Subset& b : syn_fg.members())
              for (std::size_t q : gbar.elements())
                if (!syn_fg.contains(derived_set(
                        b, Collection::point_ultrafilter(sg, q)))) {
                  r.check(false, "B = " + subset_to_json(b).dump() +
                                     ", q = " + std::to_string(q));
                  return;
                }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "lem-derived-set-relative-syndetic-b",
      "thick sets admit a kernel point whose derived set is syndetic against the mesh",
      {"stack_f", "proper_f", "filter_g", "proper_g", "f_condition"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("stack_f", f.flags().stack)) return;
            if (!r.hyp("proper_f", is_proper(f))) return;
            if (!r.hyp("filter_g", g.flags().filter)) return;
            if (!r.hyp("proper_g", g.flags().proper)) return;
            Collection fm = mesh(f);
            bool cond = true;
            for (const Subset& a : f.members())
              if (!is_rel_syndetic(a, fm, g)) {
                cond = false;
                break;
              }
            if (!r.hyp("f_condition", cond)) return;
            Collection syn_mf_g = syn_collection(fm, g);
            Collection thick_fg = thick_collection(f, g);
            Subset gbar = filter_kernel(g);
            for (const Subset& c : thick_fg.members()) {
              bool found = false;
              for (std::size_t q : gbar.elements()) {
                Subset d = derived_set(c, Collection::point_ultrafilter(sg, q));
                if (syn_mf_g.contains(d) && thick_fg.contains(d)) {
                  found = true;
                  break;
                }
              }
              if (!found) {
                r.check(false, "C = " + subset_to_json(c).dump());
                return;
              }
            }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "selftest-syn-always-filter",
      "(deliberately false) the relative syndetic collection is always a filter",
      {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collection_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            r.check(syn_collection(f, g).flags().filter);
          });
        });
      },
      /*self_test=*/true));
}

}  // namespace meshwork
