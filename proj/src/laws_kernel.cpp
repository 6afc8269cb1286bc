#include "law_support.hpp"

namespace meshwork {

using namespace laws;

namespace {

// Walks (F, G, A-collection) instances: filter pairs crossed with either
// every collection (small universes) or sampled ones.
template <typename Body>
void over_ctx_with_family(LawRunner& r, const Semigroup& sg, Body body) {
  const auto& cfg = r.config();
  std::vector<Collection> fs = sg.size() <= cfg.exhaustive_filter_max_n
                                   ? filter_space(sg)
                                   : std::vector<Collection>{};
  if (fs.empty())
    for (std::uint64_t i = 0; i < 8; ++i) {
      SplitMix64 rng = r.instance_rng(sg, i);
      fs.push_back(sample_filter(sg, rng));
    }
  bool exhaustive_families = sg.size() <= cfg.exhaustive_all_max_n;
  std::uint64_t per_pair =
      exhaustive_families
          ? 0
          : std::max<std::uint64_t>(1, cfg.sample_count / (fs.size() * fs.size()));
  std::uint64_t idx = 0;
  for (const Collection& f : fs)
    for (const Collection& g : fs) {
      auto desc = [&](const Collection& fam) {
        return [&sg, &f, &g, &fam] {
          ordered_json j = base_desc(sg);
          j["F"] = collection_to_json(f);
          j["G"] = collection_to_json(g);
          j["A"] = collection_to_json(fam);
          return j;
        };
      };
      if (exhaustive_families) {
        for (const Collection& fam : all_collections(sg)) {
          r.begin_instance(desc(fam));
          guarded(r, [&] { body(f, g, fam); });
        }
      } else {
        for (std::uint64_t i = 0; i < per_pair; ++i) {
          SplitMix64 rng = r.instance_rng(sg, idx++);
          Collection fam = sample_collection(sg, rng);
          r.begin_instance(desc(fam));
          guarded(r, [&] { body(f, g, fam); });
        }
      }
    }
}

// nonempty subfamily intersections collapse to the full intersection once
// past the bound; legitimate because intersections shrink and the tested
// collections are stacks
bool family_route_c(const Collection& fam, const KernelContext& ctx,
                    std::uint64_t subfamily_bound) {
  const Semigroup& sg = ctx.universe();
  for (std::size_t q : ctx.g_bar().elements()) {
    Collection thick_gq =
        thick_collection(ctx.G(), Collection::point_ultrafilter(sg, q));
    const auto& ms = fam.members();
    bool all_ok = true;
    std::uint64_t count = ms.size() >= 40 ? subfamily_bound + 1
                                          : (std::uint64_t{1} << ms.size());
    if (count - 1 > subfamily_bound) {
      Subset I = Subset::full(sg);
      for (const Subset& m : ms) I = I & m;
      all_ok = is_rel_syndetic(I, ctx.F(), thick_gq);
    } else {
      for (std::uint64_t mask = 1; mask < count && all_ok; ++mask) {
        Subset I = Subset::full(sg);
        for (std::size_t i = 0; i < ms.size(); ++i)
          if ((mask >> i) & 1) I = I & ms[i];
        if (!is_rel_syndetic(I, ctx.F(), thick_gq)) all_ok = false;
      }
    }
    if (all_ok) return true;
  }
  return false;
}

}  // namespace

void register_kernel_laws(std::vector<Law>& out) {
  const std::vector<std::string> ctx_hyps = {"f_proper", "g_proper",
                                             "f_condition", "g_product"};
  const std::vector<std::string> full_hyps = {
      "f_proper", "g_proper", "f_product", "g_product", "f_condition"};

  auto with_ctx = [](LawRunner& r, const Collection& f, const Collection& g,
                     auto&& body) {
    if (!r.hyp("f_proper", f.flags().proper)) return;
    if (!r.hyp("g_proper", g.flags().proper)) return;
    KernelContext ctx = KernelContext::make(f, g);
    if (!r.hyp("f_condition", ctx.hypotheses().f_condition)) return;
    if (!r.hyp("g_product", ctx.hypotheses().g_product)) return;
    body(ctx);
  };

  out.push_back(make_law(
      "thm-relative-piecewise-syndetic",
      "five equivalent routes into the relative piecewise syndetic collection",
      ctx_hyps,
      [with_ctx](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            with_ctx(r, f, g, [&](const KernelContext& ctx) {
              for (const Subset& a : all_subsets(sg)) {
                RelPsEquiv e = is_rel_ps_equiv(a, ctx);
                if (e.ps_member != e.via_q_gbar || e.ps_member != e.via_q_kernel ||
                    e.ps_member != e.via_idem_kernel ||
                    e.ps_member != e.via_idem_gbar) {
                  r.check(false, "A = " + subset_to_json(a).dump());
                  return;
                }
              }
              r.check(true);
            });
          });
        });
      }));

  out.push_back(make_law(
      "cor-relative-piecewise-syndetic-b",
      "the finite-intersection-property search matches membership",
      ctx_hyps,
      [with_ctx](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            with_ctx(r, f, g, [&](const KernelContext& ctx) {
              for (const Subset& a : all_subsets(sg)) {
                bool fip = fip_rel_ps(a, ctx, r.config().fip_bound);
                if (fip != ctx.ps().contains(a)) {
                  r.check(false, "A = " + subset_to_json(a).dump());
                  return;
                }
              }
              r.check(true);
            });
          });
        });
      }));

  out.push_back(make_law(
      "thm-relative-kernel",
      "four equivalent routes into the relative kernel", ctx_hyps,
      [with_ctx](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            with_ctx(r, f, g, [&](const KernelContext& ctx) {
              for (std::size_t p = 0; p < sg.size(); ++p) {
                KernelMembership m = check_relative_kernel_membership(ctx, p);
                if (m.in_kernel != m.via_idempotent ||
                    m.in_kernel != m.via_all_q || m.in_kernel != m.via_derived) {
                  r.check(false, "p = " + std::to_string(p));
                  return;
                }
              }
              r.check(true);
            });
          });
        });
      }));

  out.push_back(make_law(
      "cor-relative-kernel-a",
      "relative piecewise syndetic iff the set meets the relative kernel",
      ctx_hyps,
      [with_ctx](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            with_ctx(r, f, g, [&](const KernelContext& ctx) {
              Subset K = ctx.relative_kernel();
              for (const Subset& a : all_subsets(sg))
                if (ctx.ps().contains(a) != a.intersects(K)) {
                  r.check(false, "A = " + subset_to_json(a).dump());
                  return;
                }
              r.check(true);
            });
          });
        });
      }));

  out.push_back(make_law(
      "cor-relative-kernel-b",
      "kernel points are those whose point ultrafilter is piecewise syndetic",
      ctx_hyps,
      [with_ctx](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            with_ctx(r, f, g, [&](const KernelContext& ctx) {
              Subset K = ctx.relative_kernel();
              for (std::size_t p = 0; p < sg.size(); ++p) {
                bool all_ps = true;
                for (const Subset& a : all_subsets(sg))
                  if (a.test(p) && !ctx.ps().contains(a)) {
                    all_ps = false;
                    break;
                  }
                if (K.test(p) != all_ps) {
                  r.check(false, "p = " + std::to_string(p));
                  return;
                }
              }
              r.check(true);
            });
          });
        });
      }));

  out.push_back(make_law(
      "cor-relative-kernel-c",
      "the kernel of a filter against itself is the smallest ideal of its kernel set",
      {"g_proper", "g_product"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filters(r, sg, [&](const Collection& g) {
            if (!r.hyp("g_proper", g.flags().proper)) return;
            KernelContext ctx = KernelContext::make(g, g);
            if (!r.hyp("g_product", ctx.hypotheses().g_product)) return;
            r.check(ctx.relative_kernel() ==
                    smallest_ideal(filter_kernel(g)));
          });
        });
      }));

  out.push_back(make_law(
      "prop-collectionwise-acd",
      "the collectionwise notion agrees with its thickened and pointwise routes",
      {"f_proper", "g_proper"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_ctx_with_family(r, sg, [&](const Collection& f, const Collection& g,
                                          const Collection& fam) {
            if (!r.hyp("f_proper", f.flags().proper)) return;
            if (!r.hyp("g_proper", g.flags().proper)) return;
            KernelContext ctx = KernelContext::make(f, g);
            bool a = is_collectionwise_ps(fam, ctx, r.config().subfamily_bound);
            bool c = family_route_c(fam, ctx, r.config().subfamily_bound);
            bool d = collectionwise_ps_via_points(fam, ctx);
            r.check(a == c && c == d);
          });
        });
      }));

  out.push_back(make_law(
      "prop-collectionwise-b",
      "the collectionwise finite-intersection search matches the definition",
      {"f_proper", "g_proper"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_ctx_with_family(r, sg, [&](const Collection& f, const Collection& g,
                                          const Collection& fam) {
            if (!r.hyp("f_proper", f.flags().proper)) return;
            if (!r.hyp("g_proper", g.flags().proper)) return;
            KernelContext ctx = KernelContext::make(f, g);
            bool b = fip_collectionwise_ps(fam, ctx, r.config().fip_bound);
            bool a = is_collectionwise_ps(fam, ctx, r.config().subfamily_bound);
            r.check(a == b);
          });
        });
      }));

  out.push_back(make_law(
      "thm-collectionwise",
      "collectionwise piecewise syndetic iff a kernel point sits in every member",
      ctx_hyps,
      [with_ctx](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_ctx_with_family(r, sg, [&](const Collection& f, const Collection& g,
                                          const Collection& fam) {
            with_ctx(r, f, g, [&](const KernelContext& ctx) {
              Subset I = Subset::full(sg);
              for (const Subset& m : fam.members()) I = I & m;
              bool lhs =
                  is_collectionwise_ps(fam, ctx, r.config().subfamily_bound);
              bool rhs = I.intersects(ctx.relative_kernel());
              r.check(lhs == rhs);
            });
          });
        });
      }));

  out.push_back(make_law(
      "cor-collectionwise-absolute",
      "against the trivial filters the collectionwise notion is the classical one",
      {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_collections(r, sg, [&](const Collection& fam) {
            Collection full = Collection::just_full(sg);
            KernelContext ctx = KernelContext::make(full, full);
            bool classical = collectionwise_ps_absolute(fam, r.config().fip_bound);
            bool relative =
                is_collectionwise_ps(fam, ctx, r.config().subfamily_bound);
            r.check(classical == relative);
          });
        });
      }));

  out.push_back(make_law(
      "thm-relative-kernel-has-idempotents",
      "the relative kernel is a subsemigroup with idempotents", full_hyps,
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("f_proper", f.flags().proper)) return;
            if (!r.hyp("g_proper", g.flags().proper)) return;
            KernelContext ctx = KernelContext::make(f, g);
            if (!r.hyp("f_product", ctx.hypotheses().f_product)) return;
            if (!r.hyp("g_product", ctx.hypotheses().g_product)) return;
            if (!r.hyp("f_condition", ctx.hypotheses().f_condition)) return;
            Subset K = ctx.relative_kernel();
            r.check(is_subsemigroup(K) && !idempotents(K).empty());
          });
        });
      }));

  out.push_back(make_law(
      "thm-relative-central-is-partition-regular",
      "relatively central iff the set meets an idempotent of the relative kernel",
      full_hyps,
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("f_proper", f.flags().proper)) return;
            if (!r.hyp("g_proper", g.flags().proper)) return;
            KernelContext ctx = KernelContext::make(f, g);
            if (!r.hyp("f_product", ctx.hypotheses().f_product)) return;
            if (!r.hyp("g_product", ctx.hypotheses().g_product)) return;
            if (!r.hyp("f_condition", ctx.hypotheses().f_condition)) return;
            Subset ek = idempotents(ctx.relative_kernel());
            for (const Subset& a : all_subsets(sg))
              if (is_rel_central(a, ctx) != a.intersects(ek)) {
                r.check(false, "A = " + subset_to_json(a).dump());
                return;
              }
            r.check(true);
          });
        });
      }));

  out.push_back(make_law(
      "cor-relative-central-grill",
      "the relatively central sets form a proper grill", full_hyps,
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("f_proper", f.flags().proper)) return;
            if (!r.hyp("g_proper", g.flags().proper)) return;
            KernelContext ctx = KernelContext::make(f, g);
            if (!r.hyp("f_product", ctx.hypotheses().f_product)) return;
            if (!r.hyp("g_product", ctx.hypotheses().g_product)) return;
            if (!r.hyp("f_condition", ctx.hypotheses().f_condition)) return;
            Collection cen = central_collection(ctx);
            r.check(cen.flags().grill && is_proper(cen));
          });
        });
      }));

  out.push_back(make_law(
      "obs-s-central",
      "the whole universe is relatively central", {"f_proper", "g_proper"},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            if (!r.hyp("f_proper", f.flags().proper)) return;
            if (!r.hyp("g_proper", g.flags().proper)) return;
            KernelContext ctx = KernelContext::make(f, g);
            r.check(is_rel_central(Subset::full(sg), ctx));
          });
        });
      }));

  out.push_back(make_law(
      "thm-characterization-piecewise-syndetic",
      "eight equivalent descriptions of piecewise syndetic sets", {},
      [](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          Collection full = Collection::just_full(sg);
          Collection syn = syn_collection(full, full);
          Collection thick = thick_collection(full, full);
          Collection ps = meet_wedge(syn, thick);
          Subset all = Subset::full(sg);
          Subset ideal = smallest_ideal(all);
          std::vector<Subset> min_left = minimal_left_ideals(all);
          Subset idem_k = idempotents(ideal);
          Subset idem_s = idempotents(all);
          for (const Subset& a : all_subsets(sg)) {
            r.begin_instance([&] {
              ordered_json j = base_desc(sg);
              j["A"] = subset_to_json(a);
              return j;
            });
            guarded(r, [&] {
              bool e1 = ps.contains(a);
              bool e2 = false;  // some preimage union is thick
              Subset h(sg);
              while (h.increment()) {
                Subset u(sg);
                for (std::size_t x : h.elements()) u = u | preimage(x, a);
                if (thick.contains(u)) {
                  e2 = true;
                  break;
                }
              }
              bool e3 = false;  // meets some minimal left ideal
              for (const Subset& l : min_left)
                if (a.intersects(l)) {
                  e3 = true;
                  break;
                }
              bool e4 = a.intersects(ideal);
              auto derived_syndetic = [&](std::size_t q) {
                return syn.contains(
                    derived_set(a, Collection::point_ultrafilter(sg, q)));
              };
              bool e5 = false, e6 = false, e7 = false, e8 = false;
              for (std::size_t q = 0; q < sg.size(); ++q) {
                if (!derived_syndetic(q)) continue;
                e8 = true;
                if (ideal.test(q)) e5 = true;
                if (idem_k.test(q)) e6 = true;
                if (idem_s.test(q)) e7 = true;
              }
              r.check(e1 == e2 && e2 == e3 && e3 == e4 && e4 == e5 &&
                      e5 == e6 && e6 == e7 && e7 == e8);
            });
          }
        });
      }));

  out.push_back(make_law(
      "explore-kernel-two-sided",
      "(open question probe) the relative kernel is a two-sided ideal of the kernel of G",
      ctx_hyps,
      [with_ctx](LawRunner& r) {
        over_roster(r, [&](const Semigroup& sg) {
          over_filter_pairs(r, sg, [&](const Collection& f, const Collection& g) {
            with_ctx(r, f, g, [&](const KernelContext& ctx) {
              Subset K = ctx.relative_kernel();
              r.check(product_set(ctx.g_bar(), K).subset_of(K) &&
                      product_set(K, ctx.g_bar()).subset_of(K));
            });
          });
        });
      },
      /*self_test=*/false, /*exploratory=*/true));
}

}  // namespace meshwork
