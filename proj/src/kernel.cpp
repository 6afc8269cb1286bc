#include "meshwork/kernel.hpp"

namespace meshwork {

KernelContext KernelContext::make(const Collection& F, const Collection& G) {
  require_same_universe(F, G);
  if (!F.flags().filter || !F.flags().proper) throw NotAFilter();
  if (!G.flags().filter || !G.flags().proper) throw NotAFilter();
  Subset fb = filter_kernel(F);
  Subset gb = filter_kernel(G);
  if (fb.empty() || gb.empty()) throw EmptyKernel();
  KernelHypotheses h;
  Collection fm = mesh(F);
  h.f_condition = true;
  for (const Subset& a : F.members())
    if (!is_rel_syndetic(a, fm, G)) {
      h.f_condition = false;
      break;
    }
  h.g_product = is_product_filter(G);
  h.f_product = is_product_filter(F);
  return KernelContext(F, G, std::move(fb), std::move(gb), h);
}

const Collection& KernelContext::syn() const {
  if (!syn_) syn_ = syn_collection(F_, G_);
  return *syn_;
}

const Collection& KernelContext::thick() const {
  if (!thick_) thick_ = thick_collection(F_, G_);
  return *thick_;
}

const Collection& KernelContext::ps() const {
  if (!ps_) ps_ = meet_wedge(syn(), thick());
  return *ps_;
}

const Subset& KernelContext::smallest_ideal_g() const {
  if (!hyp_.g_product) throw HypothesisViolated("G product filter");
  if (!k_gbar_) k_gbar_ = smallest_ideal(g_bar_);
  return *k_gbar_;
}

Subset KernelContext::relative_kernel() const {
  return product_set(f_bar_, smallest_ideal_g());
}

KernelMembership check_relative_kernel_membership(const KernelContext& ctx,
                                                  std::size_t p) {
  if (!ctx.hypotheses().f_condition)
    throw HypothesisViolated("f_condition");
  if (!ctx.hypotheses().g_product) throw HypothesisViolated("g_product");
  const Semigroup& sg = ctx.universe();
  KernelMembership r{};
  r.in_kernel = ctx.relative_kernel().test(p);
  Subset ek = idempotents(ctx.smallest_ideal_g());
  r.via_idempotent = r.via_all_q = r.via_derived = false;
  for (std::size_t e : ek.elements()) {
    Subset fe = product_set(ctx.f_bar(), Subset::single(sg, e));
    if (fe.test(p)) r.via_idempotent = true;

    bool all_q = true;
    for (std::size_t q : ctx.g_bar().elements()) {
      Subset fq = product_set(ctx.f_bar(), Subset::single(sg, q));
      if (!product_set(fq, Subset::single(sg, e)).test(p)) {
        all_q = false;
        break;
      }
    }
    if (all_q) r.via_all_q = true;

    Collection up_e = Collection::point_ultrafilter(sg, e);
    bool all_a = true;
    Subset a(sg);
    do {
      if (!a.test(p)) continue;
      if (!ctx.syn().contains(derived_set(a, up_e))) {
        all_a = false;
        break;
      }
    } while (a.increment());
    if (all_a) r.via_derived = true;
  }
  return r;
}

RelPsEquiv is_rel_ps_equiv(const Subset& A, const KernelContext& ctx) {
  if (!ctx.hypotheses().f_condition)
    throw HypothesisViolated("f_condition");
  if (!ctx.hypotheses().g_product) throw HypothesisViolated("g_product");
  const Semigroup& sg = ctx.universe();
  RelPsEquiv r{};
  r.ps_member = ctx.ps().contains(A);
  Subset kg = ctx.smallest_ideal_g();
  Subset ekg = idempotents(kg);
  Subset eg = idempotents(ctx.g_bar());
  auto derived_syndetic = [&](std::size_t q) {
    return ctx.syn().contains(
        derived_set(A, Collection::point_ultrafilter(sg, q)));
  };
  for (std::size_t q : ctx.g_bar().elements()) {
    if (!derived_syndetic(q)) continue;
    r.via_q_gbar = true;
    if (kg.test(q)) r.via_q_kernel = true;
    if (ekg.test(q)) r.via_idem_kernel = true;
    if (eg.test(q)) r.via_idem_gbar = true;
  }
  return r;
}

bool fip_rel_ps(const Subset& A, const KernelContext& ctx,
                std::uint64_t bound) {
  const Semigroup& sg = ctx.universe();
  const auto& fm = ctx.F().members();
  const auto& gm = ctx.G().members();
  // space: for each member B of F, a nonempty subset of B and a member of G
  std::uint64_t space = 1;
  for (const Subset& B : fm) {
    if (B.empty()) return false;  // no nonempty H exists
    if (B.count() >= 40) throw SearchSpaceTooLarge(bound + 1, bound);
    std::uint64_t choices =
        ((std::uint64_t{1} << B.count()) - 1) * gm.size();
    if (space > bound / choices) throw SearchSpaceTooLarge(bound + 1, bound);
    space *= choices;
  }
  Subset g_all = Subset::full(sg);
  for (const Subset& c : gm) g_all = g_all & c;

  std::size_t k = fm.size();
  std::vector<std::uint64_t> choice(k, 0);
  std::vector<std::vector<std::size_t>> base(k);
  for (std::size_t i = 0; i < k; ++i) base[i] = fm[i].elements();
  for (;;) {
    Subset acc = g_all;  // the members of G in the family intersect to this
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      std::uint64_t c = choice[i];
      std::uint64_t hmask = (c % ((std::uint64_t{1} << base[i].size()) - 1)) + 1;
      std::uint64_t widx = c / ((std::uint64_t{1} << base[i].size()) - 1);
      Subset U(sg);
      for (std::size_t b = 0; b < base[i].size(); ++b)
        if ((hmask >> b) & 1) U = U | preimage(base[i][b], A);
      for (std::size_t w : gm[widx].elements()) {
        acc = acc & preimage(w, U);
        if (acc.empty()) {
          ok = false;
          break;
        }
      }
    }
    if (ok && !acc.empty()) return true;
    // next choice vector
    std::size_t pos = 0;
    while (pos < k) {
      std::uint64_t limit =
          ((std::uint64_t{1} << base[pos].size()) - 1) * gm.size();
      if (++choice[pos] < limit) break;
      choice[pos++] = 0;
    }
    if (pos == k) return false;
  }
}

namespace {

bool subfamily_scan(const Collection& A, const KernelContext& ctx,
                    std::size_t q, std::uint64_t subfamily_bound) {
  const Semigroup& sg = ctx.universe();
  Collection up_q = Collection::point_ultrafilter(sg, q);
  const auto& ms = A.members();
  std::uint64_t count = ms.size() >= 63 ? subfamily_bound + 1
                                        : (std::uint64_t{1} << ms.size());
  if (count > subfamily_bound) {
    // intersections only shrink with larger subfamilies and Syn(F,G) is a
    // stack, so the full family decides the scan
    Subset I = Subset::full(sg);
    for (const Subset& m : ms) I = I & m;
    return ctx.syn().contains(derived_set(I, up_q));
  }
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    Subset I = Subset::full(sg);
    for (std::size_t i = 0; i < ms.size(); ++i)
      if ((mask >> i) & 1) I = I & ms[i];
    if (!ctx.syn().contains(derived_set(I, up_q))) return false;
  }
  return true;
}

}  // namespace

bool is_collectionwise_ps(const Collection& A, const KernelContext& ctx,
                          std::uint64_t subfamily_bound) {
  require_same_universe(A, ctx.F());
  for (std::size_t q : ctx.g_bar().elements())
    if (subfamily_scan(A, ctx, q, subfamily_bound)) return true;
  return false;
}

bool collectionwise_ps_via_points(const Collection& A,
                                  const KernelContext& ctx) {
  require_same_universe(A, ctx.F());
  const Semigroup& sg = ctx.universe();
  Subset I = Subset::full(sg);
  for (const Subset& m : A.members()) I = I & m;
  for (std::size_t q : ctx.g_bar().elements()) {
    bool all_p = true;
    for (std::size_t p : ctx.g_bar().elements()) {
      bool some_r = false;
      for (std::size_t r : ctx.f_bar().elements()) {
        std::size_t x = sg.mul(sg.mul(r, p), q);
        if (I.test(x)) {
          some_r = true;
          break;
        }
      }
      if (!some_r) {
        all_p = false;
        break;
      }
    }
    if (all_p) return true;
  }
  return false;
}

namespace {

// nonempty subfamily intersections of A's members, in mask order
std::vector<Subset> subfamily_intersections(const Collection& A,
                                            std::uint64_t bound) {
  const auto& ms = A.members();
  std::uint64_t count = ms.size() >= 40 ? bound + 1
                                        : (std::uint64_t{1} << ms.size());
  if (count - 1 > bound) throw SearchSpaceTooLarge(bound + 1, bound);
  std::vector<Subset> out;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    Subset I = Subset::full(A.universe());
    for (std::size_t i = 0; i < ms.size(); ++i)
      if ((mask >> i) & 1) I = I & ms[i];
    out.push_back(I);
  }
  return out;
}

}  // namespace

bool fip_collectionwise_ps(const Collection& A, const KernelContext& ctx,
                           std::uint64_t bound) {
  require_same_universe(A, ctx.F());
  const Semigroup& sg = ctx.universe();
  const auto& fm = ctx.F().members();
  const auto& gm = ctx.G().members();
  std::vector<Subset> inters = subfamily_intersections(A, bound);
  // one (H, W) choice per (member of F, subfamily) pair
  std::vector<std::vector<std::size_t>> base;
  std::vector<Subset> target;
  std::uint64_t space = 1;
  for (const Subset& c : fm)
    for (const Subset& i : inters) {
      if (c.empty()) return false;
      if (c.count() >= 40) throw SearchSpaceTooLarge(bound + 1, bound);
      std::uint64_t choices =
          ((std::uint64_t{1} << c.count()) - 1) * gm.size();
      if (space > bound / choices) throw SearchSpaceTooLarge(bound + 1, bound);
      space *= choices;
      base.push_back(c.elements());
      target.push_back(i);
    }
  Subset g_all = Subset::full(sg);
  for (const Subset& c : gm) g_all = g_all & c;

  std::size_t k = base.size();
  std::vector<std::uint64_t> choice(k, 0);
  for (;;) {
    Subset acc = g_all;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      std::uint64_t per_h = (std::uint64_t{1} << base[i].size()) - 1;
      std::uint64_t hmask = (choice[i] % per_h) + 1;
      std::uint64_t widx = choice[i] / per_h;
      Subset U(sg);
      for (std::size_t b = 0; b < base[i].size(); ++b)
        if ((hmask >> b) & 1) U = U | preimage(base[i][b], target[i]);
      for (std::size_t w : gm[widx].elements()) {
        acc = acc & preimage(w, U);
        if (acc.empty()) {
          ok = false;
          break;
        }
      }
    }
    if (ok && !acc.empty()) return true;
    std::size_t pos = 0;
    while (pos < k) {
      std::uint64_t limit =
          ((std::uint64_t{1} << base[pos].size()) - 1) * gm.size();
      if (++choice[pos] < limit) break;
      choice[pos++] = 0;
    }
    if (pos == k || k == 0) return false;
  }
}

bool collectionwise_ps_absolute(const Collection& A, std::uint64_t bound) {
  const Semigroup& sg = A.universe();
  std::vector<Subset> inters = subfamily_intersections(A, bound);
  std::size_t k = inters.size();
  std::uint64_t per = (std::uint64_t{1} << sg.size()) - 1;
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (space > bound / per) throw SearchSpaceTooLarge(bound + 1, bound);
    space *= per;
  }
  std::vector<std::uint64_t> choice(k, 0);
  for (;;) {
    Subset acc = Subset::full(sg);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      Subset U(sg);
      for (std::size_t h = 0; h < sg.size(); ++h)
        if ((choice[i] + 1) >> h & 1) U = U | preimage(h, inters[i]);
      for (std::size_t w = 0; w < sg.size() && ok; ++w) {
        acc = acc & preimage(w, U);
        if (acc.empty()) ok = false;
      }
    }
    if (ok && !acc.empty()) return true;
    std::size_t pos = 0;
    while (pos < k) {
      if (++choice[pos] < per) break;
      choice[pos++] = 0;
    }
    if (pos == k || k == 0) return false;
  }
}

bool is_rel_central(const Subset& A, const KernelContext& ctx) {
  require_same_universe(A, ctx.F());
  const Semigroup& sg = ctx.universe();
  // candidate filters up(B) need B <= A to have A as a member
  Subset b(sg);
  while (b.increment()) {
    if (!b.subset_of(A)) continue;
    Collection up_b = Collection::principal_filter(sg, b);
    if (!is_idempotent_collection(up_b)) continue;
    if (is_collectionwise_ps(up_b, ctx)) return true;
  }
  return false;
}

Collection central_collection(const KernelContext& ctx) {
  const Semigroup& sg = ctx.universe();
  std::vector<Subset> ms;
  Subset a(sg);
  do {
    if (is_rel_central(a, ctx)) ms.push_back(a);
  } while (a.increment());
  return Collection(sg, std::move(ms));
}

Subset kernel_idempotents(const KernelContext& ctx) {
  const auto& h = ctx.hypotheses();
  if (!h.f_product) throw HypothesisViolated("f_product");
  if (!h.g_product) throw HypothesisViolated("g_product");
  if (!h.f_condition) throw HypothesisViolated("f_condition");
  Subset K = ctx.relative_kernel();
  if (!is_subsemigroup(K))
    throw CheckFailed("relative kernel is not a subsemigroup");
  Subset e = idempotents(K);
  if (e.empty()) throw CheckFailed("relative kernel has no idempotents");
  return e;
}

}  // namespace meshwork
