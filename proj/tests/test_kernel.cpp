#include <doctest.h>

#include "meshwork/kernel.hpp"

using namespace meshwork;

namespace {

Semigroup z(std::size_t n) {
  return standard_semigroup(SemigroupKind::cyclic_group, n);
}

Semigroup chain2() {
  return standard_semigroup(SemigroupKind::meet_semilattice_chain, 2);
}

// F = up({0}), G = {S} on the two-element chain: the running example
KernelContext chain_ctx(const Semigroup& chain) {
  return KernelContext::make(Collection::point_ultrafilter(chain, 0),
                             Collection::just_full(chain));
}

}  // namespace

TEST_CASE("kernel context computes kernels and hypothesis flags") {
  Semigroup chain = chain2();
  KernelContext ctx = chain_ctx(chain);
  CHECK(ctx.f_bar() == Subset::of(chain, {0}));
  CHECK(ctx.g_bar() == Subset::full(chain));
  CHECK(ctx.hypotheses().f_condition);
  CHECK(ctx.hypotheses().g_product);
  CHECK(ctx.hypotheses().f_product);

  Semigroup z2 = z(2);
  KernelContext bad = KernelContext::make(Collection::point_ultrafilter(z2, 1),
                                          Collection::just_full(z2));
  CHECK(!bad.hypotheses().f_condition);
  CHECK(!bad.hypotheses().f_product);
  CHECK(bad.hypotheses().g_product);

  CHECK_THROWS_AS(
      KernelContext::make(Collection::powerset(z2), Collection::just_full(z2)),
      NotAFilter);
}

TEST_CASE("the relative kernel on the worked examples (by hand)") {
  Semigroup chain = chain2();
  CHECK(chain_ctx(chain).relative_kernel() == Subset::of(chain, {0}));

  for (const Semigroup& sg : standard_roster(4)) {
    Collection full = Collection::just_full(sg);
    KernelContext ctx = KernelContext::make(full, full);
    CHECK(ctx.relative_kernel() == smallest_ideal(Subset::full(sg)));
  }

  Semigroup rz = standard_semigroup(SemigroupKind::right_zero, 2);
  Collection full = Collection::just_full(rz);
  CHECK(KernelContext::make(full, full).relative_kernel() == Subset::full(rz));
}

TEST_CASE("relative kernel membership routes on the chain example") {
  Semigroup chain = chain2();
  KernelContext ctx = chain_ctx(chain);
  KernelMembership at0 = check_relative_kernel_membership(ctx, 0);
  CHECK(at0.in_kernel);
  CHECK(at0.via_idempotent);
  CHECK(at0.via_all_q);
  CHECK(at0.via_derived);
  KernelMembership at1 = check_relative_kernel_membership(ctx, 1);
  CHECK(!at1.in_kernel);
  CHECK(!at1.via_idempotent);
  CHECK(!at1.via_all_q);
  CHECK(!at1.via_derived);
}

TEST_CASE("membership routes refuse to run without their hypotheses") {
  Semigroup z2 = z(2);
  KernelContext bad = KernelContext::make(Collection::point_ultrafilter(z2, 1),
                                          Collection::just_full(z2));
  CHECK_THROWS_AS(check_relative_kernel_membership(bad, 0), HypothesisViolated);
}

TEST_CASE("five-way piecewise syndetic routes on the chain example") {
  Semigroup chain = chain2();
  KernelContext ctx = chain_ctx(chain);
  RelPsEquiv r0 = is_rel_ps_equiv(Subset::of(chain, {0}), ctx);
  CHECK(r0.ps_member);
  CHECK(r0.via_q_gbar);
  CHECK(r0.via_q_kernel);
  CHECK(r0.via_idem_kernel);
  CHECK(r0.via_idem_gbar);
  RelPsEquiv r1 = is_rel_ps_equiv(Subset::of(chain, {1}), ctx);
  CHECK(!r1.ps_member);
  CHECK(!r1.via_q_gbar);
  RelPsEquiv rs = is_rel_ps_equiv(Subset::full(chain), ctx);
  CHECK(rs.ps_member);
}

TEST_CASE("finite intersection search on the chain example") {
  Semigroup chain = chain2();
  KernelContext ctx = chain_ctx(chain);
  CHECK(fip_rel_ps(Subset::of(chain, {0}), ctx));
  CHECK(!fip_rel_ps(Subset::of(chain, {1}), ctx));

  Semigroup rz = standard_semigroup(SemigroupKind::right_zero, 2);
  Collection full = Collection::just_full(rz);
  KernelContext rz_ctx = KernelContext::make(full, full);
  CHECK(fip_rel_ps(smallest_ideal(Subset::full(rz)), rz_ctx));
}

TEST_CASE("the finite intersection search respects its bound") {
  Semigroup chain = chain2();
  KernelContext ctx = chain_ctx(chain);
  CHECK_THROWS_AS(fip_rel_ps(Subset::of(chain, {0}), ctx, 1),
                  SearchSpaceTooLarge);
}

TEST_CASE("collectionwise piecewise syndetic families on the chain example") {
  Semigroup chain = chain2();
  KernelContext ctx = chain_ctx(chain);

  // singleton families agree with the single-set notion
  Subset a(chain);
  do {
    Collection single(chain, {a});
    CHECK(is_collectionwise_ps(single, ctx) ==
          is_rel_ps_equiv(a, ctx).ps_member);
  } while (a.increment());

  Collection both(chain, {Subset::of(chain, {0}), Subset::full(chain)});
  CHECK(is_collectionwise_ps(both, ctx));
  Collection split(chain, {Subset::of(chain, {0}), Subset::of(chain, {1})});
  CHECK(!is_collectionwise_ps(split, ctx));
}

TEST_CASE("collectionwise point route agrees with the definition") {
  Semigroup z2 = z(2);
  Collection full = Collection::just_full(z2);
  KernelContext ctx = KernelContext::make(full, full);
  for (const Collection& fam : all_collections(z2))
    CHECK(is_collectionwise_ps(fam, ctx) ==
          collectionwise_ps_via_points(fam, ctx));
}

TEST_CASE("relatively central sets on the worked examples") {
  Semigroup z2 = z(2);
  Collection full = Collection::just_full(z2);
  KernelContext ctx = KernelContext::make(full, full);
  CHECK(is_rel_central(Subset::full(z2), ctx));
  CHECK(is_rel_central(Subset::of(z2, {0}), ctx));
  CHECK(!is_rel_central(Subset::of(z2, {1}), ctx));

  Semigroup chain = chain2();
  KernelContext cctx = chain_ctx(chain);
  Subset a(chain);
  do {
    CHECK(is_rel_central(a, cctx) == a.test(0));
  } while (a.increment());
}

TEST_CASE("kernel idempotents on the worked examples") {
  Semigroup chain = chain2();
  CHECK(kernel_idempotents(chain_ctx(chain)) == Subset::of(chain, {0}));

  for (std::size_t n = 2; n <= 4; ++n) {
    Semigroup g = z(n);
    Collection full = Collection::just_full(g);
    CHECK(kernel_idempotents(KernelContext::make(full, full)) ==
          Subset::of(g, {0}));
  }

  Semigroup rz = standard_semigroup(SemigroupKind::right_zero, 2);
  Collection full = Collection::just_full(rz);
  CHECK(kernel_idempotents(KernelContext::make(full, full)) ==
        Subset::full(rz));

  Semigroup z2 = z(2);
  KernelContext bad = KernelContext::make(Collection::point_ultrafilter(z2, 1),
                                          Collection::just_full(z2));
  CHECK_THROWS_AS(kernel_idempotents(bad), HypothesisViolated);
}

TEST_CASE("degenerate family members are handled literally") {
  Semigroup z2 = z(2);
  Collection full = Collection::just_full(z2);
  KernelContext ctx = KernelContext::make(full, full);
  // the empty set as a family member forces an empty intersection
  Collection with_empty(z2, {Subset(z2), Subset::full(z2)});
  CHECK(!is_collectionwise_ps(with_empty, ctx));
  // the empty family is collectionwise trivially
  CHECK(is_collectionwise_ps(Collection(z2), ctx));
}

TEST_CASE("without a product filter on the left, central sets can lose the Ramsey property") {
  // F = up({1}), G = up({0}) on the two-element group: G is a product
  // filter and kernel(F)*kernel(G) <= kernel(F), but kernel(F) = {1} is
  // not closed. By hand: Syn(F,G) = up({1}), a principal idempotent
  // filter up(B) is collectionwise piecewise syndetic iff 1 is in B, and
  // the only candidate subsemigroups are {0} and S, so the central sets
  // are exactly {S}. The union {0} | {1} is central, neither piece is.
  Semigroup z2 = z(2);
  KernelContext ctx = KernelContext::make(Collection::point_ultrafilter(z2, 1),
                                          Collection::point_ultrafilter(z2, 0));
  CHECK(ctx.hypotheses().f_condition);
  CHECK(ctx.hypotheses().g_product);
  CHECK(!ctx.hypotheses().f_product);
  CHECK(is_rel_central(Subset::full(z2), ctx));
  CHECK(!is_rel_central(Subset::of(z2, {0}), ctx));
  CHECK(!is_rel_central(Subset::of(z2, {1}), ctx));
  CHECK(central_collection(ctx) == Collection(z2, {Subset::full(z2)}));
  CHECK(!central_collection(ctx).flags().grill);
}

TEST_CASE("collectionwise finite intersection search at tiny sizes") {
  Semigroup z2 = z(2);
  Collection full = Collection::just_full(z2);
  KernelContext ctx = KernelContext::make(full, full);
  for (const Collection& fam : all_collections(z2)) {
    if (fam.size() > 3) continue;  // the explicit product space explodes fast
    bool expect = is_collectionwise_ps(fam, ctx);
    CHECK(fip_collectionwise_ps(fam, ctx) == expect);
    CHECK(collectionwise_ps_absolute(fam) == expect);
  }
}
