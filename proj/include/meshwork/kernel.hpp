#pragma once

#include "meshwork/relative.hpp"

namespace meshwork {

struct KernelHypotheses {
  bool f_condition = false;  // F <= Syn(mesh(F), G)
  bool g_product = false;
  bool f_product = false;
};

/// Shared state for the relative-kernel layer: a pair of proper filters,
/// their kernels, and the recomputed hypothesis flags. Heavyweight derived
/// collections are cached lazily.
class KernelContext {
 public:
  static KernelContext make(const Collection& F, const Collection& G);

  const Collection& F() const { return F_; }
  const Collection& G() const { return G_; }
  const Subset& f_bar() const { return f_bar_; }
  const Subset& g_bar() const { return g_bar_; }
  const KernelHypotheses& hypotheses() const { return hyp_; }
  const Semigroup& universe() const { return F_.universe(); }

  const Collection& syn() const;
  const Collection& thick() const;
  const Collection& ps() const;

  /// Smallest ideal of the kernel of G; needs g_product.
  const Subset& smallest_ideal_g() const;

  /// kernel(F) * smallest_ideal(kernel(G)); needs g_product.
  Subset relative_kernel() const;

 private:
  KernelContext(Collection F, Collection G, Subset fb, Subset gb,
                KernelHypotheses h)
      : F_(std::move(F)), G_(std::move(G)), f_bar_(std::move(fb)),
        g_bar_(std::move(gb)), hyp_(h) {}

  Collection F_, G_;
  Subset f_bar_, g_bar_;
  KernelHypotheses hyp_;
  mutable std::optional<Collection> syn_, thick_, ps_;
  mutable std::optional<Subset> k_gbar_;
};

struct KernelMembership {
  bool in_kernel;      // p in relative kernel
  bool via_idempotent; // some e in E(K(kernel G)) with p in kernel(F)*e
  bool via_all_q;      // some such e working through every q in kernel(G)
  bool via_derived;    // some such e with A'(e) relatively syndetic for all A owning p
};

/// The four membership routes for a point p; needs f_condition, g_product.
KernelMembership check_relative_kernel_membership(const KernelContext& ctx,
                                                  std::size_t p);

struct RelPsEquiv {
  bool ps_member;       // A in PS(F,G)
  bool via_q_gbar;      // some q in kernel(G) with A'(q) in Syn(F,G)
  bool via_q_kernel;    // q restricted to the smallest ideal
  bool via_idem_kernel; // q an idempotent of the smallest ideal
  bool via_idem_gbar;   // q an idempotent of kernel(G)
};

/// The five membership routes for a subset A; needs f_condition, g_product.
RelPsEquiv is_rel_ps_equiv(const Subset& A, const KernelContext& ctx);

/// Finite-intersection-property form: explicit search over choices of a
/// nonempty H(B) <= B and a member W(B) of G for each member B of F. The
/// family being tested is finite, so the property reduces to a nonempty
/// global intersection. Throws SearchSpaceTooLarge past the bound.
bool fip_rel_ps(const Subset& A, const KernelContext& ctx,
                std::uint64_t bound = 1'000'000);

/// Some q in kernel(G) makes every nonempty subfamily intersection of A
/// have a relatively syndetic derived set along q. Subfamily scans past
/// the bound collapse to the full family (intersections shrink and the
/// syndetic collection is a stack).
bool is_collectionwise_ps(const Collection& A, const KernelContext& ctx,
                          std::uint64_t subfamily_bound = 4096);

/// Point route: some q in kernel(G) such that every p in kernel(G) admits
/// r in kernel(F) with r*p*q inside every member of A.
bool collectionwise_ps_via_points(const Collection& A,
                                  const KernelContext& ctx);

/// Finite-intersection-property form of the collectionwise notion:
/// choices of a nonempty H(C, B) <= C and a member W(C, B) of G for every
/// member C of F and nonempty subfamily B of A. Bounded explicit search.
bool fip_collectionwise_ps(const Collection& A, const KernelContext& ctx,
                           std::uint64_t bound = 1'000'000);

/// The classical collectionwise form over a bare semigroup: some choice of
/// a nonempty H(B) for each nonempty subfamily B of A such that all
/// w-translates of the preimage unions of subfamily intersections, over
/// every w in S, intersect. Bounded explicit search.
bool collectionwise_ps_absolute(const Collection& A,
                                std::uint64_t bound = 1'000'000);

/// A belongs to some proper idempotent filter that is collectionwise
/// piecewise (F,G)-syndetic. On a finite universe the proper idempotent
/// filters are exactly up(B) for nonempty B with up(B) <= up(B)*up(B), so
/// the search is complete.
bool is_rel_central(const Subset& A, const KernelContext& ctx);

/// { A : is_rel_central }.
Collection central_collection(const KernelContext& ctx);

/// Idempotents of the relative kernel; needs all three hypothesis flags,
/// and checks the kernel is a subsemigroup with at least one idempotent.
Subset kernel_idempotents(const KernelContext& ctx);

}  // namespace meshwork
