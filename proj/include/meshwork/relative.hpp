#pragma once

#include "meshwork/derived.hpp"

namespace meshwork {

/// A is (F,G)-syndetic: every B in F has a nonempty H <= B whose preimage
/// union lies in the stack closure of G. The union grows with H and the
/// closure is upward closed, so H = B decides it; the _scan variant walks
/// every H and guards the collapse.
bool is_rel_syndetic(const Subset& A, const Collection& F, const Collection& G);
bool is_rel_syndetic_scan(const Subset& A, const Collection& F,
                          const Collection& G, std::size_t max_base_bits = 12);

/// A is (F,G)-thick: some B in F has all preimage intersections over
/// nonempty H <= B inside mesh(G). The H = B collapse is taken only when G
/// is a stack; otherwise every H is scanned.
bool is_rel_thick(const Subset& A, const Collection& F, const Collection& G);
bool is_rel_thick_scan(const Subset& A, const Collection& F,
                       const Collection& G, std::size_t max_base_bits = 12);

Collection syn_collection(const Collection& F, const Collection& G);
Collection thick_collection(const Collection& F, const Collection& G);
/// syn wedge thick.
Collection ps_collection(const Collection& F, const Collection& G);

/// Characterization route: A is (F,G)-syndetic iff A'(mesh(H)) lies in
/// mesh(F) for every maximal filter H inside mesh(G). When mesh(G) is the
/// whole powerset its lone maximal filter is the improper one.
bool syn_via_maximal_filters(const Subset& A, const Collection& F,
                             const Collection& G);
/// Dual route: some maximal filter H inside mesh(G) has A'(H) in F.
bool thick_via_maximal_filters(const Subset& A, const Collection& F,
                               const Collection& G);

/// F <= Syn(mesh(F), F). Requires a filter; improper filters qualify
/// trivially. For proper filters this is equivalent to the kernel being a
/// subsemigroup.
bool is_product_filter(const Collection& F);

/// classify() plus the product_filter field when F is a filter.
ClassFlags classify_full(const Collection& C);

/// Intersection of all members; the set of points whose point ultrafilter
/// extends F. Requires a filter.
Subset filter_kernel(const Collection& F);

/// Wedge of two proper product filters with F1 <= mesh(F2); the result is
/// again a product filter (checked).
Collection wedge_of_product_filters(const Collection& F1, const Collection& F2);

/// p below q when F * up(p) <= F * up(q). F must be a proper stack.
bool preorder_le(std::size_t p, std::size_t q, const Collection& F);

struct ExtremalElements {
  Subset minimal, maximal;
};

/// Minimal and maximal points of the kernel of G under the preorder
/// induced by F. F a proper stack, G a proper filter.
ExtremalElements extremal_ultrafilters(const Collection& F,
                                       const Collection& G);

/// The route through ideal structure: points q of the kernel of G for
/// which kernel(F) * q is a minimal left ideal of kernel(F). Requires F a
/// proper product filter and kernel(F) * q <= kernel(F) for all q in
/// kernel(G); under those hypotheses it coincides with the points of
/// kernel(G) that are preorder-maximal against kernel(F).
Subset maximal_via_minimal_left_ideals(const Collection& F,
                                       const Collection& G);

}  // namespace meshwork
