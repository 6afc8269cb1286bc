#include "meshwork/relative.hpp"

#include <algorithm>

namespace meshwork {

namespace {

// U in stack_closure(G) without materializing the closure.
bool in_stack_closure(const Subset& U, const Collection& G) {
  for (const Subset& b : G.members())
    if (b.subset_of(U)) return true;
  return false;
}

// U in mesh(G) without materializing the mesh.
bool in_mesh(const Subset& U, const Collection& G) {
  for (const Subset& b : G.members())
    if (!U.intersects(b)) return false;
  return true;
}

}  // namespace

bool is_rel_syndetic(const Subset& A, const Collection& F,
                     const Collection& G) {
  require_same_universe(A, F);
  require_same_universe(F, G);
  const Semigroup& sg = A.universe();
  for (const Subset& B : F.members()) {
    if (B.empty()) return false;  // no nonempty H exists
    Subset U(sg);
    for (std::size_t h : B.elements()) U = U | preimage(h, A);
    if (!in_stack_closure(U, G)) return false;
  }
  return true;
}

bool is_rel_syndetic_scan(const Subset& A, const Collection& F,
                          const Collection& G, std::size_t max_base_bits) {
  require_same_universe(A, F);
  require_same_universe(F, G);
  const Semigroup& sg = A.universe();
  for (const Subset& B : F.members()) {
    std::vector<std::size_t> base = B.elements();
    if (base.empty()) return false;
    if (base.size() > max_base_bits)
      throw SearchSpaceTooLarge(std::uint64_t{1} << base.size(),
                                std::uint64_t{1} << max_base_bits);
    bool found = false;
    for (std::uint64_t h = 1; h < (std::uint64_t{1} << base.size()); ++h) {
      Subset U(sg);
      for (std::size_t i = 0; i < base.size(); ++i)
        if ((h >> i) & 1) U = U | preimage(base[i], A);
      if (in_stack_closure(U, G)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_rel_thick(const Subset& A, const Collection& F, const Collection& G) {
  require_same_universe(A, F);
  require_same_universe(F, G);
  const Semigroup& sg = A.universe();
  bool g_is_stack = G.flags().stack;
  for (const Subset& B : F.members()) {
    if (B.empty()) return true;  // nothing quantified over
    if (g_is_stack) {
      Subset I = Subset::full(sg);
      for (std::size_t h : B.elements()) I = I & preimage(h, A);
      if (in_mesh(I, G)) return true;
      continue;
    }
    std::vector<std::size_t> base = B.elements();
    bool all_ok = true;
    if (base.size() <= 20) {
      for (std::uint64_t h = 1; h < (std::uint64_t{1} << base.size()); ++h) {
        Subset I = Subset::full(sg);
        for (std::size_t i = 0; i < base.size(); ++i)
          if ((h >> i) & 1) I = I & preimage(base[i], A);
        if (!in_mesh(I, G)) {
          all_ok = false;
          break;
        }
      }
    } else {
      // intersections shrink as H grows and mesh(G) is upward closed, so
      // the full H decides membership
      Subset I = Subset::full(sg);
      for (std::size_t h : B.elements()) I = I & preimage(h, A);
      all_ok = in_mesh(I, G);
    }
    if (all_ok) return true;
  }
  return false;
}

bool is_rel_thick_scan(const Subset& A, const Collection& F,
                       const Collection& G, std::size_t max_base_bits) {
  require_same_universe(A, F);
  require_same_universe(F, G);
  const Semigroup& sg = A.universe();
  for (const Subset& B : F.members()) {
    std::vector<std::size_t> base = B.elements();
    if (base.empty()) return true;
    if (base.size() > max_base_bits)
      throw SearchSpaceTooLarge(std::uint64_t{1} << base.size(),
                                std::uint64_t{1} << max_base_bits);
    bool all_ok = true;
    for (std::uint64_t h = 1; h < (std::uint64_t{1} << base.size()); ++h) {
      Subset I = Subset::full(sg);
      for (std::size_t i = 0; i < base.size(); ++i)
        if ((h >> i) & 1) I = I & preimage(base[i], A);
      if (!in_mesh(I, G)) {
        all_ok = false;
        break;
      }
    }
    if (all_ok) return true;
  }
  return false;
}

Collection syn_collection(const Collection& F, const Collection& G) {
  require_same_universe(F, G);
  const Semigroup& sg = F.universe();
  if (sg.size() > max_universe_bits())
    throw UniverseTooLarge(sg.size(), max_universe_bits());
  std::vector<Subset> ms;
  Subset a(sg);
  do {
    if (is_rel_syndetic(a, F, G)) ms.push_back(a);
  } while (a.increment());
  return Collection(sg, std::move(ms));
}

Collection thick_collection(const Collection& F, const Collection& G) {
  require_same_universe(F, G);
  const Semigroup& sg = F.universe();
  if (sg.size() > max_universe_bits())
    throw UniverseTooLarge(sg.size(), max_universe_bits());
  std::vector<Subset> ms;
  Subset a(sg);
  do {
    if (is_rel_thick(a, F, G)) ms.push_back(a);
  } while (a.increment());
  return Collection(sg, std::move(ms));
}

Collection ps_collection(const Collection& F, const Collection& G) {
  return meet_wedge(syn_collection(F, G), thick_collection(F, G));
}

namespace {

// Maximal filters contained in mesh(G), allowing the improper filter when
// mesh(G) is the full powerset (which happens exactly when G is empty).
std::vector<Collection> maximal_filters_in_mesh(const Collection& G) {
  const Semigroup& sg = G.universe();
  Collection m = mesh(G);
  if (m.contains_empty_set()) return {Collection::powerset(sg)};
  std::vector<Collection> out;
  for (const Subset& b : m.minimal_members())
    out.push_back(Collection::principal_filter(sg, b));
  return out;
}

}  // namespace

bool syn_via_maximal_filters(const Subset& A, const Collection& F,
                             const Collection& G) {
  if (!F.flags().stack || !G.flags().stack) throw NotAStack();
  Collection fm = mesh(F);
  for (const Collection& H : maximal_filters_in_mesh(G))
    if (!fm.contains(derived_set(A, mesh(H)))) return false;
  return true;
}

bool thick_via_maximal_filters(const Subset& A, const Collection& F,
                               const Collection& G) {
  if (!F.flags().stack || !G.flags().stack) throw NotAStack();
  for (const Collection& H : maximal_filters_in_mesh(G))
    if (F.contains(derived_set(A, H))) return true;
  return false;
}

bool is_product_filter(const Collection& F) {
  if (!F.flags().filter) throw NotAFilter();
  Collection fm = mesh(F);
  for (const Subset& a : F.members())
    if (!is_rel_syndetic(a, fm, F)) return false;
  return true;
}

ClassFlags classify_full(const Collection& C) {
  ClassFlags f = classify(C);
  if (f.filter) {
    Collection m = mesh(C);
    f.product_filter = true;
    for (const Subset& a : C.members())
      if (!is_rel_syndetic(a, m, C)) {
        f.product_filter = false;
        break;
      }
  }
  return f;
}

Subset filter_kernel(const Collection& F) {
  if (!F.flags().filter) throw NotAFilter();
  Subset k = Subset::full(F.universe());
  for (const Subset& a : F.members()) k = k & a;
  return k;
}

Collection wedge_of_product_filters(const Collection& F1,
                                    const Collection& F2) {
  require_same_universe(F1, F2);
  if (!F1.flags().filter || !F1.flags().proper)
    throw HypothesisViolated("F1 proper filter");
  if (!F2.flags().filter || !F2.flags().proper)
    throw HypothesisViolated("F2 proper filter");
  if (!is_product_filter(F1)) throw HypothesisViolated("F1 product filter");
  if (!is_product_filter(F2)) throw HypothesisViolated("F2 product filter");
  if (!F1.subset_of(mesh(F2))) throw HypothesisViolated("F1 <= mesh(F2)");
  Collection w = meet_wedge(F1, F2);
  if (!is_product_filter(w))
    throw CheckFailed("wedge of product filters is not a product filter");
  return w;
}

bool preorder_le(std::size_t p, std::size_t q, const Collection& F) {
  if (!F.flags().stack) throw NotAStack();
  if (!F.flags().proper) throw HypothesisViolated("F proper");
  const Semigroup& sg = F.universe();
  Collection up_p = Collection::point_ultrafilter(sg, p);
  Collection up_q = Collection::point_ultrafilter(sg, q);
  return collection_product(F, up_p).subset_of(collection_product(F, up_q));
}

ExtremalElements extremal_ultrafilters(const Collection& F,
                                       const Collection& G) {
  require_same_universe(F, G);
  if (!F.flags().stack) throw NotAStack();
  if (!F.flags().proper) throw HypothesisViolated("F proper");
  if (!G.flags().filter || !G.flags().proper)
    throw HypothesisViolated("G proper filter");
  const Semigroup& sg = F.universe();
  Subset ambient = filter_kernel(G);
  std::vector<std::size_t> pts = ambient.elements();
  ExtremalElements out{Subset(sg), Subset(sg)};
  for (std::size_t q : pts) {
    bool minimal = true, maximal = true;
    for (std::size_t p : pts) {
      if (p == q) continue;
      bool pq = preorder_le(p, q, F), qp = preorder_le(q, p, F);
      if (pq && !qp) minimal = false;
      if (qp && !pq) maximal = false;
    }
    if (minimal) out.minimal.set(q);
    if (maximal) out.maximal.set(q);
  }
  return out;
}

Subset maximal_via_minimal_left_ideals(const Collection& F,
                                       const Collection& G) {
  require_same_universe(F, G);
  if (!F.flags().filter || !F.flags().proper)
    throw HypothesisViolated("F proper filter");
  if (!is_product_filter(F)) throw HypothesisViolated("F product filter");
  if (!G.flags().filter || !G.flags().proper)
    throw HypothesisViolated("G proper filter");
  const Semigroup& sg = F.universe();
  Subset fbar = filter_kernel(F);
  Subset gbar = filter_kernel(G);
  for (std::size_t q : gbar.elements())
    if (!product_set(fbar, Subset::single(sg, q)).subset_of(fbar))
      throw HypothesisViolated("kernel(F) * q <= kernel(F)");
  std::vector<Subset> mins = minimal_left_ideals(fbar);
  Subset out(sg);
  for (std::size_t q : gbar.elements()) {
    Subset fq = product_set(fbar, Subset::single(sg, q));
    if (std::find(mins.begin(), mins.end(), fq) != mins.end()) out.set(q);
  }
  return out;
}

}  // namespace meshwork
