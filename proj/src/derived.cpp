#include "meshwork/derived.hpp"

namespace meshwork {

Subset derived_set(const Subset& A, const Collection& C) {
  require_same_universe(A, C);
  const Semigroup& sg = A.universe();
  Subset r(sg);
  for (std::size_t h = 0; h < sg.size(); ++h)
    if (C.contains(preimage(h, A))) r.set(h);
  return r;
}

Collection collection_product(const Collection& F, const Collection& G) {
  require_same_universe(F, G);
  const Semigroup& sg = F.universe();
  if (sg.size() > max_universe_bits())
    throw UniverseTooLarge(sg.size(), max_universe_bits());
  std::vector<Subset> ms;
  Subset a(sg);
  do {
    if (F.contains(derived_set(a, G))) ms.push_back(a);
  } while (a.increment());
  return Collection(sg, std::move(ms));
}

bool is_translation_invariant(const Collection& C) {
  for (const Subset& a : C.members())
    if (!derived_set(a, C).is_full()) return false;
  return true;
}

bool is_idempotent_collection(const Collection& C) {
  for (const Subset& a : C.members())
    if (!C.contains(derived_set(a, C))) return false;
  return true;
}

}  // namespace meshwork
