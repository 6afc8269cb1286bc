#include "meshwork/collection.hpp"

#include <algorithm>
#include <cstdlib>

namespace meshwork {

Collection::Collection(const Semigroup& sg, std::vector<Subset> members)
    : sg_(&sg), members_(std::move(members)) {
  for (const Subset& m : members_)
    if (&m.universe() != sg_) throw UniverseMismatch();
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

Collection Collection::powerset(const Semigroup& sg) {
  std::vector<Subset> ms;
  Subset a(sg);
  ms.push_back(a);
  while (a.increment()) ms.push_back(a);
  return Collection(sg, std::move(ms));
}

Collection Collection::principal_filter(const Semigroup& sg,
                                        const Subset& base) {
  if (&base.universe() != &sg) throw UniverseMismatch();
  std::vector<Subset> ms;
  Subset a(sg);
  do {
    if (base.subset_of(a)) ms.push_back(a);
  } while (a.increment());
  return Collection(sg, std::move(ms));
}

Collection Collection::point_ultrafilter(const Semigroup& sg, std::size_t x) {
  return principal_filter(sg, Subset::single(sg, x));
}

Collection Collection::just_full(const Semigroup& sg) {
  return Collection(sg, {Subset::full(sg)});
}

bool Collection::contains(const Subset& A) const {
  require_same_universe(A, *this);
  return std::binary_search(members_.begin(), members_.end(), A);
}

bool Collection::contains_empty_set() const {
  return !members_.empty() && members_.front().empty();
}

bool Collection::subset_of(const Collection& o) const {
  require_same_universe(*this, o);
  return std::includes(o.members_.begin(), o.members_.end(), members_.begin(),
                       members_.end());
}

bool Collection::operator==(const Collection& o) const {
  return sg_ == o.sg_ && members_ == o.members_;
}

Collection Collection::union_with(const Collection& o) const {
  require_same_universe(*this, o);
  std::vector<Subset> ms = members_;
  ms.insert(ms.end(), o.members_.begin(), o.members_.end());
  return Collection(*sg_, std::move(ms));
}

Collection Collection::intersect_with(const Collection& o) const {
  require_same_universe(*this, o);
  std::vector<Subset> ms;
  std::set_intersection(members_.begin(), members_.end(), o.members_.begin(),
                        o.members_.end(), std::back_inserter(ms));
  return Collection(*sg_, std::move(ms));
}

const ClassFlags& Collection::flags() const {
  if (!flags_) flags_ = classify(*this);
  return *flags_;
}

const std::vector<Subset>& Collection::minimal_members() const {
  if (!minimal_) {
    std::vector<Subset> out;
    for (const Subset& m : members_) {
      bool is_min = true;
      for (const Subset& o : members_)
        if (!(o == m) && o.subset_of(m)) {
          is_min = false;
          break;
        }
      if (is_min) out.push_back(m);
    }
    minimal_ = std::move(out);
  }
  return *minimal_;
}

namespace {
std::size_t g_max_bits = []() -> std::size_t {
  if (const char* env = std::getenv("WORKBENCH_MAX_N")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 20;
}();
}  // namespace

std::size_t max_universe_bits() { return g_max_bits; }
void set_max_universe_bits(std::size_t n) { g_max_bits = n; }

static void check_enumerable(const Semigroup& sg) {
  if (sg.size() > max_universe_bits())
    throw UniverseTooLarge(sg.size(), max_universe_bits());
}

Collection mesh(const Collection& C) {
  const Semigroup& sg = C.universe();
  check_enumerable(sg);
  std::vector<Subset> ms;
  Subset a(sg);
  do {
    bool meets_all = true;
    for (const Subset& b : C.members())
      if (!a.intersects(b)) {
        meets_all = false;
        break;
      }
    if (meets_all) ms.push_back(a);
  } while (a.increment());
  return Collection(sg, std::move(ms));
}

Collection stack_closure(const Collection& C) {
  const Semigroup& sg = C.universe();
  check_enumerable(sg);
  std::vector<Subset> ms;
  Subset a(sg);
  do {
    for (const Subset& b : C.members())
      if (b.subset_of(a)) {
        ms.push_back(a);
        break;
      }
  } while (a.increment());
  return Collection(sg, std::move(ms));
}

namespace {

bool is_stack(const Collection& C) {
  // Upward closed iff every one-bit extension of a member is a member.
  const Semigroup& sg = C.universe();
  for (const Subset& m : C.members()) {
    for (std::size_t i = 0; i < sg.size(); ++i) {
      if (m.test(i)) continue;
      Subset up = m;
      up.set(i);
      if (!C.contains(up)) return false;
    }
  }
  return true;
}

bool intersection_closed(const Collection& C) {
  const auto& ms = C.members();
  if (ms.size() <= 512) {
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i; j < ms.size(); ++j)
        if (!C.contains(ms[i] & ms[j])) return false;
    return true;
  }
  // Stacks only reach here; for an upward closed family, pairwise closure
  // is equivalent to the global intersection being a member.
  Subset all = Subset::full(C.universe());
  for (const Subset& m : ms) all = all & m;
  return C.contains(all);
}

// Ramsey property for a stack: it is enough to split the minimal members.
// A failing pair (A1, A2) with A1 | A2 a member projects onto a failing
// pair whose union is a minimal member.
bool ramsey_on_stack(const Collection& C) {
  for (const Subset& m : C.minimal_members()) {
    std::vector<std::size_t> idx = m.elements();
    std::size_t k = idx.size();
    // each element goes to A1 only, A2 only, or both
    std::vector<int> digit(k, 0);
    for (;;) {
      Subset a1(C.universe()), a2(C.universe());
      for (std::size_t i = 0; i < k; ++i) {
        if (digit[i] != 1) a1.set(idx[i]);
        if (digit[i] != 0) a2.set(idx[i]);
      }
      if (!C.contains(a1) && !C.contains(a2)) return false;
      std::size_t pos = 0;
      while (pos < k && digit[pos] == 2) digit[pos++] = 0;
      if (pos == k) break;
      ++digit[pos];
    }
  }
  return true;
}

}  // namespace

ClassFlags classify(const Collection& C) {
  ClassFlags f;
  f.proper = !C.empty() && !C.contains_empty_set();
  f.stack = is_stack(C);
  f.filter = f.stack && !C.empty() && intersection_closed(C);
  f.grill = f.stack && !C.contains_empty_set() && ramsey_on_stack(C);
  f.ultrafilter = f.filter && f.grill;
  return f;
}

Collection meet_wedge(const Collection& C1, const Collection& C2) {
  require_same_universe(C1, C2);
  std::vector<Subset> ms;
  ms.reserve(C1.size() * C2.size());
  for (const Subset& a : C1.members())
    for (const Subset& b : C2.members()) ms.push_back(a & b);
  return Collection(C1.universe(), std::move(ms));
}

Collection grill_of_stack(const Collection& F) {
  if (!F.flags().stack) throw NotAStack();
  Collection g = meet_wedge(F, mesh(F));
  if (!g.flags().grill) throw CheckFailed("wedge with own mesh is not a grill");
  return g;
}

std::vector<Collection> maximal_filters_in(const Collection& C) {
  if (!C.flags().stack) throw NotAStack();
  std::vector<Collection> out;
  if (C.contains_empty_set()) return out;  // only the improper filter fits
  for (const Subset& b : C.minimal_members())
    out.push_back(Collection::principal_filter(C.universe(), b));
  return out;
}

CollectionEnumerator::CollectionEnumerator(const Semigroup& sg, EnumMode mode)
    : sg_(&sg), mode_(mode) {
  std::size_t n = sg.size();
  switch (mode) {
    case EnumMode::all:
    case EnumMode::stacks:
      if (n > 4) throw SpaceTooLarge("2^(2^n) enumeration needs n <= 4");
      total_ = std::uint64_t{1} << (std::uint64_t{1} << n);
      break;
    case EnumMode::proper_filters:
      check_enumerable(sg);
      total_ = (std::uint64_t{1} << n) - 1;
      break;
    case EnumMode::grills:
      check_enumerable(sg);
      total_ = std::uint64_t{1} << n;  // improper grill + one per nonempty B
      break;
  }
}

std::optional<Collection> CollectionEnumerator::next() {
  const Semigroup& sg = *sg_;
  std::size_t n = sg.size();
  switch (mode_) {
    case EnumMode::all:
      if (index_ >= total_) return std::nullopt;
      else {
        std::uint64_t mask = index_++;
        std::vector<Subset> ms;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
          if ((mask >> v) & 1) ms.push_back(Subset::from_value(sg, v));
        return Collection(sg, std::move(ms));
      }
    case EnumMode::stacks:
      while (index_ < total_) {
        std::uint64_t mask = index_++;
        std::vector<Subset> ms;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
          if ((mask >> v) & 1) ms.push_back(Subset::from_value(sg, v));
        Collection c(sg, std::move(ms));
        if (c.flags().stack) return c;
      }
      return std::nullopt;
    case EnumMode::proper_filters: {
      if (index_ >= total_) return std::nullopt;
      std::uint64_t v = ++index_;  // bases 1 .. 2^n - 1
      Subset b(sg);
      for (std::size_t i = 0; i < n; ++i)
        if ((v >> i) & 1) b.set(i);
      return Collection::principal_filter(sg, b);
    }
    case EnumMode::grills: {
      if (index_ >= total_) return std::nullopt;
      std::uint64_t v = index_++;
      if (v == 0) return Collection(sg);  // the improper grill
      Subset b(sg);
      for (std::size_t i = 0; i < n; ++i)
        if ((v >> i) & 1) b.set(i);
      return mesh(Collection(sg, {b}));
    }
  }
  return std::nullopt;
}

CollectionEnumerator enumerate_collections(const Semigroup& sg,
                                           EnumMode mode) {
  return CollectionEnumerator(sg, mode);
}

std::vector<Collection> all_collections(const Semigroup& sg) {
  std::vector<Collection> out;
  auto e = enumerate_collections(sg, EnumMode::all);
  while (auto c = e.next()) out.push_back(std::move(*c));
  return out;
}

std::vector<Collection> all_stacks(const Semigroup& sg) {
  std::vector<Collection> out;
  auto e = enumerate_collections(sg, EnumMode::stacks);
  while (auto c = e.next()) out.push_back(std::move(*c));
  return out;
}

std::vector<Collection> all_proper_filters(const Semigroup& sg) {
  std::vector<Collection> out;
  auto e = enumerate_collections(sg, EnumMode::proper_filters);
  while (auto c = e.next()) out.push_back(std::move(*c));
  return out;
}

Collection sample_collection(const Semigroup& sg, SplitMix64& rng) {
  std::vector<Subset> ms;
  Subset a(sg);
  std::uint64_t bits = rng.next();
  int used = 0;
  do {
    if (used == 64) {
      bits = rng.next();
      used = 0;
    }
    if ((bits >> used++) & 1) ms.push_back(a);
  } while (a.increment());
  return Collection(sg, std::move(ms));
}

std::vector<Collection> sampled_collections(const Semigroup& sg,
                                            std::size_t count,
                                            std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Collection> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(sample_collection(sg, rng));
  return out;
}

Subset sample_subset(const Semigroup& sg, SplitMix64& rng) {
  Subset s(sg);
  std::uint64_t bits = rng.next();
  int used = 0;
  for (std::size_t i = 0; i < sg.size(); ++i) {
    if (used == 64) {
      bits = rng.next();
      used = 0;
    }
    if ((bits >> used++) & 1) s.set(i);
  }
  return s;
}

}  // namespace meshwork
