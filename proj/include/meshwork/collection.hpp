#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "meshwork/semigroup.hpp"

namespace meshwork {

struct ClassFlags {
  bool proper = false;
  bool stack = false;
  bool filter = false;
  bool grill = false;
  bool ultrafilter = false;
  // Filled by classify_full (needs the semigroup operation), not classify.
  bool product_filter = false;
};

/// A family of subsets of one universe, stored extensionally as a sorted,
/// duplicate-free member list. Improper collections (empty, or containing
/// the empty set) are first-class values.
class Collection {
 public:
  explicit Collection(const Semigroup& sg) : sg_(&sg) {}
  Collection(const Semigroup& sg, std::vector<Subset> members);

  static Collection powerset(const Semigroup& sg);
  /// up(B) = { A : B <= A }, materialized.
  static Collection principal_filter(const Semigroup& sg, const Subset& base);
  static Collection point_ultrafilter(const Semigroup& sg, std::size_t x);
  /// {S}, the identity for the wedge.
  static Collection just_full(const Semigroup& sg);

  const Semigroup& universe() const { return *sg_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Subset& A) const;
  bool contains_empty_set() const;
  bool subset_of(const Collection& o) const;
  bool operator==(const Collection& o) const;

  Collection union_with(const Collection& o) const;
  Collection intersect_with(const Collection& o) const;

  /// Lazily computed classification (the five set-theoretic flags).
  const ClassFlags& flags() const;

  /// Inclusion-minimal members (the generating antichain of a stack),
  /// computed once and cached.
  const std::vector<Subset>& minimal_members() const;

 private:
  const Semigroup* sg_;
  std::vector<Subset> members_;
  mutable std::optional<ClassFlags> flags_;
  mutable std::optional<std::vector<Subset>> minimal_;
};

inline void require_same_universe(const Collection& a, const Collection& b) {
  if (&a.universe() != &b.universe()) throw UniverseMismatch();
}
inline void require_same_universe(const Subset& a, const Collection& b) {
  if (&a.universe() != &b.universe()) throw UniverseMismatch();
}

/// Bound for operations that enumerate all 2^n subsets. Defaults to 20,
/// overridable via the WORKBENCH_MAX_N environment variable.
std::size_t max_universe_bits();
void set_max_universe_bits(std::size_t n);

/// { A : A meets every member of C }, over all 2^n subsets.
Collection mesh(const Collection& C);

/// Upward closure { A : some member of C is contained in A }. Always equal
/// to mesh(mesh(C)); computed directly from the definition so the two
/// routes can be checked against each other.
Collection stack_closure(const Collection& C);

/// Definitional classification. proper = nonempty and without the empty
/// set; stack = upward closed; filter = nonempty stack closed under
/// pairwise intersection; grill = stack without the empty set satisfying
/// A1 | A2 member => A1 or A2 member; ultrafilter = filter and grill.
ClassFlags classify(const Collection& C);

/// { A1 & A2 : A1 in C1, A2 in C2 }.
Collection meet_wedge(const Collection& C1, const Collection& C2);

/// F wedge mesh(F); a grill whenever F is a stack (checked).
Collection grill_of_stack(const Collection& F);

/// All maximal proper filters contained in the stack C: up(B) for each
/// nonempty inclusion-minimal member B. Empty when C is empty or C owns
/// the empty set.
std::vector<Collection> maximal_filters_in(const Collection& C);

enum class EnumMode { all, stacks, proper_filters, grills };

/// Deterministic enumeration of collection spaces. Mode `all` walks the
/// full 2^(2^n) space (n <= 4); `stacks` filters it; `proper_filters`
/// yields up(B) for every nonempty B; `grills` yields the improper grill
/// followed by mesh(up(B)) for every nonempty B.
class CollectionEnumerator {
 public:
  CollectionEnumerator(const Semigroup& sg, EnumMode mode);
  std::optional<Collection> next();
  std::uint64_t space_size() const { return total_; }

 private:
  const Semigroup* sg_;
  EnumMode mode_;
  std::uint64_t index_ = 0;
  std::uint64_t total_ = 0;
};

CollectionEnumerator enumerate_collections(const Semigroup& sg, EnumMode mode);
std::vector<Collection> all_collections(const Semigroup& sg);
std::vector<Collection> all_stacks(const Semigroup& sg);
std::vector<Collection> all_proper_filters(const Semigroup& sg);

/// Counter-based generator: deterministic function of its seed state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t s_;
};

/// Each of the 2^n subsets included independently with probability 1/2.
Collection sample_collection(const Semigroup& sg, SplitMix64& rng);
Subset sample_subset(const Semigroup& sg, SplitMix64& rng);

/// Reproducible sampled enumeration: count independent draws from the
/// coin-per-subset distribution, a pure function of the seed.
std::vector<Collection> sampled_collections(const Semigroup& sg,
                                            std::size_t count,
                                            std::uint64_t seed);

}  // namespace meshwork
