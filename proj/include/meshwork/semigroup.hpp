#pragma once

#include <compare>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "meshwork/errors.hpp"

namespace meshwork {

/// A finite semigroup on elements 0..n-1 given by its Cayley table.
///
/// The table is validated on construction: every entry in range and the
/// operation associative (naive n^3 scan, first witness in lexicographic
/// order reported on failure).
class Semigroup {
 public:
  Semigroup(std::size_t n, std::vector<std::uint16_t> flat_table,
            std::string name = "");

  /// Validates a row-major table, table[i][j] = index of i*j.
  static Semigroup validated(std::size_t n,
                             const std::vector<std::vector<long long>>& table,
                             std::string name = "");

  std::size_t size() const { return n_; }
  const std::string& name() const { return name_; }
  std::size_t mul(std::size_t i, std::size_t j) const {
    return table_[i * n_ + j];
  }
  const std::vector<std::uint16_t>& table() const { return table_; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> table_;
  std::string name_;
};

/// A subset of a semigroup's element set, stored as a fixed-width bit
/// vector: one machine word when n <= 64, heap words beyond that. Values
/// compare numerically on the bit vector, which fixes all reported
/// orderings.
class Subset {
 public:
  explicit Subset(const Semigroup& sg) : sg_(&sg), head_(0) {
    if (words() > 1) tail_ = std::make_unique<std::uint64_t[]>(words() - 1);
    for (std::size_t i = 1; i < words(); ++i) tail_[i - 1] = 0;
  }
  Subset(const Subset& o) : sg_(o.sg_), head_(o.head_) {
    if (o.tail_) {
      tail_ = std::make_unique<std::uint64_t[]>(words() - 1);
      std::memcpy(tail_.get(), o.tail_.get(), (words() - 1) * 8);
    }
  }
  Subset(Subset&&) noexcept = default;
  Subset& operator=(const Subset& o) {
    if (this != &o) {
      Subset tmp(o);
      *this = std::move(tmp);
    }
    return *this;
  }
  Subset& operator=(Subset&&) noexcept = default;

  static Subset full(const Semigroup& sg);
  static Subset of(const Semigroup& sg, std::initializer_list<std::size_t> xs);
  static Subset single(const Semigroup& sg, std::size_t x);
  /// Low 64 bits taken from v; requires sg.size() <= 64.
  static Subset from_value(const Semigroup& sg, std::uint64_t v);

  const Semigroup& universe() const { return *sg_; }
  std::size_t universe_size() const { return sg_->size(); }

  bool test(std::size_t i) const { return (word(i >> 6) >> (i & 63)) & 1u; }
  void set(std::size_t i) { word(i >> 6) |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { word(i >> 6) &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool is_full() const { return count() == sg_->size(); }

  Subset operator&(const Subset& o) const;
  Subset operator|(const Subset& o) const;
  Subset operator-(const Subset& o) const;
  Subset complement() const;

  bool subset_of(const Subset& o) const;
  bool intersects(const Subset& o) const;

  bool operator==(const Subset& o) const;
  /// Numeric order on the bit-vector value.
  std::strong_ordering operator<=>(const Subset& o) const;

  /// Advances to the next subset in numeric order; false once wrapped to 0.
  bool increment();

  std::uint64_t value() const { return head_; }  // universe_size() <= 64
  std::vector<std::size_t> elements() const;

 private:
  std::size_t words() const { return (sg_->size() + 63) / 64; }
  std::uint64_t& word(std::size_t w) { return w == 0 ? head_ : tail_[w - 1]; }
  const std::uint64_t& word(std::size_t w) const {
    return w == 0 ? head_ : tail_[w - 1];
  }

  const Semigroup* sg_;
  std::uint64_t head_;
  std::unique_ptr<std::uint64_t[]> tail_;  // null when n <= 64
};

inline void require_same_universe(const Subset& a, const Subset& b) {
  if (&a.universe() != &b.universe()) throw UniverseMismatch();
}

/// h^{-1}A = { x : h*x in A }.
Subset preimage(std::size_t h, const Subset& A);

/// Elementwise product set { x*y : x in X, y in Y }.
Subset product_set(const Subset& X, const Subset& Y);

bool is_subsemigroup(const Subset& T);
void require_subsemigroup(const Subset& T);  // throws NotASubsemigroup

/// All inclusion-minimal nonempty L with T*L <= L, sorted by bit-vector
/// value. T must be a subsemigroup.
std::vector<Subset> minimal_left_ideals(const Subset& T);

/// Union of the minimal left ideals of T; checked to be a two-sided ideal.
Subset smallest_ideal(const Subset& T);

/// { x in T : x*x = x }. T may be any subset.
Subset idempotents(const Subset& T);

enum class SemigroupKind {
  cyclic_group,
  left_zero,
  right_zero,
  meet_semilattice_chain,
  rectangular_band,
  full_transformation,
};

const char* kind_name(SemigroupKind k);

/// Deterministic generator for the test corpus. The size parameter is the
/// grid side for rectangular_band (n*n elements) and the point count for
/// full_transformation (n^n elements, n <= 4).
Semigroup standard_semigroup(SemigroupKind kind, std::size_t n);

/// Every standard semigroup with at most max_size elements, in a fixed
/// order. Includes the one-element semigroup once.
std::vector<Semigroup> standard_roster(std::size_t max_size);

}  // namespace meshwork
