#include "meshwork/semigroup.hpp"

#include <algorithm>
#include <bit>

namespace meshwork {

Semigroup::Semigroup(std::size_t n, std::vector<std::uint16_t> flat_table,
                     std::string name)
    : n_(n), table_(std::move(flat_table)), name_(std::move(name)) {
  if (n_ == 0) throw SizeLimit("a semigroup needs at least one element");
  if (table_.size() != n_ * n_)
    throw SizeLimit("table size does not match element count");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (table_[i * n_ + j] >= n_) throw OutOfRangeEntry(i, j);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (mul(mul(i, j), k) != mul(i, mul(j, k)))
          throw NonAssociative(i, j, k);
}

Semigroup Semigroup::validated(std::size_t n,
                               const std::vector<std::vector<long long>>& table,
                               std::string name) {
  if (table.size() != n) throw SizeLimit("table must have n rows");
  std::vector<std::uint16_t> flat(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw SizeLimit("table row has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      long long v = table[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw OutOfRangeEntry(i, j);
      flat[i * n + j] = static_cast<std::uint16_t>(v);
    }
  }
  return Semigroup(n, std::move(flat), std::move(name));
}

Subset Subset::full(const Semigroup& sg) {
  Subset s(sg);
  for (std::size_t i = 0; i < sg.size(); ++i) s.set(i);
  return s;
}

Subset Subset::of(const Semigroup& sg, std::initializer_list<std::size_t> xs) {
  Subset s(sg);
  for (std::size_t x : xs) s.set(x);
  return s;
}

Subset Subset::single(const Semigroup& sg, std::size_t x) {
  Subset s(sg);
  s.set(x);
  return s;
}

Subset Subset::from_value(const Semigroup& sg, std::uint64_t v) {
  Subset s(sg);
  s.head_ = v;
  return s;
}

std::size_t Subset::count() const {
  std::size_t c = static_cast<std::size_t>(std::popcount(head_));
  for (std::size_t i = 1; i < words(); ++i)
    c += static_cast<std::size_t>(std::popcount(tail_[i - 1]));
  return c;
}

bool Subset::empty() const {
  if (head_) return false;
  for (std::size_t i = 1; i < words(); ++i)
    if (tail_[i - 1]) return false;
  return true;
}

Subset Subset::operator&(const Subset& o) const {
  require_same_universe(*this, o);
  Subset r(*sg_);
  r.head_ = head_ & o.head_;
  for (std::size_t i = 1; i < words(); ++i)
    r.tail_[i - 1] = tail_[i - 1] & o.tail_[i - 1];
  return r;
}

Subset Subset::operator|(const Subset& o) const {
  require_same_universe(*this, o);
  Subset r(*sg_);
  r.head_ = head_ | o.head_;
  for (std::size_t i = 1; i < words(); ++i)
    r.tail_[i - 1] = tail_[i - 1] | o.tail_[i - 1];
  return r;
}

Subset Subset::operator-(const Subset& o) const {
  require_same_universe(*this, o);
  Subset r(*sg_);
  r.head_ = head_ & ~o.head_;
  for (std::size_t i = 1; i < words(); ++i)
    r.tail_[i - 1] = tail_[i - 1] & ~o.tail_[i - 1];
  return r;
}

Subset Subset::complement() const { return full(*sg_) - *this; }

bool Subset::subset_of(const Subset& o) const {
  require_same_universe(*this, o);
  if (head_ & ~o.head_) return false;
  for (std::size_t i = 1; i < words(); ++i)
    if (tail_[i - 1] & ~o.tail_[i - 1]) return false;
  return true;
}

bool Subset::intersects(const Subset& o) const {
  require_same_universe(*this, o);
  if (head_ & o.head_) return true;
  for (std::size_t i = 1; i < words(); ++i)
    if (tail_[i - 1] & o.tail_[i - 1]) return true;
  return false;
}

bool Subset::operator==(const Subset& o) const {
  if (head_ != o.head_) return false;
  for (std::size_t i = 1; i < words(); ++i)
    if (tail_[i - 1] != o.tail_[i - 1]) return false;
  return true;
}

std::strong_ordering Subset::operator<=>(const Subset& o) const {
  for (std::size_t i = words(); i-- > 0;) {
    std::uint64_t a = word(i), b = o.word(i);
    if (a != b)
      return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool Subset::increment() {
  std::size_t n = sg_->size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!test(i)) {
      set(i);
      return true;
    }
    reset(i);
  }
  return false;
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sg_->size(); ++i)
    if (test(i)) out.push_back(i);
  return out;
}

Subset preimage(std::size_t h, const Subset& A) {
  const Semigroup& sg = A.universe();
  Subset r(sg);
  for (std::size_t x = 0; x < sg.size(); ++x)
    if (A.test(sg.mul(h, x))) r.set(x);
  return r;
}

Subset product_set(const Subset& X, const Subset& Y) {
  require_same_universe(X, Y);
  const Semigroup& sg = X.universe();
  Subset r(sg);
  for (std::size_t x = 0; x < sg.size(); ++x) {
    if (!X.test(x)) continue;
    for (std::size_t y = 0; y < sg.size(); ++y)
      if (Y.test(y)) r.set(sg.mul(x, y));
  }
  return r;
}

bool is_subsemigroup(const Subset& T) {
  const Semigroup& sg = T.universe();
  for (std::size_t a = 0; a < sg.size(); ++a) {
    if (!T.test(a)) continue;
    for (std::size_t b = 0; b < sg.size(); ++b)
      if (T.test(b) && !T.test(sg.mul(a, b))) return false;
  }
  return true;
}

void require_subsemigroup(const Subset& T) {
  const Semigroup& sg = T.universe();
  for (std::size_t a = 0; a < sg.size(); ++a) {
    if (!T.test(a)) continue;
    for (std::size_t b = 0; b < sg.size(); ++b)
      if (T.test(b) && !T.test(sg.mul(a, b))) throw NotASubsemigroup(a, b);
  }
}

namespace {

// Principal left ideal of t within the subsemigroup T: closure of {t}
// under left multiplication by T.
Subset principal_left_ideal(const Subset& T, std::size_t t) {
  const Semigroup& sg = T.universe();
  Subset L = Subset::single(sg, t);
  for (;;) {
    Subset next = L | product_set(T, L);
    if (next == L) return L;
    L = next;
  }
}

}  // namespace

std::vector<Subset> minimal_left_ideals(const Subset& T) {
  require_subsemigroup(T);
  const Semigroup& sg = T.universe();
  std::vector<Subset> principal;
  for (std::size_t t = 0; t < sg.size(); ++t)
    if (T.test(t)) principal.push_back(principal_left_ideal(T, t));
  std::sort(principal.begin(), principal.end());
  principal.erase(std::unique(principal.begin(), principal.end()),
                  principal.end());
  std::vector<Subset> minimal;
  for (const Subset& L : principal) {
    bool is_min = true;
    for (const Subset& M : principal)
      if (!(M == L) && M.subset_of(L)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(L);
  }
  return minimal;  // sorted: principal was sorted and order is preserved
}

Subset smallest_ideal(const Subset& T) {
  Subset K(T.universe());
  for (const Subset& L : minimal_left_ideals(T)) K = K | L;
  if (!K.empty()) {
    if (!product_set(T, K).subset_of(K) || !product_set(K, T).subset_of(K))
      throw CheckFailed("smallest ideal is not two-sided");
  }
  return K;
}

Subset idempotents(const Subset& T) {
  const Semigroup& sg = T.universe();
  Subset r(sg);
  for (std::size_t x = 0; x < sg.size(); ++x)
    if (T.test(x) && sg.mul(x, x) == x) r.set(x);
  return r;
}

const char* kind_name(SemigroupKind k) {
  switch (k) {
    case SemigroupKind::cyclic_group: return "cyclic_group";
    case SemigroupKind::left_zero: return "left_zero";
    case SemigroupKind::right_zero: return "right_zero";
    case SemigroupKind::meet_semilattice_chain: return "meet_semilattice_chain";
    case SemigroupKind::rectangular_band: return "rectangular_band";
    case SemigroupKind::full_transformation: return "full_transformation";
  }
  return "?";
}

Semigroup standard_semigroup(SemigroupKind kind, std::size_t n) {
  if (n == 0) throw SizeLimit("size parameter must be positive");
  auto make = [&](std::size_t m, auto&& op, const std::string& label) {
    if (m > 256) throw SizeLimit("generated semigroup exceeds 256 elements");
    std::vector<std::uint16_t> t(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        t[i * m + j] = static_cast<std::uint16_t>(op(i, j));
    return Semigroup(m, std::move(t), label);
  };
  std::string label = std::string(kind_name(kind)) + ":" + std::to_string(n);
  switch (kind) {
    case SemigroupKind::cyclic_group:
      return make(n, [&](std::size_t i, std::size_t j) { return (i + j) % n; },
                  label);
    case SemigroupKind::left_zero:
      return make(n, [](std::size_t i, std::size_t) { return i; }, label);
    case SemigroupKind::right_zero:
      return make(n, [](std::size_t, std::size_t j) { return j; }, label);
    case SemigroupKind::meet_semilattice_chain:
      return make(n, [](std::size_t i, std::size_t j) { return std::min(i, j); },
                  label);
    case SemigroupKind::rectangular_band:
      // element r*n + c; (r1,c1)*(r2,c2) = (r1,c2)
      return make(n * n,
                  [&](std::size_t a, std::size_t b) {
                    return (a / n) * n + (b % n);
                  },
                  label);
    case SemigroupKind::full_transformation: {
      if (n > 4) throw SizeLimit("full_transformation limited to n <= 4");
      std::size_t m = 1;
      for (std::size_t i = 0; i < n; ++i) m *= n;
      // f encoded as sum f(i) * n^i; product is composition (f*g)(x)=f(g(x)).
      auto apply = [&](std::size_t f, std::size_t x) {
        for (std::size_t i = 0; i < x; ++i) f /= n;
        return f % n;
      };
      return make(m,
                  [&](std::size_t f, std::size_t g) {
                    std::size_t h = 0, pw = 1;
                    for (std::size_t x = 0; x < n; ++x) {
                      h += apply(f, apply(g, x)) * pw;
                      pw *= n;
                    }
                    return h;
                  },
                  label);
    }
  }
  throw SizeLimit("unknown kind");
}

std::vector<Semigroup> standard_roster(std::size_t max_size) {
  std::vector<Semigroup> out;
  out.push_back(standard_semigroup(SemigroupKind::cyclic_group, 1));
  for (std::size_t k = 2; k <= max_size; ++k)
    out.push_back(standard_semigroup(SemigroupKind::cyclic_group, k));
  for (std::size_t k = 2; k <= max_size; ++k)
    out.push_back(standard_semigroup(SemigroupKind::left_zero, k));
  for (std::size_t k = 2; k <= max_size; ++k)
    out.push_back(standard_semigroup(SemigroupKind::right_zero, k));
  for (std::size_t k = 2; k <= max_size; ++k)
    out.push_back(standard_semigroup(SemigroupKind::meet_semilattice_chain, k));
  for (std::size_t k = 2; k * k <= max_size; ++k)
    out.push_back(standard_semigroup(SemigroupKind::rectangular_band, k));
  for (std::size_t k = 2; k <= 4; ++k) {
    std::size_t m = 1;
    for (std::size_t i = 0; i < k; ++i) m *= k;
    if (m <= max_size)
      out.push_back(standard_semigroup(SemigroupKind::full_transformation, k));
  }
  return out;
}

}  // namespace meshwork
