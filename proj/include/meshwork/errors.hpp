#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meshwork {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cayley table validation failures carry the first offending cell / triple
// in lexicographic order.
struct OutOfRangeEntry : Error {
  std::size_t row, col;
  OutOfRangeEntry(std::size_t i, std::size_t j)
      : Error("table entry out of range at (" + std::to_string(i) + "," +
              std::to_string(j) + ")"),
        row(i), col(j) {}
};

struct NonAssociative : Error {
  std::size_t i, j, k;
  NonAssociative(std::size_t a, std::size_t b, std::size_t c)
      : Error("operation is not associative, witness (" + std::to_string(a) +
              "," + std::to_string(b) + "," + std::to_string(c) + ")"),
        i(a), j(b), k(c) {}
};

struct NotASubsemigroup : Error {
  std::size_t a, b;
  NotASubsemigroup(std::size_t x, std::size_t y)
      : Error("set is not closed under the operation, witness pair (" +
              std::to_string(x) + "," + std::to_string(y) + ")"),
        a(x), b(y) {}
};

struct SizeLimit : Error {
  using Error::Error;
};

struct UniverseMismatch : Error {
  UniverseMismatch() : Error("operands live on different universes") {}
};

struct UniverseTooLarge : Error {
  std::size_t n, bound;
  UniverseTooLarge(std::size_t n_, std::size_t bound_)
      : Error("universe of size " + std::to_string(n_) +
              " exceeds the 2^n enumeration bound n <= " +
              std::to_string(bound_)),
        n(n_), bound(bound_) {}
};

struct SpaceTooLarge : Error {
  using Error::Error;
};

struct SearchSpaceTooLarge : Error {
  unsigned long long size, bound;
  SearchSpaceTooLarge(unsigned long long s, unsigned long long b)
      : Error("search space of " + std::to_string(s) +
              " candidates exceeds bound " + std::to_string(b)),
        size(s), bound(b) {}
};

struct NotAStack : Error {
  NotAStack() : Error("collection is not a stack") {}
};

struct NotAFilter : Error {
  NotAFilter() : Error("collection is not a filter") {}
};

struct HypothesisViolated : Error {
  std::string hypothesis;
  explicit HypothesisViolated(std::string name)
      : Error("hypothesis violated: " + name), hypothesis(std::move(name)) {}
};

struct EmptyKernel : Error {
  EmptyKernel() : Error("proper filter with empty kernel (internal error)") {}
};

struct UnknownLawId : Error {
  std::string id;
  explicit UnknownLawId(std::string law)
      : Error("unknown law id: " + law), id(std::move(law)) {}
};

struct UnknownHypothesis : Error {
  std::string law, hypothesis;
  UnknownHypothesis(std::string l, std::string h)
      : Error("law " + l + " has no hypothesis named " + h),
        law(std::move(l)), hypothesis(std::move(h)) {}
};

struct ParseError : Error {
  std::string path;
  ParseError(std::string p, const std::string& what)
      : Error(p + ": " + what), path(std::move(p)) {}
};

// A theorem-backed internal assertion failed; indicates a bug in the
// workbench rather than in an input.
struct CheckFailed : Error {
  using Error::Error;
};

}  // namespace meshwork
