#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semi {

/// Dense element index in [0, order).
using ElementId = std::uint32_t;

/// A finite binary operation on {0, ..., n-1} stored row-major.
///
/// Construction checks shape and range only. Associativity is a separate
/// question (see check_associativity); everything downstream of parsing
/// assumes it holds.
class CayleyTable {
 public:
  CayleyTable() = default;

  /// Throws Error(malformed_input) on a shape mismatch or out-of-range entry.
  CayleyTable(std::size_t order, std::vector<ElementId> entries);

  std::size_t order() const noexcept { return order_; }

  ElementId operator()(ElementId x, ElementId y) const noexcept {
    return entries_[static_cast<std::size_t>(x) * order_ + y];
  }

  std::span<const ElementId> entries() const noexcept { return entries_; }
  std::span<const ElementId> row(ElementId x) const noexcept {
    return std::span<const ElementId>(entries_).subspan(
        static_cast<std::size_t>(x) * order_, order_);
  }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
  friend auto operator<=>(const CayleyTable& a, const CayleyTable& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<ElementId> entries_;
};

struct AssociativityWitness {
  ElementId i, j, k;
  friend bool operator==(const AssociativityWitness&,
                         const AssociativityWitness&) = default;
};

/// Lexicographically least triple with (ij)k != i(jk), or nullopt.
std::optional<AssociativityWitness> check_associativity(const CayleyTable& table);

/// Builds a table and rejects non-associative operations with
/// Error(not_associative).
CayleyTable make_semigroup(std::size_t order, std::vector<ElementId> entries);

/// Reads the text format: optional `#` comment lines, a line holding n, then
/// n rows of n space-separated ids. Associativity is checked.
CayleyTable parse_table(std::istream& in);
CayleyTable parse_table(std::string_view text);

/// Canonical text encoding (no comments, single spaces, trailing newline).
std::string format_table(const CayleyTable& table);

/// S^2 as a sorted list of ids.
std::vector<ElementId> product_set(const CayleyTable& table);

/// The table transported along `relabel`: element i becomes relabel[i], so
/// result(relabel[x], relabel[y]) = relabel[x*y]. `relabel` must be a
/// bijection on [0, n).
CayleyTable relabel(const CayleyTable& table, std::span<const ElementId> relabel);

namespace detail {
/// Shared line reader for the table and fiber-spec formats.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}
  /// Next line that is not a `#` comment; nullopt at end of input.
  std::optional<std::string> next();
  std::size_t line_number() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<std::uint64_t> parse_numbers(std::string_view line,
                                         std::size_t line_number);
CayleyTable read_table(LineReader& reader);
}  // namespace detail

}  // namespace semi
