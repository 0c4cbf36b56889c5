#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semi/cayley_table.hpp"
#include "semi/partition.hpp"

namespace semi {

/// One representative per psi-block.
struct Transversal {
  /// Sorted ascending.
  std::vector<ElementId> representatives;
  /// Representative of each block, indexed like Partition::blocks().
  std::vector<ElementId> block_rep;

  bool contains(ElementId x) const;
  friend bool operator==(const Transversal&, const Transversal&) = default;
};

struct TransversalPolicy {
  enum class Kind { least, greatest, seeded };
  Kind kind = Kind::least;
  std::uint64_t seed = 0;

  static TransversalPolicy least() { return {Kind::least, 0}; }
  static TransversalPolicy greatest() { return {Kind::greatest, 0}; }
  static TransversalPolicy seeded(std::uint64_t seed) { return {Kind::seeded, seed}; }
};

/// "least", "greatest" or "seeded(<seed>)".
std::string to_string(const TransversalPolicy& policy);

Transversal choose_transversal(const Partition& psi,
                               TransversalPolicy policy = TransversalPolicy::least());

/// The retraction theta onto a transversal.
struct RetractionMap {
  std::vector<ElementId> theta;
  Transversal transversal;
};

RetractionMap induced_retraction(const Partition& psi, const Transversal& t);

struct InflationWitness {
  enum class Axiom {
    /// theta(theta(a)) != theta(a)
    idempotent,
    /// theta(a) * theta(b) falls outside the image of theta
    image_closed,
    /// theta(a) * theta(b) != a * b
    product,
  };
  Axiom axiom;
  ElementId a, b;
  friend bool operator==(const InflationWitness&, const InflationWitness&) = default;
};

const char* to_string(InflationWitness::Axiom axiom) noexcept;

/// Checks that theta is idempotent, its image is a subsemigroup, and
/// theta(a) * theta(b) = a * b everywhere.
std::optional<InflationWitness> verify_inflation(const CayleyTable& table,
                                                 const RetractionMap& r);

/// Least (a, b) with theta(a) = theta(b) but a, b not h-related.
std::optional<std::pair<ElementId, ElementId>> verify_kernel_in_h(
    const RetractionMap& r, const Partition& h);

struct Subsemigroup {
  CayleyTable table;
  /// Original id of each new id; ascending.
  std::vector<ElementId> to_original;
};

/// Renumbers `subset` in increasing original-id order. Throws
/// Error(not_closed) naming a pair whose product leaves the subset.
Subsemigroup restrict_to_subsemigroup(const CayleyTable& table,
                                      std::span<const ElementId> subset);

/// Base semigroup plus the fiber size over each base element.
struct FiberSizeSpec {
  CayleyTable base;
  std::vector<std::size_t> sizes;
};

/// Base table in the core format, then a line `sizes: s0 s1 ...`.
FiberSizeSpec parse_fiber_spec(std::istream& in);
FiberSizeSpec parse_fiber_spec(std::string_view text);

struct Inflation {
  CayleyTable table;
  RetractionMap retraction;
};

/// Inflates `spec.base`: base ids stay 0..m-1, and the extra elements of each
/// fiber follow in base-element order. x*y = theta(x)*theta(y) in the base.
/// Throws Error(order_too_large) when the total exceeds `max_order`.
Inflation build_inflation(const FiberSizeSpec& spec, std::size_t max_order = 12);

}  // namespace semi
