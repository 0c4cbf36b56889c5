#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "semi/cayley_table.hpp"
#include "semi/permutation.hpp"

namespace semi {

/// Size caps for the exhaustive parts of the toolkit. Exceeding any of them
/// raises Error(order_too_large).
struct SearchLimits {
  std::size_t max_order = 12;
  std::uint64_t max_search_nodes = 100'000'000;
  /// Largest explicitly stored group (Aut S, G, H).
  std::uint64_t max_group_order = 5040;
};

struct PairWitness {
  ElementId x, y;
  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

/// Least (x, y) with (x*y)p != (xp)*(yp), or nullopt when `p` is an automorphism.
std::optional<PairWitness> is_automorphism(const CayleyTable& table,
                                           const Permutation& p);

/// All automorphisms of `table`, by backtracking over images in id order.
///
/// A partial assignment is pruned as soon as some product x*y has x, y and
/// x*y all assigned and (x*y)p != (xp)*(yp).
PermGroup enumerate_automorphisms(const CayleyTable& table,
                                  const SearchLimits& limits = {});

}  // namespace semi
