#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semi/cayley_table.hpp"

namespace semi {

/// An equivalence relation on [0, n) held as blocks.
///
/// Blocks are kept normalized: each block is sorted, and blocks are ordered
/// by their least element, so two equal relations compare equal.
class Partition {
 public:
  Partition() = default;

  /// From arbitrary block labels, one per element.
  static Partition from_labels(std::span<const std::size_t> labels);
  /// Throws Error(malformed_input) unless `blocks` cover [0, order) exactly once.
  static Partition from_blocks(std::size_t order,
                               std::vector<std::vector<ElementId>> blocks);
  static Partition discrete(std::size_t order);

  std::size_t order() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t block_of(ElementId x) const noexcept { return block_of_[x]; }
  const std::vector<ElementId>& block(std::size_t index) const noexcept {
    return blocks_[index];
  }
  const std::vector<std::vector<ElementId>>& blocks() const noexcept {
    return blocks_;
  }
  bool related(ElementId a, ElementId b) const noexcept {
    return block_of_[a] == block_of_[b];
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<ElementId>> blocks_;
};

/// a h b iff rows a and b agree and columns a and b agree.
Partition compute_h(const CayleyTable& table);

/// h restricted to non-products, with every element of S^2 a singleton.
Partition compute_psi(const CayleyTable& table);

enum class Side { left, right };

/// (a, b) related but (c*a, c*b) (Side::left) or (a*c, b*c) (Side::right) not.
struct CongruenceWitness {
  ElementId a, b, c;
  Side side;
  friend bool operator==(const CongruenceWitness&,
                         const CongruenceWitness&) = default;
};

/// Least witness in (a, b, c, side) order with a < b, or nullopt when `p` is
/// a congruence.
std::optional<CongruenceWitness> is_congruence(const Partition& p,
                                               const CayleyTable& table);

}  // namespace semi
