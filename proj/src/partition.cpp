#include "semi/partition.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "semi/error.hpp"

namespace semi {

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  p.block_of_.resize(labels.size());
  std::map<std::size_t, std::size_t> index_of_label;
  for (ElementId x = 0; x < labels.size(); ++x) {
    auto [it, fresh] = index_of_label.try_emplace(labels[x], p.blocks_.size());
    if (fresh) p.blocks_.emplace_back();
    p.blocks_[it->second].push_back(x);
    p.block_of_[x] = it->second;
  }
  return p;
}

Partition Partition::from_blocks(std::size_t order,
                                 std::vector<std::vector<ElementId>> blocks) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(order, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw Error(ErrorKind::malformed_input, "partition has an empty block");
    }
    for (auto x : blocks[b]) {
      if (x >= order || labels[x] != unset) {
        throw Error(ErrorKind::malformed_input,
                    "partition blocks must cover each element exactly once");
      }
      labels[x] = b;
    }
  }
  if (std::find(labels.begin(), labels.end(), unset) != labels.end()) {
    throw Error(ErrorKind::malformed_input, "partition does not cover every element");
  }
  return from_labels(labels);
}

Partition Partition::discrete(std::size_t order) {
  std::vector<std::size_t> labels(order);
  for (std::size_t i = 0; i < order; ++i) labels[i] = i;
  return from_labels(labels);
}

Partition compute_h(const CayleyTable& table) {
  const auto n = static_cast<ElementId>(table.order());
  // Signature of x: its row followed by its column.
  std::map<std::vector<ElementId>, std::size_t> class_of_signature;
  std::vector<std::size_t> labels(n);
  std::vector<ElementId> signature(2 * static_cast<std::size_t>(n));
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId x = 0; x < n; ++x) {
      signature[x] = table(a, x);
      signature[n + x] = table(x, a);
    }
    auto [it, fresh] =
        class_of_signature.try_emplace(signature, class_of_signature.size());
    labels[a] = it->second;
  }
  return Partition::from_labels(labels);
}

Partition compute_psi(const CayleyTable& table) {
  const Partition h = compute_h(table);
  const std::size_t n = table.order();
  std::vector<bool> is_product(n, false);
  for (auto v : table.entries()) is_product[v] = true;
  // Non-products keep their h label; products get fresh labels past the range.
  std::vector<std::size_t> labels(n);
  for (ElementId x = 0; x < n; ++x) {
    labels[x] = is_product[x] ? n + x : h.block_of(x);
  }
  return Partition::from_labels(labels);
}

std::optional<CongruenceWitness> is_congruence(const Partition& p,
                                               const CayleyTable& table) {
  if (p.order() != table.order()) {
    throw Error(ErrorKind::degree_mismatch,
                "partition and table have different orders");
  }
  const auto n = static_cast<ElementId>(table.order());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (!p.related(a, b)) continue;
      for (ElementId c = 0; c < n; ++c) {
        if (!p.related(table(c, a), table(c, b))) {
          return CongruenceWitness{a, b, c, Side::left};
        }
        if (!p.related(table(a, c), table(b, c))) {
          return CongruenceWitness{a, b, c, Side::right};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace semi
