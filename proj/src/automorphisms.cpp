#include "semi/automorphisms.hpp"

#include <vector>

#include "semi/error.hpp"

namespace semi {

std::optional<PairWitness> is_automorphism(const CayleyTable& table,
                                           const Permutation& p) {
  if (p.degree() != table.order()) {
    throw Error(ErrorKind::degree_mismatch,
                "permutation degree does not match the table order");
  }
  const auto n = static_cast<ElementId>(table.order());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (p(table(x, y)) != table(p(x), p(y))) return PairWitness{x, y};
    }
  }
  return std::nullopt;
}

namespace {

constexpr ElementId unassigned = static_cast<ElementId>(-1);

class AutomorphismSearch {
 public:
  AutomorphismSearch(const CayleyTable& table, const SearchLimits& limits)
      : table_(table),
        limits_(limits),
        n_(static_cast<ElementId>(table.order())),
        image_(n_, unassigned),
        used_(n_, false) {}

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  // Checks every product made checkable by assigning element k.
  bool consistent(ElementId k) const {
    for (ElementId x = 0; x <= k; ++x) {
      for (ElementId y = 0; y <= k; ++y) {
        const ElementId xy = table_(x, y);
        if (xy > k) continue;
        if (x != k && y != k && xy != k) continue;
        if (image_[xy] != table_(image_[x], image_[y])) return false;
      }
    }
    return true;
  }

  void extend(ElementId k) {
    if (++nodes_ > limits_.max_search_nodes) {
      throw Error(ErrorKind::order_too_large,
                  "automorphism search exceeded " +
                      std::to_string(limits_.max_search_nodes) + " nodes");
    }
    if (k == n_) {
      if (found_.size() >= limits_.max_group_order) {
        throw Error(ErrorKind::order_too_large,
                    "automorphism group has more than " +
                        std::to_string(limits_.max_group_order) + " elements");
      }
      found_.emplace_back(image_);
      return;
    }
    for (ElementId v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      image_[k] = v;
      used_[v] = true;
      if (consistent(k)) extend(k + 1);
      used_[v] = false;
    }
    image_[k] = unassigned;
  }

  const CayleyTable& table_;
  const SearchLimits& limits_;
  ElementId n_;
  std::vector<ElementId> image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

PermGroup enumerate_automorphisms(const CayleyTable& table,
                                  const SearchLimits& limits) {
  if (table.order() > limits.max_order) {
    throw Error(ErrorKind::order_too_large,
                "order " + std::to_string(table.order()) + " exceeds the maximum " +
                    std::to_string(limits.max_order));
  }
  // Images are tried in increasing order, so the result is already sorted.
  return PermGroup(table.order(), AutomorphismSearch(table, limits).run());
}

}  // namespace semi
