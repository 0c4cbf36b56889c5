#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semi/cayley_table.hpp"

namespace semi {

/// A bijection on [0, n) acting on the right: x -> images()[x].
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error(malformed_input) unless `images` is a bijection on [0, n).
  explicit Permutation(std::vector<ElementId> images);

  static Permutation identity(std::size_t degree);
  /// Builds from disjoint cycles, e.g. {{0, 1}, {2, 4, 3}}.
  static Permutation from_cycles(
      std::size_t degree, std::initializer_list<std::initializer_list<ElementId>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  ElementId operator()(ElementId x) const noexcept { return images_[x]; }
  std::span<const ElementId> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  /// Disjoint-cycle notation with fixed points omitted, "()" for identity.
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<ElementId> images_;
};

/// Apply `p` first, then `q`. Throws Error(degree_mismatch).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// inverse(by) * p * by, i.e. p^by in right-action notation.
Permutation conjugate(const Permutation& p, const Permutation& by);

/// `p: i0 i1 ... i(n-1)`
std::string format_permutation(const Permutation& p);

/// A finite permutation group stored as its full, sorted element list.
///
/// The constructor sorts and deduplicates but does not check closure;
/// use check_group_axioms for that.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> elements);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& p) const;

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const PermGroup&, const PermGroup&) = default;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

/// Count line followed by one permutation per line, canonical order.
std::string format_group(const PermGroup& g);

/// Describes the first failing group axiom, or nullopt when `g` contains the
/// identity and is closed under composition and inverse.
std::optional<std::string> check_group_axioms(const PermGroup& g);

struct SubgroupCheck {
  bool is_subgroup = false;
  bool is_normal = false;
  /// Human-readable reason for the first failure, empty on success.
  std::string witness;
};

/// Subgroup and normality test of `g` inside `parent`.
SubgroupCheck subgroup_checks(const PermGroup& g, const PermGroup& parent);

}  // namespace semi
