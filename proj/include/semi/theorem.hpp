#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semi/automorphisms.hpp"
#include "semi/cayley_table.hpp"
#include "semi/inflation.hpp"
#include "semi/partition.hpp"
#include "semi/permutation.hpp"

namespace semi {

/// Product of |X|! over the blocks of `psi`. Throws Error(order_too_large)
/// if the value does not fit in 64 bits.
std::uint64_t psi_class_group_order(const Partition& psi);

/// Every permutation that maps each psi-block onto itself. Throws
/// Error(order_too_large) past limits.max_group_order.
PermGroup psi_class_group(const Partition& psi, const SearchLimits& limits = {});

/// First transversal id a with |X_a| != |X_{a tau}|, or nullopt when `tau`
/// preserves class sizes.
std::optional<ElementId> class_size_violation(const Permutation& tau,
                                              std::span<const std::size_t> class_sizes);

/// Automorphisms of the transversal table that preserve class sizes.
/// `class_sizes[k]` is the size of the psi-class of transversal id k.
PermGroup extendable_automorphisms(const CayleyTable& transversal_table,
                                   std::span<const std::size_t> class_sizes,
                                   const SearchLimits& limits = {});

/// Fixed listing of every psi-class used to extend automorphisms of T to S.
///
/// Transversal ids are positions in the ascending representative list. The
/// listing of class k starts with its representative; the other members
/// follow in increasing order. Extensions map position i of one listing to
/// position i of another, so representatives always go to representatives.
struct ExtensionScheme {
  std::size_t order = 0;
  /// S-id of transversal id k.
  std::vector<ElementId> representatives;
  /// Members of class k, representative first.
  std::vector<std::vector<ElementId>> listings;
  /// Transversal id of the class containing each S-id.
  std::vector<ElementId> class_of;
  /// Position of each S-id within its class listing.
  std::vector<std::size_t> position;

  std::vector<std::size_t> class_sizes() const;
};

ExtensionScheme extension_scheme(const Partition& psi, const Transversal& t);

/// The canonical extension of `tau` (on transversal ids) to S. Throws
/// Error(not_extendable) naming the first representative whose class size
/// is not preserved.
Permutation extend_automorphism(const Permutation& tau, const ExtensionScheme& scheme);

/// Image of H under extend_automorphism.
PermGroup embed_H(const PermGroup& h, const ExtensionScheme& scheme);

/// The permutation of transversal ids induced by `phi` when phi maps T onto
/// itself; nullopt otherwise.
std::optional<Permutation> restrict_to_transversal(const Permutation& phi,
                                                   const ExtensionScheme& scheme);

/// phi = compose(pi, tau_bar) with pi fixing every psi-class setwise.
struct Decomposition {
  Permutation tau;
  Permutation tau_bar;
  Permutation pi;
};

/// Splits an automorphism of `table` into its class-permuting part tau and
/// the remainder pi. Throws Error(not_an_automorphism).
Decomposition decompose_automorphism(const CayleyTable& table, const Permutation& phi,
                                     const ExtensionScheme& scheme);

struct TheoremReport {
  std::size_t order = 0;
  /// Ascending.
  std::vector<std::size_t> psi_class_sizes;
  std::uint64_t aut_order = 0;
  std::uint64_t h_order = 0;
  std::uint64_t g_order = 0;
  bool identity_holds = false;
  bool g_is_normal = false;
  bool intersection_trivial = false;
  bool factorization_unique = false;
  std::vector<ElementId> transversal_used;
  std::string policy;
  /// psi is a congruence, T contains S^2, theta is an inflation map and
  /// ker theta lies inside h.
  bool inflation_holds = false;
  std::vector<std::string> witnesses;

  bool all_hold() const noexcept {
    return identity_holds && g_is_normal && intersection_trivial &&
           factorization_unique && inflation_holds;
  }
};

/// The convention recorded in every report.
inline constexpr const char* factorization_convention = "phi = pi * tau_bar";

/// Runs the whole pipeline on one semigroup and checks every part of the
/// decomposition Aut S = G x| H_bar.
TheoremReport verify_theorem(const CayleyTable& table,
                             TransversalPolicy policy = TransversalPolicy::least(),
                             const SearchLimits& limits = {});

/// Key/value lines in field order.
std::string format_report_text(const TheoremReport& report);
/// One-line JSON object with the same field names and order.
std::string format_report_json(const TheoremReport& report);

}  // namespace semi
