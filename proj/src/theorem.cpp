#include "semi/theorem.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "semi/error.hpp"
#include "semi/report_json.hpp"

namespace semi {

std::uint64_t psi_class_group_order(const Partition& psi) {
  std::uint64_t order = 1;
  for (const auto& block : psi.blocks()) {
    for (std::uint64_t k = 2; k <= block.size(); ++k) {
      if (order > std::numeric_limits<std::uint64_t>::max() / k) {
        throw Error(ErrorKind::order_too_large, "psi-class group order overflows");
      }
      order *= k;
    }
  }
  return order;
}

PermGroup psi_class_group(const Partition& psi, const SearchLimits& limits) {
  const std::uint64_t order = psi_class_group_order(psi);
  if (order > limits.max_group_order) {
    throw Error(ErrorKind::order_too_large,
                "psi-class group has " + std::to_string(order) +
                    " elements, more than the limit " +
                    std::to_string(limits.max_group_order));
  }
  // Odometer over one arrangement per block; each block starts sorted.
  std::vector<std::vector<ElementId>> arrangement = psi.blocks();
  std::vector<Permutation> elements;
  elements.reserve(order);
  std::vector<ElementId> images(psi.order());
  while (true) {
    for (std::size_t b = 0; b < arrangement.size(); ++b) {
      const auto& block = psi.block(b);
      for (std::size_t i = 0; i < block.size(); ++i) images[block[i]] = arrangement[b][i];
    }
    elements.emplace_back(images);
    std::size_t b = 0;
    while (b < arrangement.size() &&
           !std::next_permutation(arrangement[b].begin(), arrangement[b].end())) {
      ++b;
    }
    if (b == arrangement.size()) break;
  }
  return PermGroup(psi.order(), std::move(elements));
}

std::optional<ElementId> class_size_violation(const Permutation& tau,
                                              std::span<const std::size_t> class_sizes) {
  if (tau.degree() != class_sizes.size()) {
    throw Error(ErrorKind::degree_mismatch,
                "class sizes do not match the transversal order");
  }
  for (ElementId a = 0; a < tau.degree(); ++a) {
    if (class_sizes[a] != class_sizes[tau(a)]) return a;
  }
  return std::nullopt;
}

PermGroup extendable_automorphisms(const CayleyTable& transversal_table,
                                   std::span<const std::size_t> class_sizes,
                                   const SearchLimits& limits) {
  const PermGroup aut = enumerate_automorphisms(transversal_table, limits);
  std::vector<Permutation> kept;
  for (const auto& tau : aut) {
    if (!class_size_violation(tau, class_sizes)) kept.push_back(tau);
  }
  return PermGroup(transversal_table.order(), std::move(kept));
}

std::vector<std::size_t> ExtensionScheme::class_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(listings.size());
  for (const auto& l : listings) sizes.push_back(l.size());
  return sizes;
}

ExtensionScheme extension_scheme(const Partition& psi, const Transversal& t) {
  if (t.representatives.size() != psi.block_count()) {
    throw Error(ErrorKind::malformed_input,
                "transversal does not match the partition");
  }
  ExtensionScheme scheme;
  scheme.order = psi.order();
  scheme.representatives = t.representatives;
  scheme.class_of.resize(psi.order());
  scheme.position.resize(psi.order());
  for (ElementId k = 0; k < t.representatives.size(); ++k) {
    const ElementId rep = t.representatives[k];
    std::vector<ElementId> listing{rep};
    for (auto x : psi.block(psi.block_of(rep))) {
      if (x != rep) listing.push_back(x);
    }
    for (std::size_t i = 0; i < listing.size(); ++i) {
      scheme.class_of[listing[i]] = k;
      scheme.position[listing[i]] = i;
    }
    scheme.listings.push_back(std::move(listing));
  }
  return scheme;
}

Permutation extend_automorphism(const Permutation& tau, const ExtensionScheme& scheme) {
  const auto sizes = scheme.class_sizes();
  if (auto a = class_size_violation(tau, sizes)) {
    throw Error(ErrorKind::not_extendable,
                "class of " + std::to_string(scheme.representatives[*a]) + " has size " +
                    std::to_string(sizes[*a]) + " but its image class has size " +
                    std::to_string(sizes[tau(*a)]));
  }
  std::vector<ElementId> images(scheme.order);
  for (ElementId x = 0; x < scheme.order; ++x) {
    images[x] = scheme.listings[tau(scheme.class_of[x])][scheme.position[x]];
  }
  return Permutation(std::move(images));
}

PermGroup embed_H(const PermGroup& h, const ExtensionScheme& scheme) {
  std::vector<Permutation> images;
  images.reserve(h.size());
  for (const auto& tau : h) images.push_back(extend_automorphism(tau, scheme));
  return PermGroup(scheme.order, std::move(images));
}

std::optional<Permutation> restrict_to_transversal(const Permutation& phi,
                                                   const ExtensionScheme& scheme) {
  if (phi.degree() != scheme.order) {
    throw Error(ErrorKind::degree_mismatch, "permutation degree does not match S");
  }
  const auto& reps = scheme.representatives;
  std::vector<ElementId> images;
  images.reserve(reps.size());
  for (auto a : reps) {
    auto it = std::lower_bound(reps.begin(), reps.end(), phi(a));
    if (it == reps.end() || *it != phi(a)) return std::nullopt;
    images.push_back(static_cast<ElementId>(it - reps.begin()));
  }
  return Permutation(std::move(images));
}

Decomposition decompose_automorphism(const CayleyTable& table, const Permutation& phi,
                                     const ExtensionScheme& scheme) {
  if (auto w = is_automorphism(table, phi)) {
    throw Error(ErrorKind::not_an_automorphism,
                phi.cycles() + " does not preserve " + std::to_string(w->x) + "*" +
                    std::to_string(w->y));
  }
  std::vector<ElementId> tau_images;
  tau_images.reserve(scheme.representatives.size());
  for (auto a : scheme.representatives) tau_images.push_back(scheme.class_of[phi(a)]);
  Decomposition d;
  d.tau = Permutation(std::move(tau_images));
  d.tau_bar = extend_automorphism(d.tau, scheme);
  d.pi = compose(phi, inverse(d.tau_bar));
  return d;
}

namespace {

class Verifier {
 public:
  Verifier(const CayleyTable& table, TransversalPolicy policy, const SearchLimits& limits)
      : table_(table), policy_(policy), limits_(limits) {}

  TheoremReport run() {
    const std::size_t n = table_.order();
    report_.order = n;
    report_.policy = to_string(policy_);

    const Partition h = compute_h(table_);
    const Partition psi = compute_psi(table_);
    for (const auto& block : psi.blocks()) report_.psi_class_sizes.push_back(block.size());
    std::sort(report_.psi_class_sizes.begin(), report_.psi_class_sizes.end());

    const Transversal t = choose_transversal(psi, policy_);
    report_.transversal_used = t.representatives;
    check_inflation(psi, h, t);

    const PermGroup aut = enumerate_automorphisms(table_, limits_);
    report_.aut_order = aut.size();
    report_.g_order = psi_class_group_order(psi);
    const PermGroup g = psi_class_group(psi, limits_);

    const Subsemigroup sub = restrict_to_subsemigroup(table_, t.representatives);
    const ExtensionScheme scheme = extension_scheme(psi, t);
    const PermGroup hgroup =
        extendable_automorphisms(sub.table, scheme.class_sizes(), limits_);
    report_.h_order = hgroup.size();
    const PermGroup hbar = embed_H(hgroup, scheme);

    report_.identity_holds =
        g.size() == report_.g_order && report_.aut_order == report_.h_order * report_.g_order;
    if (!report_.identity_holds) {
      fail("|Aut S| = " + std::to_string(report_.aut_order) + " but |H|*|G| = " +
           std::to_string(report_.h_order) + "*" + std::to_string(report_.g_order));
    }

    const SubgroupCheck normal = subgroup_checks(g, aut);
    report_.g_is_normal = normal.is_subgroup && normal.is_normal;
    if (!report_.g_is_normal) fail("G in Aut S: " + normal.witness);

    report_.intersection_trivial = true;
    for (const auto& p : hbar) {
      if (!p.is_identity() && g.contains(p)) {
        report_.intersection_trivial = false;
        fail("G and H_bar share " + p.cycles());
        break;
      }
    }

    report_.factorization_unique = check_factorization(aut, g, hgroup, hbar, scheme);
    return std::move(report_);
  }

 private:
  void fail(std::string message) { report_.witnesses.push_back(std::move(message)); }

  void check_inflation(const Partition& psi, const Partition& h, const Transversal& t) {
    bool ok = true;
    if (auto w = is_congruence(psi, table_)) {
      ok = false;
      fail("psi is not a congruence at (" + std::to_string(w->a) + ", " +
           std::to_string(w->b) + ") with " + std::to_string(w->c));
    }
    for (auto x : product_set(table_)) {
      if (!t.contains(x)) {
        ok = false;
        fail("transversal misses product " + std::to_string(x));
        break;
      }
    }
    const RetractionMap r = induced_retraction(psi, t);
    if (auto w = verify_inflation(table_, r)) {
      ok = false;
      fail(std::string("inflation axiom ") + to_string(w->axiom) + " fails at (" +
           std::to_string(w->a) + ", " + std::to_string(w->b) + ")");
    }
    if (auto w = verify_kernel_in_h(r, h)) {
      ok = false;
      fail("ker theta not inside h at (" + std::to_string(w->first) + ", " +
           std::to_string(w->second) + ")");
    }
    report_.inflation_holds = ok;
  }

  bool check_factorization(const PermGroup& aut, const PermGroup& g, const PermGroup& hgroup,
                           const PermGroup& hbar, const ExtensionScheme& scheme) {
    if (hbar.size() != hgroup.size()) {
      fail("extension is not injective on H");
      return false;
    }
    for (const auto& p : hbar) {
      if (!aut.contains(p)) {
        fail("extension " + p.cycles() + " is not an automorphism");
        return false;
      }
    }
    for (const auto& phi : aut) {
      try {
        const Decomposition d = decompose_automorphism(table_, phi, scheme);
        if (!hgroup.contains(d.tau) || !g.contains(d.pi) ||
            compose(d.pi, d.tau_bar) != phi) {
          fail("decomposition of " + phi.cycles() + " fails");
          return false;
        }
      } catch (const Error& e) {
        fail("decomposition of " + phi.cycles() + " fails: " + e.what());
        return false;
      }
    }
    // Every pi * tau_bar must be a distinct automorphism, and they must cover Aut S.
    std::vector<Permutation> products;
    products.reserve(g.size() * hbar.size());
    for (const auto& pi : g) {
      for (const auto& tau_bar : hbar) products.push_back(compose(pi, tau_bar));
    }
    std::sort(products.begin(), products.end());
    if (std::adjacent_find(products.begin(), products.end()) != products.end()) {
      fail("some automorphism has two factorizations");
      return false;
    }
    if (products != aut.elements()) {
      fail("products pi * tau_bar do not reproduce Aut S");
      return false;
    }
    for (const auto& tau_bar : hbar) {
      for (const auto& pi : g) {
        if (!g.contains(conjugate(pi, tau_bar))) {
          fail("conjugate of " + pi.cycles() + " by " + tau_bar.cycles() + " leaves G");
          return false;
        }
      }
    }
    return true;
  }

  const CayleyTable& table_;
  TransversalPolicy policy_;
  const SearchLimits& limits_;
  TheoremReport report_;
};

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  return out.str();
}

}  // namespace

TheoremReport verify_theorem(const CayleyTable& table, TransversalPolicy policy,
                             const SearchLimits& limits) {
  return Verifier(table, policy, limits).run();
}

std::string format_report_text(const TheoremReport& r) {
  std::ostringstream out;
  out << std::boolalpha;
  out << "order: " << r.order << '\n'
      << "psiClassSizes: " << join(r.psi_class_sizes) << '\n'
      << "autOrder: " << r.aut_order << '\n'
      << "hOrder: " << r.h_order << '\n'
      << "gOrder: " << r.g_order << '\n'
      << "identityHolds: " << r.identity_holds << '\n'
      << "gIsNormal: " << r.g_is_normal << '\n'
      << "intersectionTrivial: " << r.intersection_trivial << '\n'
      << "factorizationUnique: " << r.factorization_unique << '\n'
      << "transversalUsed: " << join(r.transversal_used) << '\n'
      << "policy: " << r.policy << '\n'
      << "inflationHolds: " << r.inflation_holds << '\n'
      << "factorization: " << factorization_convention << '\n';
  for (const auto& w : r.witnesses) out << "witness: " << w << '\n';
  return out.str();
}

nlohmann::ordered_json report_to_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["psiClassSizes"] = r.psi_class_sizes;
  j["autOrder"] = r.aut_order;
  j["hOrder"] = r.h_order;
  j["gOrder"] = r.g_order;
  j["identityHolds"] = r.identity_holds;
  j["gIsNormal"] = r.g_is_normal;
  j["intersectionTrivial"] = r.intersection_trivial;
  j["factorizationUnique"] = r.factorization_unique;
  j["transversalUsed"] = r.transversal_used;
  j["policy"] = r.policy;
  j["inflationHolds"] = r.inflation_holds;
  j["factorization"] = factorization_convention;
  j["witnesses"] = r.witnesses;
  return j;
}

std::string format_report_json(const TheoremReport& report) {
  return report_to_json(report).dump();
}

}  // namespace semi
