#include <doctest.h>

#include <random>

#include "semi/enumeration.hpp"
#include "semi/error.hpp"
#include "semi/report_json.hpp"
#include "semi/theorem.hpp"
#include "support.hpp"

using namespace semi;
using namespace semi::testing;

namespace {

struct Pipeline {
  CayleyTable table;
  Partition psi;
  Transversal transversal;
  Subsemigroup sub;
  ExtensionScheme scheme;

  explicit Pipeline(CayleyTable t, TransversalPolicy policy = {})
      : table(std::move(t)),
        psi(compute_psi(table)),
        transversal(choose_transversal(psi, policy)),
        sub(restrict_to_subsemigroup(table, transversal.representatives)),
        scheme(extension_scheme(psi, transversal)) {}

  PermGroup h() const { return extendable_automorphisms(sub.table, scheme.class_sizes()); }
};

/// S6 with the fiber over 3 shrunk to a single point: IL2 inflated by (1,1,2,1).
CayleyTable s6_variant() {
  return build_inflation(FiberSizeSpec{il2(), {1, 1, 2, 1}}).table;
}

std::vector<CayleyTable> corpus_up_to(std::size_t max_n) {
  std::vector<CayleyTable> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& t : enumerate_semigroups(EnumerationTask{n})) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST_CASE("psi_class_group") {
  CHECK(psi_class_group(compute_psi(l2())) == PermGroup::trivial(2));
  CHECK(psi_class_group(compute_psi(n3())) ==
        PermGroup(3, {Permutation::identity(3), Permutation::from_cycles(3, {{1, 2}})}));
  const PermGroup g = psi_class_group(compute_psi(s6()));
  CHECK(g == PermGroup(6, {Permutation::identity(6), Permutation::from_cycles(6, {{2, 4}}),
                           Permutation::from_cycles(6, {{3, 5}}),
                           Permutation::from_cycles(6, {{2, 4}, {3, 5}})}));
  CHECK(psi_class_group_order(compute_psi(s6())) == 4);
  CHECK(psi_class_group_order(compute_psi(null_semigroup(8))) == 5040);

  SearchLimits tight;
  tight.max_group_order = 3;
  CHECK_THROWS_AS(psi_class_group(compute_psi(n4()), tight), Error);
}

TEST_CASE("every element of G is an automorphism") {
  for (const auto& t : corpus_up_to(4)) {
    for (const auto& pi : psi_class_group(compute_psi(t))) CHECK_FALSE(is_automorphism(t, pi));
  }
  for (const auto& [name, t] : fixtures()) {
    CAPTURE(name);
    for (const auto& pi : psi_class_group(compute_psi(t))) CHECK_FALSE(is_automorphism(t, pi));
  }
}

TEST_CASE("extendable_automorphisms") {
  const std::vector<std::size_t> n3_sizes{1, 2};
  CHECK(extendable_automorphisms(null_semigroup(2), n3_sizes) == PermGroup::trivial(2));

  const std::vector<std::size_t> s6_sizes{1, 1, 2, 2};
  CHECK(extendable_automorphisms(il2(), s6_sizes) ==
        PermGroup(4, {Permutation::identity(4), Permutation::from_cycles(4, {{0, 1}, {2, 3}})}));

  const std::vector<std::size_t> lopsided{1, 1, 2, 1};
  CHECK(extendable_automorphisms(il2(), lopsided) == PermGroup::trivial(4));
}

TEST_CASE("extension_scheme") {
  const Pipeline n3p(n3());
  CHECK(n3p.scheme.listings == std::vector<std::vector<ElementId>>{{0}, {1, 2}});

  const Pipeline l2p(l2());
  CHECK(l2p.scheme.listings == std::vector<std::vector<ElementId>>{{0}, {1}});

  const Pipeline s6p(s6());
  CHECK(s6p.scheme.listings == std::vector<std::vector<ElementId>>{{0}, {1}, {2, 4}, {3, 5}});

  const Pipeline s6g(s6(), TransversalPolicy::greatest());
  CHECK(s6g.scheme.listings == std::vector<std::vector<ElementId>>{{0}, {1}, {4, 2}, {5, 3}});
  CHECK(s6g.scheme.class_of == std::vector<ElementId>{0, 1, 2, 3, 2, 3});
}

TEST_CASE("extend_automorphism") {
  const Pipeline s6p(s6());
  CHECK(extend_automorphism(Permutation::identity(4), s6p.scheme).is_identity());
  const Permutation tau_bar =
      extend_automorphism(Permutation::from_cycles(4, {{0, 1}, {2, 3}}), s6p.scheme);
  CHECK(tau_bar == Permutation::from_cycles(6, {{0, 1}, {2, 3}, {4, 5}}));
  CHECK_FALSE(is_automorphism(s6(), tau_bar));

  const Pipeline variant(s6_variant());
  CHECK(variant.scheme.class_sizes() == std::vector<std::size_t>{1, 1, 2, 1});
  try {
    extend_automorphism(Permutation::from_cycles(4, {{0, 1}, {2, 3}}), variant.scheme);
    FAIL("expected not-extendable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_extendable);
    CHECK(std::string(e.what()).starts_with("class of 2 "));
  }
  CHECK(class_size_violation(Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                             variant.scheme.class_sizes()) == ElementId{2});
}

TEST_CASE("embed_H") {
  const Pipeline n3p(n3());
  CHECK(embed_H(n3p.h(), n3p.scheme) == PermGroup::trivial(3));

  const Pipeline s6p(s6());
  const PermGroup hbar = embed_H(s6p.h(), s6p.scheme);
  CHECK(hbar == PermGroup(6, {Permutation::identity(6),
                              Permutation::from_cycles(6, {{0, 1}, {2, 3}, {4, 5}})}));

  for (const auto& [name, t] : fixtures()) {
    CAPTURE(name);
    const Pipeline p(t);
    CHECK(embed_H(p.h(), p.scheme).size() == p.h().size());
  }
}

TEST_CASE("extension is an injective homomorphism H -> Aut S") {
  std::vector<CayleyTable> tables = corpus_up_to(3);
  for (const auto& [name, t] : fixtures()) tables.push_back(t);
  tables.push_back(s6_variant());
  for (const auto& t : tables) {
    const Pipeline p(t);
    const PermGroup h = p.h();
    const PermGroup hbar = embed_H(h, p.scheme);
    CHECK(hbar.size() == h.size());
    for (const auto& a : h) {
      const Permutation a_bar = extend_automorphism(a, p.scheme);
      CHECK(restrict_to_transversal(a_bar, p.scheme) == a);
      for (const auto& b : h) {
        CHECK(extend_automorphism(compose(a, b), p.scheme) ==
              compose(a_bar, extend_automorphism(b, p.scheme)));
      }
    }
  }
}

TEST_CASE("decompose_automorphism") {
  const Pipeline s6p(s6());
  const Decomposition id = decompose_automorphism(s6(), Permutation::identity(6), s6p.scheme);
  CHECK(id.tau.is_identity());
  CHECK(id.pi.is_identity());

  const Decomposition swap =
      decompose_automorphism(s6(), Permutation::from_cycles(6, {{2, 4}}), s6p.scheme);
  CHECK(swap.tau.is_identity());
  CHECK(swap.pi == Permutation::from_cycles(6, {{2, 4}}));

  const PermGroup aut = enumerate_automorphisms(s6());
  const PermGroup g = psi_class_group(s6p.psi);
  const PermGroup hbar = embed_H(s6p.h(), s6p.scheme);
  REQUIRE(aut.size() == 8);
  for (const auto& phi : aut) {
    const Decomposition d = decompose_automorphism(s6(), phi, s6p.scheme);
    CHECK(compose(d.pi, d.tau_bar) == phi);
    CHECK(g.contains(d.pi));
    CHECK(hbar.contains(d.tau_bar));
    int factorizations = 0;
    for (const auto& pi : g)
      for (const auto& tb : hbar) factorizations += compose(pi, tb) == phi;
    CHECK(factorizations == 1);
  }

  try {
    decompose_automorphism(n3(), Permutation::from_cycles(3, {{0, 1}}), Pipeline(n3()).scheme);
    FAIL("expected not-an-automorphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_an_automorphism);
  }
}

TEST_CASE("verify_theorem on fixtures") {
  const TheoremReport n3r = verify_theorem(n3());
  CHECK(n3r.aut_order == 2);
  CHECK(n3r.h_order == 1);
  CHECK(n3r.g_order == 2);
  CHECK(n3r.all_hold());

  const TheoremReport n4r = verify_theorem(n4());
  CHECK(n4r.aut_order == 6);
  CHECK(n4r.h_order == 1);
  CHECK(n4r.g_order == 6);
  CHECK(n4r.psi_class_sizes == std::vector<std::size_t>{1, 3});
  CHECK(n4r.all_hold());

  const TheoremReport s6r = verify_theorem(s6());
  CHECK(s6r.aut_order == 8);
  CHECK(s6r.h_order == 2);
  CHECK(s6r.g_order == 4);
  CHECK(s6r.transversal_used == std::vector<ElementId>{0, 1, 2, 3});
  CHECK(s6r.all_hold());
  CHECK(s6r.witnesses.empty());

  const TheoremReport l2r = verify_theorem(l2());
  CHECK(l2r.aut_order == 2);
  CHECK(l2r.h_order == 2);
  CHECK(l2r.g_order == 1);
  CHECK(l2r.all_hold());

  const TheoremReport variant = verify_theorem(s6_variant());
  CHECK(variant.h_order == 1);
  CHECK(variant.all_hold());
}

TEST_CASE("verify_theorem respects limits") {
  SearchLimits limits;
  limits.max_order = 5;
  CHECK_THROWS_AS(verify_theorem(s6(), {}, limits), Error);
  CHECK_THROWS_AS(verify_theorem(null_semigroup(9)), Error);
}

TEST_CASE("G is normal and H_bar acts on it by conjugation") {
  std::vector<CayleyTable> tables = corpus_up_to(3);
  for (const auto& [name, t] : fixtures()) tables.push_back(t);
  for (const auto& t : tables) {
    const Pipeline p(t);
    const PermGroup aut = enumerate_automorphisms(t);
    const PermGroup g = psi_class_group(p.psi);
    const PermGroup hbar = embed_H(p.h(), p.scheme);
    const SubgroupCheck sc = subgroup_checks(g, aut);
    CHECK(sc.is_subgroup);
    CHECK(sc.is_normal);
    for (const auto& tb : hbar) {
      for (const auto& pi : g) CHECK(g.contains(conjugate(pi, tb)));
      if (!tb.is_identity()) CHECK_FALSE(g.contains(tb));
    }
  }
}

TEST_CASE("report is invariant under the transversal policy") {
  std::vector<CayleyTable> tables;
  for (const auto& [name, t] : fixtures()) tables.push_back(t);
  std::mt19937_64 rng(2024);
  const auto four = enumerate_semigroups(EnumerationTask{4});
  for (int i = 0; i < 50; ++i) tables.push_back(four[rng() % four.size()]);
  for (const auto& t : tables) {
    const TheoremReport base = verify_theorem(t);
    for (const auto& policy : {TransversalPolicy::greatest(), TransversalPolicy::seeded(5)}) {
      const TheoremReport other = verify_theorem(t, policy);
      CHECK(other.aut_order == base.aut_order);
      CHECK(other.h_order == base.h_order);
      CHECK(other.g_order == base.g_order);
      CHECK(other.psi_class_sizes == base.psi_class_sizes);
      CHECK(other.all_hold());
    }
  }
}

TEST_CASE("report serialization") {
  const TheoremReport r = verify_theorem(s6());
  CHECK(format_report_text(r) ==
        "order: 6\n"
        "psiClassSizes: 1 1 2 2\n"
        "autOrder: 8\n"
        "hOrder: 2\n"
        "gOrder: 4\n"
        "identityHolds: true\n"
        "gIsNormal: true\n"
        "intersectionTrivial: true\n"
        "factorizationUnique: true\n"
        "transversalUsed: 0 1 2 3\n"
        "policy: least\n"
        "inflationHolds: true\n"
        "factorization: phi = pi * tau_bar\n");
  const auto j = nlohmann::json::parse(format_report_json(r));
  CHECK(j["autOrder"] == 8);
  CHECK(j["psiClassSizes"] == nlohmann::json::array({1, 1, 2, 2}));
  CHECK(j["factorizationUnique"] == true);
  CHECK(format_report_json(r).starts_with("{\"order\":6,\"psiClassSizes\""));
}
