#include <doctest.h>

#include <random>

#include "semi/error.hpp"
#include "semi/permutation.hpp"
#include "support.hpp"

using namespace semi;
using namespace semi::testing;

TEST_CASE("Permutation rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0}), Error);
  CHECK_THROWS_AS(Permutation({0, 2}), Error);
  CHECK_NOTHROW(Permutation({1, 0}));
}

TEST_CASE("compose applies the left argument first") {
  const auto p = Permutation::from_cycles(3, {{0, 1}});
  const auto q = Permutation::from_cycles(3, {{1, 2}});
  // 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1.
  CHECK(compose(p, q) == Permutation({2, 0, 1}));
  CHECK(compose(p, q).cycles() == "(0 2 1)");
  CHECK(compose(Permutation::identity(3), p) == p);
  CHECK(compose(p, inverse(p)).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation::identity(2)), Error);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(4)).is_identity());
  const auto t = Permutation::from_cycles(4, {{1, 3}});
  CHECK(inverse(t) == t);
  CHECK(inverse(Permutation::from_cycles(3, {{0, 1, 2}})) ==
        Permutation::from_cycles(3, {{0, 2, 1}}));
}

TEST_CASE("composition laws on random permutations") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto a = random_permutation(n, rng);
    const auto b = random_permutation(n, rng);
    const auto c = random_permutation(n, rng);
    const auto id = Permutation::identity(n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(id, a) == a);
    CHECK(compose(a, id) == a);
    CHECK(compose(a, inverse(a)) == id);
    CHECK(compose(inverse(a), a) == id);
    for (ElementId x = 0; x < n; ++x) CHECK(compose(a, b)(x) == b(a(x)));
  }
}

TEST_CASE("formatting") {
  const auto p = Permutation::from_cycles(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(format_permutation(p) == "p: 1 0 3 2 5 4");
  CHECK(p.cycles() == "(0 1)(2 3)(4 5)");
  CHECK(Permutation::identity(3).cycles() == "()");
  const PermGroup g(2, {Permutation({1, 0}), Permutation::identity(2)});
  CHECK(format_group(g) == "2\np: 0 1\np: 1 0\n");
}

TEST_CASE("subgroup_checks") {
  std::vector<Permutation> all = all_permutations(3);
  const PermGroup s3(3, all);
  const PermGroup trivial = PermGroup::trivial(3);
  const PermGroup a3(3, {Permutation::identity(3), Permutation::from_cycles(3, {{0, 1, 2}}),
                         Permutation::from_cycles(3, {{0, 2, 1}})});
  const PermGroup swap(3, {Permutation::identity(3), Permutation::from_cycles(3, {{0, 1}})});
  const PermGroup not_closed(3, {Permutation::identity(3), Permutation::from_cycles(3, {{0, 1}}),
                                 Permutation::from_cycles(3, {{1, 2}})});

  CHECK(check_group_axioms(s3) == std::nullopt);

  auto r = subgroup_checks(trivial, s3);
  CHECK(r.is_subgroup);
  CHECK(r.is_normal);
  r = subgroup_checks(s3, s3);
  CHECK(r.is_subgroup);
  CHECK(r.is_normal);
  r = subgroup_checks(a3, s3);
  CHECK(r.is_subgroup);
  CHECK(r.is_normal);
  r = subgroup_checks(swap, s3);
  CHECK(r.is_subgroup);
  CHECK_FALSE(r.is_normal);
  CHECK_FALSE(r.witness.empty());
  r = subgroup_checks(not_closed, s3);
  CHECK_FALSE(r.is_subgroup);
  r = subgroup_checks(s3, a3);
  CHECK_FALSE(r.is_subgroup);
}
