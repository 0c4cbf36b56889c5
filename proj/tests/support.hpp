#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance suites.
// The oracles deliberately avoid the library's search code: they loop over
// every candidate and test the defining property directly.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "semi/cayley_table.hpp"
#include "semi/permutation.hpp"

namespace semi::testing {

inline CayleyTable constant_rows(const std::vector<ElementId>& row_value) {
  const std::size_t n = row_value.size();
  std::vector<ElementId> entries;
  for (std::size_t x = 0; x < n; ++x) entries.insert(entries.end(), n, row_value[x]);
  return CayleyTable(n, std::move(entries));
}

inline CayleyTable null_semigroup(std::size_t n) {
  return CayleyTable(n, std::vector<ElementId>(n * n, 0));
}

inline CayleyTable n3() { return null_semigroup(3); }
inline CayleyTable n4() { return null_semigroup(4); }
inline CayleyTable l2() { return constant_rows({0, 1}); }
inline CayleyTable s6() { return constant_rows({0, 1, 0, 1, 0, 1}); }
inline CayleyTable il2() { return constant_rows({0, 1, 0, 1}); }

struct NamedTable {
  std::string name;
  CayleyTable table;
};

inline std::vector<NamedTable> fixtures() {
  return {{"N3", n3()}, {"N4", n4()}, {"L2", l2()}, {"S6", s6()}, {"IL2", il2()}};
}

inline bool naive_associative(const CayleyTable& t) {
  const std::size_t n = t.order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
  return true;
}

/// All associative operations on n elements by scanning all n^(n*n) tables,
/// in increasing row-major order.
inline std::vector<CayleyTable> naive_semigroups(std::size_t n) {
  const std::size_t cells = n * n;
  std::vector<ElementId> entries(cells, 0);
  std::vector<CayleyTable> out;
  while (true) {
    CayleyTable t(n, entries);
    if (naive_associative(t)) out.push_back(t);
    std::size_t c = cells;
    while (c > 0) {
      --c;
      if (++entries[c] < n) break;
      entries[c] = 0;
      if (c == 0) return out;
    }
    if (cells == 0) return out;
  }
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<ElementId> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Aut(t) by filtering all n! permutations.
inline std::vector<Permutation> naive_automorphisms(const CayleyTable& t) {
  std::vector<Permutation> out;
  for (const auto& p : all_permutations(t.order())) {
    bool ok = true;
    for (ElementId x = 0; ok && x < t.order(); ++x)
      for (ElementId y = 0; ok && y < t.order(); ++y)
        ok = p(t(x, y)) == t(p(x), p(y));
    if (ok) out.push_back(p);
  }
  return out;
}

inline std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<ElementId> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace semi::testing
