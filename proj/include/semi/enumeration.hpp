#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <tuple>
#include <vector>

#include "semi/automorphisms.hpp"
#include "semi/cayley_table.hpp"
#include "semi/inflation.hpp"

namespace semi {

enum class EnumerationMode { labelled, up_to_iso };

struct EnumerationTask {
  std::size_t order = 1;
  EnumerationMode mode = EnumerationMode::labelled;
  /// Worker threads; 0 means one per hardware thread.
  std::size_t parallelism = 1;
  /// Largest order accepted.
  std::size_t max_order = 4;
};

/// Every associative table of the given order, in increasing row-major
/// encoding order (labelled mode), or the canonical representative of each
/// isomorphism class (up_to_iso mode).
///
/// The search fills cells in `fill_order` (row-major when empty) and prunes as
/// soon as a fully determined associativity triple fails. A non-default fill
/// order changes the emission order but not the set of tables.
std::vector<CayleyTable> enumerate_semigroups(const EnumerationTask& task,
                                              std::span<const std::size_t> fill_order = {});

/// Streaming form: calls `emit` for each table in the same order as above.
void enumerate_semigroups(const EnumerationTask& task,
                          const std::function<void(const CayleyTable&)>& emit,
                          std::span<const std::size_t> fill_order = {});

/// Lexicographically least relabeling of `table` over all n! bijections.
/// Throws Error(order_too_large) for n > 6.
CayleyTable canonicalize(const CayleyTable& table);

struct CorpusSummary {
  std::uint64_t tables_seen = 0;
  std::uint64_t theorem_failures = 0;
  /// (autOrder, hOrder, gOrder) -> number of tables.
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> histogram;
  std::chrono::milliseconds elapsed{0};
};

/// Stable key/value text; the elapsed line is omitted when `with_elapsed` is false.
std::string format_summary(const CorpusSummary& summary, bool with_elapsed = true);

/// Runs verify_theorem on every enumerated table and writes one JSON line per
/// table to `sink` (when non-null) in enumeration order. Throws
/// Error(io_failure) if the sink goes bad.
CorpusSummary corpus_verify(const EnumerationTask& task, std::ostream* sink,
                            TransversalPolicy policy = TransversalPolicy::least(),
                            const SearchLimits& limits = {});

}  // namespace semi
