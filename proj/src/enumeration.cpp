#include "semi/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "semi/error.hpp"
#include "semi/report_json.hpp"
#include "semi/theorem.hpp"

namespace semi {

namespace {

constexpr ElementId unset = static_cast<ElementId>(-1);

/// Depth-first table filler. Cells are assigned in `fill_order`; after each
/// assignment only the associativity triples that read the new cell are
/// checked, which covers every triple exactly when its last cell is set.
class SemigroupSearch {
 public:
  SemigroupSearch(std::size_t n, std::vector<std::size_t> fill_order)
      : n_(static_cast<ElementId>(n)), order_(std::move(fill_order)), cells_(n * n, unset) {}

  /// Assigns the first `depth` cells from `prefix`; false if that violates
  /// associativity already.
  bool seed(std::span<const ElementId> prefix) {
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      cells_[order_[d]] = prefix[d];
      if (!consistent(order_[d])) return false;
    }
    start_ = prefix.size();
    return true;
  }

  void run(const std::function<void(const CayleyTable&)>& emit) { extend(start_, emit); }

 private:
  ElementId at(ElementId x, ElementId y) const {
    return cells_[static_cast<std::size_t>(x) * n_ + y];
  }

  // Triple (a, b, c) reads cells (a,b), (ab,c), (b,c), (a,bc).
  bool triple_ok(ElementId a, ElementId b, ElementId c) const {
    const ElementId ab = at(a, b);
    const ElementId bc = at(b, c);
    if (ab == unset || bc == unset) return true;
    const ElementId left = at(ab, c);
    const ElementId right = at(a, bc);
    return left == unset || right == unset || left == right;
  }

  bool consistent(std::size_t cell) const {
    const auto i = static_cast<ElementId>(cell / n_);
    const auto j = static_cast<ElementId>(cell % n_);
    for (ElementId k = 0; k < n_; ++k) {
      if (!triple_ok(i, j, k) || !triple_ok(k, i, j)) return false;
    }
    for (ElementId a = 0; a < n_; ++a) {
      for (ElementId b = 0; b < n_; ++b) {
        if (at(a, b) == i && !triple_ok(a, b, j)) return false;
        if (at(a, b) == j && !triple_ok(i, a, b)) return false;
      }
    }
    return true;
  }

  void extend(std::size_t depth, const std::function<void(const CayleyTable&)>& emit) {
    if (depth == order_.size()) {
      emit(CayleyTable(n_, cells_));
      return;
    }
    const std::size_t cell = order_[depth];
    for (ElementId v = 0; v < n_; ++v) {
      cells_[cell] = v;
      if (consistent(cell)) extend(depth + 1, emit);
    }
    cells_[cell] = unset;
  }

  ElementId n_;
  std::vector<std::size_t> order_;
  std::vector<ElementId> cells_;
  std::size_t start_ = 0;
};

std::vector<std::size_t> resolve_fill_order(std::size_t n, std::span<const std::size_t> given) {
  std::vector<std::size_t> order(given.begin(), given.end());
  if (order.empty()) {
    order.resize(n * n);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t c = 0; c < sorted.size(); ++c) {
    if (sorted.size() != n * n || sorted[c] != c) {
      throw Error(ErrorKind::malformed_input, "fill order must list every cell once");
    }
  }
  return order;
}

std::size_t worker_count(std::size_t hint) {
  if (hint == 0) hint = std::max(1u, std::thread::hardware_concurrency());
  return hint;
}

/// Runs `job(i)` for i in [0, count) on `workers` threads.
template <typename Job>
void parallel_for(std::size_t count, std::size_t workers, Job job) {
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

void check_task(const EnumerationTask& task) {
  if (task.order == 0) throw Error(ErrorKind::malformed_input, "order must be at least 1");
  if (task.order > task.max_order) {
    throw Error(ErrorKind::order_too_large,
                "enumeration order " + std::to_string(task.order) + " exceeds the cap " +
                    std::to_string(task.max_order));
  }
}

}  // namespace

void enumerate_semigroups(const EnumerationTask& task,
                          const std::function<void(const CayleyTable&)>& emit,
                          std::span<const std::size_t> fill_order) {
  check_task(task);
  const std::size_t n = task.order;
  const auto order = resolve_fill_order(n, fill_order);
  const bool up_to_iso = task.mode == EnumerationMode::up_to_iso;
  if (up_to_iso && n > 6) {
    throw Error(ErrorKind::order_too_large, "canonical forms are limited to order 6");
  }
  auto accept = [&](const CayleyTable& t) { return !up_to_iso || canonicalize(t) == t; };

  const std::size_t workers = worker_count(task.parallelism);
  if (workers <= 1) {
    SemigroupSearch search(n, order);
    search.run([&](const CayleyTable& t) {
      if (accept(t)) emit(t);
    });
    return;
  }

  // Split on every assignment of the first n cells, i.e. the first row in
  // the default order; subtrees are independent and merged in prefix order.
  const std::size_t split = std::min(n, order.size());
  std::size_t prefixes = 1;
  for (std::size_t d = 0; d < split; ++d) prefixes *= n;
  std::vector<std::vector<CayleyTable>> found(prefixes);
  parallel_for(prefixes, workers, [&](std::size_t index) {
    const std::size_t slot = index;
    std::vector<ElementId> prefix(split);
    for (std::size_t d = split; d-- > 0;) {
      prefix[d] = static_cast<ElementId>(index % n);
      index /= n;
    }
    SemigroupSearch search(n, order);
    if (!search.seed(prefix)) return;
    search.run([&](const CayleyTable& t) {
      if (accept(t)) found[slot].push_back(t);
    });
  });
  for (const auto& bucket : found) {
    for (const auto& t : bucket) emit(t);
  }
}

std::vector<CayleyTable> enumerate_semigroups(const EnumerationTask& task,
                                              std::span<const std::size_t> fill_order) {
  std::vector<CayleyTable> out;
  enumerate_semigroups(task, [&](const CayleyTable& t) { out.push_back(t); }, fill_order);
  return out;
}

CayleyTable canonicalize(const CayleyTable& table) {
  const std::size_t n = table.order();
  if (n > 6) throw Error(ErrorKind::order_too_large, "canonicalize supports order <= 6");
  std::vector<ElementId> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  CayleyTable best = table;
  do {
    CayleyTable candidate = relabel(table, sigma);
    if (candidate < best) best = std::move(candidate);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

std::string format_summary(const CorpusSummary& s, bool with_elapsed) {
  std::ostringstream out;
  out << "tablesSeen: " << s.tables_seen << '\n'
      << "theoremFailures: " << s.theorem_failures << '\n';
  for (const auto& [key, count] : s.histogram) {
    const auto& [aut, h, g] = key;
    out << "histogram: autOrder=" << aut << " hOrder=" << h << " gOrder=" << g
        << " count=" << count << '\n';
  }
  if (with_elapsed) out << "elapsedMs: " << s.elapsed.count() << '\n';
  return out.str();
}

CorpusSummary corpus_verify(const EnumerationTask& task, std::ostream* sink,
                            TransversalPolicy policy, const SearchLimits& limits) {
  const auto started = std::chrono::steady_clock::now();
  const std::vector<CayleyTable> tables = enumerate_semigroups(task);

  std::vector<TheoremReport> reports(tables.size());
  parallel_for(tables.size(), worker_count(task.parallelism), [&](std::size_t i) {
    reports[i] = verify_theorem(tables[i], policy, limits);
  });

  CorpusSummary summary;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const TheoremReport& r = reports[i];
    ++summary.tables_seen;
    if (!r.all_hold()) ++summary.theorem_failures;
    ++summary.histogram[{r.aut_order, r.h_order, r.g_order}];
    if (sink) {
      auto record = report_to_json(r);
      record["table"] = format_table(tables[i]);
      *sink << record.dump() << '\n';
      if (!*sink) throw Error(ErrorKind::io_failure, "failed writing the report sink");
    }
  }
  summary.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return summary;
}

}  // namespace semi
