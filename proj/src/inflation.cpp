#include "semi/inflation.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "semi/error.hpp"

namespace semi {

bool Transversal::contains(ElementId x) const {
  return std::binary_search(representatives.begin(), representatives.end(), x);
}

std::string to_string(const TransversalPolicy& policy) {
  switch (policy.kind) {
    case TransversalPolicy::Kind::least: return "least";
    case TransversalPolicy::Kind::greatest: return "greatest";
    case TransversalPolicy::Kind::seeded:
      return "seeded(" + std::to_string(policy.seed) + ")";
  }
  return "unknown";
}

Transversal choose_transversal(const Partition& psi, TransversalPolicy policy) {
  Transversal t;
  std::mt19937_64 rng(policy.seed);
  for (const auto& block : psi.blocks()) {
    ElementId rep = block.front();
    switch (policy.kind) {
      case TransversalPolicy::Kind::least: break;
      case TransversalPolicy::Kind::greatest: rep = block.back(); break;
      case TransversalPolicy::Kind::seeded:
        // Raw engine output keeps the choice identical across standard libraries.
        rep = block[rng() % block.size()];
        break;
    }
    t.block_rep.push_back(rep);
  }
  t.representatives = t.block_rep;
  std::sort(t.representatives.begin(), t.representatives.end());
  return t;
}

RetractionMap induced_retraction(const Partition& psi, const Transversal& t) {
  if (t.block_rep.size() != psi.block_count()) {
    throw Error(ErrorKind::malformed_input,
                "transversal does not match the partition");
  }
  RetractionMap r;
  r.transversal = t;
  r.theta.resize(psi.order());
  for (ElementId x = 0; x < psi.order(); ++x) {
    r.theta[x] = t.block_rep[psi.block_of(x)];
  }
  return r;
}

const char* to_string(InflationWitness::Axiom axiom) noexcept {
  switch (axiom) {
    case InflationWitness::Axiom::idempotent: return "idempotent";
    case InflationWitness::Axiom::image_closed: return "image-closed";
    case InflationWitness::Axiom::product: return "product";
  }
  return "unknown";
}

std::optional<InflationWitness> verify_inflation(const CayleyTable& table,
                                                 const RetractionMap& r) {
  const auto n = static_cast<ElementId>(table.order());
  if (r.theta.size() != n) {
    throw Error(ErrorKind::degree_mismatch, "retraction has the wrong degree");
  }
  std::vector<bool> in_image(n, false);
  for (ElementId a = 0; a < n; ++a) {
    if (r.theta[a] >= n) {
      throw Error(ErrorKind::malformed_input, "retraction value out of range");
    }
    in_image[r.theta[a]] = true;
  }
  for (ElementId a = 0; a < n; ++a) {
    if (r.theta[r.theta[a]] != r.theta[a]) {
      return InflationWitness{InflationWitness::Axiom::idempotent, a, a};
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (!in_image[table(r.theta[a], r.theta[b])]) {
        return InflationWitness{InflationWitness::Axiom::image_closed, a, b};
      }
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (table(r.theta[a], r.theta[b]) != table(a, b)) {
        return InflationWitness{InflationWitness::Axiom::product, a, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<ElementId, ElementId>> verify_kernel_in_h(
    const RetractionMap& r, const Partition& h) {
  if (r.theta.size() != h.order()) {
    throw Error(ErrorKind::degree_mismatch, "retraction and partition differ in order");
  }
  const auto n = static_cast<ElementId>(h.order());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (r.theta[a] == r.theta[b] && !h.related(a, b)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

Subsemigroup restrict_to_subsemigroup(const CayleyTable& table,
                                      std::span<const ElementId> subset) {
  std::vector<ElementId> ids(subset.begin(), subset.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw Error(ErrorKind::malformed_input, "subset is empty");
  if (ids.back() >= table.order()) {
    throw Error(ErrorKind::malformed_input, "subset element out of range");
  }
  constexpr auto absent = static_cast<ElementId>(-1);
  std::vector<ElementId> new_id(table.order(), absent);
  for (ElementId i = 0; i < ids.size(); ++i) new_id[ids[i]] = i;

  const std::size_t m = ids.size();
  std::vector<ElementId> entries;
  entries.reserve(m * m);
  for (auto x : ids) {
    for (auto y : ids) {
      const ElementId xy = table(x, y);
      if (new_id[xy] == absent) {
        throw Error(ErrorKind::not_closed,
                    "subset is not closed: " + std::to_string(x) + "*" +
                        std::to_string(y) + " = " + std::to_string(xy));
      }
      entries.push_back(new_id[xy]);
    }
  }
  return Subsemigroup{CayleyTable(m, std::move(entries)), std::move(ids)};
}

FiberSizeSpec parse_fiber_spec(std::istream& in) {
  detail::LineReader reader(in);
  FiberSizeSpec spec{detail::read_table(reader), {}};
  if (auto w = check_associativity(spec.base)) {
    throw Error(ErrorKind::not_associative, "base operation is not associative");
  }
  std::optional<std::string> line;
  while ((line = reader.next()) && line->find_first_not_of(" \t") == std::string::npos) {
  }
  constexpr std::string_view prefix = "sizes:";
  if (!line || !line->starts_with(prefix)) {
    throw Error(ErrorKind::malformed_input, "expected a `sizes:` line after the table");
  }
  const auto sizes = detail::parse_numbers(
      std::string_view(*line).substr(prefix.size()), reader.line_number());
  if (sizes.size() != spec.base.order()) {
    throw Error(ErrorKind::malformed_input,
                "expected " + std::to_string(spec.base.order()) + " fiber sizes");
  }
  for (auto s : sizes) {
    if (s == 0) throw Error(ErrorKind::malformed_input, "fiber sizes must be positive");
    spec.sizes.push_back(static_cast<std::size_t>(s));
  }
  while (auto rest = reader.next()) {
    if (rest->find_first_not_of(" \t") != std::string::npos) {
      throw Error(ErrorKind::malformed_input, "unexpected content after `sizes:`");
    }
  }
  return spec;
}

FiberSizeSpec parse_fiber_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fiber_spec(in);
}

Inflation build_inflation(const FiberSizeSpec& spec, std::size_t max_order) {
  const std::size_t m = spec.base.order();
  if (spec.sizes.size() != m) {
    throw Error(ErrorKind::malformed_input, "one fiber size per base element is required");
  }
  std::size_t total = 0;
  for (auto s : spec.sizes) {
    if (s == 0) throw Error(ErrorKind::malformed_input, "fiber sizes must be positive");
    total += s;
    if (total > max_order) {
      throw Error(ErrorKind::order_too_large,
                  "inflation order exceeds the maximum " + std::to_string(max_order));
    }
  }

  std::vector<ElementId> theta(total);
  for (ElementId a = 0; a < m; ++a) theta[a] = a;
  std::size_t next = m;
  for (ElementId a = 0; a < m; ++a) {
    for (std::size_t k = 1; k < spec.sizes[a]; ++k) theta[next++] = a;
  }

  std::vector<ElementId> entries;
  entries.reserve(total * total);
  for (std::size_t x = 0; x < total; ++x) {
    for (std::size_t y = 0; y < total; ++y) {
      entries.push_back(spec.base(theta[x], theta[y]));
    }
  }

  Transversal t;
  t.representatives.resize(m);
  for (ElementId a = 0; a < m; ++a) t.representatives[a] = a;
  t.block_rep = t.representatives;
  return Inflation{CayleyTable(total, std::move(entries)),
                   RetractionMap{std::move(theta), std::move(t)}};
}

}  // namespace semi
