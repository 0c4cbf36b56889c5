#include "semi/cayley_table.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "semi/error.hpp"

namespace semi {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed_input: return "malformed-input";
    case ErrorKind::not_associative: return "not-associative";
    case ErrorKind::not_closed: return "not-closed";
    case ErrorKind::order_too_large: return "order-too-large";
    case ErrorKind::degree_mismatch: return "degree-mismatch";
    case ErrorKind::not_extendable: return "not-extendable";
    case ErrorKind::not_an_automorphism: return "not-an-automorphism";
    case ErrorKind::io_failure: return "io-failure";
  }
  return "unknown";
}

CayleyTable::CayleyTable(std::size_t order, std::vector<ElementId> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ == 0) {
    throw Error(ErrorKind::malformed_input, "table order must be positive");
  }
  if (entries_.size() != order_ * order_) {
    throw Error(ErrorKind::malformed_input,
                "expected " + std::to_string(order_ * order_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (std::size_t cell = 0; cell < entries_.size(); ++cell) {
    if (entries_[cell] >= order_) {
      throw Error(ErrorKind::malformed_input,
                  "entry " + std::to_string(entries_[cell]) + " at row " +
                      std::to_string(cell / order_) + ", column " +
                      std::to_string(cell % order_) + " is out of range");
    }
  }
}

std::optional<AssociativityWitness> check_associativity(const CayleyTable& t) {
  const auto n = static_cast<ElementId>(t.order());
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = 0; j < n; ++j) {
      const ElementId ij = t(i, j);
      for (ElementId k = 0; k < n; ++k) {
        if (t(ij, k) != t(i, t(j, k))) return AssociativityWitness{i, j, k};
      }
    }
  }
  return std::nullopt;
}

CayleyTable make_semigroup(std::size_t order, std::vector<ElementId> entries) {
  CayleyTable table(order, std::move(entries));
  if (auto w = check_associativity(table)) {
    std::ostringstream msg;
    msg << "operation is not associative: (" << w->i << "*" << w->j << ")*"
        << w->k << " != " << w->i << "*(" << w->j << "*" << w->k << ")";
    throw Error(ErrorKind::not_associative, msg.str());
  }
  return table;
}

namespace detail {

std::optional<std::string> LineReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    return line;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> parse_numbers(std::string_view line,
                                         std::size_t line_number) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    std::uint64_t value = 0;
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || (ptr != last && *ptr != ' ' && *ptr != '\t')) {
      throw Error(ErrorKind::malformed_input,
                  "line " + std::to_string(line_number) +
                      ": expected a decimal number");
    }
    out.push_back(value);
    pos += static_cast<std::size_t>(ptr - first);
  }
  return out;
}

CayleyTable read_table(LineReader& reader) {
  auto header = reader.next();
  if (!header) throw Error(ErrorKind::malformed_input, "missing table order");
  const auto head = parse_numbers(*header, reader.line_number());
  if (head.size() != 1) {
    throw Error(ErrorKind::malformed_input,
                "line " + std::to_string(reader.line_number()) +
                    ": expected the table order alone");
  }
  // Guard against absurd sizes before allocating n*n cells.
  if (head[0] == 0 || head[0] > 4096) {
    throw Error(ErrorKind::malformed_input,
                "table order " + std::to_string(head[0]) + " is out of range");
  }
  const auto n = static_cast<std::size_t>(head[0]);
  std::vector<ElementId> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    auto line = reader.next();
    if (!line) {
      throw Error(ErrorKind::malformed_input,
                  "expected " + std::to_string(n) + " rows, got " +
                      std::to_string(r));
    }
    const auto row = parse_numbers(*line, reader.line_number());
    if (row.size() != n) {
      throw Error(ErrorKind::malformed_input,
                  "line " + std::to_string(reader.line_number()) + ": expected " +
                      std::to_string(n) + " entries, got " +
                      std::to_string(row.size()));
    }
    for (auto v : row) {
      if (v >= n) {
        throw Error(ErrorKind::malformed_input,
                    "line " + std::to_string(reader.line_number()) + ": entry " +
                        std::to_string(v) + " is out of range");
      }
      entries.push_back(static_cast<ElementId>(v));
    }
  }
  return CayleyTable(n, std::move(entries));
}

}  // namespace detail

CayleyTable parse_table(std::istream& in) {
  detail::LineReader reader(in);
  CayleyTable table = detail::read_table(reader);
  while (auto rest = reader.next()) {
    if (rest->find_first_not_of(" \t") != std::string::npos) {
      throw Error(ErrorKind::malformed_input,
                  "line " + std::to_string(reader.line_number()) +
                      ": unexpected content after the table");
    }
  }
  if (auto w = check_associativity(table)) {
    std::ostringstream msg;
    msg << "operation is not associative: witness (" << w->i << ", " << w->j
        << ", " << w->k << ")";
    throw Error(ErrorKind::not_associative, msg.str());
  }
  return table;
}

CayleyTable parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_table(in);
}

std::string format_table(const CayleyTable& table) {
  std::ostringstream out;
  const auto n = static_cast<ElementId>(table.order());
  out << n << '\n';
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << table(x, y);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<ElementId> product_set(const CayleyTable& table) {
  std::vector<bool> seen(table.order(), false);
  for (auto v : table.entries()) seen[v] = true;
  std::vector<ElementId> out;
  for (ElementId x = 0; x < table.order(); ++x) {
    if (seen[x]) out.push_back(x);
  }
  return out;
}

CayleyTable relabel(const CayleyTable& table, std::span<const ElementId> map) {
  const std::size_t n = table.order();
  if (map.size() != n) {
    throw Error(ErrorKind::degree_mismatch, "relabeling has the wrong degree");
  }
  std::vector<ElementId> entries(n * n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      entries[static_cast<std::size_t>(map[x]) * n + map[y]] = map[table(x, y)];
    }
  }
  return CayleyTable(n, std::move(entries));
}

}  // namespace semi
