#include "semi/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "semi/error.hpp"

namespace semi {

Permutation::Permutation(std::vector<ElementId> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || hit[v]) {
      throw Error(ErrorKind::malformed_input, "image array is not a bijection");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<ElementId>(i);
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree,
    std::initializer_list<std::initializer_list<ElementId>> cycles) {
  std::vector<ElementId> images = identity(degree).images_;
  for (const auto& cycle : cycles) {
    std::vector<ElementId> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) {
        throw Error(ErrorKind::malformed_input, "cycle entry out of range");
      }
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (ElementId start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out << '(';
    ElementId x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << x;
      seen[x] = true;
      x = images_[x];
    } while (x != start);
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorKind::degree_mismatch,
                "cannot compose permutations of degree " +
                    std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  }
  std::vector<ElementId> images(p.degree());
  for (ElementId i = 0; i < p.degree(); ++i) images[i] = q(p(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<ElementId> images(p.degree());
  for (ElementId i = 0; i < p.degree(); ++i) images[p(i)] = i;
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& by) {
  return compose(inverse(by), compose(p, by));
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream out;
  out << "p:";
  for (auto v : p.images()) out << ' ' << v;
  return out.str();
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
  for (const auto& p : elements_) {
    if (p.degree() != degree_) {
      throw Error(ErrorKind::degree_mismatch, "group element has the wrong degree");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup(degree, {Permutation::identity(degree)});
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::string format_group(const PermGroup& g) {
  std::string out = std::to_string(g.size()) + "\n";
  for (const auto& p : g) out += format_permutation(p) + "\n";
  return out;
}

std::optional<std::string> check_group_axioms(const PermGroup& g) {
  if (!g.contains(Permutation::identity(g.degree()))) {
    return "identity is missing";
  }
  for (const auto& p : g) {
    if (!g.contains(inverse(p))) return "not closed under inverse at " + p.cycles();
    for (const auto& q : g) {
      if (!g.contains(compose(p, q))) {
        return "not closed under composition: " + p.cycles() + " then " + q.cycles();
      }
    }
  }
  return std::nullopt;
}

SubgroupCheck subgroup_checks(const PermGroup& g, const PermGroup& parent) {
  if (g.degree() != parent.degree()) {
    throw Error(ErrorKind::degree_mismatch, "groups have different degrees");
  }
  SubgroupCheck result;
  for (const auto& p : g) {
    if (!parent.contains(p)) {
      result.witness = p.cycles() + " is not in the parent group";
      return result;
    }
  }
  if (auto broken = check_group_axioms(g)) {
    result.witness = *broken;
    return result;
  }
  result.is_subgroup = true;
  for (const auto& by : parent) {
    for (const auto& p : g) {
      if (!g.contains(conjugate(p, by))) {
        result.witness = "conjugate of " + p.cycles() + " by " + by.cycles() +
                         " leaves the subgroup";
        return result;
      }
    }
  }
  result.is_normal = true;
  return result;
}

}  // namespace semi
