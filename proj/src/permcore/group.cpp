#include "drg/permcore.hpp"

namespace drg {

PermGroup PermGroup::close(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw Error(ErrorKind::InvalidGenerator, "generator list is empty");
  const std::size_t degree = generators.front().degree();
  if (degree < 1) throw Error(ErrorKind::InvalidGenerator, "degree must be positive");
  std::vector<std::vector<Point>> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorKind::InvalidGenerator, "generators have different degrees");
    gens.emplace_back(g.images().begin(), g.images().end());
  }
  detail::PermOps ops{degree};
  auto table = detail::close(ops, gens, cap);
  return PermGroup(std::make_shared<const Data>(Data{ops, generators, std::move(table)}));
}

PermGroup close_group(const std::vector<Permutation>& generators, std::size_t cap) {
  return PermGroup::close(generators, cap);
}

std::optional<std::uint32_t> PermGroup::index_of(std::span<const Point> images) const {
  if (images.size() != degree()) return std::nullopt;
  return data_->table.find(images);
}

bool PermGroup::has_subgroup(const PermGroup& sub) const {
  if (sub.degree() != degree()) return false;
  for (const auto& g : sub.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool PermGroup::normalizes(const PermGroup& sub) const {
  for (const auto& a : generators()) {
    for (const auto& g : sub.generators()) {
      if (!sub.contains(a.conjugate(g))) return false;
    }
  }
  return true;
}

std::vector<std::vector<Point>> PermGroup::generator_images() const {
  std::vector<std::vector<Point>> out;
  for (const auto& g : generators()) out.emplace_back(g.images().begin(), g.images().end());
  return out;
}

PermGroup subgroup(const PermGroup& group, const std::vector<Permutation>& generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != group.degree()) throw Error(ErrorKind::DegreeMismatch, "subgroup generator degree");
    if (!group.contains(g)) {
      throw Error(ErrorKind::NotSubgroup, "generator " + g.to_cycles() + " lies outside the group");
    }
  }
  if (generators.empty()) return PermGroup::close({Permutation::identity(group.degree())}, cap);
  return PermGroup::close(generators, cap);
}

ClassTable conjugacy_classes(const PermGroup& group) {
  auto part = detail::conjugacy_partition(group.ops(), group.table(), group.generator_images());
  ClassTable out;
  out.class_of = std::move(part.class_of);
  out.representative_index = part.representative;
  for (std::size_t c = 0; c < part.representative.size(); ++c) {
    out.classes.push_back({group.element(part.representative[c]), part.size[c]});
  }
  return out;
}

PermGroup subgroup_from_elements(const PermGroup& group, const std::vector<std::uint32_t>& indices) {
  std::vector<Permutation> gens;
  std::optional<PermGroup> current;
  for (std::uint32_t i : indices) {
    auto e = group.element_images(i);
    if (current && current->index_of(e)) continue;
    Permutation p = group.element(i);
    if (p.is_identity()) continue;
    gens.push_back(std::move(p));
    current = PermGroup::close(gens, group.order());
  }
  if (!current) return PermGroup::close({Permutation::identity(group.degree())});
  return *current;
}

} // namespace drg
