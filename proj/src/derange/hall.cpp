#include <algorithm>
#include <numeric>
#include <set>

#include "drg/derange.hpp"

namespace drg {

namespace {

constexpr std::size_t kSubgroupSearchCap = 20'000;

// Subgroups larger than `limit` cannot be complements; give up on them early.
std::optional<PermGroup> close_within(const std::vector<Permutation>& gens, std::uint64_t limit) {
  try {
    return PermGroup::close(gens, limit);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    return std::nullopt;
  }
}

std::vector<std::uint32_t> member_indices(const PermGroup& ambient, const PermGroup& sub) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < sub.order(); ++i) out.push_back(*ambient.index_of(sub.element_images(i)));
  std::sort(out.begin(), out.end());
  return out;
}

// Complement search: cyclic subgroups first, then two-generator subgroups,
// then breadth-first extension of proper candidates one element at a time.
std::optional<PermGroup> find_complement(const PermGroup& a, std::uint64_t m) {
  std::vector<std::uint32_t> candidates;
  for (std::size_t i = 1; i < a.order(); ++i) {
    if (m % a.element(i).order() == 0) candidates.push_back(static_cast<std::uint32_t>(i));
  }

  std::set<std::vector<std::uint32_t>> seen;
  std::vector<PermGroup> cyclic;
  for (std::uint32_t x : candidates) {
    PermGroup c = PermGroup::close({a.element(x)});
    if (c.order() == m) return c;
    if (seen.insert(member_indices(a, c)).second) cyclic.push_back(c);
  }

  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
      auto gens = cyclic[i].generators();
      gens.push_back(cyclic[j].generators().front());
      auto d = close_within(gens, m);
      if (d && d->order() == m) return d;
    }
  }

  std::vector<PermGroup> frontier = cyclic;
  std::size_t explored = 0;
  while (!frontier.empty() && explored < kSubgroupSearchCap) {
    std::vector<PermGroup> next;
    for (const auto& s : frontier) {
      for (std::uint32_t x : candidates) {
        if (s.index_of(a.element_images(x))) continue;
        if (++explored > kSubgroupSearchCap) break;
        auto gens = s.generators();
        gens.push_back(a.element(x));
        auto d = close_within(gens, m);
        if (!d) continue;
        if (d->order() == m) return d;
        if (m % d->order() == 0 && seen.insert(member_indices(a, *d)).second) next.push_back(*d);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

} // namespace

HallConstruction exceptional_from_hall(const PermGroup& ambient, const PermGroup& normal_hall, std::size_t cap) {
  if (!ambient.has_subgroup(normal_hall)) throw Error(ErrorKind::NotSubgroup, "G is not a subgroup of A");
  if (!ambient.normalizes(normal_hall)) throw Error(ErrorKind::NotNormal, "G is not normal in A");
  if (ambient.order() > cap) throw Error(ErrorKind::CapExceeded, "ambient group exceeds cap");
  const std::uint64_t g = normal_hall.order();
  const std::uint64_t m = ambient.order() / g;
  if (m == 1 || std::gcd(g, m) != 1) {
    throw Error(ErrorKind::NotHall, "|G| = " + std::to_string(g) + " and |A:G| = " + std::to_string(m) +
                                        " are not coprime with a proper quotient");
  }

  auto complement = find_complement(ambient, m);
  if (!complement) {
    throw Error(ErrorKind::NoComplementFound,
                "complement search exhausted; a normal Hall subgroup always has one (internal error)");
  }

  std::vector<std::uint32_t> norm;
  for (std::size_t i = 0; i < ambient.order(); ++i) {
    Permutation x = ambient.element(i);
    bool ok = true;
    for (const auto& d : complement->generators()) {
      if (!complement->contains(x.conjugate(d))) {
        ok = false;
        break;
      }
    }
    if (ok) norm.push_back(static_cast<std::uint32_t>(i));
  }
  PermGroup normalizer = subgroup_from_elements(ambient, norm);

  // D maps isomorphically onto A/G, so a generator of D gives a generating coset.
  std::optional<Permutation> rep;
  for (std::size_t i = 0; i < complement->order() && !rep; ++i) {
    Permutation d = complement->element(i);
    if (d.order() == m) rep = d;
  }
  if (!rep) throw Error(ErrorKind::NotGeneratingCoset, "A/G is not cyclic, so no coset generates it");

  GroupAction x = GroupAction::cosets(ambient, normalizer);
  return HallConstruction{CosetSetting::make(std::move(x), normal_hall, *rep), *complement, normalizer};
}

} // namespace drg
