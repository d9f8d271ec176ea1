#include <algorithm>
#include <numeric>

#include "drg/permcore.hpp"

namespace drg {

namespace {

std::uint64_t subset_mask(std::span<const Point> s) {
  std::uint64_t m = 0;
  for (Point p : s) m |= std::uint64_t{1} << p;
  return m;
}

void enumerate_subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<Point>& cur,
                       std::vector<std::vector<Point>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(static_cast<Point>(i));
    enumerate_subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

GroupAction GroupAction::natural(PermGroup group) {
  if (group.degree() < 2) throw Error(ErrorKind::InvalidInput, "actions of degree 1 are rejected");
  GroupAction a(Kind::Natural, std::move(group));
  a.size_ = a.group_.degree();
  return a;
}

GroupAction GroupAction::subsets(PermGroup group, std::size_t k) {
  const std::size_t n = group.degree();
  if (n > 64) throw Error(ErrorKind::TooLarge, "subset actions support degree <= 64");
  if (k == 0 || k >= n) throw Error(ErrorKind::InvalidInput, "subset size must be in [1, degree-1]");
  GroupAction a(Kind::Subsets, std::move(group));
  a.k_ = k;
  std::vector<Point> cur;
  enumerate_subsets(n, k, 0, cur, a.subsets_);
  a.size_ = a.subsets_.size();
  return a;
}

GroupAction GroupAction::cosets(PermGroup group, PermGroup sub) {
  if (!group.has_subgroup(sub)) throw Error(ErrorKind::NotSubgroup, "coset action needs a subgroup");
  if (group.order() % sub.order() != 0) throw Error(ErrorKind::NotSubgroup, "subgroup order does not divide group order");
  const std::uint64_t index = group.order() / sub.order();
  if (index < 2) throw Error(ErrorKind::InvalidInput, "coset actions of degree 1 are rejected");

  GroupAction a(Kind::Cosets, group);
  a.subgroup_ = sub;
  a.size_ = static_cast<std::size_t>(index);

  // Discover one element per coset by closing under right multiplication.
  std::vector<Permutation> reps{Permutation::identity(group.degree())};
  std::vector<Permutation> inv{reps.front()};
  a.coset_rep_inverses_ = inv;
  a.coset_reps_ = reps;
  for (std::size_t i = 0; i < a.coset_reps_.size(); ++i) {
    for (const auto& s : group.generators()) {
      Permutation y = a.coset_reps_[i] * s;
      bool known = false;
      for (std::size_t j = 0; j < a.coset_reps_.size() && !known; ++j) known = a.in_coset(y.images(), j);
      if (!known) {
        a.coset_reps_.push_back(y);
        a.coset_rep_inverses_.push_back(y.inverse());
      }
    }
  }
  if (a.coset_reps_.size() != index) throw Error(ErrorKind::Internal, "coset enumeration missed cosets");

  // Canonical representative: least images sequence among h * x, h in H.
  for (auto& x : a.coset_reps_) {
    Permutation best = x;
    for (std::size_t h = 0; h < sub.order(); ++h) {
      Permutation cand = sub.element(h) * x;
      if (cand < best) best = std::move(cand);
    }
    x = std::move(best);
  }
  std::sort(a.coset_reps_.begin(), a.coset_reps_.end());
  a.coset_rep_inverses_.clear();
  for (const auto& x : a.coset_reps_) a.coset_rep_inverses_.push_back(x.inverse());
  return a;
}

GroupAction coset_action(const PermGroup& group, const PermGroup& subgroup) {
  return GroupAction::cosets(group, subgroup);
}

std::string GroupAction::label(std::size_t point) const {
  switch (kind_) {
    case Kind::Natural:
      return std::to_string(point);
    case Kind::Cosets:
      return "H*" + coset_reps_.at(point).to_cycles();
    case Kind::Subsets: {
      std::string s = "{";
      for (std::size_t i = 0; i < subsets_.at(point).size(); ++i) {
        if (i) s += ",";
        s += std::to_string(subsets_[point][i]);
      }
      return s + "}";
    }
  }
  return {};
}

void GroupAction::check_degree(std::span<const Point> g) const {
  if (g.size() != group_.degree()) throw Error(ErrorKind::DegreeMismatch, "element degree differs from the group's");
}

// y lies in H x_j  iff  y x_j^-1 in H
bool GroupAction::in_coset(std::span<const Point> y, std::size_t j) const {
  const auto& xinv = coset_rep_inverses_[j];
  std::vector<Point> prod(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) prod[i] = xinv[y[i]];
  return subgroup_->index_of(prod).has_value();
}

std::size_t GroupAction::image(std::span<const Point> g, std::size_t point) const {
  check_degree(g);
  switch (kind_) {
    case Kind::Natural:
      return g[point];
    case Kind::Cosets: {
      const auto& x = coset_reps_.at(point);
      std::vector<Point> y(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) y[i] = g[x[i]];
      for (std::size_t j = 0; j < size_; ++j) {
        if (in_coset(y, j)) return j;
      }
      throw Error(ErrorKind::Internal, "coset image not found");
    }
    case Kind::Subsets: {
      std::vector<Point> img;
      for (Point p : subsets_.at(point)) img.push_back(g[p]);
      std::sort(img.begin(), img.end());
      auto it = std::lower_bound(subsets_.begin(), subsets_.end(), img);
      return static_cast<std::size_t>(it - subsets_.begin());
    }
  }
  return 0;
}

std::size_t GroupAction::fixed_point_count(std::span<const Point> g) const {
  check_degree(g);
  std::size_t count = 0;
  switch (kind_) {
    case Kind::Natural:
      for (std::size_t i = 0; i < g.size(); ++i) count += g[i] == i;
      break;
    case Kind::Cosets: {
      // H x g = H x  iff  x g x^-1 in H
      std::vector<Point> conj(g.size());
      for (std::size_t j = 0; j < size_; ++j) {
        const auto& x = coset_reps_[j];
        const auto& xinv = coset_rep_inverses_[j];
        for (std::size_t i = 0; i < g.size(); ++i) conj[i] = xinv[g[x[i]]];
        count += subgroup_->index_of(conj).has_value();
      }
      break;
    }
    case Kind::Subsets:
      for (const auto& s : subsets_) {
        std::uint64_t m = subset_mask(s);
        bool fixed = true;
        for (Point p : s) {
          if (!((m >> g[p]) & 1U)) {
            fixed = false;
            break;
          }
        }
        count += fixed;
      }
      break;
  }
  return count;
}

Permutation GroupAction::induced(std::span<const Point> g) const {
  check_degree(g);
  std::vector<Point> img(size_);
  for (std::size_t i = 0; i < size_; ++i) img[i] = static_cast<Point>(image(g, i));
  return Permutation::from_images(std::move(img));
}

std::size_t fixed_point_count(const Permutation& g, const GroupAction& action) {
  return action.fixed_point_count(g);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
};

std::vector<Permutation> induced_generators(const GroupAction& action, const std::vector<Permutation>& gens) {
  std::vector<Permutation> out;
  for (const auto& g : gens) out.push_back(action.induced(g));
  return out;
}

} // namespace

std::vector<std::vector<std::size_t>> orbits(const GroupAction& action, const std::vector<Permutation>& generators) {
  UnionFind uf(action.size());
  for (const auto& s : induced_generators(action, generators)) {
    for (std::size_t i = 0; i < action.size(); ++i) uf.unite(i, s[i]);
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(action.size(), SIZE_MAX);
  for (std::size_t i = 0; i < action.size(); ++i) {
    std::size_t r = uf.find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

std::vector<std::vector<std::size_t>> orbits(const GroupAction& action) {
  return orbits(action, action.group().generators());
}

bool is_transitive(const GroupAction& action) { return orbits(action).size() == 1; }

std::vector<std::size_t> minimal_block(const GroupAction& action, std::size_t b) {
  const std::size_t n = action.size();
  auto gens = induced_generators(action, action.group().generators());
  UnionFind uf(n);
  std::vector<std::pair<std::size_t, std::size_t>> pending{{0, b}};
  uf.unite(0, b);
  // Atkinson: whenever two points are merged, their images must be merged too.
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (const auto& s : gens) {
      std::size_t sx = s[x], sy = s[y];
      if (uf.unite(sx, sy)) pending.emplace_back(sx, sy);
    }
  }
  std::vector<std::size_t> block;
  std::size_t root = uf.find(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (uf.find(i) == root) block.push_back(i);
  }
  return block;
}

bool is_primitive(const GroupAction& action) {
  if (!is_transitive(action)) return false;
  for (std::size_t b = 1; b < action.size(); ++b) {
    if (minimal_block(action, b).size() < action.size()) return false;
  }
  return true;
}

bool is_frobenius(const GroupAction& action) {
  if (!is_transitive(action)) throw Error(ErrorKind::NotTransitive, "Frobenius test needs a transitive action");
  const auto& g = action.group();
  if (g.order() <= action.size()) return false;
  for (std::size_t i = 1; i < g.order(); ++i) {
    if (action.fixed_point_count(g.element_images(i)) >= 2) return false;
  }
  return true;
}

} // namespace drg
