#include <numeric>

#include "drg/derange.hpp"

namespace drg {

namespace {

std::vector<Point> times(std::span<const Point> a, std::span<const Point> g) {
  std::vector<Point> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = g[a[i]];
  return out;
}

void require_normalized(const PermGroup& ambient, const PermGroup& normal, const Permutation& a) {
  if (!ambient.has_subgroup(normal)) throw Error(ErrorKind::NotSubgroup, "normal subgroup lies outside the ambient group");
  if (!ambient.contains(a)) throw Error(ErrorKind::NotElement, "coset representative lies outside the ambient group");
  for (const auto& s : normal.generators()) {
    if (!normal.contains(a.conjugate(s))) throw Error(ErrorKind::NotNormal, "coset representative does not normalize G");
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Orbit partition of X x X (pair index x*n + y) under the given label permutations.
std::vector<std::size_t> orbital_roots(std::size_t n, const std::vector<Permutation>& induced) {
  UnionFind uf(n * n);
  for (const auto& s : induced) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) uf.unite(x * n + y, static_cast<std::size_t>(s[x]) * n + s[y]);
    }
  }
  std::vector<std::size_t> roots(n * n);
  for (std::size_t p = 0; p < n * n; ++p) roots[p] = uf.find(p);
  return roots;
}

} // namespace

CosetSetting CosetSetting::make(GroupAction action, PermGroup normal, Permutation a) {
  const PermGroup& ambient = action.group();
  if (!ambient.has_subgroup(normal)) throw Error(ErrorKind::NotSubgroup, "G is not a subgroup of A");
  if (!ambient.normalizes(normal)) throw Error(ErrorKind::NotNormal, "G is not normal in A");
  if (!ambient.contains(a)) throw Error(ErrorKind::NotElement, "coset representative lies outside A");
  const std::uint64_t index = ambient.order() / normal.order();
  // aG generates A/G iff the order of a modulo G equals |A:G|.
  Permutation power = a;
  std::uint64_t k = 1;
  while (!normal.contains(power)) {
    power = power * a;
    ++k;
  }
  if (k != index) {
    throw Error(ErrorKind::NotGeneratingCoset,
                "aG has order " + std::to_string(k) + " in A/G, which has order " + std::to_string(index));
  }
  if (orbits(action).size() != 1) throw Error(ErrorKind::NotTransitive, "A is not transitive on X");
  if (orbits(action, normal.generators()).size() != 1) throw Error(ErrorKind::NotTransitive, "G is not transitive on X");
  return CosetSetting(std::move(action), std::move(normal), std::move(a));
}

DerangementReport coset_delta(const CosetSetting& setting) {
  const auto& g = setting.normal();
  const auto& action = setting.action();
  auto a = setting.coset_rep().images();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    count += action.fixed_point_count(times(a, g.element_images(i))) == 0;
  }
  DerangementReport r;
  r.derangements = count;
  r.population = g.order();
  r.n = action.size();
  r.delta = ratio(count, g.order());
  r.status = classify(r.delta, r.n);
  return r;
}

CosetSum coset_fixed_point_sum(const GroupAction& action, const PermGroup& normal, const Permutation& a) {
  require_normalized(action.group(), normal, a);
  CosetSum out;
  out.normal_order = normal.order();
  for (std::size_t i = 0; i < normal.order(); ++i) {
    out.sum += action.fixed_point_count(times(a.images(), normal.element_images(i)));
  }
  auto small = orbits(action, normal.generators());
  auto big_gens = normal.generators();
  big_gens.push_back(a);
  auto big = orbits(action, big_gens);
  std::vector<std::size_t> big_size(action.size());
  for (const auto& o : big) {
    for (std::size_t x : o) big_size[x] = o.size();
  }
  for (const auto& o : small) out.common_orbits += big_size[o.front()] == o.size();
  return out;
}

CosetSum coset_fixed_point_sum(const CosetSetting& setting) {
  return coset_fixed_point_sum(setting.action(), setting.normal(), setting.coset_rep());
}

ExceptionalityCertificate is_exceptional(const CosetSetting& setting) {
  const auto& action = setting.action();
  const std::size_t n = action.size();
  std::vector<Permutation> a_gens, g_gens;
  for (const auto& s : setting.ambient().generators()) a_gens.push_back(action.induced(s));
  for (const auto& s : setting.normal().generators()) g_gens.push_back(action.induced(s));
  auto a_roots = orbital_roots(n, a_gens);
  auto g_roots = orbital_roots(n, g_gens);

  std::vector<std::size_t> a_size(n * n, 0), g_size(n * n, 0);
  for (std::size_t p = 0; p < n * n; ++p) {
    ++a_size[a_roots[p]];
    ++g_size[g_roots[p]];
  }
  ExceptionalityCertificate cert;
  for (std::size_t p = 0; p < n * n; ++p) {
    cert.ambient_orbitals += a_roots[p] == p;
    if (g_roots[p] != p) continue;
    ++cert.normal_orbitals;
    std::size_t x = p / n, y = p % n;
    if (x == y) continue; // the diagonal (a single orbital, G being transitive)
    // A-orbitals are unions of G-orbitals; equal size means equal sets.
    if (a_size[a_roots[p]] == g_size[p]) cert.common.push_back({x, y, g_size[p]});
  }
  cert.exceptional = cert.common.empty();
  return cert;
}

CountingArgument coset_counting_argument(const CosetSetting& setting) {
  const auto& action = setting.action();
  const auto& ambient = setting.ambient();
  const auto& normal = setting.normal();
  auto a = setting.coset_rep().images();

  CountingArgument out;
  bool found = false;
  for (std::size_t i = 0; i < normal.order() && !found; ++i) {
    auto y = times(a, normal.element_images(i));
    if (action.image(y, 0) == 0) {
      out.fixing_rep = Permutation::from_images(std::move(y));
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidInput, "no element of the coset fixes a point");

  std::vector<Permutation> kernel_induced;
  std::vector<std::uint32_t> kernel;
  for (std::size_t i = 0; i < ambient.order(); ++i) {
    auto h = ambient.element_images(i);
    if (action.image(h, 0) != 0) continue;
    ++out.stabilizer_order;
    if (normal.index_of(h)) {
      kernel.push_back(static_cast<std::uint32_t>(i));
      kernel_induced.push_back(action.induced(h));
    }
  }
  out.kernel_order = kernel.size();

  const std::size_t n = action.size();
  UnionFind uf(n);
  for (const auto& s : kernel_induced) {
    for (std::size_t x = 0; x < n; ++x) uf.unite(x, s[x]);
  }
  Permutation ap = action.induced(out.fixing_rep);
  for (std::size_t x = 0; x < n; ++x) {
    if (uf.find(x) != x) continue;
    // K-orbit rooted at x is H-invariant iff a' maps it into itself
    bool invariant = true;
    for (std::size_t y = 0; y < n && invariant; ++y) {
      if (uf.find(y) == x && uf.find(ap[y]) != x) invariant = false;
    }
    out.d += invariant;
  }

  for (std::uint32_t k : kernel) {
    out.sum_over_k += action.fixed_point_count(times(out.fixing_rep.images(), ambient.element_images(k)));
  }
  out.derangements = coset_delta(setting).derangements;
  out.sum_identity = out.sum_over_k == out.d * out.kernel_order;
  out.lower_bound = out.derangements >= (out.d - 1) * out.kernel_order;
  out.d1_empty = out.d != 1 || out.derangements == 0;
  return out;
}

} // namespace drg
