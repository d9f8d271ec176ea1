#include <numeric>

#include "drg/fixtures.hpp"

namespace drg::fixtures {

namespace {

std::vector<Point> iota_points(std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  return v;
}

Permutation cycle_on(std::size_t n, std::size_t first, std::size_t len) {
  auto img = iota_points(n);
  for (std::size_t i = 0; i < len; ++i) img[first + i] = static_cast<Point>(first + (i + 1) % len);
  return Permutation::from_images(std::move(img));
}

// basis elements p^i of F_q as encodings
std::vector<Fq> additive_basis(const FqField& k) {
  std::vector<Fq> basis;
  unsigned e = 1;
  for (unsigned i = 0; i < k.f(); ++i, e *= k.p()) basis.push_back(static_cast<Fq>(e));
  return basis;
}

Permutation mobius(const FqField& k, Fq a, Fq b, Fq c, Fq d) {
  const unsigned q = k.q();
  std::vector<Point> img(q + 1);
  for (unsigned x = 0; x < q; ++x) {
    Fq xx = static_cast<Fq>(x);
    Fq den = k.add(k.mul(c, xx), d);
    Fq num = k.add(k.mul(a, xx), b);
    img[x] = den == 0 ? static_cast<Point>(q) : static_cast<Point>(k.mul(num, k.inv(den)));
  }
  img[q] = c == 0 ? static_cast<Point>(q) : static_cast<Point>(k.mul(a, k.inv(c)));
  return Permutation::from_images(std::move(img));
}

} // namespace

PermGroup symmetric(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "symmetric group needs n >= 1");
  if (n == 1) return PermGroup::close({Permutation::identity(1)});
  return PermGroup::close({cycle_on(n, 0, 2), cycle_on(n, 0, n)});
}

PermGroup alternating(std::size_t n) {
  if (n < 3) return PermGroup::close({Permutation::identity(n)});
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    auto img = iota_points(n);
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return PermGroup::close(gens);
}

PermGroup cyclic(std::size_t n) { return PermGroup::close({cycle_on(n, 0, n)}); }

PermGroup dihedral(std::size_t n) {
  auto refl = iota_points(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup::close({cycle_on(n, 0, n), Permutation::from_images(std::move(refl))});
}

Permutation affine_map(const FqField& k, Fq a, Fq b, unsigned frob) {
  std::vector<Point> img(k.q());
  for (unsigned x = 0; x < k.q(); ++x) {
    Fq y = static_cast<Fq>(x);
    for (unsigned i = 0; i < frob; ++i) y = k.frobenius(y);
    img[x] = k.add(k.mul(a, y), b);
  }
  return Permutation::from_images(std::move(img));
}

PermGroup translations(unsigned q) {
  auto k = make_field_of_order(q);
  std::vector<Permutation> gens;
  for (Fq b : additive_basis(*k)) gens.push_back(affine_map(*k, 1, b));
  return PermGroup::close(gens);
}

PermGroup affine_subgroup(unsigned q, unsigned m) {
  auto k = make_field_of_order(q);
  if (m == 0 || (q - 1) % m != 0) throw Error(ErrorKind::InvalidInput, "multiplier order must divide q-1");
  std::vector<Permutation> gens;
  for (Fq b : additive_basis(*k)) gens.push_back(affine_map(*k, 1, b));
  gens.push_back(affine_map(*k, k->pow(k->primitive_element(), (q - 1) / m), 0));
  return PermGroup::close(gens);
}

PermGroup agl1(unsigned q) { return affine_subgroup(q, q - 1); }

PermGroup half_agl1(unsigned q) {
  if (q % 2 == 0) throw Error(ErrorKind::InvalidInput, "half affine group needs q odd");
  return affine_subgroup(q, (q - 1) / 2);
}

PermGroup agaml1(unsigned q) {
  auto k = make_field_of_order(q);
  std::vector<Permutation> gens;
  for (Fq b : additive_basis(*k)) gens.push_back(affine_map(*k, 1, b));
  gens.push_back(affine_map(*k, k->primitive_element(), 0));
  if (k->f() > 1) gens.push_back(affine_map(*k, 1, 0, 1));
  return PermGroup::close(gens);
}

PermGroup pgl2(unsigned q) {
  auto k = make_field_of_order(q);
  std::vector<Permutation> gens;
  for (Fq b : additive_basis(*k)) gens.push_back(mobius(*k, 1, b, 0, 1));
  gens.push_back(mobius(*k, k->primitive_element(), 0, 0, 1));
  gens.push_back(mobius(*k, 0, 1, 1, 0));
  return PermGroup::close(gens);
}

PermGroup psl2(unsigned q) {
  auto k = make_field_of_order(q);
  std::vector<Permutation> gens;
  for (Fq b : additive_basis(*k)) gens.push_back(mobius(*k, 1, b, 0, 1));
  Fq xi = k->primitive_element();
  gens.push_back(mobius(*k, k->mul(xi, xi), 0, 0, 1));
  gens.push_back(mobius(*k, 0, k->neg(1), 1, 0));
  return PermGroup::close(gens);
}

PermGroup gl32_on_points() {
  ClassicalGroup g = build_classical(Family::GL, 3, 2);
  std::vector<Permutation> gens;
  for (const auto& m : g.generators()) {
    Permutation p = vector_permutation(m); // fixes the zero vector 0
    std::vector<Point> img(7);
    for (std::size_t i = 0; i < 7; ++i) img[i] = static_cast<Point>(p[i + 1] - 1);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return PermGroup::close(gens);
}

PermGroup product_action(const PermGroup& base, const PermGroup& top) {
  const std::size_t m = base.degree(), t = top.degree();
  std::size_t total = 1;
  for (std::size_t i = 0; i < t; ++i) total *= m;
  auto decode = [&](std::size_t idx) {
    std::vector<std::size_t> x(t);
    for (std::size_t i = 0; i < t; ++i) {
      x[i] = idx % m;
      idx /= m;
    }
    return x;
  };
  auto encode = [&](const std::vector<std::size_t>& x) {
    std::size_t idx = 0;
    for (std::size_t i = t; i-- > 0;) idx = idx * m + x[i];
    return idx;
  };
  std::vector<Permutation> gens;
  for (const auto& g : base.generators()) {
    std::vector<Point> img(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      auto x = decode(idx);
      x[0] = g[x[0]];
      img[idx] = static_cast<Point>(encode(x));
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  for (const auto& s : top.generators()) {
    std::vector<Point> img(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      auto x = decode(idx);
      std::vector<std::size_t> y(t);
      for (std::size_t i = 0; i < t; ++i) y[s[i]] = x[i];
      img[idx] = static_cast<Point>(encode(y));
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return PermGroup::close(gens);
}

namespace {

Permutation induced_on_elements(const PermGroup& t, const auto& map) {
  std::vector<Point> img(t.order());
  for (std::size_t i = 0; i < t.order(); ++i) {
    auto j = t.index_of(map(t.element(i)));
    if (!j) throw Error(ErrorKind::InvalidInput, "map does not preserve the group");
    img[i] = static_cast<Point>(*j);
  }
  return Permutation::from_images(std::move(img));
}

} // namespace

std::pair<PermGroup, PermGroup> holomorph(const PermGroup& t, const std::vector<Permutation>& automorphisms) {
  std::vector<Permutation> right;
  for (const auto& h : t.generators()) {
    right.push_back(induced_on_elements(t, [&](const Permutation& x) { return x * h; }));
  }
  std::vector<Permutation> gens = right;
  for (const auto& s : automorphisms) {
    gens.push_back(induced_on_elements(t, [&](const Permutation& x) { return s.conjugate(x); }));
  }
  PermGroup group = PermGroup::close(gens);
  return {group, subgroup(group, right)};
}

PermGroup diagonal_action(const PermGroup& t) {
  std::vector<Permutation> gens;
  for (const auto& h : t.generators()) {
    gens.push_back(induced_on_elements(t, [&](const Permutation& x) { return x * h; }));
    gens.push_back(induced_on_elements(t, [&](const Permutation& x) { return h.inverse() * x; }));
  }
  gens.push_back(induced_on_elements(t, [](const Permutation& x) { return x.inverse(); }));
  return PermGroup::close(gens);
}

} // namespace drg::fixtures
