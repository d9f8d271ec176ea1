#include <map>

#include "drg/classcount.hpp"

namespace drg {

namespace {

// value table of Q(M x) over all column vectors x, indexed like vector_permutation
std::vector<Fq> transform(const FqField& k, std::size_t n, const std::vector<Fq>& table, std::span<const Fq> m) {
  const unsigned Q = k.q();
  std::vector<Fq> out(table.size());
  std::vector<Fq> x(n);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    std::size_t r = idx;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<Fq>(r % Q);
      r /= Q;
    }
    std::size_t image = 0, mult = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Fq s = 0;
      for (std::size_t j = 0; j < n; ++j) s = k.add(s, k.mul(m[i * n + j], x[j]));
      image += s * mult;
      mult *= Q;
    }
    out[idx] = table[image];
  }
  return out;
}

} // namespace

FormsDelta symplectic_on_forms(const ClassicalGroup& sp, const ClassicalGroup& orthogonal, std::size_t cap) {
  if (sp.family() != Family::Sp || (orthogonal.family() != Family::Oplus && orthogonal.family() != Family::Ominus)) {
    throw Error(ErrorKind::FamilyMismatch, "needs a symplectic group and an orthogonal subgroup");
  }
  if (sp.n() != orthogonal.n() || sp.q() != orthogonal.q() || sp.q() % 2 != 0) {
    throw Error(ErrorKind::FamilyMismatch, "groups must share n and an even q");
  }
  for (std::size_t i = 0; i < orthogonal.order(); ++i) {
    if (!sp.table().contains(orthogonal.element_entries(i))) {
      throw Error(ErrorKind::NotSubgroup, orthogonal.name() + " is not inside " + sp.name());
    }
  }

  FormsDelta out;
  out.degree = static_cast<std::size_t>(sp.order() / orthogonal.order());

  // route 1: an element fixes a coset iff it is conjugate into H
  MatrixClassTable classes = matrix_classes(sp);
  std::vector<bool> meets(classes.count(), false);
  for (std::size_t i = 0; i < orthogonal.order(); ++i) {
    meets[classes.partition.class_of[*sp.table().find(orthogonal.element_entries(i))]] = true;
  }
  std::uint64_t fixing = 0;
  for (std::size_t c = 0; c < classes.count(); ++c) {
    if (meets[c]) fixing += classes.partition.size[c];
  }
  out.by_classes = ExactRatio(1) - ratio(fixing, sp.order());

  // route 2: permute the orbit of H's quadratic form
  const FqField& k = sp.field();
  const std::size_t n = sp.n();
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= k.q();
  std::vector<Fq> q0(count);
  {
    std::vector<Fq> v(n);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t r = idx;
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<Fq>(r % k.q());
        r /= k.q();
      }
      q0[idx] = quadratic_value(*orthogonal.quadratic_form(), v);
    }
  }
  std::map<std::vector<Fq>, std::size_t> index{{q0, 0}};
  std::vector<std::vector<Fq>> orbit{q0};
  const auto gens = sp.generator_entries();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<Fq> t = transform(k, n, orbit[i], gens[g]);
      auto [it, fresh] = index.emplace(t, orbit.size());
      if (fresh) orbit.push_back(std::move(t));
      images[g].push_back(static_cast<Point>(it->second));
    }
  }
  if (orbit.size() != out.degree) {
    throw Error(ErrorKind::Internal, "form orbit has size " + std::to_string(orbit.size()) + ", expected " +
                                         std::to_string(out.degree));
  }
  std::vector<Permutation> perms;
  for (auto& img : images) perms.push_back(Permutation::from_images(std::move(img)));
  PermGroup image = PermGroup::close(perms, cap);
  if (image.order() != sp.order()) throw Error(ErrorKind::Internal, "action on forms is not faithful");
  std::uint64_t derangements = 0;
  for (std::size_t i = 0; i < image.order(); ++i) derangements += image.element(i).fixed_point_count() == 0;
  out.by_action = ratio(derangements, image.order());
  return out;
}

} // namespace drg
