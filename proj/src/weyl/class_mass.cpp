#include "drg/weyl.hpp"

namespace drg {

ClassMassReport class_mass(const WeylGroup& w, const PermGroup& w0, const Permutation& tau) {
  const auto& g = w.group();
  if (!g.has_subgroup(w0)) throw Error(ErrorKind::NotSubgroup, "W0 is not a subgroup of W");
  if (!g.contains(tau)) throw Error(ErrorKind::NotElement, "tau is not an element of W");

  std::vector<bool> hit(w.classes().size(), false);
  std::vector<Point> buf(g.degree());
  auto t = tau.images();
  for (std::size_t i = 0; i < w0.order(); ++i) {
    auto x = w0.element_images(i);
    for (std::size_t p = 0; p < buf.size(); ++p) buf[p] = x[t[p]];
    hit[w.class_table().class_of[*g.index_of(buf)]] = true;
  }

  ClassMassReport r;
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < hit.size(); ++c) {
    if (!hit[c]) continue;
    r.meeting.push_back(w.classes()[c]);
    total += w.classes()[c].size;
  }
  r.mass = ratio(total, w.order());
  r.limiting_delta = ExactRatio(1) - r.mass;
  return r;
}

ParabolicDelta limiting_delta_parabolic(const WeylGroup& w, const PermGroup& w0) {
  ParabolicDelta out;
  out.mass = class_mass(w, w0, Permutation::identity(w.group().degree()));
  GroupAction cosets = GroupAction::cosets(w.group(), w0);
  out.delta = delta_by_classes(cosets, w.class_table()).delta;
  out.agrees = out.delta == out.mass.limiting_delta;
  return out;
}

} // namespace drg
