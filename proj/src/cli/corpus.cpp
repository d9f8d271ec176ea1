#include "drg/corpus.hpp"

#include "drg/fixtures.hpp"

namespace drg::corpus {

using nlohmann::json;
namespace fx = drg::fixtures;

std::string ClassicalSpec::name() const {
  return std::string(to_string(family)) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
}

namespace {

BoundCase natural(std::string name, PermGroup g, bool nn1 = false, bool half = false) {
  return {{std::move(name), GroupAction::natural(std::move(g))}, nn1, half};
}

Permutation outside(const PermGroup& big, const PermGroup& small) {
  for (const auto& g : big.generators()) {
    if (!small.contains(g)) return g;
  }
  throw Error(ErrorKind::Internal, "subgroup contains every generator");
}

CosetInstance setting(std::string name, GroupAction action, PermGroup normal, Permutation a) {
  return {std::move(name), CosetSetting::make(std::move(action), std::move(normal), std::move(a))};
}

json perm_list(const std::vector<Permutation>& perms) {
  json arr = json::array();
  for (const auto& p : perms) arr.push_back(p.images());
  return arr;
}

json action_document(const GroupAction& a) {
  switch (a.kind()) {
    case GroupAction::Kind::Natural: return {{"kind", "natural"}};
    case GroupAction::Kind::Subsets: return {{"kind", "subsets"}, {"k", a.subset_size()}};
    case GroupAction::Kind::Cosets: return {{"kind", "cosets"}, {"subgroup", perm_list(a.coset_subgroup()->generators())}};
  }
  return {};
}

json action_spec(const std::string& name, const GroupAction& a) {
  json doc = group_document(name, a.group());
  if (a.kind() != GroupAction::Kind::Natural) doc["action"] = action_document(a);
  return doc;
}

} // namespace

json group_document(const std::string& name, const PermGroup& group) {
  return {{"name", name}, {"degree", group.degree()}, {"generators", perm_list(group.generators())}};
}

std::vector<BoundCase> bounds() {
  std::vector<BoundCase> out;
  for (std::size_t n = 3; n <= 8; ++n) out.push_back(natural("S" + std::to_string(n) + "-natural", fx::symmetric(n), n == 3));
  for (std::size_t n = 3; n <= 8; ++n) out.push_back(natural("A" + std::to_string(n) + "-natural", fx::alternating(n), n == 4));
  for (unsigned q : {5U, 7U, 8U, 9U, 13U}) out.push_back(natural("AGL1-" + std::to_string(q), fx::agl1(q), true));
  for (unsigned q : {7U, 9U, 11U, 13U}) out.push_back(natural("AGL1half-" + std::to_string(q), fx::half_agl1(q), false, true));
  out.push_back(natural("AGammaL1-8", fx::agaml1(8)));
  out.push_back(natural("PSL27-7", fx::gl32_on_points()));
  out.push_back(natural("PSL27-8", fx::psl2(7)));
  out.push_back(natural("PSL2-8", fx::psl2(8)));
  out.push_back(natural("PSL2-11", fx::psl2(11)));
  for (unsigned q : {5U, 7U, 9U, 11U}) out.push_back(natural("PGL2-" + std::to_string(q), fx::pgl2(q)));
  out.push_back(natural("D8-square", fx::dihedral(4)));
  out.push_back({{"S5-pairs", GroupAction::subsets(fx::symmetric(5), 2)}, false, false});
  out.push_back({{"S6-pairs", GroupAction::subsets(fx::symmetric(6), 2)}, false, false});
  out.push_back({{"S6-triples", GroupAction::subsets(fx::symmetric(6), 3)}, false, false});
  {
    PermGroup s4 = fx::symmetric(4);
    out.push_back({{"S4-cosets-C2", GroupAction::cosets(s4, subgroup(s4, {Permutation::from_cycles("(0 1)", 4)}))}, false, false});
  }
  return out;
}

std::vector<BoundInstance> bound_instances() {
  std::vector<BoundInstance> out;
  for (auto& c : bounds()) out.push_back(std::move(c.instance));
  return out;
}

std::vector<CosetInstance> cosets() {
  std::vector<CosetInstance> out;
  const auto t01 = [](std::size_t n) { return Permutation::from_cycles("(0 1)", n); };
  {
    PermGroup s3 = fx::symmetric(3);
    out.push_back(setting("S3/A3", GroupAction::natural(s3), subgroup(s3, fx::alternating(3).generators()), t01(3)));
  }
  {
    PermGroup s4 = fx::symmetric(4);
    out.push_back(setting("S4/A4", GroupAction::natural(s4), subgroup(s4, fx::alternating(4).generators()), t01(4)));
    out.push_back(setting("S4/S4", GroupAction::natural(s4), s4, Permutation::identity(4)));
  }
  {
    PermGroup s5 = fx::symmetric(5);
    PermGroup a5 = subgroup(s5, fx::alternating(5).generators());
    out.push_back(setting("S5/A5", GroupAction::natural(s5), a5, t01(5)));
    out.push_back(setting("S5/A5-pairs", GroupAction::subsets(s5, 2), a5, t01(5)));
  }
  {
    PermGroup a4 = fx::alternating(4);
    PermGroup v4 = subgroup(a4, {Permutation::from_cycles("(0 1)(2 3)", 4), Permutation::from_cycles("(0 2)(1 3)", 4)});
    out.push_back(setting("A4/V4", GroupAction::natural(a4), v4, Permutation::from_cycles("(0 1 2)", 4)));
  }
  {
    auto k5 = make_field_of_order(5);
    PermGroup f20 = fx::agl1(5);
    out.push_back(setting("F20/C5", GroupAction::natural(f20), subgroup(f20, fx::translations(5).generators()),
                          fx::affine_map(*k5, 2, 0)));
  }
  {
    auto k7 = make_field_of_order(7);
    PermGroup f21 = fx::half_agl1(7);
    out.push_back(setting("C7:C3/C7", GroupAction::natural(f21), subgroup(f21, fx::translations(7).generators()),
                          fx::affine_map(*k7, 2, 0)));
  }
  for (unsigned q : {5U, 7U}) {
    PermGroup pgl = fx::pgl2(q);
    PermGroup psl = subgroup(pgl, fx::psl2(q).generators());
    out.push_back(setting("PGL2-" + std::to_string(q) + "/PSL2", GroupAction::natural(pgl), psl, outside(pgl, psl)));
  }
  {
    PermGroup d8 = fx::dihedral(4);
    PermGroup c4 = subgroup(d8, fx::cyclic(4).generators());
    out.push_back(setting("D8/C4", GroupAction::natural(d8), c4, outside(d8, c4)));
  }
  {
    PermGroup g = fx::agaml1(8);
    PermGroup n = subgroup(g, fx::agl1(8).generators());
    out.push_back(setting("AGammaL1-8/AGL1-8", GroupAction::natural(g), n, outside(g, n)));
  }
  return out;
}

std::vector<HallPair> hall_pairs() {
  std::vector<HallPair> out;
  auto pair = [&](std::string name, PermGroup a, const PermGroup& gens_of_normal) {
    PermGroup n = subgroup(a, gens_of_normal.generators());
    out.push_back({std::move(name), std::move(a), std::move(n)});
  };
  pair("C7:C3/C7", fx::half_agl1(7), fx::translations(7));
  pair("F20/C5", fx::agl1(5), fx::translations(5));
  {
    PermGroup a4 = fx::alternating(4);
    out.push_back({"A4/V4", a4,
                   subgroup(a4, {Permutation::from_cycles("(0 1)(2 3)", 4), Permutation::from_cycles("(0 2)(1 3)", 4)})});
  }
  pair("S3/C3", fx::symmetric(3), fx::alternating(3));
  pair("AGammaL1-8/AGL1-8", fx::agaml1(8), fx::agl1(8));
  pair("AGL1-8/C2^3", fx::agl1(8), fx::translations(8));
  pair("AGL1-9/C3^2", fx::agl1(9), fx::translations(9));
  pair("C11:C5/C11", fx::half_agl1(11), fx::translations(11));
  return out;
}

std::vector<CosetInstance> cosets_with_hall() {
  std::vector<CosetInstance> out = cosets();
  for (const auto& h : hall_pairs()) {
    HallConstruction built = exceptional_from_hall(h.ambient, h.normal_hall);
    out.push_back({"hall:" + h.name, built.setting});
  }
  return out;
}

LemmaCorpus structural() {
  LemmaCorpus c;
  {
    PermGroup a5 = fx::alternating(5);
    auto [hol, reg] = fx::holomorph(a5, fx::symmetric(5).generators());
    c.regular.push_back({"Hol(A5)", GroupAction::natural(hol), reg});
    auto [inner, reg2] = fx::holomorph(a5, a5.generators());
    c.regular.push_back({"A5xA5-on-A5", GroupAction::natural(inner), reg2});
    PermGroup l27 = fx::gl32_on_points();
    auto [inner3, reg3] = fx::holomorph(l27, l27.generators());
    c.regular.push_back({"L27xL27-on-L27", GroupAction::natural(inner3), reg3});
  }
  c.product.push_back({"S3wrS2", GroupAction::natural(fx::product_action(fx::symmetric(3), fx::symmetric(2))), 3, 2});
  c.product.push_back({"S4wrS2", GroupAction::natural(fx::product_action(fx::symmetric(4), fx::symmetric(2))), 4, 2});
  c.product.push_back({"S3wrS3", GroupAction::natural(fx::product_action(fx::symmetric(3), fx::symmetric(3))), 3, 3});
  c.product.push_back({"A5wrS2", GroupAction::natural(fx::product_action(fx::alternating(5), fx::symmetric(2))), 5, 2});
  c.diagonal.push_back({"A5-diagonal", GroupAction::natural(fx::diagonal_action(fx::alternating(5))), 2});
  c.diagonal.push_back({"S5-diagonal", GroupAction::natural(fx::diagonal_action(fx::symmetric(5))), 2});
  c.diagonal.push_back({"L27-diagonal", GroupAction::natural(fx::diagonal_action(fx::gl32_on_points())), 2});
  return c;
}

std::vector<ClassicalSpec> classical_small() {
  std::vector<ClassicalSpec> out;
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) out.push_back({Family::GL, 1, q});
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 11U}) out.push_back({Family::GL, 2, q});
  out.push_back({Family::GL, 3, 2});
  out.push_back({Family::GL, 3, 3});
  out.push_back({Family::GL, 4, 2});
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U, 11U, 13U, 16U, 17U, 19U}) out.push_back({Family::SL, 2, q});
  out.push_back({Family::SL, 3, 2});
  out.push_back({Family::SL, 3, 3});
  out.push_back({Family::SL, 3, 4});
  out.push_back({Family::SL, 4, 2});
  for (unsigned q : {2U, 3U}) out.push_back({Family::GU, 2, q});
  out.push_back({Family::GU, 3, 2});
  for (unsigned q : {2U, 3U, 4U, 5U}) out.push_back({Family::SU, 2, q});
  out.push_back({Family::SU, 3, 2});
  out.push_back({Family::SU, 3, 3});
  for (unsigned q : {2U, 3U, 4U, 5U}) out.push_back({Family::Sp, 2, q});
  out.push_back({Family::Sp, 4, 2});
  out.push_back({Family::Sp, 4, 3});
  for (unsigned q : {2U, 3U, 4U, 5U, 7U}) {
    out.push_back({Family::Oplus, 2, q});
    out.push_back({Family::Ominus, 2, q});
  }
  for (unsigned q : {2U, 3U}) {
    out.push_back({Family::Oplus, 4, q});
    out.push_back({Family::Ominus, 4, q});
  }
  out.push_back({Family::Oplus, 6, 2});
  out.push_back({Family::Ominus, 6, 2});
  for (unsigned q : {3U, 5U, 7U, 9U}) out.push_back({Family::SOodd, 3, q});
  out.push_back({Family::SOodd, 5, 3});
  return out;
}

std::vector<YoungCase> weyl_young(std::size_t max_n) {
  std::vector<YoungCase> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::size_t k = 1; 2 * k <= n; ++k) out.push_back({n, k});
  }
  return out;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames{"bounds", "cosets", "structural", "classical-small", "weyl-young"};
  return kNames;
}

json describe(const std::string& name) {
  json out = json::array();
  if (name == "bounds") {
    for (const auto& c : bounds()) {
      json doc = action_spec(c.instance.name, c.instance.action);
      out.push_back(doc);
    }
  } else if (name == "cosets") {
    for (const auto& c : cosets()) {
      json doc = action_spec(c.name, c.setting.action());
      doc["normal"] = perm_list(c.setting.normal().generators());
      doc["element"] = c.setting.coset_rep().images();
      out.push_back(doc);
    }
    for (const auto& h : hall_pairs()) {
      json doc = group_document("hall:" + h.name, h.ambient);
      doc["normal"] = perm_list(h.normal_hall.generators());
      out.push_back(doc);
    }
  } else if (name == "structural" || name == "lemmas8") { // older name kept as an alias
    LemmaCorpus c = structural();
    for (const auto& r : c.regular) out.push_back(group_document(r.name, r.action.group()));
    for (const auto& p : c.product) out.push_back(group_document(p.name, p.action.group()));
    for (const auto& d : c.diagonal) out.push_back(group_document(d.name, d.action.group()));
  } else if (name == "classical-small") {
    for (const auto& s : classical_small()) out.push_back({{"family", std::string(to_string(s.family))}, {"n", s.n}, {"q", s.q}});
  } else if (name == "weyl-young") {
    for (const auto& y : weyl_young()) out.push_back({{"type", "A"}, {"rank", y.n - 1}, {"young", {y.k, y.n - y.k}}});
  } else {
    throw Error(ErrorKind::UnknownCorpus, "unknown corpus '" + name + "'");
  }
  return out;
}

} // namespace drg::corpus
