#include <numeric>

#include "drg/classcount.hpp"
#include "drg/cli.hpp"
#include "drg/corpus.hpp"
#include "drg/fixtures.hpp"
#include "drg/weyl.hpp"

namespace drg::cli {

namespace {

CheckRow row(std::string instance, std::string check, bool pass, std::string detail = {}) {
  return {std::move(instance), std::move(check), pass, std::move(detail)};
}

SuiteReport bounds_suite() {
  SuiteReport r = verify_bound_suite(corpus::bound_instances(), {});
  for (const auto& c : corpus::bounds()) {
    DerangementReport d = delta(c.instance.action);
    bool equality = d.delta == ExactRatio(BigInt(1), BigInt(d.n));
    r.rows.push_back(row(c.instance.name, "delta=1/n exactly on designated AGL(1,q)", equality == c.designated_nn1,
                         "delta=" + d.delta.to_string()));
  }
  return r;
}

SuiteReport hall_suite(std::size_t cap) {
  SuiteReport r;
  for (const auto& h : corpus::hall_pairs()) {
    const std::uint64_t index = h.ambient.order() / h.normal_hall.order();
    r.rows.push_back(row(h.name, "normal Hall subgroup", std::gcd(index, h.normal_hall.order()) == 1,
                         "|G|=" + std::to_string(h.normal_hall.order()) + " index=" + std::to_string(index)));
    HallConstruction built = exceptional_from_hall(h.ambient, h.normal_hall, cap);
    ExceptionalityCertificate cert = is_exceptional(built.setting);
    r.rows.push_back(row(h.name, "construction is exceptional", cert.exceptional,
                         "degree=" + std::to_string(built.setting.action().size())));
    r.rows.push_back(row(h.name, "coset delta is zero", coset_delta(built.setting).delta.is_zero()));
    r.rows.push_back(row(h.name, "complement order equals index", built.complement.order() == index));
  }
  return r;
}

// The q^r ceiling on semisimple classes holds for the simply connected
// families; SO(2m+1, q) is adjoint and exceeds it (SO(3,3) = S4 has 4).
bool simply_connected_family(Family f) { return f == Family::SL || f == Family::SU || f == Family::Sp; }

SuiteReport classical_suite(std::size_t cap) {
  SuiteReport r;
  for (const auto& spec : corpus::classical_small()) {
    const std::string name = spec.name();
    ClassicalGroup g = build_classical(spec.family, spec.n, spec.q, cap);
    ClassCountRecord rec = class_count(g);
    const std::string kdetail = "k=" + std::to_string(rec.k);
    if (spec.family == Family::GL) {
      BigInt gen = k_gl_genfun(spec.n, spec.q);
      r.rows.push_back(row(name, "generating function equals enumeration", gen == rec.k, kdetail + " genfun=" + gen.str()));
      BigInt qn = boost::multiprecision::pow(BigInt(spec.q), static_cast<unsigned>(spec.n));
      r.rows.push_back(row(name, "k <= q^n", BigInt(rec.k) <= qn, kdetail));
    } else if (spec.family != Family::GU) {
      BoundCheck b = bound_check(rec);
      r.rows.push_back(row(name, "class-count bound item " + std::to_string(b.item), b.pass,
                           kdetail + " rhs~" + std::to_string(b.rhs)));
    }
    if (simply_connected_family(spec.family)) {
      SemisimpleReport s = semisimple_report(g);
      r.rows.push_back(row(name, "semisimple classes <= q^r", s.at_most,
                           std::to_string(s.count) + " vs " + s.q_to_rank.str()));
      r.rows.push_back(row(name, "semisimple classes = q^r (simply connected)", s.equality));
    }
    RssReport rss = rss_report(g);
    if (rss.bound_positive) {
      r.rows.push_back(row(name, "rss proportion > 1 - 5/(q-1)", rss.pass,
                           rss.proportion.to_string() + (rss.exact_criterion ? "" : " (squarefree test)")));
    }
    CentralQuotientReport cq = central_quotient(g);
    r.rows.push_back(row(name, "k(G/Z) <= k(G)", cq.pass(),
                         std::to_string(cq.k_quotient) + " <= " + std::to_string(cq.k_group)));
  }
  const std::vector<std::pair<corpus::ClassicalSpec, corpus::ClassicalSpec>> pairs{
      {{Family::GL, 2, 3}, {Family::SL, 2, 3}},
      {{Family::GL, 2, 4}, {Family::SL, 2, 4}},
      {{Family::GL, 2, 5}, {Family::SL, 2, 5}},
      {{Family::GU, 2, 2}, {Family::SU, 2, 2}},
      {{Family::GU, 2, 3}, {Family::SU, 2, 3}},
      {{Family::Sp, 4, 2}, {Family::Oplus, 4, 2}},
      {{Family::Sp, 4, 2}, {Family::Ominus, 4, 2}},
  };
  for (const auto& [big, small] : pairs) {
    ClassicalGroup g = build_classical(big.family, big.n, big.q, cap);
    ClassicalGroup h = build_classical(small.family, small.n, small.q, cap);
    for (unsigned p : {0U, g.characteristic()}) {
      IndexLemmaReport rep = check_index_lemma(g, h, p);
      r.rows.push_back(row(big.name() + ">" + small.name(), "index lemma p=" + std::to_string(p), rep.pass(),
                           "d=" + std::to_string(rep.index) + " kG=" + std::to_string(rep.k_group) +
                               " kH=" + std::to_string(rep.k_subgroup)));
    }
  }
  return r;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

SuiteReport weyl_suite(std::size_t cap) {
  SuiteReport r;
  const ExactRatio third(BigInt(1), BigInt(3));
  std::optional<WeylGroup> w;
  for (const auto& y : corpus::weyl_young()) {
    const std::string name = "S" + std::to_string(y.n) + "/Y(" + std::to_string(y.k) + "," + std::to_string(y.n - y.k) + ")";
    if (factorial(y.n) > cap) {
      r.rows.push_back(row(name, "skipped", true, "|S_n| exceeds cap " + std::to_string(cap)));
      continue;
    }
    if (!w || w->rank() != y.n - 1) w = weyl_group(WeylType::A, y.n - 1, cap);
    PermGroup young = young_subgroup(*w, {y.k, y.n - y.k});
    ParabolicDelta pd = limiting_delta_parabolic(*w, young);
    DerangementReport subsets = delta_by_classes(GroupAction::subsets(w->group(), y.k), w->class_table());
    r.rows.push_back(row(name, "1 - class mass = delta on k-subsets", pd.agrees && pd.delta == subsets.delta,
                         pd.delta.to_string()));
    r.rows.push_back(row(name, "delta >= 1/3", pd.delta >= third, pd.delta.to_string()));
  }
  for (std::size_t rank = 2; rank <= 6; ++rank) {
    WeylGroup b = weyl_group(WeylType::B, rank, cap);
    PermGroup d = d_in_b(b);
    const std::string name = "B" + std::to_string(rank) + "/D" + std::to_string(rank);
    ClassMassReport id = class_mass(b, d, Permutation::identity(b.group().degree()));
    ClassMassReport flip = class_mass(b, d, b_sign_flip(b));
    r.rows.push_back(row(name, "mass of identity coset = 1/2", id.mass == ExactRatio(BigInt(1), BigInt(2)), id.mass.to_string()));
    r.rows.push_back(row(name, "mass of sign-flip coset = 1/2", flip.mass == ExactRatio(BigInt(1), BigInt(2)),
                         flip.mass.to_string()));
    r.rows.push_back(row(name, "1 - class mass = coset delta", limiting_delta_parabolic(b, d).agrees));
  }
  for (WeylType t : {WeylType::A, WeylType::B, WeylType::D}) {
    for (std::size_t rank = 2; rank <= 6; ++rank) {
      if (t == WeylType::A && factorial(rank + 1) > cap) continue;
      WeylGroup wg = weyl_group(t, rank, cap);
      r.rows.push_back(row(std::string(to_string(t)) + std::to_string(rank), "analytic census = enumerated census",
                           analytic_class_census(t, rank) == enumerated_class_census(wg)));
    }
  }
  WeylGroup g2 = weyl_group(WeylType::G2, 2, cap);
  ClassMassReport m = class_mass(g2, g2_long_a2(g2), Permutation::identity(6));
  r.rows.push_back(row("G2/A2-long", "mass = 1/2", m.mass == ExactRatio(BigInt(1), BigInt(2)), m.mass.to_string()));
  r.rows.push_back(row("G2", "six classes", g2.classes().size() == 6));
  return r;
}

SuiteReport limits_suite() {
  SuiteReport r;
  const ExactRatio tol(BigInt(1), BigInt(1000000));
  auto gap = [&](Family f, unsigned q) {
    LimitEval a = limit_partial(f, q, 20), b = limit_partial(f, q, 40);
    ExactRatio diff = (b.value - a.value).abs();
    std::string label = std::string(to_string(f)) + " q=" + std::to_string(q);
    r.rows.push_back(row(label, "|P(40) - P(20)| < 1e-6", diff < tol, "gap~" + std::to_string(diff.to_double())));
  };
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) gap(Family::GL, q);
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) gap(Family::GU, q);
  for (unsigned q : {2U, 4U, 8U}) gap(Family::Sp, q);
  LimitEval gu = limit_partial(Family::GU, 2, 40);
  r.rows.push_back(row("GU q=2", "depth-40 value in [8.2, 8.3]",
                       gu.value >= ExactRatio(BigInt(41), BigInt(5)) && gu.value <= ExactRatio(BigInt(83), BigInt(10)),
                       std::to_string(gu.value.to_double())));
  return r;
}

SuiteReport shadow_suite(std::size_t cap) {
  SuiteReport r;
  for (unsigned q : {5U, 7U, 9U, 11U}) {
    DerangementReport d = delta(GroupAction::natural(fixtures::pgl2(q)));
    ExactRatio dist = (d.delta - ExactRatio(BigInt(1), BigInt(2))).abs();
    r.rows.push_back(row("PGL2-" + std::to_string(q), "|delta - 1/2| <= 1/q", dist <= ExactRatio(BigInt(1), BigInt(q)),
                         d.delta.to_string()));
  }
  ClassicalGroup sp = build_classical(Family::Sp, 4, 2, cap);
  for (Family f : {Family::Oplus, Family::Ominus}) {
    ClassicalGroup o = build_classical(f, 4, 2, cap);
    FormsDelta fd = symplectic_on_forms(sp, o, cap);
    r.rows.push_back(row("Sp(4,2)/" + o.name(), "class route = action route", fd.agree(),
                         fd.by_classes.to_string() + " vs " + fd.by_action.to_string()));
  }
  return r;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames{"bounds", "cosets", "hall", "lemmas", "classical", "weyl", "limits", "shadow"};
  return kNames;
}

SuiteReport verify_suite(const std::string& name, std::size_t cap) {
  if (name == "bounds") return bounds_suite();
  if (name == "cosets") return verify_bound_suite({}, corpus::cosets_with_hall());
  if (name == "hall") return hall_suite(cap);
  if (name == "lemmas") return structural_lemma_checks(corpus::structural());
  if (name == "classical") return classical_suite(cap);
  if (name == "weyl") return weyl_suite(cap);
  if (name == "limits") return limits_suite();
  if (name == "shadow") return shadow_suite(cap);
  throw Error(ErrorKind::UnknownCorpus, "unknown verification suite '" + name + "'");
}

} // namespace drg::cli
