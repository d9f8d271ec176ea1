// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance            all criteria
//   acceptance 3 7        selected criteria
// Every comparison is exact unless a tolerance is named below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "drg/classcount.hpp"
#include "drg/corpus.hpp"
#include "drg/derange.hpp"
#include "drg/fixtures.hpp"
#include "drg/weyl.hpp"

using namespace drg;

namespace {

// Pinned tolerances and limits.
const ExactRatio kLimitTolerance(BigInt(1), BigInt(1'000'000)); // |P(40) - P(20)|
const ExactRatio kGuLow(BigInt(41), BigInt(5));                 // 8.2
const ExactRatio kGuHigh(BigInt(83), BigInt(10));               // 8.3
constexpr std::size_t kSymmetricCap = 4'000'000;                // S10 has 3,628,800 elements

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

ExactRatio frac(std::int64_t a, std::int64_t b) { return ExactRatio(BigInt(a), BigInt(b)); }

// 1. delta >= 1/n, equality exactly on the AGL(1,q) instances
Outcome bound_one_over_n() {
  Outcome o;
  for (const auto& c : corpus::bounds()) {
    DerangementReport d = delta(c.instance.action);
    const ExactRatio inv = frac(1, static_cast<std::int64_t>(d.n));
    o.expect(d.delta >= inv, c.instance.name + " delta=" + d.delta.to_string() + " < 1/n");
    o.expect((d.delta == inv) == c.designated_nn1, c.instance.name + " equality mismatch delta=" + d.delta.to_string());
    if (d.delta == inv) o.expect(d.frobenius_order_nn1, c.instance.name + " equality without Frobenius n(n-1)");
  }
  return o;
}

// 2. n > 6: delta > 2/n unless Frobenius of order n(n-1) or n(n-1)/2
Outcome bound_two_over_n() {
  Outcome o;
  for (const auto& c : corpus::bounds()) {
    DerangementReport d = delta(c.instance.action);
    if (d.n <= 6) continue;
    const bool designated = c.designated_nn1 || c.designated_half;
    const bool above = d.delta > frac(2, static_cast<std::int64_t>(d.n));
    o.expect(above || designated, c.instance.name + " delta=" + d.delta.to_string() + " not above 2/n");
    if (designated) {
      o.expect(d.frobenius_order_nn1 || d.frobenius_order_half, c.instance.name + " designated but not Frobenius");
    }
  }
  return o;
}

// 3. coset suite
Outcome coset_suite() {
  Outcome o;
  auto settings = corpus::cosets_with_hall();
  o.expect(settings.size() >= 10, "fewer than 10 coset settings");
  std::set<std::string> names;
  for (const auto& c : settings) names.insert(c.name);
  for (const char* required : {"S3/A3", "S4/A4", "hall:C7:C3/C7", "F20/C5"}) {
    o.expect(names.count(required) == 1, std::string("missing setting ") + required);
  }
  for (const auto& c : settings) {
    CosetSum sum = coset_fixed_point_sum(c.setting);
    o.expect(sum.holds(), c.name + " fixed-point sum " + std::to_string(sum.sum) + " != |G| c");
    DerangementReport d = coset_delta(c.setting);
    const ExactRatio inv = frac(1, static_cast<std::int64_t>(d.n));
    o.expect(d.delta.is_zero() || (d.delta >= inv && d.delta <= ExactRatio(1)), c.name + " delta=" + d.delta.to_string());
    o.expect(d.delta.is_zero() == is_exceptional(c.setting).exceptional, c.name + " zero/exceptional mismatch");
  }
  return o;
}

// 4. Hall construction
Outcome hall_construction() {
  Outcome o;
  for (const auto& h : corpus::hall_pairs()) {
    HallConstruction built = exceptional_from_hall(h.ambient, h.normal_hall);
    o.expect(is_exceptional(built.setting).exceptional, h.name + " not exceptional");
  }
  return o;
}

// Derangement numbers D_n = (n-1)(D_{n-1} + D_{n-2}): independent oracle for k = 1.
std::uint64_t derangement_number(std::size_t n) {
  std::uint64_t a = 1, b = 0; // D_0, D_1
  if (n == 0) return a;
  for (std::size_t i = 2; i <= n; ++i) {
    std::uint64_t c = (i - 1) * (a + b);
    a = b;
    b = c;
  }
  return b;
}

// 5. Weyl identity
Outcome weyl_identity() {
  Outcome o;
  const ExactRatio third = frac(1, 3), half = frac(1, 2);
  for (std::size_t n = 2; n <= 10; ++n) {
    WeylGroup w = weyl_group(WeylType::A, n - 1, kSymmetricCap);
    std::uint64_t fact = w.order();
    for (std::size_t k = 1; k <= n / 2; ++k) {
      const std::string name = "S" + std::to_string(n) + " k=" + std::to_string(k);
      ClassMassReport m = class_mass(w, young_subgroup(w, {k, n - k}), Permutation::identity(n));
      DerangementReport subsets = delta_by_classes(GroupAction::subsets(w.group(), k), w.class_table());
      o.expect(ExactRatio(1) - m.mass == subsets.delta, name + " class mass disagrees with subsets delta");
      o.expect(subsets.delta >= third, name + " delta=" + subsets.delta.to_string() + " < 1/3");
      if (k == 1) {
        o.expect(subsets.delta == ratio(derangement_number(n), fact), name + " differs from D_n/n!");
      }
    }
  }
  for (std::size_t r = 2; r <= 6; ++r) {
    WeylGroup b = weyl_group(WeylType::B, r);
    PermGroup d = d_in_b(b);
    o.expect(class_mass(b, d, Permutation::identity(2 * r)).mass == half, "B" + std::to_string(r) + " identity coset");
    o.expect(class_mass(b, d, b_sign_flip(b)).mass == half, "B" + std::to_string(r) + " sign-flip coset");
  }
  return o;
}

// 6. generating function against enumeration for GL
Outcome gl_class_counts() {
  Outcome o;
  std::vector<std::pair<std::size_t, unsigned>> cases{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {4, 2}};
  // q = 6 is not a prime power, so there is no GL(1,6) to enumerate
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) cases.push_back({1, q});
  for (const auto& [n, q] : cases) {
    const std::string name = "GL(" + std::to_string(n) + "," + std::to_string(q) + ")";
    ClassCountRecord brute = class_count(Family::GL, n, q, "brute");
    BigInt gen = k_gl_genfun(n, q);
    o.expect(gen == brute.k, name + " genfun=" + gen.str() + " brute=" + std::to_string(brute.k));
    o.expect(k_gl_closed_form(n, q) == brute.k, name + " closed form disagrees");
  }
  return o;
}

// 7. class-count bounds on every buildable SL/SU/Sp/O±/SO instance
Outcome class_count_bounds() {
  Outcome o;
  for (const auto& spec : corpus::classical_small()) {
    if (spec.family == Family::GL || spec.family == Family::GU) continue;
    BoundCheck b = bound_check(class_count(spec.family, spec.n, spec.q));
    o.expect(b.pass, spec.name() + " k=" + std::to_string(b.k) + " above bound " + std::to_string(b.rhs));
  }
  return o;
}

// rss proportion of GL(2,q): split semisimple classes (q-1)(q-2)/2 of size
// q(q+1), elliptic classes (q^2-q)/2 of size q(q-1).
ExactRatio gl2_rss_oracle(std::int64_t q) {
  const std::int64_t split = (q - 1) * (q - 2) / 2 * q * (q + 1);
  const std::int64_t elliptic = (q * q - q) / 2 * q * (q - 1);
  return frac(split + elliptic, q * (q - 1) * (q - 1) * (q + 1));
}

// 8. semisimple class ceiling and rss proportion
Outcome semisimple_and_rss() {
  Outcome o;
  std::vector<corpus::ClassicalSpec> equality{{Family::SL, 2, 3}, {Family::SL, 2, 5}, {Family::SL, 2, 7}, {Family::Sp, 4, 3}};
  for (const auto& spec : equality) {
    SemisimpleReport s = semisimple_report(build_classical(spec.family, spec.n, spec.q));
    o.expect(s.at_most && s.equality, spec.name() + " semisimple classes " + std::to_string(s.count) + " vs " + s.q_to_rank.str());
  }
  std::vector<corpus::ClassicalSpec> rss_cases{{Family::SL, 2, 8}, {Family::SL, 2, 9}, {Family::GL, 2, 11}};
  for (const auto& spec : corpus::classical_small()) rss_cases.push_back(spec);
  for (const auto& spec : rss_cases) {
    RssReport r = rss_report(build_classical(spec.family, spec.n, spec.q));
    if (r.bound_positive) o.expect(r.pass, spec.name() + " rss " + r.proportion.to_string());
  }
  for (std::int64_t q : {7, 11}) {
    ExactRatio got = rss_proportion(build_classical(Family::GL, 2, static_cast<unsigned>(q)));
    o.expect(got == gl2_rss_oracle(q), "GL(2," + std::to_string(q) + ") rss " + got.to_string());
  }
  o.expect(gl2_rss_oracle(7) == frac(41, 48), "GL(2,7) oracle is not 41/48");
  return o;
}

// 9. convergence of the truncated limit products
Outcome limit_convergence() {
  Outcome o;
  auto gap = [&](Family f, unsigned q) {
    ExactRatio diff = (limit_partial(f, q, 40).value - limit_partial(f, q, 20).value).abs();
    o.expect(diff < kLimitTolerance, std::string(to_string(f)) + " q=" + std::to_string(q) + " gap " +
                                         std::to_string(diff.to_double()));
  };
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) gap(Family::GL, q);
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) gap(Family::GU, q);
  for (unsigned q : {2U, 4U, 8U}) gap(Family::Sp, q);
  ExactRatio gu = limit_partial(Family::GU, 2, 40).value;
  o.expect(gu >= kGuLow && gu <= kGuHigh, "GU q=2 depth 40 = " + std::to_string(gu.to_double()));
  return o;
}

// 10. finite shadow of the limiting proportion 1/2
Outcome finite_shadow() {
  Outcome o;
  for (std::int64_t q : {5, 7, 9, 11}) {
    DerangementReport d = delta(GroupAction::natural(fixtures::pgl2(static_cast<unsigned>(q))));
    o.expect((d.delta - frac(1, 2)).abs() <= frac(1, q), "PGL2-" + std::to_string(q) + " delta=" + d.delta.to_string());
    // elliptic elements: q(q-1)/2 non-split tori with q non-identity elements each
    o.expect(d.delta == frac(q, 2 * (q + 1)), "PGL2-" + std::to_string(q) + " differs from q/(2(q+1))");
  }
  o.expect(delta(GroupAction::natural(fixtures::pgl2(5))).delta == frac(5, 12), "PGL2-5 is not 5/12");
  ClassicalGroup sp = build_classical(Family::Sp, 4, 2);
  for (Family f : {Family::Oplus, Family::Ominus}) {
    FormsDelta fd = symplectic_on_forms(sp, build_classical(f, 4, 2));
    o.expect(fd.agree(), std::string(to_string(f)) + " routes " + fd.by_classes.to_string() + " vs " + fd.by_action.to_string());
  }
  return o;
}

// 11. structural lemmas
Outcome structural_lemmas() {
  Outcome o;
  SuiteReport r = structural_lemma_checks(corpus::structural());
  for (const auto& row : r.rows) o.expect(row.pass, row.instance + ": " + row.check + " (" + row.detail + ")");
  return o;
}

struct Criterion {
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::map<int, Criterion>& criteria() {
  static const std::map<int, Criterion> kAll{
      {1, {"delta >= 1/n, equality exactly on AGL(1,q)", 30, bound_one_over_n}},
      {2, {"delta > 2/n for n > 6 outside designated Frobenius groups", 30, bound_two_over_n}},
      {3, {"coset fixed-point sums, coset delta in {0} or [1/n,1], zero iff exceptional", 30, coset_suite}},
      {4, {"Hall construction is exceptional", 60, hall_construction}},
      {5, {"Young and B/D class-mass identities", 300, weyl_identity}},
      {6, {"GL class counts: generating function = enumeration", 600, gl_class_counts}},
      {7, {"class-count bounds on classical groups", 900, class_count_bounds}},
      {8, {"semisimple class ceiling and rss proportion", 600, semisimple_and_rss}},
      {9, {"limit products converge (depth 20 vs 40)", 5, limit_convergence}},
      {10, {"PGL(2,q) shadow and Sp(4,2) forms action", 300, finite_shadow}},
      {11, {"regular-normal, product and diagonal lemmas", 600, structural_lemmas}},
  };
  return kAll;
}

} // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    int id = std::atoi(argv[i]);
    if (!criteria().count(id)) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
      return 2;
    }
    selected.push_back(id);
  }
  if (selected.empty()) {
    for (const auto& [id, c] : criteria()) selected.push_back(id);
  }
  int failed = 0;
  for (int id : selected) {
    const Criterion& c = criteria().at(id);
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("threw: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) out.expect(false, "over time budget");
    failed += !out.pass;
    std::printf("criterion %d: %s  %s  [%d checks, %.2fs]%s%s\n", id, out.pass ? "PASS" : "FAIL", c.title, out.checks,
                secs, out.detail.empty() ? "" : "\n    ", out.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
