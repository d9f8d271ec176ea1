#include <algorithm>
#include <random>

#include "drg/derange.hpp"

namespace drg {

bool SuiteReport::all_pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; }));
}

PermGroup derived_subgroup(const PermGroup& group) {
  const auto& gens = group.generators();
  const std::size_t deg = group.degree();
  std::vector<Permutation> comms;
  for (const auto& s : gens) {
    for (const auto& t : gens) {
      Permutation c = s.inverse() * t.inverse() * s * t;
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  if (comms.empty()) return PermGroup::close({Permutation::identity(deg)});
  PermGroup d = PermGroup::close(comms, group.order());
  // normal closure under conjugation by the group's generators
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& g : gens) {
      for (const auto& x : d.generators()) {
        Permutation y = g.conjugate(x);
        if (!d.contains(y)) {
          comms.push_back(std::move(y));
          d = PermGroup::close(comms, group.order());
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return d;
}

bool is_solvable(const PermGroup& group) {
  PermGroup g = group;
  while (g.order() > 1) {
    PermGroup d = derived_subgroup(g);
    if (d.order() == g.order()) return false;
    g = d;
  }
  return true;
}

bool exceeds_inverse_log2(const ExactRatio& r, std::uint64_t m) {
  if (r <= ExactRatio(0) || m < 2) return false;
  // num/den > 1/log2(m)  <=>  num * log2(m) > den  <=>  m^num > 2^den
  BigInt num = r.numerator(), den = r.denominator();
  BigInt lhs = boost::multiprecision::pow(BigInt(m), num.convert_to<unsigned>());
  BigInt rhs = BigInt(1) << den.convert_to<unsigned>();
  return lhs > rhs;
}

namespace {

CheckRow row(const std::string& inst, const std::string& check, bool pass, std::string detail) {
  return CheckRow{inst, check, pass, std::move(detail)};
}

std::string describe(const DerangementReport& r) {
  return "delta=" + r.delta.to_string() + " n=" + std::to_string(r.n) + " |pop|=" + std::to_string(r.population);
}

} // namespace

SuiteReport verify_bound_suite(const std::vector<BoundInstance>& actions, const std::vector<CosetInstance>& cosets) {
  SuiteReport out;
  for (const auto& inst : actions) {
    const auto& act = inst.action;
    if (!is_transitive(act)) {
      out.rows.push_back(row(inst.name, "transitive", false, "action is not transitive"));
      continue;
    }
    DerangementReport r = delta(act);
    const std::size_t n = r.n;
    const std::string d = describe(r);
    const ExactRatio one_n = ratio(1, n), two_n = ratio(2, n);
    out.rows.push_back(row(inst.name, "delta>=1/n", r.delta >= one_n, d));
    out.rows.push_back(row(inst.name, "delta=1/n iff Frobenius of order n(n-1)",
                           (r.delta == one_n) == r.frobenius_order_nn1,
                           d + (r.frobenius_order_nn1 ? " frobenius n(n-1)" : "")));
    if (n > 6) {
      bool exempt = r.frobenius_order_nn1 || r.frobenius_order_half;
      out.rows.push_back(row(inst.name, "delta>2/n unless Frobenius n(n-1) or n(n-1)/2",
                             r.delta > two_n || exempt, d + (exempt ? " (exempt Frobenius)" : "")));
    }
  }

  std::mt19937_64 rng(20240501);
  for (const auto& inst : cosets) {
    const auto& s = inst.setting;
    DerangementReport r = coset_delta(s);
    const std::string d = describe(r);
    const ExactRatio one_n = ratio(1, r.n);
    auto sum = coset_fixed_point_sum(s);
    out.rows.push_back(row(inst.name, "sum f(ag) = |G| c", sum.holds(),
                           "sum=" + std::to_string(sum.sum) + " |G|=" + std::to_string(sum.normal_order) +
                               " c=" + std::to_string(sum.common_orbits)));
    out.rows.push_back(row(inst.name, "delta in {0} or [1/n,1]", r.delta.is_zero() || r.delta >= one_n, d));
    auto cert = is_exceptional(s);
    out.rows.push_back(row(inst.name, "delta=0 iff exceptional", r.delta.is_zero() == cert.exceptional,
                           d + (cert.exceptional ? " exceptional" : " not exceptional")));
    out.rows.push_back(row(inst.name, "not exceptional => delta>=1/n", cert.exceptional || r.delta >= one_n, d));

    auto arg = coset_counting_argument(s);
    out.rows.push_back(row(inst.name, "counting argument",
                           arg.sum_identity && arg.lower_bound && arg.d1_empty,
                           "|K|=" + std::to_string(arg.kernel_order) + " d=" + std::to_string(arg.d) +
                               " |Delta|=" + std::to_string(arg.derangements)));

    // Any other generating coset gives the same proportion.
    const auto& g = s.normal();
    Permutation shifted = s.coset_rep() * g.element(rng() % g.order());
    bool invariant = coset_delta(s.with_coset_rep(shifted)).delta == r.delta;
    out.rows.push_back(row(inst.name, "delta independent of generating coset", invariant, d));
  }
  return out;
}

ExactRatio product_component_delta(const ProductInstance& inst) {
  const auto& act = inst.action;
  const auto& g = act.group();
  const std::size_t base = inst.base_size, t = inst.copies;
  std::size_t total = 1;
  for (std::size_t i = 0; i < t; ++i) total *= base;
  if (total != act.size()) throw Error(ErrorKind::InvalidInput, "action size is not base_size^copies");
  auto coord = [&](std::size_t point, std::size_t i) {
    for (std::size_t k = 0; k < i; ++k) point /= base;
    return point % base;
  };
  std::size_t stride1 = 1;
  std::uint64_t g1 = 0, g1_derangements = 0;
  for (std::size_t e = 0; e < g.order(); ++e) {
    auto x = g.element_images(e);
    // slot 0 goes to the slot in which the image of (1,0,...,0) differs from that of 0
    std::size_t y0 = act.image(x, 0), y1 = act.image(x, stride1);
    std::size_t target = t;
    for (std::size_t j = 0; j < t; ++j) {
      if (coord(y0, j) != coord(y1, j)) target = j;
    }
    if (target != 0) continue;
    ++g1;
    std::vector<std::size_t> on_y(base);
    for (std::size_t y = 0; y < base; ++y) on_y[y] = coord(act.image(x, y), 0);
    for (std::size_t p = 0; p < total; ++p) {
      if (coord(act.image(x, p), 0) != on_y[coord(p, 0)]) {
        throw Error(ErrorKind::InvalidInput, "action does not preserve the stated product structure");
      }
    }
    bool derangement = true;
    for (std::size_t y = 0; y < base; ++y) derangement = derangement && on_y[y] != y;
    g1_derangements += derangement;
  }
  if (g1 == 0) throw Error(ErrorKind::InvalidInput, "no element stabilizes the first coordinate slot");
  return ratio(g1_derangements, g1);
}

SuiteReport structural_lemma_checks(const LemmaCorpus& corpus) {
  SuiteReport out;
  for (const auto& inst : corpus.regular) {
    const auto& act = inst.action;
    const auto& g = act.group();
    const auto& nsub = inst.regular_normal;
    bool regular = g.has_subgroup(nsub) && g.normalizes(nsub) && nsub.order() == act.size() &&
                   orbits(act, nsub.generators()).size() == 1;
    out.rows.push_back(row(inst.name, "regular normal subgroup", regular, "|N|=" + std::to_string(nsub.order())));
    out.rows.push_back(row(inst.name, "N nonsolvable", !is_solvable(nsub), ""));

    // Stabilizer elements act on N by conjugation; each must centralize some n != 1.
    bool centralizers = true;
    for (std::size_t i = 1; i < g.order() && centralizers; ++i) {
      auto h = g.element_images(i);
      if (act.image(h, 0) != 0) continue;
      Permutation hp = Permutation::from_images(h);
      bool found = false;
      for (std::size_t k = 1; k < nsub.order() && !found; ++k) {
        Permutation x = nsub.element(k);
        found = hp * x == x * hp;
      }
      centralizers = found;
    }
    out.rows.push_back(row(inst.name, "C_N(h) != 1 for stabilizer elements", centralizers, ""));

    bool zero_or_two = true;
    for (std::size_t i = 0; i < g.order(); ++i) {
      std::size_t f = act.fixed_point_count(g.element_images(i));
      zero_or_two = zero_or_two && f != 1;
    }
    out.rows.push_back(row(inst.name, "every element fixes 0 or >=2 points", zero_or_two, ""));
    DerangementReport r = delta(act);
    out.rows.push_back(row(inst.name, "delta>=1/2", r.delta >= ratio(1, 2), describe(r)));
  }

  for (const auto& inst : corpus.product) {
    DerangementReport r = delta(inst.action);
    ExactRatio d1 = product_component_delta(inst);
    ExactRatio bound = d1 / ExactRatio(static_cast<std::int64_t>(inst.copies));
    out.rows.push_back(row(inst.name, "delta >= delta(G1,Y)/t", r.delta >= bound,
                           describe(r) + " delta(G1,Y)=" + d1.to_string() + " t=" + std::to_string(inst.copies)));
  }

  for (const auto& inst : corpus.diagonal) {
    DerangementReport r = delta_by_classes(inst.action, conjugacy_classes(inst.action.group()));
    out.rows.push_back(row(inst.name, "delta >= 1/(2t)", r.delta >= ratio(1, 2 * inst.copies), describe(r)));
    out.rows.push_back(row(inst.name, "delta > 1/log2 n", exceeds_inverse_log2(r.delta, r.n), describe(r)));
  }
  return out;
}

} // namespace drg
