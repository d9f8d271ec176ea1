#include <algorithm>
#include <numeric>

#include "drg/classcount.hpp"

namespace drg {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t p : parts_) {
    if (p == 0) throw Error(ErrorKind::BadPartition, "partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::size_t Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

namespace {

void build_partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    build_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

bool coprime_order(std::uint64_t order, unsigned p) { return p == 0 || order % p != 0; }

} // namespace

std::vector<Partition> partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> cur;
  build_partitions(n, n, cur, out);
  return out;
}

MatrixClassTable matrix_classes(const ClassicalGroup& group) {
  MatrixClassTable t;
  t.partition = detail::conjugacy_partition(group.ops(), group.table(), group.generator_entries());
  for (std::uint32_t rep : t.partition.representative) {
    t.representative_order.push_back(detail::element_order(group.ops(), group.element_entries(rep)));
  }
  return t;
}

std::uint64_t p_regular_class_count(const MatrixClassTable& classes, unsigned p) {
  return static_cast<std::uint64_t>(std::count_if(classes.representative_order.begin(), classes.representative_order.end(),
                                                  [p](std::uint64_t o) { return coprime_order(o, p); }));
}

std::uint64_t p_regular_class_count(const PermGroup& group, const ClassTable& classes, unsigned p) {
  (void)group;
  return static_cast<std::uint64_t>(std::count_if(classes.classes.begin(), classes.classes.end(),
                                                  [p](const ConjugacyClass& c) { return coprime_order(c.representative.order(), p); }));
}

ClassCountRecord class_count(const ClassicalGroup& group) {
  MatrixClassTable t = matrix_classes(group);
  ClassCountRecord r;
  r.family = group.family();
  r.n = group.n();
  r.q = group.q();
  r.k = t.count();
  r.k_p = p_regular_class_count(t, group.characteristic());
  r.method = "brute";
  return r;
}

ClassCountRecord class_count(Family family, std::size_t n, unsigned q, const std::string& method, std::size_t cap) {
  if (method != "brute" && method != "genfun" && method != "both") {
    throw Error(ErrorKind::InvalidInput, "method must be brute, genfun or both");
  }
  if (method != "brute" && family != Family::GL) {
    throw Error(ErrorKind::UnsupportedFamily, "the generating function is only available for GL");
  }
  if (method == "genfun") {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "dimension must be >= 1");
    if (!prime_power(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    ClassCountRecord r;
    r.family = family;
    r.n = n;
    r.q = q;
    r.k = k_gl_genfun(n, q).convert_to<std::uint64_t>();
    // p'-classes of GL(n,q) are the semisimple ones: monic degree-n polynomials with nonzero constant term
    BigInt qn = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n));
    r.k_p = (qn - qn / q).convert_to<std::uint64_t>();
    r.method = "genfun";
    return r;
  }
  ClassCountRecord r = class_count(build_classical(family, n, q, cap));
  if (method == "both") {
    BigInt g = k_gl_genfun(n, q);
    if (g != r.k) {
      throw Error(ErrorKind::Internal, "generating function gives " + g.str() + ", enumeration gives " + std::to_string(r.k));
    }
    r.method = "both";
  }
  return r;
}

ExactRatio rss_proportion(const ClassicalGroup& group) {
  MatrixClassTable t = matrix_classes(group);
  std::uint64_t good = 0;
  for (std::size_t c = 0; c < t.count(); ++c) {
    if (is_regular_semisimple(group.element(t.partition.representative[c]))) good += t.partition.size[c];
  }
  return ratio(good, group.order());
}

std::uint64_t semisimple_class_count(const ClassicalGroup& group) {
  return p_regular_class_count(matrix_classes(group), group.characteristic());
}

RssReport rss_report(const ClassicalGroup& group) {
  RssReport r;
  r.proportion = rss_proportion(group);
  r.exact_criterion = group.family() != Family::Oplus && group.family() != Family::Ominus;
  if (group.q() > 1) {
    r.lower_bound = ExactRatio(1) - ExactRatio(BigInt(5), BigInt(group.q() - 1));
  }
  r.bound_positive = r.lower_bound > ExactRatio(0);
  r.pass = !r.bound_positive || r.proportion > r.lower_bound;
  return r;
}

SemisimpleReport semisimple_report(const ClassicalGroup& group) {
  SemisimpleReport r;
  r.count = semisimple_class_count(group);
  r.q_to_rank = boost::multiprecision::pow(BigInt(group.q()), static_cast<unsigned>(group.rank()));
  const Family f = group.family();
  r.simply_connected = f == Family::SL || f == Family::SU || f == Family::Sp;
  r.at_most = BigInt(r.count) <= r.q_to_rank;
  r.equality = BigInt(r.count) == r.q_to_rank;
  return r;
}

CentralQuotientReport central_quotient(const ClassicalGroup& group) {
  MatrixClassTable t = matrix_classes(group);
  const auto& ops = group.ops();
  const auto gens = group.generator_entries();
  const std::size_t w = ops.width();
  std::vector<Fq> ab(w), ba(w);

  std::vector<std::uint32_t> center;
  for (std::size_t i = 0; i < group.order(); ++i) {
    auto z = group.element_entries(i);
    bool central = true;
    for (const auto& g : gens) {
      ops.multiply(z.data(), g.data(), ab.data());
      ops.multiply(g.data(), z.data(), ba.data());
      if (ab != ba) {
        central = false;
        break;
      }
    }
    if (central) center.push_back(static_cast<std::uint32_t>(i));
  }

  // union classes C and Cz
  std::vector<std::uint32_t> parent(t.count());
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < t.count(); ++c) {
    auto rep = group.element_entries(t.partition.representative[c]);
    for (std::uint32_t zi : center) {
      ops.multiply(rep.data(), group.element_entries(zi).data(), ab.data());
      std::uint32_t other = t.partition.class_of[*group.table().find(ab)];
      parent[find(static_cast<std::uint32_t>(c))] = find(other);
    }
  }
  CentralQuotientReport r;
  r.center_order = center.size();
  r.k_group = t.count();
  for (std::uint32_t c = 0; c < t.count(); ++c) r.k_quotient += find(c) == c;
  return r;
}

IndexLemmaReport check_index_lemma(const PermGroup& group, const PermGroup& subgroup, unsigned p) {
  if (!group.has_subgroup(subgroup)) throw Error(ErrorKind::NotSubgroup, "H is not a subgroup of G");
  IndexLemmaReport r;
  r.index = group.order() / subgroup.order();
  r.k_group = p_regular_class_count(group, conjugacy_classes(group), p);
  r.k_subgroup = p_regular_class_count(subgroup, conjugacy_classes(subgroup), p);
  r.group_bound = r.k_group <= r.index * r.k_subgroup;
  r.subgroup_bound = r.k_subgroup <= r.index * r.k_group;
  r.normal = std::all_of(group.generators().begin(), group.generators().end(), [&](const Permutation& g) {
    return std::all_of(subgroup.generators().begin(), subgroup.generators().end(),
                       [&](const Permutation& h) { return subgroup.contains(g.conjugate(h)); });
  });
  if (r.normal) {
    if (r.index == 1) {
      r.k_quotient = 1;
    } else {
      // G acts on the cosets of a normal H with kernel H, so the image is G/H
      GroupAction cosets = GroupAction::cosets(group, subgroup);
      std::vector<Permutation> gens;
      for (const auto& g : group.generators()) gens.push_back(cosets.induced(g));
      PermGroup quotient = PermGroup::close(gens);
      r.k_quotient = p_regular_class_count(quotient, conjugacy_classes(quotient), p);
    }
    r.quotient_bound = r.k_group <= r.k_subgroup * r.k_quotient;
  }
  return r;
}

IndexLemmaReport check_index_lemma(const ClassicalGroup& group, const ClassicalGroup& subgroup, unsigned p) {
  if (group.n() != subgroup.n() || group.field().q() != subgroup.field().q()) {
    throw Error(ErrorKind::NotSubgroup, subgroup.name() + " does not live in " + group.name());
  }
  for (const auto& h : subgroup.generators()) {
    if (!group.contains(h)) throw Error(ErrorKind::NotSubgroup, subgroup.name() + " is not contained in " + group.name());
  }
  return check_index_lemma(to_permutation_group(group), to_permutation_group(subgroup), p);
}

} // namespace drg
