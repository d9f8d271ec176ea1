#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drg/fqlin.hpp"
#include "drg/permcore.hpp"
#include "drg/ratio.hpp"

namespace drg {

/// Weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  /// Sorts the parts; throws BadPartition on a zero part.
  explicit Partition(std::vector<std::size_t> parts);
  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t weight() const;
  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<std::size_t> parts_;
};

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions(std::size_t n);

struct ClassCountRecord {
  Family family = Family::GL;
  std::size_t n = 0;
  unsigned q = 0;
  std::uint64_t k = 0;   // conjugacy classes
  std::uint64_t k_p = 0; // classes of elements of order prime to the characteristic
  std::string method;    // "brute", "genfun" or "both"
};

/// Conjugacy classes of a materialized matrix group, with the order of each
/// class representative.
struct MatrixClassTable {
  detail::ClassPartition partition;
  std::vector<std::uint64_t> representative_order;
  std::size_t count() const { return partition.size.size(); }
};

MatrixClassTable matrix_classes(const ClassicalGroup& group);

/// Brute-force k and k_p.
ClassCountRecord class_count(const ClassicalGroup& group);
/// For GL, method "genfun" skips enumeration and "both" cross-checks (throws
/// Internal on disagreement).  Other families accept only "brute".
ClassCountRecord class_count(Family family, std::size_t n, unsigned q, const std::string& method = "brute",
                             std::size_t cap = kDefaultCap);

/// Number of monic irreducible polynomials of degree d over F_q.
BigInt irreducible_count(std::size_t d, std::uint64_t q);
/// k(GL(n,q)) as the t^n coefficient of prod_d P(t^d)^{N*(d)}, P the
/// partition series and N*(d) the number of monic irreducibles other than x.
BigInt k_gl_genfun(std::size_t n, std::uint64_t q);
/// Independent closed form: t^n coefficient of prod_i (1 - t^i) / (1 - q t^i).
BigInt k_gl_closed_form(std::size_t n, std::uint64_t q);

/// Number of classes whose representatives have order prime to p; p = 0
/// counts every class.
std::uint64_t p_regular_class_count(const PermGroup& group, const ClassTable& classes, unsigned p);
std::uint64_t p_regular_class_count(const MatrixClassTable& classes, unsigned p);

struct BoundCheck {
  int item = 0;             // which of the seven class-count bounds applies
  std::size_t rank = 0;     // the exponent n in q^n (dimension for SL/SU)
  std::uint64_t k = 0;
  ExactRatio rational_part; // rhs = rational_part + sqrt_coefficient * sqrt(q)
  ExactRatio sqrt_coefficient;
  double rhs = 0.0;         // for display only
  bool pass = false;
};

/// Exact comparison of k against the bound for the record's family; throws
/// FamilyMismatch for GL/GU and for parities that no item covers.
BoundCheck bound_check(const ClassCountRecord& record);

struct IndexLemmaReport {
  std::uint64_t index = 0;
  std::uint64_t k_group = 0, k_subgroup = 0;
  bool group_bound = false;    // k_p(G) <= d k_p(H)
  bool subgroup_bound = false; // k_p(H) <= d k_p(G)
  bool normal = false;
  std::uint64_t k_quotient = 0;
  bool quotient_bound = true;  // k_p(G) <= k_p(H) k_p(G/H), when H is normal
  bool pass() const { return group_bound && subgroup_bound && quotient_bound; }
};

/// p = 0 means all classes.  Throws NotSubgroup.
IndexLemmaReport check_index_lemma(const PermGroup& group, const PermGroup& subgroup, unsigned p);
/// Matrix groups are compared through their action on vectors.
IndexLemmaReport check_index_lemma(const ClassicalGroup& group, const ClassicalGroup& subgroup, unsigned p);

/// Proportion of elements with squarefree characteristic polynomial.
ExactRatio rss_proportion(const ClassicalGroup& group);
/// Classes of semisimple (p'-order) elements.
std::uint64_t semisimple_class_count(const ClassicalGroup& group);

struct RssReport {
  ExactRatio proportion;
  ExactRatio lower_bound;  // 1 - 5/(q-1)
  bool bound_positive = false;
  bool pass = false;       // proportion > lower_bound (vacuous when not positive)
  bool exact_criterion = true; // false for O±, where squarefree is only sufficient
};
RssReport rss_report(const ClassicalGroup& group);

struct SemisimpleReport {
  std::uint64_t count = 0;
  BigInt q_to_rank;
  bool simply_connected = false; // SL, SU, Sp
  bool at_most = false;
  bool equality = false;
};
SemisimpleReport semisimple_report(const ClassicalGroup& group);

struct CentralQuotientReport {
  std::uint64_t center_order = 0;
  std::uint64_t k_group = 0;
  std::uint64_t k_quotient = 0;
  bool pass() const { return k_quotient <= k_group; }
};
/// k(G/Z(G)) from merging classes C and Cz for central z.
CentralQuotientReport central_quotient(const ClassicalGroup& group);

/// δ(G, G/H) for an orthogonal subgroup H of a symplectic group G in even
/// characteristic, computed two ways: from the G-classes meeting H, and from
/// G permuting the orbit of H's quadratic form under Q -> Q∘g.
struct FormsDelta {
  ExactRatio by_classes;
  ExactRatio by_action;
  std::size_t degree = 0; // |G : H|
  bool agree() const { return by_classes == by_action; }
};
/// Throws FamilyMismatch unless (Sp, O±) share n and an even q; NotSubgroup if
/// H is not inside G.
FormsDelta symplectic_on_forms(const ClassicalGroup& sp, const ClassicalGroup& orthogonal, std::size_t cap = kDefaultCap);

struct LimitEval {
  Family family = Family::GL;
  unsigned q = 0;
  std::size_t depth = 0;
  int item = 0;
  ExactRatio value;          // truncated product
  ExactRatio last_deviation; // |value(depth) / value(depth - 1) - 1|
};

/// Truncated limiting constant lim k(G)/q^n for GL, GU, Sp, O±, SO(odd);
/// UnsupportedFamily for SL/SU and for SO with q even; InvalidInput for depth 0.
LimitEval limit_partial(Family family, unsigned q, std::size_t depth = 40);

} // namespace drg
