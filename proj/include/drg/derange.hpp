#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drg/permcore.hpp"
#include "drg/ratio.hpp"

namespace drg {

/// Where a derangement proportion sits relative to 1/n and 2/n.
enum class BoundStatus {
  Zero,
  BelowOneOverN, // only possible for a counterexample; reported, never expected
  EqualsOneOverN,
  UpToTwoOverN,  // in (1/n, 2/n]
  AboveTwoOverN,
};

std::string_view to_string(BoundStatus s) noexcept;
BoundStatus classify(const ExactRatio& delta, std::size_t n);

struct DerangementReport {
  ExactRatio delta;
  std::uint64_t derangements = 0;
  std::uint64_t population = 0; // group order, or coset size
  std::size_t n = 0;
  BoundStatus status = BoundStatus::Zero;
  bool frobenius = false;
  bool frobenius_order_nn1 = false;  // Frobenius with |G| = n(n-1)
  bool frobenius_order_half = false; // Frobenius with |G| = n(n-1)/2
};

/// Proportion of group elements with no fixed point, by scanning every element.
DerangementReport delta(const GroupAction& action);
/// Same proportion, summing the sizes of classes whose representative is a
/// derangement.  `classes` must belong to `action.group()`.
DerangementReport delta_by_classes(const GroupAction& action, const ClassTable& classes);

/// A normal subgroup G of A = action.group(), a coset rep a with aG
/// generating A/G, and an action on which both A and G are transitive.
class CosetSetting {
public:
  /// Throws NotNormal, NotGeneratingCoset or NotTransitive.
  static CosetSetting make(GroupAction action, PermGroup normal, Permutation coset_rep);

  const PermGroup& ambient() const { return action_.group(); }
  const PermGroup& normal() const { return normal_; }
  const Permutation& coset_rep() const { return coset_rep_; }
  const GroupAction& action() const { return action_; }
  std::uint64_t index() const { return ambient().order() / normal_.order(); }

  /// A copy with a different coset representative (validated again).
  CosetSetting with_coset_rep(const Permutation& a) const { return make(action_, normal_, a); }

private:
  CosetSetting(GroupAction action, PermGroup normal, Permutation a)
      : action_(std::move(action)), normal_(std::move(normal)), coset_rep_(std::move(a)) {}
  GroupAction action_;
  PermGroup normal_;
  Permutation coset_rep_;
};

/// Proportion of derangements in the coset aG.
DerangementReport coset_delta(const CosetSetting& setting);

struct CosetSum {
  std::uint64_t sum = 0;           // sum over g in G of f(ag)
  std::uint64_t common_orbits = 0; // G-orbits that are also <a, G>-orbits
  std::uint64_t normal_order = 0;
  bool holds() const { return sum == normal_order * common_orbits; }
};

/// Coset fixed-point sum on an arbitrary (possibly intransitive) action.
/// Requires only that `normal` is normalized by `a` inside action.group().
CosetSum coset_fixed_point_sum(const GroupAction& action, const PermGroup& normal, const Permutation& a);
CosetSum coset_fixed_point_sum(const CosetSetting& setting);

struct Orbital {
  std::size_t x = 0, y = 0; // least pair in the orbit
  std::size_t size = 0;
};

struct ExceptionalityCertificate {
  bool exceptional = false;
  std::vector<Orbital> common; // common non-diagonal orbitals
  std::size_t ambient_orbitals = 0;
  std::size_t normal_orbitals = 0;
};

/// Orbitals of A and G on X x X; exceptional iff the diagonal is the only
/// common one.
ExceptionalityCertificate is_exceptional(const CosetSetting& setting);

/// The fixed-point counting argument for a coset, replayed with exact counts:
/// a' is a coset element fixing point 0, H = A_0, K = H ∩ G and d counts the
/// K-orbits on X that are H-invariant.
struct CountingArgument {
  Permutation fixing_rep;
  std::uint64_t stabilizer_order = 0; // |H|
  std::uint64_t kernel_order = 0;     // |K|
  std::uint64_t d = 0;
  std::uint64_t sum_over_k = 0;       // sum over g in K of f(a'g)
  std::uint64_t derangements = 0;     // |Δ|
  bool sum_identity = false;          // sum_over_k == d |K|
  bool lower_bound = false;           // |Δ| >= (d - 1)|K|
  bool d1_empty = false;              // d == 1 implies Δ empty
};

/// Throws InvalidInput when no coset element has a fixed point (impossible
/// for transitive settings).
CountingArgument coset_counting_argument(const CosetSetting& setting);

struct HallConstruction {
  CosetSetting setting;
  PermGroup complement; // D
  PermGroup normalizer; // H = N_A(D)
};

/// Builds the exceptional triple (A, G, A/N_A(D)) from a normal Hall subgroup
/// G of A and a complement D found by search.
HallConstruction exceptional_from_hall(const PermGroup& ambient, const PermGroup& normal_hall,
                                       std::size_t cap = kDefaultCap);

/// Derived subgroup and solvability, by brute force over element pairs.
PermGroup derived_subgroup(const PermGroup& group);
bool is_solvable(const PermGroup& group);

struct CheckRow {
  std::string instance;
  std::string check;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckRow> rows;
  bool all_pass() const;
  std::size_t failures() const;
};

struct BoundInstance {
  std::string name;
  GroupAction action;
};

struct CosetInstance {
  std::string name;
  CosetSetting setting;
};

/// Lower bounds for transitive actions and cosets: δ >= 1/n with the
/// Frobenius equality case, δ > 2/n for n > 6 outside Frobenius groups of
/// order n(n-1) or n(n-1)/2, and for cosets δ = 0 or δ >= 1/n with δ = 0
/// exactly on exceptional settings.
SuiteReport verify_bound_suite(const std::vector<BoundInstance>& actions,
                               const std::vector<CosetInstance>& cosets);

struct RegularNormalInstance {
  std::string name;
  GroupAction action;
  PermGroup regular_normal;
};

/// Action on base_size^copies points preserving a product structure, point
/// index = sum of coordinate_i * base_size^i.
struct ProductInstance {
  std::string name;
  GroupAction action;
  std::size_t base_size = 0;
  std::size_t copies = 0;
};

struct DiagonalInstance {
  std::string name;
  GroupAction action;
  std::size_t copies = 0; // t, the number of simple factors
};

struct LemmaCorpus {
  std::vector<RegularNormalInstance> regular;
  std::vector<ProductInstance> product;
  std::vector<DiagonalInstance> diagonal;
};

SuiteReport structural_lemma_checks(const LemmaCorpus& corpus);

/// δ(G1, Y) for a product action: G1 are the elements fixing the first
/// coordinate slot, acting on Y through that coordinate.
ExactRatio product_component_delta(const ProductInstance& inst);

/// Exact test of ratio > 1 / log2(m), as m^num > 2^den.
bool exceeds_inverse_log2(const ExactRatio& ratio, std::uint64_t m);

} // namespace drg
