#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "drg/derange.hpp"
#include "drg/permcore.hpp"
#include "drg/ratio.hpp"

namespace drg {

/// Element of the hyperoctahedral group: i -> sign[i] * perm(i).  Composition
/// follows Permutation: apply the left factor first.
class SignedPerm {
public:
  SignedPerm(Permutation perm, std::vector<std::int8_t> signs);
  static SignedPerm identity(std::size_t rank);

  std::size_t rank() const { return perm_.degree(); }
  const Permutation& perm() const { return perm_; }
  const std::vector<std::int8_t>& signs() const { return signs_; }

  SignedPerm operator*(const SignedPerm& rhs) const;
  SignedPerm inverse() const;
  bool in_type_d() const; // product of signs is +1

  /// Permutation of {±1, ..., ±r} encoded on 2r points: +i -> i, -i -> i + r.
  Permutation to_permutation() const;
  static SignedPerm from_permutation(const Permutation& p);

  /// Signed cycle type: (lengths of positive cycles, lengths of negative
  /// cycles), each descending.  A cycle is negative when the product of the
  /// signs met along it is -1.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> signed_cycle_type() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

private:
  Permutation perm_;
  std::vector<std::int8_t> signs_;
};

enum class WeylType { A, B, D, G2 };

std::string_view to_string(WeylType t) noexcept;
WeylType parse_weyl_type(const std::string& s);

struct WeylClass {
  Permutation representative;
  std::uint64_t size = 0;
  std::string label; // cycle type, signed cycle type, or G2 class name
};

class WeylGroup {
public:
  WeylType type() const { return type_; }
  std::size_t rank() const { return rank_; }
  const PermGroup& group() const { return group_; }
  std::uint64_t order() const { return group_.order(); }
  const ClassTable& class_table() const { return classes_; }
  const std::vector<WeylClass>& classes() const { return labelled_; }
  /// Class id of an element of the group.
  std::uint32_t class_of(const Permutation& w) const;

private:
  friend WeylGroup weyl_group(WeylType type, std::size_t rank, std::size_t cap);
  WeylGroup(WeylType t, std::size_t r, PermGroup g);
  WeylType type_;
  std::size_t rank_;
  PermGroup group_;
  ClassTable classes_;
  std::vector<WeylClass> labelled_;
};

/// A(r) acts on r+1 points, B(r) and D(r) on 2r points (signed encoding), G2
/// as the dihedral group of order 12 on the six vertices of a hexagon.
WeylGroup weyl_group(WeylType type, std::size_t rank, std::size_t cap = kDefaultCap);

/// S_{parts[0]} x S_{parts[1]} x ... on consecutive blocks of points.
PermGroup young_subgroup(const WeylGroup& w, const std::vector<std::size_t>& parts);
/// The even-sign-change kernel inside B(r).
PermGroup d_in_b(const WeylGroup& w);
/// The reflection subgroup of G2 generated by the long reflections (type A2).
PermGroup g2_long_a2(const WeylGroup& w);
/// An element outside D(r) in B(r): the sign change of the first coordinate.
Permutation b_sign_flip(const WeylGroup& w);

/// Analytic class census: label -> (number of classes, size of each class).
/// Type A uses cycle types, B and D signed cycle types; D classes that split
/// in two are counted twice with half the B-size.  Not available for G2.
std::map<std::string, std::pair<std::size_t, std::uint64_t>> analytic_class_census(WeylType type, std::size_t rank);
/// The same census computed from the brute-force class table.
std::map<std::string, std::pair<std::size_t, std::uint64_t>> enumerated_class_census(const WeylGroup& w);

struct ClassMassReport {
  std::vector<WeylClass> meeting; // classes having an element in tau * W0
  ExactRatio mass;                // sum of their sizes / |W|
  ExactRatio limiting_delta;      // 1 - mass
};

/// Throws NotSubgroup if W0 is not inside W, NotElement if tau is not.
ClassMassReport class_mass(const WeylGroup& w, const PermGroup& w0, const Permutation& tau);

struct ParabolicDelta {
  ExactRatio delta;      // derangement proportion of W on W/W0
  ClassMassReport mass;
  bool agrees = false;   // delta == 1 - mass
};

/// δ(W, W/W0) from the coset action, checked against the class mass at the
/// identity coset.
ParabolicDelta limiting_delta_parabolic(const WeylGroup& w, const PermGroup& w0);

} // namespace drg
