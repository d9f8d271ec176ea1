#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drg/detail/flat_group.hpp"
#include "drg/error.hpp"
#include "drg/ratio.hpp"

namespace drg {

using Point = std::uint16_t;

inline constexpr std::size_t kDefaultCap = 2'000'000;
inline constexpr std::size_t kMaxDegree = 65535;

/// A bijection of {0, ..., degree-1}.  Products compose left to right:
/// (a * b)[i] == b[a[i]], i.e. apply `a` first.
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(std::size_t degree);
  /// Throws InvalidGenerator unless `images` is a bijection.
  static Permutation from_images(std::vector<Point> images);
  static Permutation from_images(std::span<const Point> images) {
    return from_images(std::vector<Point>(images.begin(), images.end()));
  }
  /// Parses "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation from_cycles(const std::string& text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  /// this^-1 * x * this
  Permutation conjugate(const Permutation& x) const;

  bool is_identity() const;
  std::size_t fixed_point_count() const;
  std::uint64_t order() const;
  /// Cycle lengths, descending, including 1-cycles.
  std::vector<std::size_t> cycle_type() const;
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

namespace detail {
struct PermOps {
  using value_type = Point;
  std::size_t degree;
  std::size_t width() const { return degree; }
  void multiply(const Point* a, const Point* b, Point* out) const {
    for (std::size_t i = 0; i < degree; ++i) out[i] = b[a[i]];
  }
  void identity(Point* out) const {
    for (std::size_t i = 0; i < degree; ++i) out[i] = static_cast<Point>(i);
  }
};
} // namespace detail

/// A permutation group closed from its generators.  Immutable; copies share
/// the element table.
class PermGroup {
public:
  static PermGroup close(const std::vector<Permutation>& generators, std::size_t cap = kDefaultCap);

  std::size_t degree() const { return data_->ops.degree; }
  const std::vector<Permutation>& generators() const { return data_->generators; }
  std::uint64_t order() const { return data_->table.size(); }

  /// Element `i` of the materialized set; index 0 is the identity.
  std::span<const Point> element_images(std::size_t i) const { return data_->table[i]; }
  Permutation element(std::size_t i) const { return Permutation::from_images(data_->table[i]); }
  std::optional<std::uint32_t> index_of(std::span<const Point> images) const;
  std::optional<std::uint32_t> index_of(const Permutation& p) const { return index_of(p.images()); }
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// True iff every generator of `sub` lies in this group.
  bool has_subgroup(const PermGroup& sub) const;
  /// Generator-conjugation test; `sub` must already be a subgroup.
  bool normalizes(const PermGroup& sub) const;

  const detail::PermOps& ops() const { return data_->ops; }
  const detail::ElementTable<Point>& table() const { return data_->table; }
  std::vector<std::vector<Point>> generator_images() const;

private:
  struct Data {
    detail::PermOps ops;
    std::vector<Permutation> generators;
    detail::ElementTable<Point> table;
  };
  explicit PermGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

PermGroup close_group(const std::vector<Permutation>& generators, std::size_t cap = kDefaultCap);

struct ConjugacyClass {
  Permutation representative;
  std::uint64_t size;
};

/// Class partition of a materialized group plus the element -> class map.
struct ClassTable {
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> representative_index;
};

ClassTable conjugacy_classes(const PermGroup& group);

/// Subgroup generated by the listed elements of `group`, with a small
/// generating set picked greedily from them.
PermGroup subgroup_from_elements(const PermGroup& group, const std::vector<std::uint32_t>& indices);

/// Subgroup generated by `generators` inside `group`; throws NotSubgroup if a
/// generator lies outside it.
PermGroup subgroup(const PermGroup& group, const std::vector<Permutation>& generators,
                   std::size_t cap = kDefaultCap);

/// A transitive-or-not action of a permutation group on labelled points.
///   natural: the group's own points
///   cosets:  right cosets H x, acted on by right multiplication
///   subsets: k-subsets of the natural points
class GroupAction {
public:
  enum class Kind { Natural, Cosets, Subsets };

  static GroupAction natural(PermGroup group);
  static GroupAction cosets(PermGroup group, PermGroup subgroup);
  static GroupAction subsets(PermGroup group, std::size_t k);

  Kind kind() const { return kind_; }
  const PermGroup& group() const { return group_; }
  std::size_t size() const { return size_; }
  std::string label(std::size_t point) const;

  /// For coset actions, the canonical (lexicographically least) element of
  /// each coset, in sorted order.  Empty for other kinds.
  const std::vector<Permutation>& coset_representatives() const { return coset_reps_; }
  const std::optional<PermGroup>& coset_subgroup() const { return subgroup_; }
  std::size_t subset_size() const { return k_; }

  /// Image of `point` under the group element with the given images on the
  /// group's natural points.  Throws DegreeMismatch for a wrong degree.
  std::size_t image(std::span<const Point> g, std::size_t point) const;
  std::size_t fixed_point_count(std::span<const Point> g) const;
  std::size_t fixed_point_count(const Permutation& g) const { return fixed_point_count(g.images()); }
  /// The permutation of labels induced by `g`.
  Permutation induced(std::span<const Point> g) const;
  Permutation induced(const Permutation& g) const { return induced(g.images()); }

private:
  GroupAction(Kind kind, PermGroup group) : kind_(kind), group_(std::move(group)) {}
  void check_degree(std::span<const Point> g) const;
  bool in_coset(std::span<const Point> y, std::size_t coset) const;

  Kind kind_;
  PermGroup group_;
  std::size_t size_ = 0;
  std::optional<PermGroup> subgroup_;
  std::vector<Permutation> coset_reps_;
  std::vector<Permutation> coset_rep_inverses_;
  std::size_t k_ = 0;
  std::vector<std::vector<Point>> subsets_;
};

GroupAction coset_action(const PermGroup& group, const PermGroup& subgroup);

/// Orbits of the subgroup generated by `generators` (elements of the action's
/// group) on the action's points; each orbit sorted, orbits ordered by least point.
std::vector<std::vector<std::size_t>> orbits(const GroupAction& action,
                                             const std::vector<Permutation>& generators);
std::vector<std::vector<std::size_t>> orbits(const GroupAction& action);

std::size_t fixed_point_count(const Permutation& g, const GroupAction& action);

bool is_transitive(const GroupAction& action);
/// Smallest block containing {0, b}, via union-find closure under generators.
std::vector<std::size_t> minimal_block(const GroupAction& action, std::size_t b);
bool is_primitive(const GroupAction& action);
/// Throws NotTransitive for intransitive actions.
bool is_frobenius(const GroupAction& action);

} // namespace drg
