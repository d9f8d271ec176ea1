#pragma once

// Shared machinery for finite groups whose elements are fixed-width arrays of
// small integers (permutation images, matrix entries over a small field).
// Elements live in one flat buffer; lookup goes through an open-addressing
// index so that groups of a few million elements stay compact.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drg/error.hpp"

namespace drg::detail {

template <class T>
class ElementTable {
public:
  explicit ElementTable(std::size_t width) : width_(width), slots_(64, kEmpty) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return count_; }

  std::span<const T> operator[](std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }

  std::optional<std::uint32_t> find(std::span<const T> e) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash(e) & mask;; s = (s + 1) & mask) {
      std::uint32_t idx = slots_[s];
      if (idx == kEmpty) return std::nullopt;
      if (equal(idx, e)) return idx;
    }
  }

  bool contains(std::span<const T> e) const { return find(e).has_value(); }

  /// `e` must not alias the table's own storage.
  std::pair<std::uint32_t, bool> insert(std::span<const T> e) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    std::size_t s = hash(e) & mask;
    for (;; s = (s + 1) & mask) {
      std::uint32_t idx = slots_[s];
      if (idx == kEmpty) break;
      if (equal(idx, e)) return {idx, false};
    }
    if (count_ >= kEmpty) throw Error(ErrorKind::CapExceeded, "element index space exhausted");
    auto idx = static_cast<std::uint32_t>(count_++);
    data_.insert(data_.end(), e.begin(), e.end());
    slots_[s] = idx;
    return {idx, true};
  }

  void reserve(std::size_t n) { data_.reserve(n * width_); }

private:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

  std::uint64_t hash(std::span<const T> e) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (T v : e) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
  }

  bool equal(std::uint32_t idx, std::span<const T> e) const {
    const T* p = data_.data() + static_cast<std::size_t>(idx) * width_;
    for (std::size_t i = 0; i < width_; ++i) {
      if (p[i] != e[i]) return false;
    }
    return true;
  }

  void grow() {
    std::vector<std::uint32_t> fresh(slots_.size() * 2, kEmpty);
    std::size_t mask = fresh.size() - 1;
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t s = hash((*this)[i]) & mask;
      while (fresh[s] != kEmpty) s = (s + 1) & mask;
      fresh[s] = static_cast<std::uint32_t>(i);
    }
    slots_ = std::move(fresh);
  }

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<T> data_;
  std::vector<std::uint32_t> slots_;
};

template <class Ops>
concept GroupOps = requires(const Ops& ops, const typename Ops::value_type* a,
                            typename Ops::value_type* out) {
  typename Ops::value_type;
  { ops.width() } -> std::convertible_to<std::size_t>;
  ops.multiply(a, a, out);
  ops.identity(out);
};

/// Breadth-first closure under right multiplication by the generators.  In a
/// finite group the monoid generated equals the group, so no inverses are
/// needed.  The identity always gets index 0.
template <GroupOps Ops>
ElementTable<typename Ops::value_type> close(const Ops& ops,
                                             const std::vector<std::vector<typename Ops::value_type>>& gens,
                                             std::size_t cap) {
  using T = typename Ops::value_type;
  const std::size_t w = ops.width();
  ElementTable<T> table(w);
  std::vector<T> buf(w);
  ops.identity(buf.data());
  table.insert(buf);
  std::vector<T> cur(w);
  for (std::size_t i = 0; i < table.size(); ++i) {
    // copy out: insert may reallocate the storage `table[i]` points into
    auto src = table[i];
    cur.assign(src.begin(), src.end());
    for (const auto& g : gens) {
      ops.multiply(cur.data(), g.data(), buf.data());
      if (table.insert(buf).second && table.size() > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "group closure exceeded cap of " + std::to_string(cap) + " elements");
      }
    }
  }
  return table;
}

template <GroupOps Ops>
std::uint64_t element_order(const Ops& ops, std::span<const typename Ops::value_type> e) {
  using T = typename Ops::value_type;
  const std::size_t w = ops.width();
  std::vector<T> id(w), cur(e.begin(), e.end()), next(w);
  ops.identity(id.data());
  std::uint64_t k = 1;
  while (cur != id) {
    ops.multiply(cur.data(), e.data(), next.data());
    std::swap(cur, next);
    ++k;
  }
  return k;
}

template <GroupOps Ops>
std::vector<typename Ops::value_type> power(const Ops& ops, std::span<const typename Ops::value_type> e,
                                            std::uint64_t k) {
  using T = typename Ops::value_type;
  const std::size_t w = ops.width();
  std::vector<T> acc(w), base(e.begin(), e.end()), tmp(w);
  ops.identity(acc.data());
  while (k > 0) {
    if (k & 1U) {
      ops.multiply(acc.data(), base.data(), tmp.data());
      std::swap(acc, tmp);
    }
    ops.multiply(base.data(), base.data(), tmp.data());
    std::swap(base, tmp);
    k >>= 1U;
  }
  return acc;
}

template <GroupOps Ops>
std::vector<typename Ops::value_type> inverse(const Ops& ops, std::span<const typename Ops::value_type> e) {
  std::uint64_t ord = element_order(ops, e);
  return power(ops, e, ord - 1);
}

struct ClassPartition {
  std::vector<std::uint32_t> class_of;      // element index -> class id
  std::vector<std::uint32_t> representative; // class id -> smallest element index in class
  std::vector<std::uint64_t> size;          // class id -> class size
};

/// Orbits of the conjugation action, discovered by closing each element's
/// orbit under conjugation by the generators.  Class ids follow the index of
/// their smallest member, so the identity class is class 0.
template <GroupOps Ops>
ClassPartition conjugacy_partition(const Ops& ops, const ElementTable<typename Ops::value_type>& table,
                                   const std::vector<std::vector<typename Ops::value_type>>& gens) {
  using T = typename Ops::value_type;
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t w = ops.width();
  std::vector<std::vector<T>> inv;
  inv.reserve(gens.size());
  for (const auto& g : gens) inv.push_back(inverse(ops, std::span<const T>(g)));

  ClassPartition part;
  part.class_of.assign(table.size(), kUnset);
  std::vector<std::uint32_t> queue;
  std::vector<T> tmp(w), conj(w);
  for (std::size_t start = 0; start < table.size(); ++start) {
    if (part.class_of[start] != kUnset) continue;
    auto cls = static_cast<std::uint32_t>(part.representative.size());
    part.representative.push_back(static_cast<std::uint32_t>(start));
    part.class_of[start] = cls;
    queue.assign(1, static_cast<std::uint32_t>(start));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto x = table[queue[head]];
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        ops.multiply(inv[gi].data(), x.data(), tmp.data());
        ops.multiply(tmp.data(), gens[gi].data(), conj.data());
        auto idx = table.find(conj);
        if (!idx) throw Error(ErrorKind::Internal, "conjugate fell outside the materialized group");
        if (part.class_of[*idx] == kUnset) {
          part.class_of[*idx] = cls;
          queue.push_back(*idx);
        }
      }
    }
    part.size.push_back(queue.size());
  }
  return part;
}

} // namespace drg::detail
