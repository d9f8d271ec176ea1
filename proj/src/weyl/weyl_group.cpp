#include <algorithm>
#include <numeric>

#include "drg/weyl.hpp"

namespace drg {

std::string_view to_string(WeylType t) noexcept {
  switch (t) {
    case WeylType::A: return "A";
    case WeylType::B: return "B";
    case WeylType::D: return "D";
    case WeylType::G2: return "G2";
  }
  return "?";
}

WeylType parse_weyl_type(const std::string& s) {
  if (s == "A") return WeylType::A;
  if (s == "B" || s == "C") return WeylType::B;
  if (s == "D") return WeylType::D;
  if (s == "G2" || s == "G") return WeylType::G2;
  throw Error(ErrorKind::InvalidInput, "unknown Weyl type '" + s + "'");
}

namespace {

std::string partition_label(const std::vector<std::size_t>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

std::string signed_label(const std::vector<std::size_t>& pos, const std::vector<std::size_t>& neg) {
  return "[" + partition_label(pos) + "|" + partition_label(neg) + "]";
}

std::vector<Permutation> symmetric_generators(std::size_t n, std::size_t offset, std::size_t degree) {
  std::vector<Permutation> gens;
  if (n < 2) return gens;
  std::vector<Point> t(degree), c(degree);
  std::iota(t.begin(), t.end(), Point{0});
  std::iota(c.begin(), c.end(), Point{0});
  std::swap(t[offset], t[offset + 1]);
  for (std::size_t i = 0; i < n; ++i) c[offset + i] = static_cast<Point>(offset + (i + 1) % n);
  gens.push_back(Permutation::from_images(t));
  if (n > 2) gens.push_back(Permutation::from_images(c));
  return gens;
}

std::vector<SignedPerm> signed_generators(std::size_t r, bool type_d) {
  std::vector<SignedPerm> gens;
  for (const auto& p : symmetric_generators(r, 0, r)) gens.emplace_back(p, std::vector<std::int8_t>(r, 1));
  std::vector<std::int8_t> s(r, 1);
  s[0] = -1;
  if (type_d) s[1] = -1;
  gens.emplace_back(Permutation::identity(r), s);
  return gens;
}

std::vector<Permutation> to_perms(const std::vector<SignedPerm>& xs) {
  std::vector<Permutation> out;
  for (const auto& x : xs) out.push_back(x.to_permutation());
  return out;
}

// Dihedral group of order 12 on hexagon vertices: s1 = (i -> -i) through
// vertices, s2 = (i -> 1 - i) through edge midpoints.
Permutation hex_map(int a, int b) { // i -> a*i + b mod 6
  std::vector<Point> img(6);
  for (int i = 0; i < 6; ++i) img[i] = static_cast<Point>(((a * i + b) % 6 + 6) % 6);
  return Permutation::from_images(std::move(img));
}

std::string g2_label(const Permutation& p) {
  // rotations i -> i + k have no fixed point unless k = 0
  if (p.is_identity()) return "1";
  Permutation s1 = hex_map(-1, 0);
  for (int k = 1; k < 6; ++k) {
    if (p == hex_map(1, k)) {
      int m = std::min(k, 6 - k);
      return m == 3 ? "rot^3" : "rot^+-" + std::to_string(m);
    }
  }
  // reflections i -> b - i: even b fixes vertices (long), odd b fixes none (short)
  for (int b = 0; b < 6; ++b) {
    if (p == hex_map(-1, b)) return b % 2 == 0 ? "refl-long" : "refl-short";
  }
  return "?";
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void partitions_of(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> partitions_of(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  partitions_of(n, n, cur, out);
  return out;
}

// prod over part sizes k of (scale*k)^{m_k} m_k!
std::uint64_t centralizer_factor(const std::vector<std::size_t>& parts, std::uint64_t scale) {
  std::uint64_t z = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    for (std::size_t k = i; k < j; ++k) z *= scale * parts[i];
    z *= factorial(j - i);
    i = j;
  }
  return z;
}

} // namespace

WeylGroup::WeylGroup(WeylType t, std::size_t r, PermGroup g)
    : type_(t), rank_(r), group_(std::move(g)), classes_(conjugacy_classes(group_)) {
  for (const auto& c : classes_.classes) {
    WeylClass wc{c.representative, c.size, {}};
    switch (type_) {
      case WeylType::A:
        wc.label = "[" + partition_label(c.representative.cycle_type()) + "]";
        break;
      case WeylType::B:
      case WeylType::D: {
        auto [pos, neg] = SignedPerm::from_permutation(c.representative).signed_cycle_type();
        wc.label = signed_label(pos, neg);
        break;
      }
      case WeylType::G2:
        wc.label = g2_label(c.representative);
        break;
    }
    labelled_.push_back(std::move(wc));
  }
}

std::uint32_t WeylGroup::class_of(const Permutation& w) const {
  auto idx = group_.index_of(w);
  if (!idx) throw Error(ErrorKind::NotElement, "element is not in the Weyl group");
  return classes_.class_of[*idx];
}

WeylGroup weyl_group(WeylType type, std::size_t rank, std::size_t cap) {
  switch (type) {
    case WeylType::A: {
      if (rank < 1) throw Error(ErrorKind::InvalidInput, "type A needs rank >= 1");
      return WeylGroup(type, rank, PermGroup::close(symmetric_generators(rank + 1, 0, rank + 1), cap));
    }
    case WeylType::B:
      if (rank < 2) throw Error(ErrorKind::InvalidInput, "type B needs rank >= 2");
      return WeylGroup(type, rank, PermGroup::close(to_perms(signed_generators(rank, false)), cap));
    case WeylType::D:
      if (rank < 2) throw Error(ErrorKind::InvalidInput, "type D needs rank >= 2");
      return WeylGroup(type, rank, PermGroup::close(to_perms(signed_generators(rank, true)), cap));
    case WeylType::G2:
      if (rank != 2) throw Error(ErrorKind::InvalidInput, "G2 has rank 2");
      return WeylGroup(type, rank, PermGroup::close({hex_map(-1, 0), hex_map(-1, 1)}, cap));
  }
  throw Error(ErrorKind::InvalidInput, "unknown Weyl type");
}

PermGroup young_subgroup(const WeylGroup& w, const std::vector<std::size_t>& parts) {
  if (w.type() != WeylType::A) throw Error(ErrorKind::InvalidInput, "Young subgroups live in type A");
  const std::size_t n = w.rank() + 1;
  std::size_t total = 0;
  for (std::size_t p : parts) {
    if (p == 0) throw Error(ErrorKind::BadPartition, "parts must be positive");
    total += p;
  }
  if (total != n) {
    throw Error(ErrorKind::BadPartition, "parts sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  }
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (std::size_t p : parts) {
    for (auto& g : symmetric_generators(p, offset, n)) gens.push_back(std::move(g));
    offset += p;
  }
  return subgroup(w.group(), gens);
}

PermGroup d_in_b(const WeylGroup& w) {
  if (w.type() != WeylType::B) throw Error(ErrorKind::InvalidInput, "d_in_b needs a type B Weyl group");
  return subgroup(w.group(), to_perms(signed_generators(w.rank(), true)));
}

Permutation b_sign_flip(const WeylGroup& w) {
  if (w.type() != WeylType::B) throw Error(ErrorKind::InvalidInput, "sign flip needs a type B Weyl group");
  std::vector<std::int8_t> s(w.rank(), 1);
  s[0] = -1;
  return SignedPerm(Permutation::identity(w.rank()), s).to_permutation();
}

PermGroup g2_long_a2(const WeylGroup& w) {
  if (w.type() != WeylType::G2) throw Error(ErrorKind::InvalidInput, "needs the G2 Weyl group");
  return subgroup(w.group(), {hex_map(-1, 0), hex_map(-1, 2)});
}

std::map<std::string, std::pair<std::size_t, std::uint64_t>> analytic_class_census(WeylType type, std::size_t rank) {
  std::map<std::string, std::pair<std::size_t, std::uint64_t>> out;
  if (type == WeylType::A) {
    const std::size_t n = rank + 1;
    for (const auto& lam : partitions_of(n)) {
      out["[" + partition_label(lam) + "]"] = {1, factorial(n) / centralizer_factor(lam, 1)};
    }
    return out;
  }
  if (type == WeylType::G2) throw Error(ErrorKind::UnsupportedFamily, "no analytic census for G2");
  const std::uint64_t order_b = (std::uint64_t{1} << rank) * factorial(rank);
  for (std::size_t a = 0; a <= rank; ++a) {
    auto alphas = a == 0 ? std::vector<std::vector<std::size_t>>{{}} : partitions_of(a);
    auto betas = a == rank ? std::vector<std::vector<std::size_t>>{{}} : partitions_of(rank - a);
    for (const auto& alpha : alphas) {
      for (const auto& beta : betas) {
        std::uint64_t size = order_b / (centralizer_factor(alpha, 2) * centralizer_factor(beta, 2));
        std::string label = signed_label(alpha, beta);
        if (type == WeylType::B) {
          out[label] = {1, size};
          continue;
        }
        if (beta.size() % 2 != 0) continue;
        bool splits = beta.empty() && std::all_of(alpha.begin(), alpha.end(), [](std::size_t p) { return p % 2 == 0; });
        out[label] = splits ? std::pair<std::size_t, std::uint64_t>{2, size / 2}
                            : std::pair<std::size_t, std::uint64_t>{1, size};
      }
    }
  }
  return out;
}

std::map<std::string, std::pair<std::size_t, std::uint64_t>> enumerated_class_census(const WeylGroup& w) {
  std::map<std::string, std::pair<std::size_t, std::uint64_t>> out;
  for (const auto& c : w.classes()) {
    auto& slot = out[c.label];
    if (slot.first > 0 && slot.second != c.size) {
      throw Error(ErrorKind::Internal, "classes with label " + c.label + " differ in size");
    }
    ++slot.first;
    slot.second = c.size;
  }
  return out;
}

} // namespace drg
