#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "drg/permcore.hpp"

namespace drg {

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw Error(ErrorKind::InvalidGenerator, "degree must be in [1, 65535]");
  }
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty() || images.size() > kMaxDegree) {
    throw Error(ErrorKind::InvalidGenerator, "degree must be in [1, 65535]");
  }
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) {
      throw Error(ErrorKind::InvalidGenerator, "images are not a bijection");
    }
    seen[p] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(const std::string& text, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorKind::InvalidGenerator, "expected '(' in cycle notation");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw Error(ErrorKind::InvalidGenerator, "malformed cycle notation '" + text + "'");
      std::size_t v = std::stoul(text.substr(start, i - start));
      if (v >= degree) throw Error(ErrorKind::InvalidGenerator, "point " + std::to_string(v) + " exceeds degree");
      if (used[v]) throw Error(ErrorKind::InvalidGenerator, "point " + std::to_string(v) + " repeated in cycles");
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      img[cycle[j]] = static_cast<Point>(cycle[(j + 1) % cycle.size()]);
    }
    skip_ws();
  }
  return from_images(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error(ErrorKind::DegreeMismatch, "composing permutations of different degree");
  std::vector<Point> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[i] = rhs.images_[images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out));
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Permutation acc = identity(degree());
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

Permutation Permutation::conjugate(const Permutation& x) const { return inverse() * x * *this; }

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < degree(); ++i) n += images_[i] == i;
  return n;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t l = 1;
  for (std::size_t c : cycle_type()) l = std::lcm(l, static_cast<std::uint64_t>(c));
  return l;
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      if (j != i) os << ' ';
      os << j;
      seen[j] = true;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

} // namespace drg
