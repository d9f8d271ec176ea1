#include <algorithm>

#include "drg/weyl.hpp"

namespace drg {

SignedPerm::SignedPerm(Permutation perm, std::vector<std::int8_t> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (signs_.size() != perm_.degree()) throw Error(ErrorKind::DegreeMismatch, "sign vector length differs from rank");
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidInput, "signs must be +1 or -1");
  }
}

SignedPerm SignedPerm::identity(std::size_t rank) {
  return SignedPerm(Permutation::identity(rank), std::vector<std::int8_t>(rank, 1));
}

SignedPerm SignedPerm::operator*(const SignedPerm& rhs) const {
  std::vector<std::int8_t> s(rank());
  for (std::size_t i = 0; i < rank(); ++i) s[i] = static_cast<std::int8_t>(signs_[i] * rhs.signs_[perm_[i]]);
  return SignedPerm(perm_ * rhs.perm_, std::move(s));
}

SignedPerm SignedPerm::inverse() const {
  Permutation inv = perm_.inverse();
  std::vector<std::int8_t> s(rank());
  for (std::size_t i = 0; i < rank(); ++i) s[i] = signs_[inv[i]];
  return SignedPerm(std::move(inv), std::move(s));
}

bool SignedPerm::in_type_d() const {
  int prod = 1;
  for (auto s : signs_) prod *= s;
  return prod == 1;
}

Permutation SignedPerm::to_permutation() const {
  const std::size_t r = rank();
  std::vector<Point> img(2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    auto pos = static_cast<Point>(perm_[i]);
    auto neg = static_cast<Point>(perm_[i] + r);
    img[i] = signs_[i] > 0 ? pos : neg;
    img[i + r] = signs_[i] > 0 ? neg : pos;
  }
  return Permutation::from_images(std::move(img));
}

SignedPerm SignedPerm::from_permutation(const Permutation& p) {
  if (p.degree() % 2 != 0) throw Error(ErrorKind::InvalidInput, "signed permutations need an even degree");
  const std::size_t r = p.degree() / 2;
  std::vector<Point> img(r);
  std::vector<std::int8_t> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t j = p[i];
    img[i] = static_cast<Point>(j % r);
    s[i] = j < r ? 1 : -1;
    std::size_t expected = j < r ? j + r : j - r;
    if (p[i + r] != expected) throw Error(ErrorKind::InvalidInput, "permutation does not commute with negation");
  }
  return SignedPerm(Permutation::from_images(std::move(img)), std::move(s));
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> SignedPerm::signed_cycle_type() const {
  std::vector<std::size_t> pos, neg;
  std::vector<bool> seen(rank(), false);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    int sign = 1;
    for (std::size_t j = i; !seen[j]; j = perm_[j]) {
      seen[j] = true;
      sign *= signs_[j];
      ++len;
    }
    (sign > 0 ? pos : neg).push_back(len);
  }
  std::sort(pos.begin(), pos.end(), std::greater<>());
  std::sort(neg.begin(), neg.end(), std::greater<>());
  return {pos, neg};
}

} // namespace drg
