#include <algorithm>
#include <numeric>

#include "drg/fqlin.hpp"

namespace drg {

FqMatrix::FqMatrix(FieldPtr field, std::size_t n, std::vector<Fq> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (!field_) throw Error(ErrorKind::InvalidInput, "matrix needs a field");
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(n_ * n_) + " entries, got " +
                                             std::to_string(entries_.size()));
  }
  for (Fq e : entries_) {
    if (e >= field_->q()) throw Error(ErrorKind::InvalidInput, "matrix entry outside the field");
  }
}

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t n) {
  std::vector<Fq> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return FqMatrix(std::move(field), n, std::move(e));
}

FqMatrix FqMatrix::from_ints(FieldPtr field, std::size_t n, const std::vector<int>& entries) {
  std::vector<Fq> e;
  e.reserve(entries.size());
  for (int v : entries) {
    if (v < 0 || static_cast<unsigned>(v) >= field->q()) {
      throw Error(ErrorKind::InvalidInput, "matrix entry " + std::to_string(v) + " outside [0, q)");
    }
    e.push_back(static_cast<Fq>(v));
  }
  return FqMatrix(std::move(field), n, std::move(e));
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  if (rhs.n_ != n_ || rhs.field_->q() != field_->q()) throw Error(ErrorKind::DegreeMismatch, "matrix shapes differ");
  detail::MatOps ops{n_, field_->q(), field_->add_table(), field_->mul_table()};
  std::vector<Fq> out(n_ * n_);
  ops.multiply(entries_.data(), rhs.entries_.data(), out.data());
  return FqMatrix(field_, n_, std::move(out));
}

Fq FqMatrix::det() const {
  const FqField& k = *field_;
  std::vector<Fq> a = entries_;
  Fq d = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && a[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a[piv * n_ + j], a[c * n_ + j]);
      d = k.neg(d);
    }
    const Fq pv = a[c * n_ + c];
    d = k.mul(d, pv);
    const Fq pinv = k.inv(pv);
    for (std::size_t r = c + 1; r < n_; ++r) {
      Fq f = k.mul(a[r * n_ + c], pinv);
      if (f == 0) continue;
      for (std::size_t j = c; j < n_; ++j) a[r * n_ + j] = k.sub(a[r * n_ + j], k.mul(f, a[c * n_ + j]));
    }
  }
  return d;
}

FqPoly FqMatrix::charpoly() const {
  // Leibniz expansion of det(xI - M); fine for the small dimensions handled here
  if (n_ > 8) throw Error(ErrorKind::TooLarge, "characteristic polynomial limited to n <= 8");
  const FqField& k = *field_;
  std::vector<std::size_t> sigma(n_);
  std::iota(sigma.begin(), sigma.end(), 0);
  FqPoly total;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) inversions += sigma[i] > sigma[j];
    }
    FqPoly term{1};
    for (std::size_t i = 0; i < n_ && !term.empty(); ++i) {
      FqPoly entry{k.neg(at(i, sigma[i]))};
      if (sigma[i] == i) entry.push_back(1);
      poly::trim(entry);
      term = poly::mul(k, term, entry);
    }
    if (inversions % 2 == 1) term = poly::sub(k, {}, term);
    total = poly::sub(k, total, poly::sub(k, {}, term));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

FqPoly charpoly(const FqMatrix& m) { return m.charpoly(); }

bool is_regular_semisimple(const FqMatrix& m) {
  if (m.det() == 0) throw Error(ErrorKind::Singular, "matrix is not invertible");
  return poly::is_squarefree(m.field(), m.charpoly());
}

} // namespace drg
