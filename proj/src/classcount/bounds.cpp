#include <cmath>

#include "drg/classcount.hpp"

namespace drg {

namespace {

BigInt qpow(unsigned q, std::size_t e) { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e)); }

// q^{1 + n/2} split as rational + coefficient * sqrt(q)
std::pair<ExactRatio, ExactRatio> half_power(unsigned q, std::size_t n) {
  if (n % 2 == 0) return {ExactRatio(qpow(q, 1 + n / 2), 1), ExactRatio(0)};
  return {ExactRatio(0), ExactRatio(qpow(q, (n + 1) / 2), 1)};
}

} // namespace

BoundCheck bound_check(const ClassCountRecord& record) {
  BoundCheck b;
  b.k = record.k;
  const unsigned q = record.q;
  const bool odd = q % 2 == 1;
  ExactRatio coeff;
  switch (record.family) {
    case Family::SL: {
      b.item = 1;
      b.rank = record.n;
      auto [a, c] = half_power(q, record.n);
      b.rational_part = ExactRatio(qpow(q, record.n), q - 1) + a;
      b.sqrt_coefficient = c;
      break;
    }
    case Family::SU: {
      b.item = 2;
      b.rank = record.n;
      auto [a, c] = half_power(q, record.n);
      const ExactRatio scale(23, 2);
      const ExactRatio ratio_term(BigInt(q + 1), BigInt(q - 1));
      b.rational_part = scale * (ExactRatio(qpow(q, record.n), q + 1) + ratio_term * a);
      b.sqrt_coefficient = scale * ratio_term * c;
      break;
    }
    case Family::Sp:
      b.item = odd ? 3 : 4;
      coeff = odd ? ExactRatio(12) : ExactRatio(107, 5);
      b.rank = record.n / 2;
      break;
    case Family::Oplus:
    case Family::Ominus:
      b.item = odd ? 5 : 6;
      coeff = odd ? ExactRatio(29) : ExactRatio(39, 2);
      b.rank = record.n / 2;
      break;
    case Family::SOodd:
      if (!odd) throw Error(ErrorKind::FamilyMismatch, "no class-count bound for SO(2n+1, q) with q even");
      b.item = 7;
      coeff = ExactRatio(369, 50);
      b.rank = (record.n - 1) / 2;
      break;
    default:
      throw Error(ErrorKind::FamilyMismatch, std::string(to_string(record.family)) + " has no class-count bound item");
  }
  if (b.item >= 3) {
    b.rational_part = coeff * ExactRatio(qpow(q, b.rank), 1);
    b.sqrt_coefficient = ExactRatio(0);
  }
  b.rhs = b.rational_part.to_double() + b.sqrt_coefficient.to_double() * std::sqrt(static_cast<double>(q));

  // k <= A + C sqrt(q)  <=>  k - A <= 0  or  (k - A)^2 <= C^2 q
  const ExactRatio excess = ExactRatio(static_cast<std::int64_t>(record.k)) - b.rational_part;
  if (excess <= ExactRatio(0)) {
    b.pass = true;
  } else if (b.sqrt_coefficient.is_zero()) {
    b.pass = false;
  } else {
    b.pass = excess * excess <= b.sqrt_coefficient * b.sqrt_coefficient * ExactRatio(q);
  }
  return b;
}


} // namespace drg
