#include "drg/classcount.hpp"

namespace drg {

namespace {

// 1 / q^e
ExactRatio inv_pow(unsigned q, std::size_t e) {
  return ExactRatio(BigInt(1), boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e)));
}

// a + b s with s = q^{-1/2}, so s^2 = 1/q
struct Surd {
  ExactRatio a, b;
  Surd mul(const Surd& o, const ExactRatio& s2) const { return {a * o.a + b * o.b * s2, a * o.b + b * o.a}; }
};

int item_for(Family family, unsigned q) {
  const bool odd = q % 2 == 1;
  switch (family) {
    case Family::GL: return 1;
    case Family::GU: return 2;
    case Family::Sp: return odd ? 3 : 4;
    case Family::Oplus:
    case Family::Ominus: return odd ? 5 : 6;
    case Family::SOodd:
      if (!odd) throw Error(ErrorKind::UnsupportedFamily, "no limiting constant for SO(2n+1, q) with q even");
      return 7;
    default:
      throw Error(ErrorKind::UnsupportedFamily, std::string(to_string(family)) + " has no limiting constant");
  }
}

ExactRatio evaluate(int item, unsigned q, std::size_t depth) {
  const ExactRatio one(1);
  ExactRatio v(1);
  switch (item) {
    case 1:
      return v;
    case 2:
      for (std::size_t i = 1; i <= depth; ++i) v = v * (one + inv_pow(q, i)) / (one - inv_pow(q, i));
      return v;
    case 3:
      for (std::size_t i = 1; i <= depth; ++i) {
        ExactRatio up = one + inv_pow(q, i);
        ExactRatio up2 = up * up;
        v = v * up2 * up2 / (one - inv_pow(q, i));
      }
      return v;
    case 4:
      for (std::size_t i = 1; i <= depth; ++i) {
        ExactRatio down = one - inv_pow(q, i);
        v = v * (one - inv_pow(q, 4 * i)) / ((one - inv_pow(q, 4 * i - 2)) * down * down);
      }
      return v;
    case 5: {
      // [prod (1 + s^{2i-1})^4 + prod (1 - s^{2i-1})^4] / (4 prod (1 - q^{-i})); the two
      // products are Galois conjugates, so their sum is twice the rational part
      const ExactRatio s2 = inv_pow(q, 1);
      Surd plus{one, ExactRatio(0)};
      ExactRatio denom(4);
      for (std::size_t i = 1; i <= depth; ++i) {
        Surd f{one, inv_pow(q, i - 1)}; // 1 + q^{-(i-1)} s = 1 + s^{2i-1}
        Surd f2 = f.mul(f, s2);
        plus = plus.mul(f2.mul(f2, s2), s2);
        denom = denom * (one - inv_pow(q, i));
      }
      return ExactRatio(2) * plus.a / denom;
    }
    case 6: {
      ExactRatio num(1), den(1);
      for (std::size_t i = 0; i < depth; ++i) {
        ExactRatio odd = one + inv_pow(q, 2 * i + 1);
        num = num * (one - inv_pow(q, 2 * i + 2)) * odd * odd;
        ExactRatio down = one - inv_pow(q, i + 1);
        den = den * down * down;
      }
      return ExactRatio(BigInt(1), BigInt(2)) * num / den;
    }
    case 7:
      for (std::size_t i = 1; i <= depth; ++i) {
        ExactRatio a = one - inv_pow(q, 4 * i);
        ExactRatio b = one - inv_pow(q, i);
        ExactRatio c = one - inv_pow(q, 4 * i - 2);
        v = v * a * a / (b * b * b * c * c);
      }
      return v;
  }
  throw Error(ErrorKind::Internal, "unknown limit item");
}

} // namespace

LimitEval limit_partial(Family family, unsigned q, std::size_t depth) {
  if (depth < 1) throw Error(ErrorKind::InvalidInput, "depth must be >= 1");
  if (!prime_power(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  LimitEval e;
  e.family = family;
  e.q = q;
  e.depth = depth;
  e.item = item_for(family, q);
  e.value = evaluate(e.item, q, depth);
  ExactRatio previous = evaluate(e.item, q, depth - 1);
  e.last_deviation = (e.value / previous - ExactRatio(1)).abs();
  return e;
}

} // namespace drg
