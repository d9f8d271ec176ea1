#include "drg/classcount.hpp"

namespace drg {

namespace {

using Series = std::vector<BigInt>; // coefficients of t^0 .. t^n

Series multiply(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series power(Series base, std::uint64_t e) {
  Series acc(base.size(), 0);
  acc[0] = 1;
  while (e > 0) {
    if (e & 1U) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1U;
  }
  return acc;
}

int mobius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

} // namespace

BigInt irreducible_count(std::size_t d, std::uint64_t q) {
  if (d == 0) throw Error(ErrorKind::InvalidInput, "degree must be >= 1");
  BigInt sum = 0;
  for (std::size_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = mobius(e);
    if (mu == 0) continue;
    BigInt term = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d / e));
    sum += mu > 0 ? term : BigInt(-term);
  }
  return sum / d;
}

BigInt k_gl_genfun(std::size_t n, std::uint64_t q) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "dimension must be >= 1");
  if (!prime_power(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  // partition numbers p(0..n)
  Series part(n + 1, 0);
  part[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t m = i; m <= n; ++m) part[m] += part[m - i];
  }
  Series total(n + 1, 0);
  total[0] = 1;
  for (std::size_t d = 1; d <= n; ++d) {
    Series pd(n + 1, 0); // P(t^d)
    for (std::size_t m = 0; m * d <= n; ++m) pd[m * d] = part[m];
    BigInt mult = irreducible_count(d, q);
    if (d == 1) mult -= 1; // the polynomial x is not an eigenvalue
    total = multiply(total, power(pd, mult.convert_to<std::uint64_t>()));
  }
  return total[n];
}

BigInt k_gl_closed_form(std::size_t n, std::uint64_t q) {
  Series total(n + 1, 0);
  total[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    Series num(n + 1, 0), geo(n + 1, 0);
    num[0] = 1;
    if (i <= n) num[i] = -1;
    BigInt qk = 1;
    for (std::size_t m = 0; m * i <= n; ++m) {
      geo[m * i] = qk;
      qk *= q;
    }
    total = multiply(multiply(total, num), geo);
  }
  return total[n];
}

} // namespace drg
