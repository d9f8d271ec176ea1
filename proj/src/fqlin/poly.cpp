#include <algorithm>

#include "drg/fqlin.hpp"

namespace drg::poly {

void trim(FqPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FqPoly mul(const FqField& k, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

FqPoly sub(const FqField& k, const FqPoly& a, const FqPoly& b) {
  FqPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Fq x = i < a.size() ? a[i] : Fq{0};
    Fq y = i < b.size() ? b[i] : Fq{0};
    out[i] = k.sub(x, y);
  }
  trim(out);
  return out;
}

std::pair<FqPoly, FqPoly> divmod(const FqField& k, const FqPoly& a, const FqPoly& b) {
  if (b.empty()) throw Error(ErrorKind::Singular, "polynomial division by zero");
  FqPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  FqPoly quot(r.size() - b.size() + 1, 0);
  const Fq lead_inv = k.inv(b.back());
  while (r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Fq c = k.mul(r.back(), lead_inv);
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = k.sub(r[shift + i], k.mul(c, b[i]));
    trim(r);
  }
  trim(quot);
  return {quot, r};
}

FqPoly gcd(const FqField& k, FqPoly a, FqPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FqPoly r = divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const Fq li = k.inv(a.back());
  for (auto& c : a) c = k.mul(c, li);
  return a;
}

FqPoly derivative(const FqField& k, const FqPoly& a) {
  if (a.size() <= 1) return {};
  FqPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = k.mul(k.from_int(static_cast<std::int64_t>(i)), a[i]);
  trim(out);
  return out;
}

FqPoly powmod(const FqField& k, FqPoly base, std::uint64_t e, const FqPoly& m) {
  FqPoly acc{1};
  base = divmod(k, base, m).second;
  while (e > 0) {
    if (e & 1U) acc = divmod(k, mul(k, acc, base), m).second;
    base = divmod(k, mul(k, base, base), m).second;
    e >>= 1U;
  }
  return acc;
}

bool is_squarefree(const FqField& k, const FqPoly& a) {
  FqPoly d = derivative(k, a);
  if (d.empty()) return a.size() <= 1; // constants are squarefree; f' = 0 with deg f > 0 is a p-th power
  return gcd(k, a, d).size() == 1;
}

std::vector<unsigned> factor_degrees(const FqField& k, const FqPoly& squarefree) {
  // distinct-degree factorization: gcd(f, x^{q^d} - x) picks out the degree-d factors
  std::vector<unsigned> degrees;
  FqPoly f = squarefree;
  trim(f);
  FqPoly xpow{0, 1}; // x^{q^d} mod f
  const FqPoly x{0, 1};
  for (unsigned d = 1; f.size() > 1; ++d) {
    if (2 * d > f.size() - 1) {
      degrees.push_back(static_cast<unsigned>(f.size() - 1));
      break;
    }
    xpow = powmod(k, xpow, k.q(), f);
    FqPoly g = gcd(k, f, sub(k, xpow, x));
    if (g.size() > 1) {
      for (std::size_t i = 0; i < (g.size() - 1) / d; ++i) degrees.push_back(d);
      f = divmod(k, f, g).first;
      xpow = divmod(k, xpow, f).second;
    }
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

} // namespace drg::poly
