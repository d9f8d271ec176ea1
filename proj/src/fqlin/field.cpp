#include "drg/fqlin.hpp"

namespace drg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, f);
}

namespace {

// coefficient vectors over F_p, low to high
using Coeffs = std::vector<unsigned>;

Coeffs poly_mod(Coeffs a, const Coeffs& m, unsigned p) {
  const std::size_t dm = m.size() - 1; // m monic
  while (a.size() > dm) {
    unsigned lead = a.back() % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - lead * m[i] % p) % p;
    a.pop_back();
  }
  return a;
}

Coeffs decode(unsigned v, unsigned p, unsigned f) {
  Coeffs c(f);
  for (unsigned i = 0; i < f; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

unsigned encode(const Coeffs& c, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i] % p;
  return v;
}

bool has_factor_of_degree(const Coeffs& f, unsigned d, unsigned p) {
  unsigned count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  for (unsigned c = 0; c < count; ++c) {
    Coeffs g = decode(c, p, d);
    g.push_back(1);
    Coeffs r = poly_mod(f, g, p);
    bool zero = true;
    for (unsigned x : r) zero = zero && x % p == 0;
    if (zero) return true;
  }
  return false;
}

bool irreducible(const Coeffs& f, unsigned p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    if (has_factor_of_degree(f, d, p)) return false;
  }
  return true;
}

} // namespace

FieldPtr make_field(unsigned p, unsigned f) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (f < 1) throw Error(ErrorKind::InvalidInput, "field degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw Error(ErrorKind::TooLarge, "field size exceeds table limit of 256");
  }
  auto field = std::make_shared<FqField>();
  field->p_ = p;
  field->f_ = f;
  field->q_ = static_cast<unsigned>(q);

  // least monic irreducible: scan tails c = sum a_i p^i, i.e. lex order on (a_{f-1}, ..., a_0)
  if (f == 1) {
    field->modulus_ = {0, 1};
  } else {
    for (unsigned c = 0; c < q; ++c) {
      Coeffs m = decode(c, p, f);
      m.push_back(1);
      if (irreducible(m, p)) {
        field->modulus_ = m;
        break;
      }
    }
  }

  const unsigned qq = field->q_;
  field->add_.resize(qq * qq);
  field->mul_.resize(qq * qq);
  field->neg_.resize(qq);
  field->inv_.assign(qq, 0);
  for (unsigned a = 0; a < qq; ++a) {
    Coeffs ca = decode(a, p, f);
    Coeffs na(f);
    for (unsigned i = 0; i < f; ++i) na[i] = (p - ca[i]) % p;
    field->neg_[a] = static_cast<Fq>(encode(na, p));
    for (unsigned b = 0; b < qq; ++b) {
      Coeffs cb = decode(b, p, f);
      Coeffs s(f), prod(2 * f - 1, 0);
      for (unsigned i = 0; i < f; ++i) s[i] = (ca[i] + cb[i]) % p;
      for (unsigned i = 0; i < f; ++i) {
        for (unsigned j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      }
      field->add_[a * qq + b] = static_cast<Fq>(encode(s, p));
      if (f == 1) {
        field->mul_[a * qq + b] = static_cast<Fq>(prod[0]);
      } else {
        Coeffs r = poly_mod(prod, field->modulus_, p);
        r.resize(f, 0);
        field->mul_[a * qq + b] = static_cast<Fq>(encode(r, p));
      }
    }
  }
  for (unsigned a = 1; a < qq; ++a) {
    for (unsigned b = 1; b < qq; ++b) {
      if (field->mul_[a * qq + b] == 1) field->inv_[a] = static_cast<Fq>(b);
    }
  }
  return field;
}

FieldPtr make_field_of_order(unsigned q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return make_field(pp->first, pp->second);
}

Fq FqField::inv(Fq a) const {
  if (a == 0) throw Error(ErrorKind::Singular, "zero has no inverse");
  return inv_[a];
}

Fq FqField::pow(Fq a, std::uint64_t e) const {
  Fq acc = 1, base = a;
  while (e > 0) {
    if (e & 1U) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return acc;
}

Fq FqField::from_int(std::int64_t v) const {
  auto r = static_cast<unsigned>(((v % static_cast<std::int64_t>(p_)) + p_) % p_);
  return static_cast<Fq>(r); // constants sit in the x^0 digit
}

Fq FqField::primitive_element() const {
  for (unsigned a = 1; a < q_; ++a) {
    unsigned ord = 1;
    for (Fq x = static_cast<Fq>(a); x != 1; x = mul(x, static_cast<Fq>(a))) ++ord;
    if (ord == q_ - 1) return static_cast<Fq>(a);
  }
  throw Error(ErrorKind::Internal, "no primitive element");
}

} // namespace drg
