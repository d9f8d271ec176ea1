#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drg/detail/flat_group.hpp"
#include "drg/error.hpp"
#include "drg/permcore.hpp"

namespace drg {

/// A field element, encoded as sum c_i p^i for the coefficient vector of its
/// residue modulo the field's defining polynomial.
using Fq = std::uint8_t;

inline constexpr unsigned kMaxFieldSize = 256;

class FqField {
public:
  unsigned p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned q() const { return q_; }
  /// Monic modulus, coefficients from x^0 up to x^f.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Fq add(Fq a, Fq b) const { return add_[a * q_ + b]; }
  Fq sub(Fq a, Fq b) const { return add_[a * q_ + neg_[b]]; }
  Fq mul(Fq a, Fq b) const { return mul_[a * q_ + b]; }
  Fq neg(Fq a) const { return neg_[a]; }
  /// Throws Singular for zero.
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t e) const;
  Fq frobenius(Fq a) const { return pow(a, p_); }
  /// Image of an integer under Z -> F_p -> F_q.
  Fq from_int(std::int64_t v) const;
  /// Least element (by encoding) generating the multiplicative group.
  Fq primitive_element() const;

  const Fq* add_table() const { return add_.data(); }
  const Fq* mul_table() const { return mul_.data(); }

private:
  friend std::shared_ptr<const FqField> make_field(unsigned p, unsigned f);
  unsigned p_ = 0, f_ = 0, q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Fq> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const FqField>;

/// F_{p^f} with the lexicographically least monic irreducible modulus.
/// Throws NotPrime or TooLarge (p^f > 256).
FieldPtr make_field(unsigned p, unsigned f);
/// Field of order q (a prime power), or NotPrime.
FieldPtr make_field_of_order(unsigned q);
bool is_prime(std::uint64_t n);
/// (p, f) with q = p^f, or nullopt.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q);

/// Polynomials over F_q, coefficients low to high, no trailing zeros (the
/// zero polynomial is empty).
using FqPoly = std::vector<Fq>;

namespace poly {
void trim(FqPoly& a);
FqPoly mul(const FqField& k, const FqPoly& a, const FqPoly& b);
FqPoly sub(const FqField& k, const FqPoly& a, const FqPoly& b);
/// Quotient and remainder; throws Singular when dividing by zero.
std::pair<FqPoly, FqPoly> divmod(const FqField& k, const FqPoly& a, const FqPoly& b);
FqPoly gcd(const FqField& k, FqPoly a, FqPoly b); // monic
FqPoly derivative(const FqField& k, const FqPoly& a);
FqPoly powmod(const FqField& k, FqPoly base, std::uint64_t e, const FqPoly& m);
bool is_squarefree(const FqField& k, const FqPoly& a);
/// Degrees of the irreducible factors of a squarefree polynomial, ascending.
std::vector<unsigned> factor_degrees(const FqField& k, const FqPoly& squarefree);
} // namespace poly

class FqMatrix {
public:
  FqMatrix(FieldPtr field, std::size_t n, std::vector<Fq> entries);
  static FqMatrix identity(FieldPtr field, std::size_t n);
  /// Row-major integers in [0, q).
  static FqMatrix from_ints(FieldPtr field, std::size_t n, const std::vector<int>& entries);

  std::size_t n() const { return n_; }
  const FqField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  Fq at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  std::span<const Fq> entries() const { return entries_; }

  FqMatrix operator*(const FqMatrix& rhs) const;
  Fq det() const;
  /// det(xI - M), monic of degree n.
  FqPoly charpoly() const;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }

private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Fq> entries_;
};

/// Throws Singular for a non-invertible matrix.
bool is_regular_semisimple(const FqMatrix& m);
FqPoly charpoly(const FqMatrix& m);

enum class Family { GL, SL, GU, SU, Sp, Oplus, Ominus, SOodd };

std::string_view to_string(Family f) noexcept;
/// Accepts "GL", "SL", "GU", "SU", "Sp", "O+", "Oplus", "O-", "Ominus", "SO", "SOodd".
Family parse_family(const std::string& s);

namespace detail {
struct MatOps {
  using value_type = Fq;
  std::size_t n;
  unsigned q;
  const Fq* add;
  const Fq* mul;
  std::size_t width() const { return n * n; }
  void multiply(const Fq* a, const Fq* b, Fq* out) const {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Fq s = 0;
        for (std::size_t k = 0; k < n; ++k) s = add[s * q + mul[a[i * n + k] * q + b[k * n + j]]];
        out[i * n + j] = s;
      }
    }
  }
  void identity(Fq* out) const {
    for (std::size_t i = 0; i < n * n; ++i) out[i] = (i % (n + 1) == 0) ? 1 : 0;
  }
};
} // namespace detail

/// A finite classical group over F_q, materialized, with the invariant form it
/// preserves.  Unitary groups live over F_{q^2}; `q()` is the family's q.
class ClassicalGroup {
public:
  Family family() const { return data_->family; }
  std::size_t n() const { return data_->n; }
  unsigned q() const { return data_->q; }
  unsigned characteristic() const { return data_->field->p(); }
  const FqField& field() const { return *data_->field; }
  const FieldPtr& field_ptr() const { return data_->field; }

  /// Gram matrix of the bilinear / hermitian / polar form, if any.
  const std::optional<FqMatrix>& form() const { return data_->gram; }
  /// Upper-triangular coefficients of the quadratic form (orthogonal families).
  const std::optional<FqMatrix>& quadratic_form() const { return data_->quadratic; }

  std::uint64_t order() const { return data_->table.size(); }
  std::uint64_t order_formula() const { return data_->formula; }
  /// Reductive rank of the corresponding algebraic group.
  std::size_t rank() const;

  std::span<const Fq> element_entries(std::size_t i) const { return data_->table[i]; }
  FqMatrix element(std::size_t i) const;
  std::optional<std::uint32_t> index_of(const FqMatrix& m) const;
  bool contains(const FqMatrix& m) const { return index_of(m).has_value(); }
  const std::vector<FqMatrix>& generators() const { return data_->generators; }

  bool preserves_form(const FqMatrix& m) const;
  std::string name() const;

  const detail::MatOps& ops() const { return data_->ops; }
  const detail::ElementTable<Fq>& table() const { return data_->table; }
  std::vector<std::vector<Fq>> generator_entries() const;

private:
  friend ClassicalGroup build_classical(Family, std::size_t, unsigned, std::size_t);
  struct Data {
    Family family;
    std::size_t n;
    unsigned q;
    FieldPtr field;
    std::optional<FqMatrix> gram;
    std::optional<FqMatrix> quadratic;
    std::uint64_t formula;
    std::vector<FqMatrix> generators;
    detail::MatOps ops;
    detail::ElementTable<Fq> table;
  };
  explicit ClassicalGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Standard order formula; for O^± the full orthogonal group, for SOodd the
/// determinant-one subgroup.
std::uint64_t classical_order_formula(Family family, std::size_t n, unsigned q);

/// Enumerates the isometry group of the family's form column by column,
/// checks the order formula, and picks generators deterministically.
/// Throws CapExceeded, UnsupportedFamily, NotPrime, InvalidInput.
ClassicalGroup build_classical(Family family, std::size_t n, unsigned q, std::size_t cap = kDefaultCap);

/// Number of elements of the group commuting with m; NotElement if m is outside.
std::uint64_t centralizer_order(const ClassicalGroup& group, const FqMatrix& m);

/// The group acting on row vectors v -> v M, as permutations of the q^n
/// vectors (index = sum v_i Q^i with Q the field size).
PermGroup to_permutation_group(const ClassicalGroup& group, std::size_t cap = kDefaultCap);
Permutation vector_permutation(const FqMatrix& m);

/// Value of the quadratic form with upper-triangular coefficients `qf` at v.
Fq quadratic_value(const FqMatrix& qf, std::span<const Fq> v);

} // namespace drg
