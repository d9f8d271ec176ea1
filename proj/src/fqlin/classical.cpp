#include <limits>
#include <random>

#include "drg/fqlin.hpp"
#include "drg/ratio.hpp"

namespace drg {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::GU: return "GU";
    case Family::SU: return "SU";
    case Family::Sp: return "Sp";
    case Family::Oplus: return "O+";
    case Family::Ominus: return "O-";
    case Family::SOodd: return "SO";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "GL") return Family::GL;
  if (s == "SL") return Family::SL;
  if (s == "GU") return Family::GU;
  if (s == "SU") return Family::SU;
  if (s == "Sp") return Family::Sp;
  if (s == "O+" || s == "Oplus") return Family::Oplus;
  if (s == "O-" || s == "Ominus") return Family::Ominus;
  if (s == "SO" || s == "SOodd") return Family::SOodd;
  throw Error(ErrorKind::UnsupportedFamily, "unknown family '" + s + "'");
}

std::uint64_t classical_order_formula(Family family, std::size_t n, unsigned q) {
  const BigInt Q = q;
  auto qpow = [&](std::size_t e) -> BigInt { return boost::multiprecision::pow(Q, static_cast<unsigned>(e)); };
  BigInt order = 1;
  const std::size_t m = n / 2;
  switch (family) {
    case Family::GL:
    case Family::SL:
      order = qpow(n * (n - 1) / 2);
      for (std::size_t i = 1; i <= n; ++i) order *= qpow(i) - 1;
      if (family == Family::SL) order /= (Q - 1);
      break;
    case Family::GU:
    case Family::SU:
      order = qpow(n * (n - 1) / 2);
      for (std::size_t i = 1; i <= n; ++i) order *= (i % 2 == 0) ? qpow(i) - 1 : qpow(i) + 1;
      if (family == Family::SU) order /= (Q + 1);
      break;
    case Family::Sp:
    case Family::SOodd:
      order = qpow(m * m);
      for (std::size_t i = 1; i <= m; ++i) order *= qpow(2 * i) - 1;
      break;
    case Family::Oplus:
    case Family::Ominus:
      order = 2 * qpow(m * (m - 1)) * (family == Family::Oplus ? qpow(m) - 1 : qpow(m) + 1);
      for (std::size_t i = 1; i < m; ++i) order *= qpow(2 * i) - 1;
      break;
  }
  if (order > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return order.convert_to<std::uint64_t>();
}

Fq quadratic_value(const FqMatrix& qf, std::span<const Fq> v) {
  const FqField& k = qf.field();
  Fq s = 0;
  for (std::size_t i = 0; i < qf.n(); ++i) {
    for (std::size_t j = i; j < qf.n(); ++j) {
      Fq c = qf.at(i, j);
      if (c != 0) s = k.add(s, k.mul(c, k.mul(v[i], v[j])));
    }
  }
  return s;
}

namespace {

bool is_unitary(Family f) { return f == Family::GU || f == Family::SU; }
bool needs_det_one(Family f) { return f == Family::SL || f == Family::SU || f == Family::SOodd; }

void validate(Family family, std::size_t n, unsigned q) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "dimension must be >= 1");
  if (!prime_power(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  switch (family) {
    case Family::Sp:
    case Family::Oplus:
    case Family::Ominus:
      if (n % 2 != 0) throw Error(ErrorKind::InvalidInput, std::string(to_string(family)) + " needs even dimension");
      break;
    case Family::SOodd:
      if (n % 2 != 1 || n < 3) throw Error(ErrorKind::InvalidInput, "SO needs odd dimension >= 3");
      if (q % 2 == 0) throw Error(ErrorKind::UnsupportedFamily, "odd-dimensional orthogonal groups need q odd");
      break;
    default:
      break;
  }
  if (is_unitary(family) && q * q > kMaxFieldSize) throw Error(ErrorKind::TooLarge, "unitary groups need q^2 <= 256");
}

// x^2 + t x + c irreducible over F_q, least (t, c) by encoding
std::pair<Fq, Fq> least_irreducible_quadratic(const FqField& k) {
  for (unsigned t = 0; t < k.q(); ++t) {
    for (unsigned c = 0; c < k.q(); ++c) {
      bool root = false;
      for (unsigned x = 0; x < k.q() && !root; ++x) {
        Fq xx = static_cast<Fq>(x);
        Fq val = k.add(k.add(k.mul(xx, xx), k.mul(static_cast<Fq>(t), xx)), static_cast<Fq>(c));
        root = val == 0;
      }
      if (!root) return {static_cast<Fq>(t), static_cast<Fq>(c)};
    }
  }
  throw Error(ErrorKind::Internal, "no irreducible quadratic");
}

struct Forms {
  std::optional<FqMatrix> gram;      // bilinear / hermitian / polar
  std::optional<FqMatrix> quadratic; // upper triangular
};

Forms standard_forms(Family family, std::size_t n, const FieldPtr& field) {
  const FqField& k = *field;
  Forms out;
  if (family == Family::GL || family == Family::SL) return out;
  std::vector<Fq> g(n * n, 0);
  if (is_unitary(family)) {
    for (std::size_t i = 0; i < n; ++i) g[i * n + (n - 1 - i)] = 1;
    out.gram = FqMatrix(field, n, g);
    return out;
  }
  const std::size_t m = n / 2;
  if (family == Family::Sp) {
    for (std::size_t i = 0; i < n; ++i) g[i * n + (n - 1 - i)] = i < m ? Fq{1} : k.neg(1);
    out.gram = FqMatrix(field, n, g);
    return out;
  }
  // orthogonal: Q(x) = sum_{i<h} x_i x_{n-1-i} + middle part
  std::vector<Fq> qc(n * n, 0);
  const std::size_t hyperbolic = family == Family::Ominus ? m - 1 : m;
  for (std::size_t i = 0; i < hyperbolic; ++i) qc[i * n + (n - 1 - i)] = 1;
  if (family == Family::Ominus) {
    auto [t, c] = least_irreducible_quadratic(k);
    qc[(m - 1) * n + (m - 1)] = 1;
    qc[(m - 1) * n + m] = t;
    qc[m * n + m] = c;
  } else if (family == Family::SOodd) {
    qc[m * n + m] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Fq c = qc[i * n + j];
      if (i == j) {
        g[i * n + i] = k.add(c, c);
      } else {
        g[i * n + j] = c;
        g[j * n + i] = c;
      }
    }
  }
  out.gram = FqMatrix(field, n, g);
  out.quadratic = FqMatrix(field, n, qc);
  return out;
}

class Enumerator {
public:
  Enumerator(Family family, std::size_t n, unsigned q, FieldPtr field, const Forms& forms, std::size_t cap)
      : family_(family), n_(n), q_(q), field_(std::move(field)), k_(*field_), forms_(forms), cap_(cap),
        found_(n * n) {
    const unsigned Q = k_.q();
    count_ = 1;
    for (std::size_t i = 0; i < n_; ++i) count_ *= Q;
    coords_.resize(count_ * n_);
    for (std::size_t v = 0; v < count_; ++v) {
      std::size_t x = v;
      for (std::size_t i = 0; i < n_; ++i) {
        coords_[v * n_ + i] = static_cast<Fq>(x % Q);
        x /= Q;
      }
    }
    if (forms_.quadratic) {
      qvals_.resize(count_);
      for (std::size_t v = 0; v < count_; ++v) qvals_[v] = quadratic_value(*forms_.quadratic, vec(v));
    }
  }

  detail::ElementTable<Fq> run() {
    cols_.assign(n_, 0);
    if (!forms_.gram) {
      span_.assign(1, std::vector<char>(count_, 0));
      span_[0][0] = 1;
    }
    descend(0);
    return std::move(found_);
  }

private:
  std::span<const Fq> vec(std::size_t v) const { return {coords_.data() + v * n_, n_}; }

  Fq conj(Fq x) const { return is_unitary(family_) ? k_.pow(x, q_) : x; }

  Fq form(std::size_t u, std::size_t w) const {
    const FqMatrix& g = *forms_.gram;
    auto a = vec(u), b = vec(w);
    Fq s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        Fq gij = g.at(i, j);
        if (gij != 0 && b[j] != 0) s = k_.add(s, k_.mul(a[i], k_.mul(gij, conj(b[j]))));
      }
    }
    return s;
  }

  bool admissible(std::size_t level, std::size_t v) const {
    if (!forms_.gram) return !span_[level][v];
    const FqMatrix& g = *forms_.gram;
    if (forms_.quadratic) {
      if (qvals_[v] != forms_.quadratic->at(level, level)) return false;
    } else if (is_unitary(family_)) {
      if (form(v, v) != g.at(level, level)) return false;
    } else if (v == 0) {
      return false; // alternating: B(v, v) = 0 always, exclude zero explicitly
    }
    for (std::size_t j = 0; j < level; ++j) {
      if (form(cols_[j], v) != g.at(j, level)) return false;
    }
    return true;
  }

  void extend_span(std::size_t level, std::size_t v) {
    if (span_.size() <= level + 1) span_.resize(level + 2);
    auto& next = span_[level + 1];
    next.assign(count_, 0);
    const unsigned Q = k_.q();
    std::vector<Fq> w(n_);
    for (std::size_t s = 0; s < count_; ++s) {
      if (!span_[level][s]) continue;
      for (unsigned c = 0; c < Q; ++c) {
        std::size_t idx = 0, mult = 1;
        for (std::size_t i = 0; i < n_; ++i) {
          Fq x = k_.add(coords_[s * n_ + i], k_.mul(static_cast<Fq>(c), coords_[v * n_ + i]));
          idx += x * mult;
          mult *= Q;
        }
        next[idx] = 1;
      }
    }
  }

  void descend(std::size_t level) {
    if (level == n_) {
      std::vector<Fq> m(n_ * n_);
      for (std::size_t c = 0; c < n_; ++c) {
        for (std::size_t r = 0; r < n_; ++r) m[r * n_ + c] = coords_[cols_[c] * n_ + r];
      }
      if (needs_det_one(family_) && FqMatrix(field_, n_, m).det() != 1) return;
      if (found_.size() >= cap_) throw Error(ErrorKind::CapExceeded, "classical group exceeds element cap");
      found_.insert(m);
      return;
    }
    for (std::size_t v = 0; v < count_; ++v) {
      if (!admissible(level, v)) continue;
      cols_[level] = v;
      if (!forms_.gram && level + 1 < n_) extend_span(level, v);
      descend(level + 1);
    }
  }

  Family family_;
  std::size_t n_;
  unsigned q_;
  FieldPtr field_;
  const FqField& k_;
  const Forms& forms_;
  std::size_t cap_;
  std::size_t count_ = 0;
  std::vector<Fq> coords_;
  std::vector<Fq> qvals_;
  std::vector<std::size_t> cols_;
  std::vector<std::vector<char>> span_;
  detail::ElementTable<Fq> found_;
};

} // namespace

std::size_t ClassicalGroup::rank() const {
  const std::size_t n = data_->n;
  switch (data_->family) {
    case Family::GL:
    case Family::GU: return n;
    case Family::SL:
    case Family::SU: return n - 1;
    case Family::Sp:
    case Family::Oplus:
    case Family::Ominus:
    case Family::SOodd: return n / 2;
  }
  return n;
}

FqMatrix ClassicalGroup::element(std::size_t i) const {
  auto e = data_->table[i];
  return FqMatrix(data_->field, data_->n, std::vector<Fq>(e.begin(), e.end()));
}

std::optional<std::uint32_t> ClassicalGroup::index_of(const FqMatrix& m) const {
  if (m.n() != data_->n || m.field().q() != data_->field->q()) return std::nullopt;
  return data_->table.find(m.entries());
}

std::vector<std::vector<Fq>> ClassicalGroup::generator_entries() const {
  std::vector<std::vector<Fq>> out;
  for (const auto& g : data_->generators) out.emplace_back(g.entries().begin(), g.entries().end());
  return out;
}

std::string ClassicalGroup::name() const {
  return std::string(to_string(data_->family)) + "(" + std::to_string(data_->n) + "," + std::to_string(data_->q) + ")";
}

bool ClassicalGroup::preserves_form(const FqMatrix& m) const {
  const FqField& k = *data_->field;
  const std::size_t n = data_->n;
  if (m.n() != n || k.q() != m.field().q()) return false;
  const Fq det = m.det();
  if (det == 0) return false;
  if (needs_det_one(data_->family) && det != 1) return false;
  if (!data_->gram) return true;
  const FqMatrix& g = *data_->gram;
  const bool unitary = is_unitary(data_->family);
  std::vector<Fq> col_a(n), col_b(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t r = 0; r < n; ++r) col_a[r] = m.at(r, a);
    if (data_->quadratic && quadratic_value(*data_->quadratic, col_a) != data_->quadratic->at(a, a)) return false;
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t r = 0; r < n; ++r) col_b[r] = m.at(r, b);
      Fq s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Fq y = unitary ? k.pow(col_b[j], data_->q) : col_b[j];
          s = k.add(s, k.mul(col_a[i], k.mul(g.at(i, j), y)));
        }
      }
      if (s != g.at(a, b)) return false;
    }
  }
  return true;
}

ClassicalGroup build_classical(Family family, std::size_t n, unsigned q, std::size_t cap) {
  validate(family, n, q);
  const std::uint64_t formula = classical_order_formula(family, n, q);
  if (formula > cap) {
    throw Error(ErrorKind::CapExceeded, std::string(to_string(family)) + "(" + std::to_string(n) + "," +
                                            std::to_string(q) + ") has order " + std::to_string(formula) +
                                            " above the cap " + std::to_string(cap));
  }
  FieldPtr field = make_field_of_order(is_unitary(family) ? q * q : q);
  Forms forms = standard_forms(family, n, field);

  // SL/SU/SO are enumerated through the full isometry group, so allow its size
  std::size_t enum_cap = cap;
  if (family == Family::SL) enum_cap = cap * (q - 1);
  if (family == Family::SU) enum_cap = cap * (q + 1);
  if (family == Family::SOodd) enum_cap = cap * 2;
  Enumerator en(family, n, q, field, forms, enum_cap);
  detail::ElementTable<Fq> all = en.run();
  if (all.size() != formula) {
    throw Error(ErrorKind::Internal, "enumerated " + std::to_string(all.size()) + " elements, order formula gives " +
                                         std::to_string(formula));
  }

  auto data = std::make_shared<ClassicalGroup::Data>(ClassicalGroup::Data{
      family, n, q, field, forms.gram, forms.quadratic, formula, {},
      detail::MatOps{n, field->q(), field->add_table(), field->mul_table()}, detail::ElementTable<Fq>(n * n)});

  // deterministic generator choice: add random elements until they generate
  std::mt19937 rng(0x5eedU);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::vector<std::vector<Fq>> gens;
  detail::ElementTable<Fq> closure(n * n);
  while (closure.size() != all.size()) {
    auto cand = all[pick(rng)];
    if (closure.size() > 0 && closure.contains(cand)) continue;
    gens.emplace_back(cand.begin(), cand.end());
    closure = detail::close(data->ops, gens, cap);
  }
  for (const auto& g : gens) data->generators.emplace_back(field, n, g);
  data->table = std::move(closure);
  return ClassicalGroup(std::move(data));
}

std::uint64_t centralizer_order(const ClassicalGroup& group, const FqMatrix& m) {
  if (!group.contains(m)) throw Error(ErrorKind::NotElement, "matrix is not in " + group.name());
  const auto& ops = group.ops();
  const std::size_t w = ops.width();
  std::vector<Fq> ab(w), ba(w);
  auto x = m.entries();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < group.order(); ++i) {
    auto g = group.element_entries(i);
    ops.multiply(g.data(), x.data(), ab.data());
    ops.multiply(x.data(), g.data(), ba.data());
    count += std::equal(ab.begin(), ab.end(), ba.begin());
  }
  return count;
}

Permutation vector_permutation(const FqMatrix& m) {
  const FqField& k = m.field();
  const std::size_t n = m.n();
  const unsigned Q = k.q();
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= Q;
  if (count > std::numeric_limits<Point>::max()) throw Error(ErrorKind::TooLarge, "too many vectors for a permutation");
  std::vector<Point> img(count);
  std::vector<Fq> v(n);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t x = idx;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<Fq>(x % Q);
      x /= Q;
    }
    std::size_t out = 0, mult = 1;
    for (std::size_t j = 0; j < n; ++j) {
      Fq s = 0;
      for (std::size_t i = 0; i < n; ++i) s = k.add(s, k.mul(v[i], m.at(i, j)));
      out += s * mult;
      mult *= Q;
    }
    img[idx] = static_cast<Point>(out);
  }
  return Permutation::from_images(std::move(img));
}

PermGroup to_permutation_group(const ClassicalGroup& group, std::size_t cap) {
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) gens.push_back(vector_permutation(g));
  PermGroup out = PermGroup::close(gens, cap);
  if (out.order() != group.order()) throw Error(ErrorKind::Internal, "vector action is not faithful");
  return out;
}

} // namespace drg
