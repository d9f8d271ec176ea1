#include "helpers.hpp"

#include "drg/fqlin.hpp"

using namespace drg;

TEST_SUITE("fqlin") {

TEST_CASE("field axioms (property)") {
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U, 16U, 25U, 27U, 49U, 64U, 81U, 121U, 125U, 128U}) {
    auto k = make_field_of_order(q);
    CHECK(k->q() == q);
    for (unsigned a = 0; a < q; ++a) {
      CHECK(k->add(static_cast<Fq>(a), k->neg(static_cast<Fq>(a))) == 0);
      if (a == 0) continue;
      CHECK(k->mul(static_cast<Fq>(a), k->inv(static_cast<Fq>(a))) == 1);
      CHECK(k->pow(static_cast<Fq>(a), q - 1) == 1);
    }
    // the Frobenius map is additive and multiplicative
    for (unsigned a = 0; a < q; a += 3) {
      for (unsigned b = 0; b < q; b += 5) {
        Fq x = static_cast<Fq>(a), y = static_cast<Fq>(b);
        CHECK(k->frobenius(k->add(x, y)) == k->add(k->frobenius(x), k->frobenius(y)));
        CHECK(k->frobenius(k->mul(x, y)) == k->mul(k->frobenius(x), k->frobenius(y)));
      }
    }
    Fq g = k->primitive_element();
    std::set<Fq> powers;
    for (unsigned e = 0; e < q - 1; ++e) powers.insert(k->pow(g, e));
    CHECK(powers.size() == q - 1);
  }
}

TEST_CASE("F4 multiplication") {
  auto k = make_field(2, 2); // x^2 + x + 1, x encoded as 2
  CHECK(k->mul(2, 2) == 3);
  CHECK(k->mul(2, 3) == 1);
  CHECK(k->from_int(3) == 1);
}

TEST_CASE("field errors") {
  CHECK_THROWS_KIND(make_field(6, 1), ErrorKind::NotPrime);
  CHECK_THROWS_KIND(make_field_of_order(10), ErrorKind::NotPrime);
  CHECK_THROWS_KIND(make_field_of_order(512), ErrorKind::TooLarge);
  CHECK_THROWS_KIND(make_field(5, 1)->inv(0), ErrorKind::Singular);
  CHECK(prime_power(27) == std::make_pair(3U, 3U));
  CHECK_FALSE(prime_power(12));
}

TEST_CASE("polynomials") {
  auto k = make_field(3, 1);
  FqPoly sq = poly::mul(*k, {1, 1}, {1, 1}); // (x+1)^2
  CHECK_FALSE(poly::is_squarefree(*k, sq));
  CHECK(poly::is_squarefree(*k, {1, 0, 1}));             // x^2 + 1, irreducible over F3
  CHECK(poly::factor_degrees(*k, {1, 0, 1}) == std::vector<unsigned>{2});
  CHECK(poly::factor_degrees(*k, {2, 0, 1}) == std::vector<unsigned>{1, 1}); // x^2 - 1
  auto [quot, rem] = poly::divmod(*k, sq, {1, 1});
  CHECK(quot == FqPoly{1, 1});
  CHECK(rem.empty());
  CHECK_THROWS_KIND(poly::divmod(*k, sq, {}), ErrorKind::Singular);
}

TEST_CASE("matrices") {
  auto k = make_field(3, 1);
  FqMatrix m = FqMatrix::from_ints(k, 2, {1, 1, 0, 1});
  CHECK(m.det() == 1);
  CHECK((m * m * m) == FqMatrix::identity(k, 2)); // unipotent of order 3
  CHECK(m.charpoly() == FqPoly{1, 1, 1});           // (x - 1)^2 = x^2 + x + 1 over F3
  CHECK_FALSE(is_regular_semisimple(m));
  CHECK(is_regular_semisimple(FqMatrix::from_ints(k, 2, {0, 2, 1, 0}))); // x^2 + 1
  CHECK_THROWS_KIND(is_regular_semisimple(FqMatrix::from_ints(k, 2, {1, 1, 1, 1})), ErrorKind::Singular);
}

TEST_CASE("classical group orders match the formulas") {
  struct Case {
    Family f;
    std::size_t n;
    unsigned q;
    std::uint64_t order;
  };
  for (const Case& c : {Case{Family::GL, 2, 3, 48}, Case{Family::SL, 2, 5, 120}, Case{Family::Sp, 4, 2, 720},
                        Case{Family::Oplus, 4, 2, 72}, Case{Family::Ominus, 4, 2, 120}, Case{Family::GU, 2, 2, 18},
                        Case{Family::SU, 3, 2, 216}, Case{Family::SOodd, 3, 3, 24}, Case{Family::Oplus, 2, 5, 8},
                        Case{Family::Ominus, 2, 5, 12}}) {
    ClassicalGroup g = build_classical(c.f, c.n, c.q);
    CHECK_MESSAGE(g.order() == c.order, g.name());
    CHECK(classical_order_formula(c.f, c.n, c.q) == c.order);
    for (const auto& gen : g.generators()) CHECK(g.preserves_form(gen));
  }
}

TEST_CASE("ranks and names") {
  CHECK(build_classical(Family::SL, 3, 2).rank() == 2);
  CHECK(build_classical(Family::Sp, 4, 3).rank() == 2);
  CHECK(build_classical(Family::SOodd, 5, 3).rank() == 2);
  CHECK(build_classical(Family::GU, 2, 2).rank() == 2);
  CHECK(build_classical(Family::Oplus, 4, 2).name() == "O+(4,2)");
  CHECK(parse_family("Ominus") == Family::Ominus);
}

TEST_CASE("classical errors") {
  CHECK_THROWS_KIND(build_classical(Family::Sp, 3, 3), ErrorKind::InvalidInput);
  CHECK_THROWS_KIND(build_classical(Family::SOodd, 3, 4), ErrorKind::UnsupportedFamily);
  CHECK_THROWS_KIND(build_classical(Family::GU, 2, 17), ErrorKind::TooLarge);
  CHECK_THROWS_KIND(build_classical(Family::GL, 2, 6), ErrorKind::NotPrime);
  CHECK_THROWS_KIND(build_classical(Family::GL, 4, 3, 1000), ErrorKind::CapExceeded);
  CHECK_THROWS_KIND(parse_family("E8"), ErrorKind::UnsupportedFamily);
}

TEST_CASE("vector action is faithful") {
  ClassicalGroup g = build_classical(Family::GL, 2, 3);
  PermGroup p = to_permutation_group(g);
  CHECK(p.order() == 48);
  CHECK(p.degree() == 9);
}

}
