#include "helpers.hpp"

#include "drg/classcount.hpp"

using namespace drg;

TEST_SUITE("classcount") {

TEST_CASE("partitions") {
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(10).size() == 42);
  CHECK(Partition({1, 3, 2}).parts() == std::vector<std::size_t>{3, 2, 1});
  CHECK_THROWS_KIND(Partition({2, 0}), ErrorKind::BadPartition);
}

TEST_CASE("irreducible polynomial counts") {
  CHECK(irreducible_count(1, 7) == 7);
  CHECK(irreducible_count(2, 2) == 1);
  CHECK(irreducible_count(3, 2) == 2);
  CHECK(irreducible_count(4, 2) == 3);
  CHECK(irreducible_count(2, 3) == 3);
}

TEST_CASE("GL generating function agrees with the closed form (property)") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) CHECK(k_gl_genfun(n, q) == k_gl_closed_form(n, q));
  }
  // k(GL(2,q)) = q^2 - 1
  for (unsigned q : {2U, 3U, 5U, 7U, 11U}) CHECK(k_gl_genfun(2, q) == q * q - 1);
}

TEST_CASE("brute-force class counts") {
  struct Case {
    Family f;
    std::size_t n;
    unsigned q;
    std::uint64_t k;
  };
  // GL(3,2) = PSL(2,7); Sp(4,2) = S6; O-(4,2) = S5; O+(4,2) = S3 wr S2; SO(3,3) = S4
  for (const Case& c : {Case{Family::GL, 3, 2, 6}, Case{Family::Sp, 4, 2, 11}, Case{Family::Ominus, 4, 2, 7},
                        Case{Family::Oplus, 4, 2, 9}, Case{Family::SOodd, 3, 3, 5}, Case{Family::GL, 2, 3, 8},
                        Case{Family::SL, 2, 5, 9}, Case{Family::Sp, 4, 3, 34}, Case{Family::GU, 2, 2, 9},
                        Case{Family::SU, 3, 2, 16}}) {
    CHECK(class_count(c.f, c.n, c.q).k == c.k);
  }
  // SL(2,q): q + 4 classes for odd q, q + 1 for even q
  for (unsigned q : {3U, 4U, 5U, 7U, 8U, 9U}) CHECK(class_count(Family::SL, 2, q).k == (q % 2 ? q + 4 : q + 1));
}

TEST_CASE("class count methods") {
  ClassCountRecord both = class_count(Family::GL, 3, 3, "both");
  CHECK(both.k == 24);
  ClassCountRecord big = class_count(Family::GL, 6, 5, "genfun");
  CHECK(BigInt(big.k) == k_gl_closed_form(6, 5));
  CHECK_THROWS_KIND(class_count(Family::SL, 2, 3, "genfun"), ErrorKind::UnsupportedFamily);
  CHECK_THROWS_KIND(class_count(Family::GL, 2, 3, "guess"), ErrorKind::InvalidInput);
}

TEST_CASE("p-regular classes") {
  ClassCountRecord r = class_count(Family::GL, 2, 3);
  CHECK(r.k_p == 6);
  CHECK(class_count(Family::SL, 2, 5).k_p == 5);
}

TEST_CASE("class-count bounds") {
  BoundCheck b = bound_check(class_count(Family::Sp, 4, 3));
  CHECK(b.pass);
  CHECK(b.k == 34);
  CHECK_THROWS_KIND(bound_check(class_count(Family::GL, 2, 3)), ErrorKind::FamilyMismatch);
}

TEST_CASE("index lemma") {
  ClassicalGroup gl = build_classical(Family::GL, 2, 3);
  ClassicalGroup sl = build_classical(Family::SL, 2, 3);
  for (unsigned p : {0U, 3U}) {
    IndexLemmaReport r = check_index_lemma(gl, sl, p);
    CHECK(r.index == 2);
    CHECK(r.normal);
    CHECK(r.pass());
  }
  CHECK_THROWS_KIND(check_index_lemma(sl, gl, 0), ErrorKind::NotSubgroup);
}

TEST_CASE("semisimple classes and rss proportion") {
  for (unsigned q : {3U, 5U, 7U}) {
    SemisimpleReport s = semisimple_report(build_classical(Family::SL, 2, q));
    CHECK(s.count == q);
    CHECK(s.equality);
  }
  // SO(3,q) = PGL(2,q) is adjoint: q + 1 semisimple classes, one above q^r
  for (unsigned q : {3U, 5U, 7U}) CHECK(semisimple_class_count(build_classical(Family::SOodd, 3, q)) == q + 1);
  CHECK(semisimple_class_count(build_classical(Family::SOodd, 5, 3)) == 12);
  CHECK(rss_proportion(build_classical(Family::GL, 2, 7)) == frac(41, 48));
  RssReport r = rss_report(build_classical(Family::SL, 2, 9));
  CHECK(r.bound_positive);
  CHECK(r.pass);
  CHECK_FALSE(rss_report(build_classical(Family::SL, 2, 5)).bound_positive);
}

TEST_CASE("central quotient") {
  CentralQuotientReport r = central_quotient(build_classical(Family::SL, 2, 5));
  CHECK(r.center_order == 2);
  CHECK(r.k_group == 9);
  CHECK(r.k_quotient == 5); // PSL(2,5) = A5
}

TEST_CASE("Sp(4,2) acting on quadratic forms") {
  ClassicalGroup sp = build_classical(Family::Sp, 4, 2);
  FormsDelta minus = symplectic_on_forms(sp, build_classical(Family::Ominus, 4, 2));
  CHECK(minus.degree == 6);
  CHECK(minus.agree());
  // S6 on 6 points through an outer automorphism: 265 derangements
  CHECK(minus.by_action == frac(53, 144));
  FormsDelta plus = symplectic_on_forms(sp, build_classical(Family::Oplus, 4, 2));
  CHECK(plus.degree == 10);
  CHECK(plus.agree());
  CHECK_THROWS_KIND(symplectic_on_forms(build_classical(Family::Sp, 2, 3), build_classical(Family::Oplus, 2, 3)),
                    ErrorKind::FamilyMismatch);
}

TEST_CASE("limit products") {
  CHECK(limit_partial(Family::GL, 3).value == ExactRatio(1));
  LimitEval gu = limit_partial(Family::GU, 2);
  CHECK(gu.item == 2);
  CHECK(gu.value.to_double() == doctest::Approx(8.256).epsilon(1e-3));
  CHECK(limit_partial(Family::Sp, 3).item == 3);
  CHECK(limit_partial(Family::Sp, 2).item == 4);
  CHECK(limit_partial(Family::SOodd, 3).item == 7);
  // deeper truncations move the value less (property)
  for (unsigned q : {3U, 5U}) {
    CHECK(limit_partial(Family::Oplus, q, 30).last_deviation < limit_partial(Family::Oplus, q, 10).last_deviation);
  }
  CHECK_THROWS_KIND(limit_partial(Family::SL, 3), ErrorKind::UnsupportedFamily);
  CHECK_THROWS_KIND(limit_partial(Family::SOodd, 2), ErrorKind::UnsupportedFamily);
  CHECK_THROWS_KIND(limit_partial(Family::GL, 3, 0), ErrorKind::InvalidInput);
}

}
