#include "helpers.hpp"

#include "drg/weyl.hpp"

using namespace drg;

TEST_SUITE("weyl") {

TEST_CASE("orders") {
  CHECK(weyl_group(WeylType::A, 3).order() == 24);
  CHECK(weyl_group(WeylType::B, 3).order() == 48);
  CHECK(weyl_group(WeylType::D, 4).order() == 192);
  CHECK(weyl_group(WeylType::G2, 2).order() == 12);
  CHECK(weyl_group(WeylType::G2, 2).classes().size() == 6);
  CHECK_THROWS_KIND(parse_weyl_type("E8"), ErrorKind::InvalidInput);
}

TEST_CASE("signed permutations compose like their permutation encoding") {
  WeylGroup b = weyl_group(WeylType::B, 3);
  Permutation flip = b_sign_flip(b);
  CHECK(flip.order() == 2);
  CHECK_FALSE(d_in_b(b).contains(flip));
  CHECK(d_in_b(b).order() * 2 == b.order());
}

TEST_CASE("Young subgroup (2,2) in S4") {
  WeylGroup a3 = weyl_group(WeylType::A, 3);
  PermGroup y = young_subgroup(a3, {2, 2});
  CHECK(y.order() == 4);
  ParabolicDelta pd = limiting_delta_parabolic(a3, y);
  // S4 on the 6 two-subsets: derangements are the 4-cycles and the 3-cycles
  CHECK(pd.delta == frac(7, 12));
  CHECK(pd.agrees);
  CHECK(pd.mass.mass == frac(5, 12));
}

TEST_CASE("B/D cosets have mass one half") {
  for (std::size_t r = 2; r <= 5; ++r) {
    WeylGroup b = weyl_group(WeylType::B, r);
    PermGroup d = d_in_b(b);
    CHECK(class_mass(b, d, Permutation::identity(2 * r)).mass == frac(1, 2));
    CHECK(class_mass(b, d, b_sign_flip(b)).mass == frac(1, 2));
  }
  WeylGroup g2 = weyl_group(WeylType::G2, 2);
  CHECK(class_mass(g2, g2_long_a2(g2), Permutation::identity(6)).mass == frac(1, 2));
}

TEST_CASE("analytic census matches enumeration") {
  for (WeylType t : {WeylType::A, WeylType::B, WeylType::D}) {
    for (std::size_t r = 2; r <= 5; ++r) {
      CHECK(analytic_class_census(t, r) == enumerated_class_census(weyl_group(t, r)));
    }
  }
  // D4: 13 classes (four B-classes split)
  std::size_t classes = 0;
  for (const auto& [label, entry] : analytic_class_census(WeylType::D, 4)) classes += entry.first;
  CHECK(classes == 13);
}

TEST_CASE("errors") {
  WeylGroup a3 = weyl_group(WeylType::A, 3);
  WeylGroup b3 = weyl_group(WeylType::B, 3);
  CHECK_THROWS_KIND(class_mass(a3, d_in_b(b3), Permutation::identity(4)), ErrorKind::NotSubgroup);
  CHECK_THROWS_KIND(weyl_group(WeylType::A, 12, 1000), ErrorKind::CapExceeded);
}

}
