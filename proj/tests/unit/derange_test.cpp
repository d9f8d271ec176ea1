#include "helpers.hpp"

#include "drg/corpus.hpp"
#include "drg/derange.hpp"
#include "drg/fixtures.hpp"

using namespace drg;

namespace {

DerangementReport natural_delta(const PermGroup& g) { return delta(GroupAction::natural(g)); }

} // namespace

TEST_SUITE("derange") {

TEST_CASE("small derangement proportions") {
  // S4: 9 derangements (six 4-cycles, three double transpositions)
  DerangementReport s4 = natural_delta(fixtures::symmetric(4));
  CHECK(s4.delta == frac(3, 8));
  CHECK(s4.derangements == 9);
  CHECK(s4.status == BoundStatus::UpToTwoOverN);
  // dihedral group of the square: three rotations and two edge reflections
  CHECK(natural_delta(fixtures::dihedral(4)).delta == frac(5, 8));
  // regular action: every non-identity element
  CHECK(natural_delta(fixtures::cyclic(7)).delta == frac(6, 7));
}

TEST_CASE("Frobenius groups of order n(n-1) attain 1/n") {
  for (unsigned q : {3U, 4U, 5U, 7U, 8U, 9U}) {
    DerangementReport d = natural_delta(fixtures::agl1(q));
    CHECK(d.delta == frac(1, q));
    CHECK(d.status == BoundStatus::EqualsOneOverN);
    CHECK(d.frobenius_order_nn1);
  }
  DerangementReport half = natural_delta(fixtures::half_agl1(7));
  CHECK(half.frobenius_order_half);
  // only the 6 non-identity translations of the 21 elements are derangements
  CHECK(half.delta == frac(2, 7));
}

TEST_CASE("class-based delta matches the element scan (property)") {
  for (const auto& c : corpus::bound_instances()) {
    const GroupAction& a = c.action;
    CHECK_MESSAGE(delta_by_classes(a, conjugacy_classes(a.group())).delta == delta(a).delta, c.name);
  }
}

TEST_CASE("coset settings") {
  PermGroup s4 = fixtures::symmetric(4);
  CosetSetting odd = CosetSetting::make(GroupAction::natural(s4), fixtures::alternating(4),
                                        Permutation::from_cycles("(0 1)", 4));
  // odd permutations of S4: six transpositions (2 fixed points), six 4-cycles (none)
  CHECK(coset_delta(odd).delta == frac(1, 2));
  CHECK_FALSE(is_exceptional(odd).exceptional);
  CosetSum sum = coset_fixed_point_sum(odd);
  CHECK(sum.holds());
  CHECK(sum.sum == 12);

  PermGroup s3 = fixtures::symmetric(3);
  CosetSetting s3a3 = CosetSetting::make(GroupAction::natural(s3), fixtures::alternating(3),
                                         Permutation::from_cycles("(0 1)", 3));
  CHECK(coset_delta(s3a3).delta.is_zero());
  CHECK(is_exceptional(s3a3).exceptional);

  CHECK_THROWS_KIND(CosetSetting::make(GroupAction::natural(s4), subgroup(s4, {Permutation::from_cycles("(0 1)", 4)}),
                                       Permutation::from_cycles("(0 1 2 3)", 4)),
                    ErrorKind::NotNormal);
}

TEST_CASE("counting argument replays exactly") {
  for (const auto& c : corpus::cosets_with_hall()) {
    CountingArgument arg = coset_counting_argument(c.setting);
    CHECK_MESSAGE(arg.sum_identity, c.name);
    CHECK_MESSAGE(arg.lower_bound, c.name);
    if (arg.d == 1) CHECK_MESSAGE(arg.derangements == 0, c.name);
  }
}

TEST_CASE("Hall construction") {
  for (const auto& h : corpus::hall_pairs()) {
    HallConstruction built = exceptional_from_hall(h.ambient, h.normal_hall);
    CHECK_MESSAGE(is_exceptional(built.setting).exceptional, h.name);
    CHECK(built.complement.order() * h.normal_hall.order() == h.ambient.order());
  }
  PermGroup s4 = fixtures::symmetric(4);
  CHECK_THROWS_KIND(exceptional_from_hall(s4, fixtures::alternating(4)), ErrorKind::NotHall);
}

TEST_CASE("structural lemmas and solvability") {
  SuiteReport r = structural_lemma_checks(corpus::structural());
  CHECK(r.all_pass());
  CHECK(r.failures() == 0);
  CHECK(is_solvable(fixtures::symmetric(4)));
  CHECK_FALSE(is_solvable(fixtures::alternating(5)));
  CHECK(derived_subgroup(fixtures::symmetric(4)).order() == 12);
  CHECK(exceeds_inverse_log2(frac(1, 2), 5));       // 1/2 > 1/log2(5)
  CHECK_FALSE(exceeds_inverse_log2(frac(1, 3), 4)); // 1/3 < 1/2
}

}
