#include <random>

#include "helpers.hpp"

#include "drg/fixtures.hpp"
#include "drg/permcore.hpp"

using namespace drg;

TEST_SUITE("permcore") {

TEST_CASE("left factor acts first") {
  Permutation a = Permutation::from_cycles("(0 1)", 3);
  Permutation b = Permutation::from_cycles("(1 2)", 3);
  Permutation ab = a * b;
  // 0 -a-> 1 -b-> 2
  CHECK(ab[0] == 2);
  CHECK(ab.to_cycles() == "(0 2 1)");
  CHECK(ab.order() == 3);
  CHECK((ab * ab.inverse()).is_identity());
  CHECK(ab.pow(3).is_identity());
  CHECK(ab.pow(-1) == ab.inverse());
}

TEST_CASE("cycle notation round trip and errors") {
  Permutation p = Permutation::from_cycles("(0 3)(1 2 4)", 6);
  CHECK(p.to_cycles() == "(0 3)(1 2 4)");
  CHECK(p.cycle_type() == std::vector<std::size_t>{3, 2, 1});
  CHECK(p.fixed_point_count() == 1);
  CHECK_THROWS_KIND(Permutation::from_cycles("(0 6)", 6), ErrorKind::InvalidGenerator);
  CHECK_THROWS_KIND(Permutation::from_cycles("(0 1)(1 2)", 3), ErrorKind::InvalidGenerator);
  CHECK_THROWS_KIND(Permutation::from_images(std::vector<Point>{0, 0, 1}), ErrorKind::InvalidGenerator);
}

TEST_CASE("closure orders") {
  CHECK(fixtures::symmetric(5).order() == 120);
  CHECK(fixtures::alternating(6).order() == 360);
  CHECK(fixtures::dihedral(4).order() == 8);
  CHECK(fixtures::pgl2(5).order() == 120);
  CHECK(fixtures::psl2(7).order() == 168);
  CHECK(fixtures::gl32_on_points().order() == 168);
  CHECK(fixtures::agl1(8).order() == 56);
  CHECK(fixtures::agaml1(8).order() == 168);
  CHECK_THROWS_KIND(PermGroup::close(fixtures::symmetric(6).generators(), 100), ErrorKind::CapExceeded);
}

TEST_CASE("conjugacy classes of S4") {
  PermGroup s4 = fixtures::symmetric(4);
  ClassTable t = conjugacy_classes(s4);
  std::multiset<std::uint64_t> sizes;
  std::uint64_t total = 0;
  for (const auto& c : t.classes) {
    sizes.insert(c.size);
    total += c.size;
  }
  CHECK(sizes == std::multiset<std::uint64_t>{1, 3, 6, 6, 8});
  CHECK(total == 24);
}

TEST_CASE("class sizes sum to the order (property)") {
  for (const PermGroup& g : {fixtures::symmetric(5), fixtures::alternating(5), fixtures::pgl2(7), fixtures::agl1(9)}) {
    ClassTable t = conjugacy_classes(g);
    std::uint64_t total = 0;
    for (const auto& c : t.classes) {
      total += c.size;
      CHECK(g.order() % c.size == 0);
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("conjugation is a homomorphism (property)") {
  PermGroup g = fixtures::symmetric(6);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int i = 0; i < 200; ++i) {
    Permutation t = g.element(pick(rng)), x = g.element(pick(rng)), y = g.element(pick(rng));
    CHECK(t.conjugate(x * y) == t.conjugate(x) * t.conjugate(y));
    CHECK(t.conjugate(x) == t.inverse() * x * t);
  }
}

TEST_CASE("actions") {
  PermGroup s5 = fixtures::symmetric(5);
  CHECK(GroupAction::subsets(s5, 2).size() == 10);
  GroupAction cos = GroupAction::cosets(fixtures::symmetric(4), fixtures::alternating(4));
  CHECK(cos.size() == 2);
  Permutation t = Permutation::from_cycles("(0 1)", 4);
  CHECK(cos.fixed_point_count(t) == 0);
  CHECK(cos.induced(t).to_cycles() == "(0 1)");
  CHECK_THROWS_KIND(GroupAction::cosets(s5, fixtures::alternating(4)), ErrorKind::NotSubgroup);
  CHECK_THROWS_KIND(subgroup(fixtures::alternating(4), {t}), ErrorKind::NotSubgroup);
}

TEST_CASE("exact ratios") {
  CHECK(ExactRatio::from_string("6/8").to_string() == "3/4");
  CHECK(ExactRatio(3).to_string() == "3/1");
  CHECK(frac(1, 3) + frac(1, 6) == frac(1, 2));
  CHECK(frac(1, 3) < frac(1, 2));
  CHECK_THROWS_KIND(frac(1, 0), ErrorKind::InvalidInput);
  CHECK_THROWS_KIND(ExactRatio(1) / ExactRatio(0), ErrorKind::InvalidInput);
  CHECK_THROWS_KIND(ExactRatio::from_string("1/x"), ErrorKind::InvalidInput);
}

}
