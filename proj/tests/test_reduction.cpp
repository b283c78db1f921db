#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rootzeta/errors.hpp"
#include "rootzeta/reduction.hpp"

using namespace rootzeta;

namespace {

std::set<int> fiber_sizes(const ReductionMap& map) {
  std::set<int> out;
  for (std::size_t s = 0; s < map.target().size(); ++s) out.insert(map.multiplicity(static_cast<RootIndex>(s)));
  return out;
}

}  // namespace

TEST_CASE("sources") {
  CHECK(ReductionMap(Family::B, 3).source().name() == "A6");
  CHECK(ReductionMap(Family::C, 3).source().name() == "A5");
  CHECK(ReductionMap(Family::D, 4).source().name() == "A7");
  CHECK(ReductionMap(Family::G, 2).source().name() == "A6");
  CHECK(ReductionMap(Family::G, 2).target().name() == "G2");
  CHECK_THROWS_AS(ReductionMap(Family::A, 3), ParameterError);
  CHECK_THROWS_AS(ReductionMap(Family::E, 6), ParameterError);
  CHECK_THROWS_AS(ReductionMap(Family::G, 3), ParameterError);
}

TEST_CASE("fiber sizes") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(fiber_sizes(ReductionMap(Family::B, n)) == std::set<int>{2});
    CHECK(fiber_sizes(ReductionMap(Family::C, n)) == std::set<int>{1, 2});
    CHECK(ReductionMap(Family::B, n).constant_multiplicity());
    CHECK_FALSE(ReductionMap(Family::C, n).constant_multiplicity());
  }
  for (int n = 3; n <= 4; ++n) CHECK(fiber_sizes(ReductionMap(Family::D, n)) == std::set<int>{2});
  CHECK(fiber_sizes(ReductionMap(Family::G, 2)) == std::set<int>{2, 4});
  CHECK_THROWS_AS(ReductionMap(Family::B, 2).fiber(999), ParameterError);
}

TEST_CASE("two ways of applying f agree") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::G, 2}}) {
    ReductionMap map(f, n);
    const auto& R = map.source();
    for (std::size_t r = 0; r < R.size(); ++r) {
      const auto c = R.coords(static_cast<RootIndex>(r));
      const auto a = R.ambient(static_cast<RootIndex>(r));
      const auto via_delta = map.apply(std::vector<int>(c.begin(), c.end()));
      CHECK(via_delta == map.apply_ambient(std::vector<int>(a.begin(), a.end())));
      if (auto s = map.image_root(static_cast<RootIndex>(r))) {
        const auto t = map.target().coords(*s);
        CHECK(via_delta == std::vector<int>(t.begin(), t.end()));
      }
    }
    // fibers are exactly the preimages
    for (std::size_t s = 0; s < map.target().size(); ++s) {
      for (RootIndex r : map.fiber(static_cast<RootIndex>(s))) CHECK(map.image_root(r) == static_cast<RootIndex>(s));
    }
  }
}

TEST_CASE("embedding") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::G, 2}}) {
    auto red = build_reduction(f, n);
    CHECK(homomorphic_on_generators(red.map, red.phi));
    CHECK(red.phi(identity_action(red.map.target())) == identity_action(red.map.source()));
    for (int i = 0; i < n; ++i) {
      const auto g = red.phi.generator(i);
      CHECK(compose(g, g) == identity_action(red.map.source()));
      CHECK(red.phi(action_of_word(red.map.target(), Word{i})) == g);
    }
  }
}

TEST_CASE("fiber lemmas") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 4}, {Family::C, 4}, {Family::D, 4}, {Family::G, 2}}) {
    ReductionMap map(f, n);
    CHECK(fibers_commute_with_abs(map));
    for (const auto& rho : all_weightings(map.target())) {
      CHECK(fibers_respect_weights(map, rho));
      // pulled-back weights are even
      for (int x : pullback_weights(map, rho.values())) CHECK(x % 2 == 0);
    }
  }
}

TEST_CASE("coefficient identity where fibers have one size") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::B, 3}, {Family::D, 3}, {Family::D, 4}}) {
    auto red = build_reduction(f, n);
    const auto elements = target_elements(red.map);
    for (const auto& rho : all_weightings(red.map.target())) {
      for (const auto& w : elements) CHECK(coefficient_identity(red.map, red.phi, rho, w));
    }
  }
  auto c2 = build_reduction(Family::C, 2);
  CHECK_THROWS_AS(coefficient_identity(c2.map, c2.phi, WeightFunction::parse("22"), identity_action(c2.map.target())),
                  ParameterError);
}

TEST_CASE("target elements") {
  CHECK(target_elements(ReductionMap(Family::B, 3)).size() == 48);
  CHECK(target_elements(ReductionMap(Family::D, 4)).size() == 384);
  CHECK(target_elements(ReductionMap(Family::G, 2)).size() == 12);
  ReductionMap b6(Family::B, 6);
  auto s1 = target_elements(b6);
  auto s2 = target_elements(b6);
  CHECK(s1.size() == 1000);
  CHECK(s1 == s2);
}

TEST_CASE("full property suite") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::B, 4}, {Family::C, 2}, {Family::C, 4},
                                                         {Family::D, 3}, {Family::D, 4}, {Family::G, 2}}) {
    auto s = check_reduction(build_reduction(f, n));
    CHECK(s.all_hold());
    CHECK(s.coefficient_identity.has_value() == (f == Family::B || f == Family::D));
    CHECK(s.weightings == (std::size_t{1} << n));
  }
}

TEST_CASE("corrupted map") {
  auto red = build_reduction(Family::C, 3);
  const RootIndex s = red.map.target().simple(2);
  red.map.corrupt_fiber(s, 0);
  CHECK_FALSE(check_reduction_properties(red.map, red.phi, target_elements(red.map)).positive);
  CHECK_FALSE(check_reduction(red).all_hold());
  CHECK_THROWS_AS(red.map.corrupt_fiber(s, 99), ParameterError);
}
