#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "rootzeta/errors.hpp"
#include "rootzeta/rootsys.hpp"

using namespace rootzeta;

namespace {

std::vector<std::vector<int>> coord_list(const RootSystem& rs) {
  std::vector<std::vector<int>> out;
  for (std::size_t r = 0; r < rs.size(); ++r) {
    auto c = rs.coords(static_cast<RootIndex>(r));
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

std::size_t expected_roots(Family f, int n) {
  switch (f) {
    case Family::A: return static_cast<std::size_t>(n * (n + 1));
    case Family::B:
    case Family::C: return static_cast<std::size_t>(2 * n * n);
    case Family::D: return static_cast<std::size_t>(2 * n * (n - 1));
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

const std::vector<std::pair<Family, int>> kSystems = {
    {Family::A, 1}, {Family::A, 4}, {Family::A, 7}, {Family::B, 2}, {Family::B, 5}, {Family::C, 3}, {Family::C, 6},
    {Family::D, 3}, {Family::D, 4}, {Family::D, 6}, {Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4},
    {Family::G, 2}};

}  // namespace

TEST_CASE("root counts by family") {
  for (auto [f, n] : kSystems) {
    CAPTURE(n);
    CHECK(RootSystem::build(f, n).size() == expected_roots(f, n));
  }
}

TEST_CASE("ambient construction agrees with closure") {
  for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = f == Family::D ? 3 : f == Family::A ? 1 : 2; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(coord_list(RootSystem::build(f, n)) == coord_list(RootSystem::build_by_closure(f, n)));
    }
  }
}

TEST_CASE("table layout") {
  for (auto [f, n] : kSystems) {
    auto rs = RootSystem::build(f, n);
    CAPTURE(rs.name());
    const auto list = coord_list(rs);
    CHECK(std::set<std::vector<int>>(list.begin(), list.end()).size() == list.size());
    for (std::size_t r = 1; r < rs.size(); ++r) {
      const auto a = static_cast<RootIndex>(r - 1), b = static_cast<RootIndex>(r);
      CHECK(std::make_pair(rs.height(a), list[a]) < std::make_pair(rs.height(b), list[b]));
    }
    for (int i = 0; i < n; ++i) {
      CHECK(rs.height(rs.simple(i)) == 1);
      CHECK(rs.coords(rs.simple(i))[i] == 1);
      CHECK(rs.cartan(i, i) == 2);
    }
    CHECK(rs.positive_count() * 2 == rs.size());
  }
}

TEST_CASE("negation and reflections") {
  for (auto [f, n] : kSystems) {
    auto rs = RootSystem::build(f, n);
    for (std::size_t r = 0; r < rs.size(); ++r) {
      const auto x = static_cast<RootIndex>(r);
      CHECK(rs.negate(rs.negate(x)) == x);
      CHECK(rs.is_positive(x) != rs.is_positive(rs.negate(x)));
      CHECK(rs.is_positive(rs.abs(x)));
      for (int i = 0; i < n; ++i) {
        CHECK(rs.reflect(i, rs.reflect(i, x)) == x);
        // s_i only changes coordinate i
        auto before = rs.coords(x), after = rs.coords(rs.reflect(i, x));
        for (int k = 0; k < n; ++k) {
          if (k != i) CHECK(before[k] == after[k]);
        }
      }
    }
    for (int i = 0; i < n; ++i) CHECK(rs.reflect(i, rs.simple(i)) == rs.negate(rs.simple(i)));
  }
}

TEST_CASE("highest root heights") {
  auto top = [](Family f, int n) {
    auto rs = RootSystem::build(f, n);
    return rs.height(static_cast<RootIndex>(rs.size() - 1));
  };
  CHECK(top(Family::G, 2) == 5);
  CHECK(top(Family::F, 4) == 11);
  CHECK(top(Family::E, 6) == 11);
  CHECK(top(Family::E, 7) == 17);
  CHECK(top(Family::E, 8) == 29);
  CHECK(top(Family::A, 5) == 5);
  CHECK(top(Family::B, 4) == 7);
}

TEST_CASE("cartan matrices") {
  CHECK(cartan_matrix(Family::G, 2) == std::vector<int>{2, -3, -1, 2});
  CHECK(cartan_matrix(Family::F, 4) == std::vector<int>{2, -1, 0, 0, -1, 2, -1, 0, 0, -2, 2, -1, 0, 0, -1, 2});
  auto b3 = cartan_matrix(Family::B, 3);
  auto c3 = cartan_matrix(Family::C, 3);
  // B and C are transposes
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(b3[i * 3 + j] == c3[j * 3 + i]);
  }
}

TEST_CASE("ambient coordinates") {
  for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
    auto rs = RootSystem::build(f, 4);
    CHECK(rs.has_ambient());
    const auto amb = classical_ambient(rs);
    for (std::size_t r = 0; r < rs.size(); ++r) {
      const auto c = rs.coords(static_cast<RootIndex>(r));
      CHECK(rs.ambient_to_delta(amb[r]) == std::vector<int>(c.begin(), c.end()));
      CHECK(rs.delta_to_ambient(std::vector<int>(c.begin(), c.end())) == amb[r]);
      CHECK(rs.find_ambient(amb[r]) == static_cast<RootIndex>(r));
    }
  }
  CHECK_THROWS_AS(RootSystem::build(Family::C, 2).ambient_to_delta(std::vector<int>{1, 0}), ParameterError);
  CHECK_THROWS_AS(RootSystem::build(Family::A, 2).ambient_to_delta(std::vector<int>{1, 0, 0}), ParameterError);
  CHECK_FALSE(RootSystem::build(Family::E, 6).has_ambient());
  CHECK_THROWS_AS(classical_ambient(RootSystem::build(Family::F, 4)), UnsupportedOperation);
}

TEST_CASE("invalid systems") {
  CHECK_THROWS_AS(RootSystem::build(Family::A, 0), ParameterError);
  CHECK_THROWS_AS(RootSystem::build(Family::B, 1), ParameterError);
  CHECK_THROWS_AS(RootSystem::build(Family::D, 2), ParameterError);
  CHECK_THROWS_AS(RootSystem::build(Family::E, 5), ParameterError);
  CHECK_THROWS_AS(RootSystem::build(Family::F, 3), ParameterError);
  CHECK_THROWS_AS(RootSystem::build(Family::G, 3), ParameterError);
  CHECK_THROWS_AS(RootSystem::build(Family::A, 25), ParameterError);
  CHECK_THROWS_AS(parse_family("X"), ParameterError);
  CHECK(parse_family("E") == Family::E);
  CHECK(RootSystem::build(Family::E, 6).name() == "E6");
}
