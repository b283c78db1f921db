#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "rootzeta/errors.hpp"
#include "rootzeta/zeta.hpp"

using namespace rootzeta;

namespace {

// Literal zeta at every node of the word tree against the tracker.
void compare_tracker(const RootSystem& rs, const WeightFunction& rho) {
  const auto wc = weight_classes(rs, rho);
  WeylWalker walker(rs, true);
  ZetaTracker z(rs, wc);
  std::function<void()> dfs = [&] {
    const auto v = z.value();
    CHECK(ZetaVector(v.begin(), v.end()) == zeta_of(rs, wc, walker.forward()));
    for (int j = 0; j < rs.rank(); ++j) {
      if (!walker.can_extend(j)) continue;
      z.push(j, z.coefficient(j, walker.inverse()));
      walker.push(j);
      dfs();
      walker.pop();
      z.pop();
    }
  };
  dfs();
  CHECK(z.depth() == 0);
}

}  // namespace

TEST_CASE("tracker matches literal zeta") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4},
                                                         {Family::G, 2}}) {
    auto rs = RootSystem::build(f, n);
    for (const auto& rho : all_weightings(rs)) compare_tracker(rs, rho);
  }
  auto f4 = RootSystem::build(Family::F, 4);
  for (const char* r : {"0000", "2020", "0202", "2222"}) compare_tracker(f4, WeightFunction::parse(r));
}

TEST_CASE("tracker started from the twist") {
  auto rs = RootSystem::build(Family::D, 4);
  const int n = rs.rank();
  const auto t = twist_permutation(rs);
  for (const auto& rho : all_weightings(rs)) {
    const auto wc = weight_classes(rs, rho);
    WeylWalker walker(rs, true);
    ZetaTracker plain(rs, wc);
    ZetaTracker twisted(rs, wc, zeta_of(rs, wc, t));
    std::function<void()> dfs = [&] {
      const auto v = twisted.value();
      CHECK(ZetaVector(v.begin(), v.end()) == zeta_of(rs, wc, compose(t, walker.forward())));
      for (int j = 0; j < n; ++j) {
        if (!walker.can_extend(j)) continue;
        const int c = plain.coefficient(j, walker.inverse());
        plain.push(j, c);
        twisted.push(j == n - 2 ? n - 1 : j == n - 1 ? n - 2 : j, c);
        walker.push(j);
        dfs();
        walker.pop();
        plain.pop();
        twisted.pop();
      }
    };
    dfs();
  }
}

TEST_CASE("swap lemma") {
  for (int n : {3, 4}) {
    auto rs = RootSystem::build(Family::D, n);
    for (const auto& rho : all_weightings(rs)) {
      WeylStream s(rs);
      while (auto w = s.next()) {
        const auto z = zeta_of(rs, rho, *w);
        const auto zt = zeta_of(rs, rho, outer_twist(rs, *w));
        for (int k = 0; k < n - 2; ++k) CHECK(z[k] == zt[k]);
        CHECK(z[n - 2] == zt[n - 1]);
        CHECK(z[n - 1] == zt[n - 2]);
      }
    }
  }
}

TEST_CASE("regular weighting is positive everywhere") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}, {Family::G, 2}, {Family::D, 4}}) {
    auto rs = RootSystem::build(f, n);
    const WeightFunction rho(std::vector<int>(n, 2));
    WeylStream s(rs);
    while (auto w = s.next()) CHECK(strictly_positive(zeta_of(rs, rho, *w)));
  }
}

TEST_CASE("zero weighting is constant") {
  // every root has weight 0, so zeta(w) = -2 * (sum of positive roots) for every w
  auto rs = RootSystem::build(Family::B, 3);
  const WeightFunction zero(std::vector<int>(3, 0));
  ZetaVector expect(3, 0);
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (!rs.is_positive(static_cast<RootIndex>(r))) continue;
    for (int k = 0; k < 3; ++k) expect[k] -= 2 * rs.coords(static_cast<RootIndex>(r))[k];
  }
  WeylStream s(rs);
  while (auto w = s.next()) CHECK(zeta_of(rs, zero, *w) == expect);
}

TEST_CASE("overloads agree") {
  auto rs = RootSystem::build(Family::C, 3);
  auto rho = WeightFunction::parse("202");
  auto w = element_from_word(rs, Word{1, 2, 0});
  CHECK(zeta_of(rs, rho, w) == zeta_of(rs, weight_classes(rs, rho), w.action));
  CHECK(zeta_of(rs, rho, w.action) == zeta_of(rs, rho, w));
  CHECK_THROWS_AS(zeta_of(rs, WeightFunction::parse("20"), w), ParameterError);
}

TEST_CASE("signs") {
  auto rs = RootSystem::build(Family::A, 3);
  auto wc = weight_classes(rs, WeightFunction::parse("202"));
  auto s = zeta_signs(wc);
  for (std::size_t r = 0; r < rs.size(); ++r) {
    const int k = wc.weight_of[r];
    CHECK(s[r] == (k == 2 ? 1 : k == 0 ? -1 : 0));
  }
}

TEST_CASE("formatting") {
  CHECK(format_zeta(ZetaVector{2, -1}) == "[2,-1]");
  CHECK(format_zeta(ZetaVector{}) == "[]");
  CHECK(parse_zeta("[2,-1]") == ZetaVector{2, -1});
  CHECK(parse_zeta("[]").empty());
  CHECK_THROWS_AS(parse_zeta("2,-1"), ParameterError);
  CHECK_THROWS_AS(parse_zeta("[2,x]"), ParameterError);
  CHECK(strictly_positive(ZetaVector{}));
}
