#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "rootzeta/errors.hpp"
#include "rootzeta/weyl.hpp"

using namespace rootzeta;

namespace {

std::vector<WeylElement> elements(const RootSystem& rs) {
  std::vector<WeylElement> out;
  WeylStream s(rs);
  while (auto w = s.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace

TEST_CASE("stream covers the group once") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 1}, {Family::A, 4}, {Family::B, 4}, {Family::C, 3},
                                                         {Family::D, 4}, {Family::F, 4}, {Family::G, 2}}) {
    auto rs = RootSystem::build(f, n);
    auto all = elements(rs);
    CHECK(all.size() == group_order(rs));
    std::set<Action> seen;
    for (const auto& w : all) {
      CHECK(seen.insert(w.action).second);
      CHECK(w.length == static_cast<int>(w.word.size()));
      CHECK(length_of(rs, w.action) == w.length);
      CHECK(action_of_word(rs, w.word) == w.action);
    }
  }
}

TEST_CASE("canonical words are the least reduced words") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::A, 3}, {Family::B, 3}, {Family::C, 3},
                                                         {Family::G, 2}}) {
    auto rs = RootSystem::build(f, n);
    // least word per action among all words of each length, by brute force
    std::map<Action, Word> least;
    std::vector<Word> layer{Word{}};
    least[identity_action(rs)] = Word{};
    while (!layer.empty()) {
      // every reduced word of the next length, not only extensions of least ones
      std::set<Word> grown;
      for (const auto& w : layer) {
        for (int j = 0; j < n; ++j) {
          Word v = w;
          v.push_back(j);
          if (length_of(rs, action_of_word(rs, v)) == static_cast<int>(v.size())) grown.insert(v);
        }
      }
      for (const auto& v : grown) least.try_emplace(action_of_word(rs, v), v);  // set order: first is least
      layer.assign(grown.begin(), grown.end());
    }
    for (const auto& w : elements(rs)) {
      CAPTURE(format_word(w.word));
      CHECK(least.at(w.action) == w.word);
      CHECK(canonical_word(rs, w.action) == w.word);
    }
  }
}

TEST_CASE("walker tree") {
  auto rs = RootSystem::build(Family::B, 3);
  WeylWalker walker(rs, true);
  std::size_t visited = 0;
  std::function<void()> dfs = [&] {
    ++visited;
    const auto fwd = walker.forward();
    const auto inv = walker.inverse();
    CHECK(Action(fwd.begin(), fwd.end()) == action_of_word(rs, walker.word()));
    CHECK(Action(inv.begin(), inv.end()) == inverse(fwd));
    for (int j = 0; j < rs.rank(); ++j) {
      if (!walker.can_extend(j)) continue;
      walker.push(j);
      // j is the least left descent of the child
      CHECK(walker.word().front() == j);
      CHECK(canonical_word(rs, action_of_word(rs, walker.word())) == walker.word());
      dfs();
      walker.pop();
    }
  };
  dfs();
  CHECK(visited == 48);
  CHECK(walker.length() == 0);

  WeylWalker again(rs);
  again.replay(std::vector<int>{0, 1, 0});
  CHECK(again.word() == Word{0, 1, 0});
  WeylWalker bad(rs);
  CHECK_THROWS_AS(bad.replay(std::vector<int>{0, 0}), ParameterError);
}

TEST_CASE("prefix streams partition the group") {
  auto rs = RootSystem::build(Family::D, 4);
  std::size_t total = 1;  // identity
  for (int j = 0; j < rs.rank(); ++j) {
    WeylStream sub(rs, std::vector<int>{j});
    while (sub.advance()) ++total;
  }
  CHECK(total == 192);
}

TEST_CASE("word formatting") {
  CHECK(format_word(Word{}).empty());
  CHECK(format_word(Word{0, 2, 1}) == "1.3.2");
  CHECK(parse_word("1.3.2", 3) == Word{0, 2, 1});
  CHECK(parse_word("", 3).empty());
  CHECK_THROWS_AS(parse_word("1.4", 3), ParameterError);
  CHECK_THROWS_AS(parse_word("1..2", 3), ParameterError);
  CHECK_THROWS_AS(parse_word("x", 3), ParameterError);
}

TEST_CASE("composition and inverses") {
  auto rs = RootSystem::build(Family::F, 4);
  auto a = action_of_word(rs, Word{0, 1, 2, 3});
  auto b = action_of_word(rs, Word{3, 2, 1, 0});
  CHECK(inverse(a) == b);
  CHECK(compose(a, b) == identity_action(rs));
  CHECK(compose(action_of_word(rs, Word{0}), action_of_word(rs, Word{1})) == action_of_word(rs, Word{0, 1}));
  auto e = element_from_action(rs, a);
  CHECK(e.length == 4);
  CHECK(element_from_word(rs, Word{0, 0}).word.empty());
}

TEST_CASE("group orders") {
  CHECK(group_order(RootSystem::build(Family::A, 5)) == 720);
  CHECK(group_order(RootSystem::build(Family::B, 4)) == 384);
  CHECK(group_order(RootSystem::build(Family::D, 5)) == 1920);
  CHECK(group_order(RootSystem::build(Family::E, 6)) == 51840);
  CHECK(group_order(RootSystem::build(Family::E, 7)) == 2903040);
  CHECK(group_order(RootSystem::build(Family::E, 8)) == 696729600);
}

TEST_CASE("outer twist") {
  auto rs = RootSystem::build(Family::D, 4);
  const auto id = element_from_word(rs, Word{});
  const auto t = outer_twist(rs, id);
  CHECK(t.twisted);
  const auto act = extended_action(rs, t);
  // e3 - e4 goes to e3 + e4
  CHECK(act[rs.simple(2)] == rs.simple(3));
  CHECK(act[rs.simple(3)] == rs.simple(2));
  CHECK(compose(act, act) == identity_action(rs));
  CHECK_FALSE(outer_twist(rs, t).twisted);
  CHECK_THROWS_AS(canonical_word(rs, act), ParameterError);

  const auto w = element_from_word(rs, Word{2, 0, 1});
  const auto back = extended_from_action(rs, extended_action(rs, outer_twist(rs, w)));
  CHECK(back.twisted);
  CHECK(back.base.word == w.word);
  CHECK_FALSE(extended_from_action(rs, w.action).twisted);
  CHECK_THROWS_AS(twist_permutation(RootSystem::build(Family::B, 3)), UnsupportedOperation);

  std::set<Action> seen;
  ExtendedStreamD s(rs);
  while (auto e = s.next()) CHECK(seen.insert(extended_action(rs, *e)).second);
  CHECK(seen.size() == 384);
}

TEST_CASE("signed permutations") {
  for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
    auto rs = RootSystem::build(f, 4);
    for (const auto& w : elements(rs)) {
      auto p = signed_permutation(rs, w.action);
      CHECK(action_from_signed_permutation(rs, p) == w.action);
    }
  }
  auto d4 = RootSystem::build(Family::D, 4);
  CHECK(signed_permutation(d4, action_of_word(d4, Word{3})) == std::vector<int>{1, 2, -4, -3});
  auto a2 = RootSystem::build(Family::A, 2);
  CHECK(signed_permutation(a2, action_of_word(a2, Word{0})) == std::vector<int>{2, 1, 3});
  // an odd number of sign changes lands in the twisted coset
  CHECK(extended_from_action(d4, action_from_signed_permutation(d4, std::vector<int>{1, 2, 3, -4})).twisted);
  CHECK_THROWS_AS(action_from_signed_permutation(d4, std::vector<int>{1, 1, 3, 4}), ParameterError);
  CHECK_THROWS_AS(signed_permutation(RootSystem::build(Family::G, 2), identity_action(RootSystem::build(Family::G, 2))),
                  UnsupportedOperation);
}
