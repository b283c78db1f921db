#include "rootzeta/reference_scan.hpp"

#include <algorithm>
#include <set>

#include "rootzeta/errors.hpp"
#include "rootzeta/scan.hpp"

namespace rootzeta {

ReferenceResult reference_scan(const RootSystem& rs, const WeightFunction& rho, bool extended_d) {
  if (extended_d && rs.family() != Family::D) throw UnsupportedOperation("the extended group exists for type D only");
  const int n = rs.rank();
  const auto wc = weight_classes(rs, rho);
  const Action twist = extended_d ? twist_permutation(rs) : Action{};
  const int skip = extended_d ? n - 2 : -1;

  std::vector<Action> generators;
  for (int j = 0; j < n; ++j) generators.push_back(action_of_word(rs, std::vector<int>{j}));

  ReferenceResult result;
  std::set<Action> seen;
  std::vector<Action> layer{identity_action(rs)};
  seen.insert(layer.front());
  while (!layer.empty()) {
    std::vector<std::pair<Word, Action>> sorted;
    for (auto& a : layer) sorted.emplace_back(canonical_word(rs, a), a);
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [word, action] : sorted) {
      ++result.scanned;
      auto z = zeta_of(rs, wc, action);
      int idx = first_non_positive(z, skip);
      if (idx >= 0 && !result.counterexample) result.counterexample = Counterexample{word, idx, z, false};
      if (!extended_d) continue;
      ++result.scanned;
      z = zeta_of(rs, wc, compose(twist, action));
      idx = first_non_positive(z, skip);
      if (idx >= 0 && !result.counterexample) result.counterexample = Counterexample{word, idx, z, true};
    }
    if (result.counterexample) break;

    std::vector<Action> next;
    for (const auto& a : layer) {
      for (const auto& g : generators) {
        auto b = compose(a, g);
        if (length_of(rs, b) != length_of(rs, a) + 1) continue;
        if (seen.insert(b).second) next.push_back(std::move(b));
      }
    }
    layer = std::move(next);
  }
  return result;
}

}  // namespace rootzeta
