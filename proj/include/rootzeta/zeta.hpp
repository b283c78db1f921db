#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rootzeta/rootsys.hpp"
#include "rootzeta/weights.hpp"
#include "rootzeta/weyl.hpp"

namespace rootzeta {

/// Delta-coordinates of sum_{v in V_2} |w(v)| - sum_{v in V_0} |w(v)|.
using ZetaVector = std::vector<std::int64_t>;

ZetaVector zeta_of(const RootSystem& rs, const WeightClasses& wc, std::span<const RootIndex> action);
ZetaVector zeta_of(const RootSystem& rs, const WeightFunction& rho, std::span<const RootIndex> action);
ZetaVector zeta_of(const RootSystem& rs, const WeightFunction& rho, const WeylElement& w);
ZetaVector zeta_of(const RootSystem& rs, const WeightFunction& rho, const ExtendedElementD& w);

bool strictly_positive(std::span<const std::int64_t> z);

/// "[0,1]"
std::string format_zeta(std::span<const std::int64_t> z);
ZetaVector parse_zeta(std::string_view text);

/// Per-root sign used by the incremental update: +1 on V_2, -1 on V_0, 0 elsewhere.
std::vector<std::int8_t> zeta_signs(const WeightClasses& wc);

/// zeta along a path of left multiplications by simple reflections:
///   zeta(s_j y) = s_j(zeta(y)) + 2c alpha_j,
///   c = eps(y^{-1}(alpha_j)) + eps(y^{-1}(-alpha_j)).
/// The coefficient c only involves roots that s_j moves to or from +-alpha_j,
/// since |s_j u| = s_j|u| for every other root u.
class ZetaTracker {
 public:
  ZetaTracker(const RootSystem& rs, const WeightClasses& wc);
  ZetaTracker(const RootSystem& rs, const WeightClasses& wc, ZetaVector initial);

  int coefficient(int j, std::span<const RootIndex> inv_y) const {
    return signs_[inv_y[simple_[j]]] + signs_[inv_y[neg_simple_[j]]];
  }

  /// Applies s_letter and adds 2c alpha_letter.
  void push(int letter, int c) {
    if (stack_.size() < (depth_ + 2) * rank_) stack_.resize((depth_ + 2) * rank_);
    const std::int64_t* cur = stack_.data() + depth_ * rank_;
    std::int64_t* nxt = stack_.data() + (depth_ + 1) * rank_;
    std::int64_t pairing = 0;
    const int* row = cartan_.data() + static_cast<std::size_t>(letter) * rank_;
    for (std::size_t k = 0; k < rank_; ++k) {
      nxt[k] = cur[k];
      pairing += row[k] * cur[k];
    }
    nxt[letter] += 2 * c - pairing;
    ++depth_;
  }
  void pop() { --depth_; }

  std::span<const std::int64_t> value() const { return {stack_.data() + depth_ * rank_, rank_}; }
  std::size_t depth() const { return depth_; }

 private:
  std::size_t rank_;
  std::vector<std::int8_t> signs_;
  std::vector<RootIndex> simple_;
  std::vector<RootIndex> neg_simple_;
  std::vector<int> cartan_;
  std::vector<std::int64_t> stack_;
  std::size_t depth_ = 0;
};

}  // namespace rootzeta
