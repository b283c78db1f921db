#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rootzeta/rootsys.hpp"
#include "rootzeta/weights.hpp"
#include "rootzeta/weyl.hpp"
#include "rootzeta/zeta.hpp"

namespace rootzeta {

/// A linear map f from the root lattice of an A-type system (source) onto
/// the root lattice of a smaller system (target).
///
///   B_n: source A_{2n},   f(e_p) = e_p (p <= n), 0 (p = n+1), -e_{2n+2-p}
///   C_n: source A_{2n-1}, f(e_p) = e_p (p <= n), -e_{2n+1-p}
///   D_n: as C_n
///   G_2: source A_6, f(e_1..e_7) = e1-e3, e2-e3, e1-e2, 0, e2-e1, e3-e2, e3-e1
///        with alpha = e1-e2 (short) and beta = -e1+2e2-e3 in R^3
class ReductionMap {
 public:
  ReductionMap(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  const RootSystem& source() const { return source_; }
  const RootSystem& target() const { return target_; }

  /// Ambient matrix, one column per source basis vector.
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  /// delta_matrix()[g][d] = coefficient of target simple root g in f(source simple root d).
  const std::vector<std::vector<int>>& delta_matrix() const { return delta_; }

  /// f through the simple-root coefficients.
  std::vector<int> apply(std::span<const int> source_delta) const;
  /// f through the ambient matrix, then converted to target coordinates.
  std::vector<int> apply_ambient(std::span<const int> source_ambient) const;

  /// Target root hit by a source root, if the image is a root.
  std::optional<RootIndex> image_root(RootIndex r) const { return image_root_[r]; }

  /// f^{-1}(s) among source roots. Throws ParameterError for an invalid index.
  const std::vector<RootIndex>& fiber(RootIndex s) const;
  int multiplicity(RootIndex s) const { return static_cast<int>(fiber(s).size()); }
  bool constant_multiplicity() const;

  /// Replaces one fiber entry by its negative (for negative tests).
  void corrupt_fiber(RootIndex s, std::size_t entry);

 private:
  std::vector<int> target_delta(std::span<const int> v) const;

  Family family_;
  int n_;
  RootSystem source_;
  RootSystem target_;
  std::vector<std::vector<int>> matrix_;
  std::vector<std::vector<int>> delta_;
  std::vector<std::optional<RootIndex>> image_root_;
  std::vector<std::vector<RootIndex>> fibers_;
};

/// phi: target-side group elements (as root actions) to source-side actions.
/// Classical types go through signed permutations of the positions
/// 1..2n(+1); for D this covers the twisted coset as well. G_2 uses the
/// generator images s_alpha -> (12)(35)(67), s_beta -> (23)(56).
class WeylEmbedding {
 public:
  explicit WeylEmbedding(const ReductionMap& map);
  Action operator()(std::span<const RootIndex> target_action) const;
  /// phi of the i-th simple reflection.
  Action generator(int i) const;

 private:
  Family family_;
  int n_;
  RootSystem source_;
  RootSystem target_;
  std::vector<Action> generators_;  // G_2 only
};

struct Reduction {
  ReductionMap map;
  WeylEmbedding phi;
};

/// Throws ParameterError for families other than B, C, D, G or bad sizes.
Reduction build_reduction(Family family, int n);

struct ReductionProperties {
  bool positive = false;
  bool root_surjective = false;
  bool compatible = false;
};

/// All target-side elements (W, or W' for D) when there are at most
/// `exhaustive_limit`, otherwise `sample` random ones from a fixed seed.
std::vector<Action> target_elements(const ReductionMap& map, std::size_t exhaustive_limit = 10000,
                                    std::size_t sample = 1000, std::uint64_t seed = 12345);

ReductionProperties check_reduction_properties(const ReductionMap& map, const WeylEmbedding& phi,
                                               std::span<const Action> elements);

/// phi(s_i s_j) = phi(s_i) phi(s_j) for all generator pairs.
bool homomorphic_on_generators(const ReductionMap& map, const WeylEmbedding& phi);

/// f^{-1}(|s|) = |f^{-1}(s)| for every target root s.
bool fibers_commute_with_abs(const ReductionMap& map);

/// rho o f on the source simple roots. Values are arbitrary even integers in general.
std::vector<int> pullback_weights(const ReductionMap& map, std::span<const int> target_weights);

/// f^{-1}(V_k(S)) is contained in V_k(R) for every k.
bool fibers_respect_weights(const ReductionMap& map, const WeightFunction& rho);

/// V_k(R) minus f^{-1}(V_k(S)).
std::vector<RootIndex> unmatched_roots(const ReductionMap& map, const WeightFunction& rho, int k);

/// The fiber-weighted pushforward equals zeta on the target (scaled by the
/// lcm of the fiber sizes to stay integral).
bool score_identity(const ReductionMap& map, const WeylEmbedding& phi, const WeightFunction& rho,
                    std::span<const RootIndex> target_action);

/// Per-coordinate identity with the unmatched-root correction; only
/// meaningful when every fiber has the same size.
bool coefficient_identity(const ReductionMap& map, const WeylEmbedding& phi, const WeightFunction& rho,
                          std::span<const RootIndex> target_action);

struct ReductionSummary {
  std::size_t elements = 0;
  std::size_t weightings = 0;
  bool positive = false;
  bool root_surjective = false;
  bool compatible = false;
  bool homomorphic = false;
  bool abs_lemma = false;     // fibers_commute_with_abs
  bool weight_lemma = false;  // fibers_respect_weights, every rho
  bool score_identity = false;
  /// Set only when every fiber has the same size.
  std::optional<bool> coefficient_identity;

  bool all_hold() const {
    return positive && root_surjective && compatible && homomorphic && abs_lemma && weight_lemma && score_identity &&
           coefficient_identity.value_or(true);
  }
};

/// Every property above for one map, over target_elements() and all weightings.
ReductionSummary check_reduction(const Reduction& reduction);

}  // namespace rootzeta
