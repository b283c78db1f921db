#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rootzeta/rootsys.hpp"

namespace rootzeta {

/// rho: Delta -> {0,2}, stored in the order of the simple roots.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::vector<int> values);

  /// Parses a digit string such as "2022". When rank >= 0 the length must match.
  static WeightFunction parse(std::string_view text, int rank = -1);
  std::string to_string() const;

  int rank() const { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[i]; }
  std::span<const int> values() const { return values_; }
  bool regular() const;

  auto operator<=>(const WeightFunction&) const = default;

 private:
  std::vector<int> values_;
};

/// All 2^rank weightings, binary counting with the first simple root most
/// significant (so "00..0" comes first and the regular one last).
std::vector<WeightFunction> all_weightings(const RootSystem& rs);

int root_weight(const RootSystem& rs, std::span<const int> simple_weights, RootIndex r);
int root_weight(const RootSystem& rs, const WeightFunction& rho, RootIndex r);

/// Roots grouped by weight. Every weight that occurs has an entry.
struct WeightClasses {
  std::map<int, std::vector<RootIndex>> by_weight;
  std::vector<int> weight_of;  // indexed by root

  const std::vector<RootIndex>& of(int k) const;
  std::size_t count(int k) const { return of(k).size(); }
};

WeightClasses weight_classes(const RootSystem& rs, const WeightFunction& rho);
/// Same for arbitrary integer weights on the simple roots.
WeightClasses weight_classes(const RootSystem& rs, std::span<const int> simple_weights);

bool is_distinguished_cardinality(const RootSystem& rs, const WeightFunction& rho);

/// Block conditions for the classical types. Throws UnsupportedOperation for E, F, G.
bool is_distinguished_closed_form(const RootSystem& rs, const WeightFunction& rho);

/// Which table produced the lifted sizes.
enum class BlockCase {
  A,
  B,
  C2,   // C, rho(gamma_n) = 2
  C0,   // C, rho(gamma_n) = 0
  D22,  // D, (rho(gamma_{n-1}), rho(gamma_n)) = (2,2)
  D00,
  D02,
};

std::string_view to_string(BlockCase c);

/// Blocks H_0..H_m of the vertex set cut after every vertex i with
/// rho(gamma_i) = 2. For A_n the vertices are 1..n+1 (gamma_i = e_i - e_{i+1});
/// for B/C/D they are 1..n. `lifted` are the sizes N^A_0..N^A_{m^A} of the
/// corresponding blocks of positions 1..2n(+1) in the ambient A-type system.
struct BlockPartition {
  Family family;
  int n;  // rank
  int m;
  std::vector<int> sizes;
  std::vector<int> lifted;
  BlockCase tag;
  bool twisted;  // D only: rho was replaced by its image under the diagram flip
  WeightFunction normalized;

  int lifted_m() const { return static_cast<int>(lifted.size()) - 1; }
  /// Number of positions in the ambient A-type system.
  int positions() const;
  /// Block index of 1-based position p.
  int block_of(int p) const;
};

/// For D: swaps the last two entries when rho(gamma_{n-1}) > rho(gamma_n).
/// Returns the weighting and whether the swap happened. Other families pass through.
std::pair<WeightFunction, bool> normalize_d(const RootSystem& rs, const WeightFunction& rho);

BlockPartition block_partition(const RootSystem& rs, const WeightFunction& rho);

}  // namespace rootzeta
