#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rootzeta {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family parse_family(std::string_view text);
char family_char(Family f);
bool is_classical(Family f);

using RootIndex = std::uint16_t;
using Coord = std::int16_t;

/// Read-only view of one entry of the root table.
struct Root {
  RootIndex index;
  std::span<const Coord> coords;  // simple-root (Delta) coordinates

  bool positive() const;
  int height() const;
};

/// Roots of a simple root system in simple-root coordinates.
///
/// The table is sorted by height, then lexicographically by coordinates, so
/// negative roots come first and the simple roots are the first positive
/// entries of height one. Indices assigned here are the identity of a root
/// everywhere else in the library; group elements act as permutations of them.
///
/// Classical types also carry the usual e_i presentation:
///   A_n: e_i - e_j in Z^{n+1}
///   B_n: +-e_i +- e_j, +-e_i        (Delta = e_1-e_2, ..., e_{n-1}-e_n, e_n)
///   C_n: +-e_i +- e_j, +-2e_i       (last simple root 2e_n)
///   D_n: +-e_i +- e_j               (last simple roots e_{n-1}-e_n, e_{n-1}+e_n)
class RootSystem {
 public:
  /// Classical types are built from their ambient presentation; exceptional
  /// types by closing the simple roots under simple reflections.
  static RootSystem build(Family family, int rank);

  /// Always builds by closure from the Cartan matrix (also for classical
  /// types, where it serves as an independent construction).
  static RootSystem build_by_closure(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  std::size_t size() const { return positive_.size(); }
  std::size_t positive_count() const { return size() / 2; }

  Root root(RootIndex r) const { return {r, coords(r)}; }
  std::span<const Coord> coords(RootIndex r) const {
    return {coords_.data() + static_cast<std::size_t>(r) * rank_, static_cast<std::size_t>(rank_)};
  }
  bool is_positive(RootIndex r) const { return positive_[r] != 0; }
  RootIndex negate(RootIndex r) const { return negation_[r]; }
  RootIndex abs(RootIndex r) const { return is_positive(r) ? r : negation_[r]; }
  int height(RootIndex r) const;

  /// Index of the i-th simple root (0-based, in the ordered Delta).
  RootIndex simple(int i) const { return simple_[i]; }
  std::span<const RootIndex> simple_indices() const { return simple_; }

  /// cartan(i, j) = <alpha_i^vee, alpha_j>, so that
  /// s_i(x) = x - (sum_j x_j cartan(i, j)) alpha_i.
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i) * rank_ + j]; }

  /// s_i applied to root r (table lookup).
  RootIndex reflect(int i, RootIndex r) const { return reflect_[static_cast<std::size_t>(i) * size() + r]; }

  /// Pairs {r, s_i(r)} with r < s_i(r); the roots moved by s_i.
  std::span<const std::pair<RootIndex, RootIndex>> reflection_pairs(int i) const { return pairs_[i]; }

  std::optional<RootIndex> find(std::span<const int> coords) const;

  bool has_ambient() const { return ambient_dim_ > 0; }
  int ambient_dim() const { return ambient_dim_; }
  std::span<const int> ambient(RootIndex r) const;
  std::optional<RootIndex> find_ambient(std::span<const int> v) const;

  /// Delta-coordinates of an arbitrary root-lattice vector given in the e_i
  /// basis (classical types only). Throws ParameterError when v is not in
  /// the root lattice.
  std::vector<int> ambient_to_delta(std::span<const int> v) const;

  /// e_i-coordinates of a Delta-coordinate vector (classical types only).
  std::vector<int> delta_to_ambient(std::span<const int> c) const;

 private:
  RootSystem(Family family, int rank, std::vector<std::vector<int>> coords, std::vector<int> cartan);
  void attach_ambient();

  Family family_;
  int rank_;
  std::vector<Coord> coords_;
  std::vector<std::uint8_t> positive_;
  std::vector<RootIndex> negation_;
  std::vector<RootIndex> simple_;
  std::vector<int> cartan_;
  std::vector<RootIndex> reflect_;
  std::vector<std::vector<std::pair<RootIndex, RootIndex>>> pairs_;
  std::map<std::vector<int>, RootIndex> lookup_;

  int ambient_dim_ = 0;
  std::vector<int> ambient_;
  std::vector<std::vector<int>> simple_ambient_;
  std::map<std::vector<int>, RootIndex> ambient_lookup_;
};

/// Cartan matrix (row-major, cartan(i,j) = <alpha_i^vee, alpha_j>) used to
/// build a system; classical ones derive from the ambient inner product.
std::vector<int> cartan_matrix(Family family, int rank);

/// |r|: r if it is positive, -r otherwise.
RootIndex abs_root(const RootSystem& rs, RootIndex r);

/// Per-root e_i-basis vectors for classical types.
std::vector<std::vector<int>> classical_ambient(const RootSystem& rs);

}  // namespace rootzeta
