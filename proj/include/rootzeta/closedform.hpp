#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rootzeta/verdict.hpp"
#include "rootzeta/weights.hpp"
#include "rootzeta/weyl.hpp"

namespace rootzeta {

/// a_0..a_{m^A}: how many positions of each lifted block are sent into the
/// first k positions, where gamma_k is the coordinate of interest.
using Occupancy = std::vector<int>;

/// 2 d1 d2, the un-halved value of d^T [[0,1],[1,0]] d.
std::int64_t quad_form_term(std::int64_t d1, std::int64_t d2);

/// Sum over j = 0..m^A+1 of quad_form_term(u_j - u_{j-1}) with
/// u_j = (a_j, N^A_j - a_j) and u_{-1} = u_{m^A+1} = 0.
std::int64_t quad_sum(std::span<const int> lifted, std::span<const int> a);

/// Difference of edge counts between the two sides of a splitting.
std::int64_t a_type_zeta(const BlockPartition& bp, std::span<const int> a);
/// The same value written as -Q/2.
std::int64_t a_type_zeta_quadratic(const BlockPartition& bp, std::span<const int> a);

std::int64_t b_type_zeta(const BlockPartition& bp, std::span<const int> a);

/// Short: gamma_k with k < n. Long: gamma_n (C). Tail: gamma_n (D).
enum class GammaKind { Short, Long };

std::int64_t c_type_zeta(const BlockPartition& bp, std::span<const int> a, GammaKind kind);
std::int64_t d_type_zeta(const BlockPartition& bp, std::span<const int> a, GammaKind kind);

/// The kind is fixed by k = sum a: it is Long exactly when k = n for C and D.
GammaKind gamma_kind(const BlockPartition& bp, std::span<const int> a);

/// Dispatches on the block case; the coordinate is gamma_{sum a}.
std::int64_t closed_form_zeta(const BlockPartition& bp, std::span<const int> a);

bool occupancy_feasible(const BlockPartition& bp, std::span<const int> a);

/// Occupancy of gamma_k (1-based) for a signed permutation of the ambient basis.
Occupancy induced_occupancy(const BlockPartition& bp, std::span<const int> perm, int k);

struct Realization {
  std::vector<int> perm;  // signed permutation, 1-based images
  int gamma = 0;          // 1-based
  WeylElement element;    // for D this is the base of the extended element
  bool twisted = false;
};

/// Builds (w, gamma) with the given occupancy by filling blocks left to right
/// and mirroring every assignment. Throws ParameterError if infeasible.
Realization occupancy_realize(const RootSystem& rs, const BlockPartition& bp, std::span<const int> a);

/// Occupancy that exhibits a non-positive closed-form value, or nothing when
/// the blocks satisfy the distinguished conditions.
std::optional<Occupancy> refuting_occupancy(const BlockPartition& bp);

/// Counterexample in W for the original weighting. For D the realization
/// refers to the normalized weighting and may be twisted; both are undone here.
/// Throws std::logic_error if the recomputed coordinate is positive.
Counterexample realized_counterexample(const RootSystem& rs, const WeightFunction& rho, const BlockPartition& bp,
                                       const Realization& r);

/// Decides positivity by walking all feasible occupancies.
Verdict closedform_verdict(const RootSystem& rs, const WeightFunction& rho);

}  // namespace rootzeta
