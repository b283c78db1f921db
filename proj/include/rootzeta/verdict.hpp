#pragma once

#include <cstdint>
#include <optional>

#include "rootzeta/weights.hpp"
#include "rootzeta/weyl.hpp"
#include "rootzeta/zeta.hpp"

namespace rootzeta {

enum class Outcome { AllPositive, Counterexample };

struct Counterexample {
  Word word;
  int gamma = 0;  // 0-based index of the first non-positive coordinate
  ZetaVector zeta;
  bool twisted = false;  // extended D scans only

  bool operator==(const Counterexample&) const = default;
};

struct ScanStats {
  std::uint64_t scanned = 0;
  double wall_ms = 0.0;

  bool operator==(const ScanStats&) const = default;
};

struct Verdict {
  WeightFunction rho;
  bool distinguished_cardinality = false;
  std::optional<bool> distinguished_closed_form;
  Outcome outcome = Outcome::AllPositive;
  std::optional<Counterexample> counterexample;
  ScanStats stats;

  bool operator==(const Verdict&) const = default;
};

/// Index of the first coordinate <= 0, or -1. `skip` (if >= 0) is ignored.
inline int first_non_positive(std::span<const std::int64_t> z, int skip = -1) {
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (static_cast<int>(k) != skip && z[k] <= 0) return static_cast<int>(k);
  }
  return -1;
}

}  // namespace rootzeta
