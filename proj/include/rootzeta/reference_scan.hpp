#pragma once

#include <cstdint>
#include <optional>

#include "rootzeta/verdict.hpp"

namespace rootzeta {

struct ReferenceResult {
  std::optional<Counterexample> counterexample;
  std::uint64_t scanned = 0;
};

/// Slow serial scan used to check the kernels. Builds W one length at a
/// time by multiplying with simple reflections, sorts each layer by canonical
/// word and evaluates zeta literally from the root action. Stops after the
/// first layer that holds a counterexample.
ReferenceResult reference_scan(const RootSystem& rs, const WeightFunction& rho, bool extended_d = false);

}  // namespace rootzeta
