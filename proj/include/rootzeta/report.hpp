#pragma once

#include <string>
#include <string_view>

#include "rootzeta/engine.hpp"

namespace rootzeta {

enum class Format { Json, Csv, Text };

Format parse_format(std::string_view text);

/// JSON layout:
///   { "family", "rank", "weightings": [ { "rho", "distinguished", "bala_carter",
///     "outcome", "counterexample": { "word", "gamma_index", "zeta", "twisted"? }?,
///     "scanned", "wall_ms" } ], "theorem_holds", "totals" }
/// "distinguished" is the cardinality test, "bala_carter" the block-size
/// classification (null for exceptional types). Words and gamma_index are 1-based.
std::string to_json(const Report& report);
Report report_from_json(std::string_view text);

/// JSON with every wall_ms removed; equal for runs that differ only in timing.
std::string timing_free_json(const Report& report);

std::string to_csv(const Report& report);
std::string to_text(const Report& report);
std::string emit(const Report& report, Format format);

/// One line per counterexample: rho, word, gamma and zeta.
std::string counterexample_listing(const Report& report);

}  // namespace rootzeta
