#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rootzeta/verdict.hpp"

namespace rootzeta {

enum class Mode { Brute, ClosedForm, Both };

Mode parse_mode(std::string_view text);
std::string_view to_string(Mode mode);

struct EngineOptions {
  Mode mode = Mode::Brute;
  int jobs = 1;
  /// Type D: scan the extended group and skip the gamma_{n-1} coordinate.
  bool extended_d = false;
  /// When set, each brute scan appends finished tasks to a file in here and
  /// resumes from it.
  std::optional<std::filesystem::path> checkpoint_dir;
  /// Progress lines go here when set.
  std::ostream* progress = nullptr;
};

/// Decides whether zeta(w) is strictly positive for every w. In brute mode
/// the counterexample is the canonical one: shortest, then lexicographically
/// least word. Mode::Both also runs the closed form and throws Discrepancy if
/// the outcomes differ.
Verdict verify_weighting(const RootSystem& rs, const WeightFunction& rho, const EngineOptions& options = {});

struct Totals {
  std::size_t weightings = 0;
  std::size_t distinguished = 0;
  std::size_t counterexamples = 0;
  std::uint64_t scanned = 0;
  double wall_ms = 0.0;

  bool operator==(const Totals&) const = default;
};

struct Report {
  Family family = Family::A;
  int rank = 0;
  std::vector<Verdict> verdicts;  // in all_weightings order
  bool theorem_holds = false;
  Totals totals;

  bool operator==(const Report&) const = default;
};

/// True iff every verdict is AllPositive exactly when rho is distinguished.
bool theorem_holds(std::span<const Verdict> verdicts);
Totals totals_of(std::span<const Verdict> verdicts);

/// Runs every weighting; distinguished ones are scanned last since they
/// cannot exit early.
Report verify_all(const RootSystem& rs, const EngineOptions& options = {});

struct CrosscheckResult {
  bool ok = true;
  std::uint64_t comparisons = 0;
  std::string first_mismatch;
};

/// Classical types only. For every weighting compares closedform_verdict
/// with a brute scan, and for every element (of the extended group for D)
/// and every coordinate compares the closed-form value with zeta_of.
CrosscheckResult crosscheck(const RootSystem& rs, int jobs = 1);

}  // namespace rootzeta
