#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "rootzeta/checkpoint.hpp"
#include "rootzeta/verdict.hpp"

namespace rootzeta {

struct ScanConfig {
  int jobs = 1;
  /// Extended D group, skipping the gamma_{n-1} coordinate.
  bool extended_d = false;
  /// Depth of the subtree roots handed to workers; -1 picks default_split_depth.
  int split_depth = -1;
  CheckpointFile* checkpoint = nullptr;
  /// Stop after this many fresh tasks over all rounds (simulates an interrupted run).
  std::size_t task_limit = std::numeric_limits<std::size_t>::max();
};

struct ScanResult {
  std::optional<Counterexample> counterexample;
  /// Elements with length up to the counterexample's (all of W otherwise);
  /// independent of jobs and of task scheduling.
  std::uint64_t scanned = 0;
  bool complete = true;
  std::size_t tasks = 0;
  std::size_t resumed = 0;  // task records taken from the checkpoint
  int rounds = 0;
};

/// Smallest depth with at least 256 elements, or the longest length.
int default_split_depth(const RootSystem& rs);

/// Push paths of all elements of the given length, in tree preorder.
std::vector<std::vector<int>> split_tasks(const RootSystem& rs, int depth);

/// Depth-first scan of W for an element whose zeta has a non-positive
/// coordinate. Returns the least one by (length, word[, twisted]).
///
/// Elements above the split depth are checked serially; each element at the
/// split depth roots a task run with private walker and zeta state. A shared
/// bound on the best counterexample length prunes every task.
///
/// Tasks run in rounds with a growing depth limit, so a short counterexample
/// is not preceded by deep searches in earlier subtrees. A round that finds
/// nothing has checked every element within its limit; the next limit is
/// chosen to cover roughly eight times as many elements. Only the final
/// round's counts are reported, which keeps them independent of jobs.
ScanResult scan(const RootSystem& rs, const WeightClasses& wc, const ScanConfig& config);

/// Orders counterexamples by length, then word, then the twist flag.
bool precedes(const Counterexample& a, const Counterexample& b);

}  // namespace rootzeta
