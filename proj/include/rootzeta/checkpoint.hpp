#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootzeta/verdict.hpp"

namespace rootzeta {

/// Outcome of one prefix task of a scan.
struct TaskRecord {
  Word prefix;                            // canonical word of the subtree root
  int depth_limit = 0;                    // round the task ran in
  std::optional<Counterexample> counterexample;
  std::vector<std::uint64_t> histogram;   // elements visited per length, from 0
};

/// Tasks are identified by round and prefix.
using TaskKey = std::pair<int, Word>;

/// Values a checkpoint must agree on before it can be resumed.
struct CheckpointHeader {
  std::string system;  // e.g. "E8"
  std::string rho;
  std::string mode;    // "plain" or "extended"
  int split_depth = 0;
  std::size_t tasks = 0;

  bool operator==(const CheckpointHeader&) const = default;
};

/// Line format, after '#' header lines:
///   prefix-word <TAB> status <TAB> depth-limit <TAB> histogram
/// with status "ok" or "cex=<word>/<gamma>/<zeta>[/twisted]" (gamma 1-based)
/// and the histogram as comma-separated counts. Lines are appended and flushed as
/// tasks finish, so a killed run loses at most the tasks in flight.
class CheckpointFile {
 public:
  /// Opens `path`, loading completed tasks if it exists. Throws
  /// ParameterError when the stored header differs from `header`.
  CheckpointFile(std::filesystem::path path, CheckpointHeader header);

  const std::filesystem::path& path() const { return path_; }
  const CheckpointHeader& header() const { return header_; }
  const std::map<TaskKey, TaskRecord>& completed() const { return completed_; }

  /// Thread-safe append.
  void record(const TaskRecord& task);

  static std::string format_line(const TaskRecord& task);
  static TaskRecord parse_line(const std::string& line, int rank);

 private:
  std::filesystem::path path_;
  CheckpointHeader header_;
  std::map<TaskKey, TaskRecord> completed_;
  std::ofstream out_;
  std::mutex mutex_;
};

/// One file per weighting inside a checkpoint directory.
std::filesystem::path checkpoint_path(const std::filesystem::path& dir, const std::string& system, const std::string& rho);

}  // namespace rootzeta
