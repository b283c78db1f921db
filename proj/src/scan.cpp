#include "rootzeta/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <span>
#include <tuple>

#include "rootzeta/errors.hpp"

namespace rootzeta {

bool precedes(const Counterexample& a, const Counterexample& b) {
  return std::forward_as_tuple(a.word.size(), a.word, a.twisted) < std::forward_as_tuple(b.word.size(), b.word, b.twisted);
}

namespace {

void collect(WeylWalker& walker, int depth, std::vector<std::vector<int>>& out) {
  if (walker.length() == depth) {
    out.emplace_back(walker.path().begin(), walker.path().end());
    return;
  }
  for (int j = 0; j < walker.system().rank(); ++j) {
    if (!walker.can_extend(j)) continue;
    walker.push(j);
    collect(walker, depth, out);
    walker.pop();
  }
}

void lower_bound_to(std::atomic<int>& bound, int value) {
  int cur = bound.load(std::memory_order_relaxed);
  while (value < cur && !bound.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

struct Shared {
  const RootSystem& rs;
  const WeightClasses& wc;
  bool extended;
  int skip;                    // coordinate left out in extended mode, else -1
  std::vector<int> flip;       // letter j -> theta(j)
  ZetaVector twisted_identity; // zeta of the twist itself
  int limit;                   // depth limit of the current round
  std::atomic<int> bound;      // length of the best counterexample so far
};

// Walker plus zeta state owned by one task.
class Worker {
 public:
  explicit Worker(Shared& sh)
      : sh_(sh), walker_(sh.rs), zeta_(sh.rs, sh.wc) {
    if (sh.extended) twisted_.emplace(sh.rs, sh.wc, sh.twisted_identity);
  }

  void push(int j) {
    const int c = zeta_.coefficient(j, walker_.inverse());
    zeta_.push(j, c);
    // theta s_j y = s_{theta j} theta y, with the same coefficient
    if (twisted_) twisted_->push(sh_.flip[j], c);
    walker_.push(j);
  }

  void pop() {
    walker_.pop();
    zeta_.pop();
    if (twisted_) twisted_->pop();
  }

  void replay(std::span<const int> path) {
    for (int j : path) {
      if (!walker_.can_extend(j)) throw ParameterError("prefix is not a path in the word tree");
      push(j);
    }
  }

  void visit() {
    const auto len = static_cast<std::size_t>(walker_.length());
    if (histogram_.size() <= len) histogram_.resize(len + 1, 0);
    histogram_[len] += twisted_ ? 2 : 1;
    check(zeta_.value(), false);
    if (twisted_) check(twisted_->value(), true);
  }

  // Visits the current element and everything below it within the round's
  // limit that can still beat the bound.
  void descend() {
    visit();
    if (walker_.length() >= sh_.limit || walker_.length() >= sh_.bound.load(std::memory_order_relaxed)) return;
    for (int j = 0; j < sh_.rs.rank(); ++j) {
      if (!walker_.can_extend(j)) continue;
      push(j);
      descend();
      pop();
    }
  }

  // Visits every element of length < depth; returns the paths at length == depth.
  void top(int depth, std::vector<std::vector<int>>& tasks) {
    if (walker_.length() == depth) {
      tasks.emplace_back(walker_.path().begin(), walker_.path().end());
      return;
    }
    visit();
    for (int j = 0; j < sh_.rs.rank(); ++j) {
      if (!walker_.can_extend(j)) continue;
      push(j);
      top(depth, tasks);
      pop();
    }
  }

  std::optional<Counterexample>& best() { return best_; }
  std::vector<std::uint64_t>& histogram() { return histogram_; }

 private:
  void check(std::span<const std::int64_t> z, bool twisted) {
    const int idx = first_non_positive(z, sh_.skip);
    if (idx < 0) return;
    if (best_ && static_cast<int>(best_->word.size()) < walker_.length()) return;
    Counterexample c{walker_.word(), idx, ZetaVector(z.begin(), z.end()), twisted};
    if (!best_ || precedes(c, *best_)) best_ = std::move(c);
    lower_bound_to(sh_.bound, walker_.length());
  }

  Shared& sh_;
  WeylWalker walker_;
  ZetaTracker zeta_;
  std::optional<ZetaTracker> twisted_;
  std::optional<Counterexample> best_;
  std::vector<std::uint64_t> histogram_;
};

void merge(std::optional<Counterexample>& into, const std::optional<Counterexample>& c) {
  if (c && (!into || precedes(*c, *into))) into = c;
}

void merge(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& h) {
  if (into.size() < h.size()) into.resize(h.size(), 0);
  for (std::size_t i = 0; i < h.size(); ++i) into[i] += h[i];
}

}  // namespace

int default_split_depth(const RootSystem& rs) {
  const int longest = static_cast<int>(rs.positive_count());
  for (int d = 0; d < longest; ++d) {
    WeylWalker walker(rs);
    std::vector<std::vector<int>> paths;
    collect(walker, d, paths);
    if (paths.size() >= 256) return d;
  }
  return longest;
}

std::vector<std::vector<int>> split_tasks(const RootSystem& rs, int depth) {
  if (depth < 0) throw ParameterError("negative split depth");
  WeylWalker walker(rs);
  std::vector<std::vector<int>> paths;
  collect(walker, depth, paths);
  return paths;
}

namespace {

// Next depth limit: far enough that the extrapolated number of elements within
// it is about eight times what the last round covered. Once the per-length
// counts stop growing the remaining lengths are taken in one go.
int next_limit(const std::vector<std::uint64_t>& histogram, int limit, int longest) {
  if (limit >= longest || limit < 1) return longest;
  const double last = static_cast<double>(histogram[limit]);
  const double before = static_cast<double>(histogram[limit - 1]);
  if (before == 0 || last <= before) return longest;
  const double ratio = last / before;
  double covered = 0;
  for (int d = 0; d <= limit; ++d) covered += static_cast<double>(histogram[d]);
  double total = covered, level = last;
  int d = limit;
  while (total < 8 * covered && d < longest) {
    level *= ratio;
    total += level;
    ++d;
  }
  return std::min(std::max(d, limit + 1), longest);
}

}  // namespace

ScanResult scan(const RootSystem& rs, const WeightClasses& wc, const ScanConfig& config) {
  if (config.jobs < 1) throw ParameterError("jobs must be positive");
  if (config.extended_d && rs.family() != Family::D) throw UnsupportedOperation("the extended group exists for type D only");
  const int n = rs.rank();
  const int longest = static_cast<int>(rs.positive_count());
  Shared sh{rs, wc, config.extended_d, -1, {}, {}, longest, {std::numeric_limits<int>::max()}};
  if (config.extended_d) {
    sh.skip = n - 2;
    for (int j = 0; j < n; ++j) sh.flip.push_back(j == n - 2 ? n - 1 : j == n - 1 ? n - 2 : j);
    sh.twisted_identity = zeta_of(rs, wc, twist_permutation(rs));
  }
  const int depth = config.split_depth >= 0 ? config.split_depth : default_split_depth(rs);

  ScanResult result;
  std::optional<Counterexample> top_best;
  std::vector<std::uint64_t> top_hist;
  std::vector<std::vector<int>> tasks;
  {
    Worker top(sh);
    top.top(depth, tasks);
    top_best = top.best();
    top_hist = top.histogram();
  }
  result.tasks = tasks.size();
  std::vector<Word> prefixes;
  for (const auto& t : tasks) prefixes.emplace_back(t.rbegin(), t.rend());

  // what is known before any task runs: everything shorter than the split depth
  // and the number of elements at it
  std::vector<std::uint64_t> known = top_hist;
  known.resize(static_cast<std::size_t>(depth) + 1, 0);
  known[depth] = tasks.size() * (config.extended_d ? 2 : 1);
  int limit = top_best || depth >= longest ? longest : next_limit(known, depth, longest);

  std::size_t fresh_budget = config.task_limit;
  std::optional<Counterexample> best;
  std::vector<std::uint64_t> histogram;
  for (;;) {
    best = top_best;
    histogram = top_hist;
    sh.limit = limit;
    sh.bound.store(top_best ? static_cast<int>(top_best->word.size()) : std::numeric_limits<int>::max());

    std::vector<std::size_t> todo;
    bool cut = false;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (config.checkpoint) {
        auto it = config.checkpoint->completed().find({limit, prefixes[i]});
        if (it != config.checkpoint->completed().end()) {
          merge(best, it->second.counterexample);
          merge(histogram, it->second.histogram);
          if (best) lower_bound_to(sh.bound, static_cast<int>(best->word.size()));
          ++result.resumed;
          continue;
        }
      }
      if (todo.size() == fresh_budget) {
        cut = true;
        continue;
      }
      todo.push_back(i);
    }
    fresh_budget -= todo.size();

    std::vector<std::optional<Counterexample>> task_best(todo.size());
    std::vector<std::vector<std::uint64_t>> task_hist(todo.size());
    std::exception_ptr failure;
    const long count = static_cast<long>(todo.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(config.jobs) if (config.jobs > 1)
    for (long t = 0; t < count; ++t) {
      try {
        const std::size_t i = todo[t];
        if (depth <= sh.bound.load(std::memory_order_relaxed)) {
          Worker w(sh);
          w.replay(tasks[i]);
          w.descend();
          task_best[t] = std::move(w.best());
          task_hist[t] = std::move(w.histogram());
        }
        if (config.checkpoint) config.checkpoint->record({prefixes[i], limit, task_best[t], task_hist[t]});
      } catch (...) {
#pragma omp critical(rootzeta_scan_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    for (long t = 0; t < count; ++t) {
      merge(best, task_best[t]);
      merge(histogram, task_hist[t]);
    }
    ++result.rounds;
    if (cut) {
      result.complete = false;
      break;
    }
    if (best || limit >= longest) break;
    histogram.resize(static_cast<std::size_t>(limit) + 1, 0);
    limit = next_limit(histogram, limit, longest);
  }

  const std::size_t upto = best ? best->word.size() + 1 : histogram.size();
  for (std::size_t d = 0; d < upto && d < histogram.size(); ++d) result.scanned += histogram[d];
  result.counterexample = std::move(best);
  return result;
}

}  // namespace rootzeta
