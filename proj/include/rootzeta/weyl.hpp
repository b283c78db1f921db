#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rootzeta/rootsys.hpp"

namespace rootzeta {

/// Simple-reflection indices, 0-based. Read as a composition, the leftmost
/// letter is applied last.
using Word = std::vector<int>;

/// A permutation of root indices: action[r] = w(r).
using Action = std::vector<RootIndex>;

struct WeylElement {
  Word word;  // canonical: shortest, then lexicographically least
  Action action;
  int length = 0;
};

RootIndex reflect(const RootSystem& rs, int i, RootIndex r);
RootIndex apply_word(const RootSystem& rs, std::span<const int> word, RootIndex r);
Action identity_action(const RootSystem& rs);
Action action_of_word(const RootSystem& rs, std::span<const int> word);
Action compose(std::span<const RootIndex> outer, std::span<const RootIndex> inner);
Action inverse(std::span<const RootIndex> action);

/// Number of positive roots sent to negative roots.
int length_of(const RootSystem& rs, std::span<const RootIndex> action);

/// Canonical word by repeatedly stripping the smallest left descent.
/// Throws ParameterError when the action is not an element of W.
Word canonical_word(const RootSystem& rs, std::span<const RootIndex> action);
WeylElement element_from_action(const RootSystem& rs, Action action);
WeylElement element_from_word(const RootSystem& rs, std::span<const int> word);

/// "1.2.1" (1-based letters); the identity is the empty string.
std::string format_word(std::span<const int> word);
Word parse_word(std::string_view text, int rank);

std::uint64_t group_order(const RootSystem& rs);

/// Position in the tree of canonical words. The parent of x is s_j x where j
/// is the smallest left descent of x, so a child of y is s_j y and its
/// canonical word is j followed by the word of y.
///
/// Only the inverse action is kept by default; push/pop swap the pairs
/// {r, s_j r} in place, which is its own undo.
class WeylWalker {
 public:
  explicit WeylWalker(const RootSystem& rs, bool track_forward = false);

  const RootSystem& system() const { return *rs_; }
  int length() const { return static_cast<int>(path_.size()); }

  /// Letters in push order. The canonical word is this sequence reversed.
  std::span<const int> path() const { return path_; }
  Word word() const { return {path_.rbegin(), path_.rend()}; }

  /// inverse()[r] = y^{-1}(r)
  std::span<const RootIndex> inverse() const { return inv_; }
  /// forward()[r] = y(r); only when tracking.
  std::span<const RootIndex> forward() const { return fwd_; }

  /// Whether s_j y is a child of the current element y.
  bool can_extend(int j) const {
    if (!rs_->is_positive(inv_[rs_->simple(j)])) return false;
    const RootIndex* lower = below_.data() + static_cast<std::size_t>(j) * rank_;
    for (int k = 0; k < j; ++k) {
      if (!rs_->is_positive(inv_[lower[k]])) return false;
    }
    return true;
  }

  void push(int j);
  void pop();

  /// Pushes every letter of a push path, checking each step is a tree edge.
  void replay(std::span<const int> push_path);

 private:
  void apply(int j);

  const RootSystem* rs_;
  int rank_;
  std::vector<RootIndex> below_;  // below_[j*rank + k] = s_j(alpha_k)
  std::vector<RootIndex> inv_;
  std::vector<RootIndex> fwd_;
  std::vector<int> path_;
};

/// Depth-first enumeration of W (or of the subtree under a prefix). Elements
/// come out in preorder, children by increasing letter.
class WeylStream {
 public:
  explicit WeylStream(const RootSystem& rs);
  /// Subtree rooted at the element reached by the push path `prefix`.
  WeylStream(const RootSystem& rs, std::span<const int> prefix);

  /// Moves to the next element; false once the stream is exhausted.
  bool advance();
  const WeylWalker& current() const { return walker_; }
  std::optional<WeylElement> next();

 private:
  WeylWalker walker_;
  std::size_t base_;
  bool started_ = false;
  bool done_ = false;
};

/// Element of the extended D group: twist(base) when twisted, where the
/// twist flips the sign of e_n (the diagram automorphism).
struct ExtendedElementD {
  WeylElement base;
  bool twisted = false;
};

/// Root permutation of the diagram flip (swaps the last two coordinates).
Action twist_permutation(const RootSystem& rs);
Action extended_action(const RootSystem& rs, const ExtendedElementD& e);
ExtendedElementD outer_twist(const RootSystem& rs, const WeylElement& w);
ExtendedElementD outer_twist(const RootSystem& rs, const ExtendedElementD& e);
/// Splits an action of the extended group into base and twist.
ExtendedElementD extended_from_action(const RootSystem& rs, Action action);

class ExtendedStreamD {
 public:
  explicit ExtendedStreamD(const RootSystem& rs);
  std::optional<ExtendedElementD> next();

 private:
  const RootSystem* rs_;
  WeylStream stream_;
  std::optional<WeylElement> pending_;
};

/// Signed permutation of the ambient basis: entry i is +-(image index), 1-based.
/// For A_n this is an ordinary permutation of 1..n+1.
std::vector<int> signed_permutation(const RootSystem& rs, std::span<const RootIndex> action);
Action action_from_signed_permutation(const RootSystem& rs, std::span<const int> perm);

}  // namespace rootzeta
