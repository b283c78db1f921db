#include "rootzeta/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "rootzeta/errors.hpp"

namespace rootzeta {

RootIndex reflect(const RootSystem& rs, int i, RootIndex r) {
  if (i < 0 || i >= rs.rank()) throw ParameterError("reflection index out of range");
  if (r >= rs.size()) throw ParameterError("root index out of range");
  return rs.reflect(i, r);
}

RootIndex apply_word(const RootSystem& rs, std::span<const int> word, RootIndex r) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect(rs, *it, r);
  return r;
}

Action identity_action(const RootSystem& rs) {
  Action a(rs.size());
  std::iota(a.begin(), a.end(), RootIndex{0});
  return a;
}

Action action_of_word(const RootSystem& rs, std::span<const int> word) {
  Action a = identity_action(rs);
  for (auto& r : a) r = apply_word(rs, word, r);
  return a;
}

Action compose(std::span<const RootIndex> outer, std::span<const RootIndex> inner) {
  if (outer.size() != inner.size()) throw ParameterError("actions of different sizes");
  Action a(inner.size());
  for (std::size_t r = 0; r < inner.size(); ++r) a[r] = outer[inner[r]];
  return a;
}

Action inverse(std::span<const RootIndex> action) {
  Action a(action.size());
  for (std::size_t r = 0; r < action.size(); ++r) a[action[r]] = static_cast<RootIndex>(r);
  return a;
}

int length_of(const RootSystem& rs, std::span<const RootIndex> action) {
  int len = 0;
  for (std::size_t r = rs.size() - rs.positive_count(); r < rs.size(); ++r) {
    if (!rs.is_positive(action[r])) ++len;
  }
  return len;
}

Word canonical_word(const RootSystem& rs, std::span<const RootIndex> action) {
  if (action.size() != rs.size()) throw ParameterError("action size differs from root count");
  Action fwd(action.begin(), action.end());
  Action inv = inverse(fwd);
  Word word;
  const std::size_t limit = rs.positive_count();
  while (true) {
    int j = 0;
    while (j < rs.rank() && rs.is_positive(inv[rs.simple(j)])) ++j;
    if (j == rs.rank()) break;
    if (word.size() >= limit) throw ParameterError("action is not a Weyl group element");
    word.push_back(j);
    // x -> s_j x
    for (auto& r : fwd) r = rs.reflect(j, r);
    for (auto [a, b] : rs.reflection_pairs(j)) std::swap(inv[a], inv[b]);
  }
  for (std::size_t r = 0; r < fwd.size(); ++r) {
    if (fwd[r] != r) throw ParameterError("action is not a Weyl group element");
  }
  return word;
}

WeylElement element_from_action(const RootSystem& rs, Action action) {
  WeylElement e;
  e.word = canonical_word(rs, action);
  e.length = static_cast<int>(e.word.size());
  e.action = std::move(action);
  return e;
}

WeylElement element_from_word(const RootSystem& rs, std::span<const int> word) {
  return element_from_action(rs, action_of_word(rs, word));
}

std::string format_word(std::span<const int> word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s.push_back('.');
    s += std::to_string(word[i] + 1);
  }
  return s;
}

Word parse_word(std::string_view text, int rank) {
  Word word;
  if (text.empty()) return word;
  std::size_t start = 0;
  while (true) {
    const auto dot = text.find('.', start);
    const auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    int letter = 0;
    auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), letter);
    if (ec != std::errc() || p != piece.data() + piece.size() || piece.empty()) {
      throw ParameterError("malformed word '" + std::string(text) + "'");
    }
    if (letter < 1 || letter > rank) throw ParameterError("word letter out of range in '" + std::string(text) + "'");
    word.push_back(letter - 1);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return word;
}

std::uint64_t group_order(const RootSystem& rs) {
  const int n = rs.rank();
  auto factorial = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) {
      if (__builtin_mul_overflow(f, static_cast<std::uint64_t>(i), &f)) throw ParameterError("group order overflows 64 bits");
    }
    return f;
  };
  auto times_pow2 = [](std::uint64_t x, int e) {
    for (int i = 0; i < e; ++i) {
      if (__builtin_mul_overflow(x, std::uint64_t{2}, &x)) throw ParameterError("group order overflows 64 bits");
    }
    return x;
  };
  switch (rs.family()) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return times_pow2(factorial(n), n);
    case Family::D: return times_pow2(factorial(n), n - 1);
    case Family::G: return 12;
    case Family::F: return 1152;
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
  }
  return 0;
}

WeylWalker::WeylWalker(const RootSystem& rs, bool track_forward)
    : rs_(&rs), rank_(rs.rank()), below_(static_cast<std::size_t>(rank_) * rank_), inv_(identity_action(rs)) {
  for (int j = 0; j < rank_; ++j) {
    for (int k = 0; k < rank_; ++k) below_[static_cast<std::size_t>(j) * rank_ + k] = rs.reflect(j, rs.simple(k));
  }
  if (track_forward) fwd_ = inv_;
  path_.reserve(rs.positive_count());
}

void WeylWalker::apply(int j) {
  for (auto [a, b] : rs_->reflection_pairs(j)) std::swap(inv_[a], inv_[b]);
  for (auto& r : fwd_) r = rs_->reflect(j, r);
}

void WeylWalker::push(int j) {
  apply(j);
  path_.push_back(j);
}

void WeylWalker::pop() {
  if (path_.empty()) throw std::logic_error("pop at the identity");
  apply(path_.back());
  path_.pop_back();
}

void WeylWalker::replay(std::span<const int> push_path) {
  for (int j : push_path) {
    if (j < 0 || j >= rank_ || !can_extend(j)) throw ParameterError("prefix is not a path in the word tree");
    push(j);
  }
}

WeylStream::WeylStream(const RootSystem& rs) : walker_(rs, true), base_(0) {}

WeylStream::WeylStream(const RootSystem& rs, std::span<const int> prefix) : walker_(rs, true), base_(prefix.size()) {
  walker_.replay(prefix);
}

bool WeylStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  const int rank = walker_.system().rank();
  int from = 0;
  while (true) {
    for (int j = from; j < rank; ++j) {
      if (walker_.can_extend(j)) {
        walker_.push(j);
        return true;
      }
    }
    if (static_cast<std::size_t>(walker_.length()) == base_) {
      done_ = true;
      return false;
    }
    from = walker_.path().back() + 1;
    walker_.pop();
  }
}

std::optional<WeylElement> WeylStream::next() {
  if (!advance()) return std::nullopt;
  WeylElement e;
  e.word = walker_.word();
  e.length = walker_.length();
  e.action.assign(walker_.forward().begin(), walker_.forward().end());
  return e;
}

namespace {

void require_d(const RootSystem& rs) {
  if (rs.family() != Family::D) throw UnsupportedOperation("the extended group exists for type D only");
}

}  // namespace

Action twist_permutation(const RootSystem& rs) {
  require_d(rs);
  const int n = rs.rank();
  Action a(rs.size());
  for (std::size_t r = 0; r < rs.size(); ++r) {
    const auto c = rs.coords(static_cast<RootIndex>(r));
    std::vector<int> v(c.begin(), c.end());
    std::swap(v[n - 2], v[n - 1]);
    a[r] = *rs.find(v);
  }
  return a;
}

Action extended_action(const RootSystem& rs, const ExtendedElementD& e) {
  if (!e.twisted) return e.base.action;
  return compose(twist_permutation(rs), e.base.action);
}

ExtendedElementD outer_twist(const RootSystem& rs, const WeylElement& w) {
  require_d(rs);
  return {w, true};
}

ExtendedElementD outer_twist(const RootSystem& rs, const ExtendedElementD& e) {
  require_d(rs);
  return {e.base, !e.twisted};
}

ExtendedElementD extended_from_action(const RootSystem& rs, Action action) {
  require_d(rs);
  // the twist preserves positivity, so peeling descents stops at 1 or at the twist
  try {
    return {element_from_action(rs, action), false};
  } catch (const ParameterError&) {
    auto base = compose(twist_permutation(rs), action);
    return {element_from_action(rs, std::move(base)), true};
  }
}

ExtendedStreamD::ExtendedStreamD(const RootSystem& rs) : rs_(&rs), stream_((require_d(rs), rs)) {}

std::optional<ExtendedElementD> ExtendedStreamD::next() {
  if (pending_) {
    ExtendedElementD e{std::move(*pending_), true};
    pending_.reset();
    return e;
  }
  auto w = stream_.next();
  if (!w) return std::nullopt;
  pending_ = *w;
  return ExtendedElementD{std::move(*w), false};
}

std::vector<int> signed_permutation(const RootSystem& rs, std::span<const RootIndex> action) {
  if (!is_classical(rs.family())) throw UnsupportedOperation("signed permutations exist for classical types only");
  if (action.size() != rs.size()) throw ParameterError("action size differs from root count");
  const int dim = rs.ambient_dim();
  std::vector<int> perm(dim);
  auto basis_root = [&](int i, int j, int sj) {
    std::vector<int> v(dim, 0);
    v[i] = 1;
    v[j] = sj;
    return *rs.find_ambient(v);
  };
  for (int i = 0; i < dim; ++i) {
    const int j = i == 0 ? 1 : 0;
    if (rs.family() == Family::A) {
      const auto img = rs.ambient(action[basis_root(i, j, -1)]);
      perm[i] = static_cast<int>(std::find(img.begin(), img.end(), 1) - img.begin()) + 1;
      continue;
    }
    const auto x = rs.ambient(action[basis_root(i, j, -1)]);
    const auto y = rs.ambient(action[basis_root(i, j, 1)]);
    for (int k = 0; k < dim; ++k) {
      const int s = x[k] + y[k];
      if (s != 0) perm[i] = (s > 0 ? 1 : -1) * (k + 1);
    }
  }
  return perm;
}

Action action_from_signed_permutation(const RootSystem& rs, std::span<const int> perm) {
  if (!is_classical(rs.family())) throw UnsupportedOperation("signed permutations exist for classical types only");
  const int dim = rs.ambient_dim();
  if (static_cast<int>(perm.size()) != dim) throw ParameterError("signed permutation has wrong size");
  std::vector<bool> seen(dim, false);
  for (int x : perm) {
    const int k = x < 0 ? -x : x;
    if (k < 1 || k > dim || seen[k - 1]) throw ParameterError("not a signed permutation");
    if (rs.family() == Family::A && x < 0) throw ParameterError("type A takes unsigned permutations");
    seen[k - 1] = true;
  }
  Action a(rs.size());
  std::vector<int> img(dim);
  for (std::size_t r = 0; r < rs.size(); ++r) {
    const auto v = rs.ambient(static_cast<RootIndex>(r));
    std::fill(img.begin(), img.end(), 0);
    for (int i = 0; i < dim; ++i) {
      const int t = perm[i];
      img[(t < 0 ? -t : t) - 1] += t < 0 ? -v[i] : v[i];
    }
    auto found = rs.find_ambient(img);
    if (!found) throw ParameterError("signed permutation does not preserve the root set");
    a[r] = *found;
  }
  return a;
}

}  // namespace rootzeta
