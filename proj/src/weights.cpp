#include "rootzeta/weights.hpp"

#include <algorithm>
#include <numeric>

#include "rootzeta/errors.hpp"

namespace rootzeta {

WeightFunction::WeightFunction(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_) {
    if (v != 0 && v != 2) throw ParameterError("weighting entries must be 0 or 2");
  }
}

WeightFunction WeightFunction::parse(std::string_view text, int rank) {
  std::vector<int> values;
  for (char ch : text) {
    if (ch != '0' && ch != '2') throw ParameterError("weighting '" + std::string(text) + "' must use digits 0 and 2");
    values.push_back(ch - '0');
  }
  if (values.empty()) throw ParameterError("empty weighting");
  if (rank >= 0 && static_cast<int>(values.size()) != rank) {
    throw ParameterError("weighting '" + std::string(text) + "' has length " + std::to_string(values.size()) +
                         ", expected " + std::to_string(rank));
  }
  return WeightFunction(std::move(values));
}

std::string WeightFunction::to_string() const {
  std::string s;
  for (int v : values_) s.push_back(static_cast<char>('0' + v));
  return s;
}

bool WeightFunction::regular() const {
  return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 2; });
}

std::vector<WeightFunction> all_weightings(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<WeightFunction> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = (bits >> (n - 1 - i)) & 1 ? 2 : 0;
    out.emplace_back(std::move(v));
  }
  return out;
}

int root_weight(const RootSystem& rs, std::span<const int> simple_weights, RootIndex r) {
  if (r >= rs.size()) throw ParameterError("root index out of range");
  if (static_cast<int>(simple_weights.size()) != rs.rank()) throw ParameterError("weighting length differs from rank");
  const auto c = rs.coords(r);
  int w = 0;
  for (int i = 0; i < rs.rank(); ++i) w += c[i] * simple_weights[i];
  return w;
}

int root_weight(const RootSystem& rs, const WeightFunction& rho, RootIndex r) {
  return root_weight(rs, rho.values(), r);
}

const std::vector<RootIndex>& WeightClasses::of(int k) const {
  static const std::vector<RootIndex> empty;
  auto it = by_weight.find(k);
  return it == by_weight.end() ? empty : it->second;
}

WeightClasses weight_classes(const RootSystem& rs, std::span<const int> simple_weights) {
  WeightClasses wc;
  wc.weight_of.resize(rs.size());
  for (std::size_t r = 0; r < rs.size(); ++r) {
    const int w = root_weight(rs, simple_weights, static_cast<RootIndex>(r));
    wc.weight_of[r] = w;
    wc.by_weight[w].push_back(static_cast<RootIndex>(r));
  }
  return wc;
}

WeightClasses weight_classes(const RootSystem& rs, const WeightFunction& rho) {
  return weight_classes(rs, rho.values());
}

bool is_distinguished_cardinality(const RootSystem& rs, const WeightFunction& rho) {
  const auto wc = weight_classes(rs, rho);
  return wc.count(2) == wc.count(0) + static_cast<std::size_t>(rs.rank());
}

std::string_view to_string(BlockCase c) {
  switch (c) {
    case BlockCase::A: return "A";
    case BlockCase::B: return "B";
    case BlockCase::C2: return "C2";
    case BlockCase::C0: return "C0";
    case BlockCase::D22: return "D22";
    case BlockCase::D00: return "D00";
    case BlockCase::D02: return "D02";
  }
  return "?";
}

int BlockPartition::positions() const { return std::accumulate(lifted.begin(), lifted.end(), 0); }

int BlockPartition::block_of(int p) const {
  if (p < 1) throw ParameterError("positions are 1-based");
  int end = 0;
  for (int j = 0; j <= lifted_m(); ++j) {
    end += lifted[j];
    if (p <= end) return j;
  }
  throw ParameterError("position out of range");
}

std::pair<WeightFunction, bool> normalize_d(const RootSystem& rs, const WeightFunction& rho) {
  if (rho.rank() != rs.rank()) throw ParameterError("weighting length differs from rank");
  const int n = rs.rank();
  if (rs.family() != Family::D || rho[n - 2] <= rho[n - 1]) return {rho, false};
  std::vector<int> v(rho.values().begin(), rho.values().end());
  std::swap(v[n - 2], v[n - 1]);
  return {WeightFunction(std::move(v)), true};
}

BlockPartition block_partition(const RootSystem& rs, const WeightFunction& rho) {
  if (!is_classical(rs.family())) throw UnsupportedOperation("block partitions exist for classical types only");
  if (rho.rank() != rs.rank()) throw ParameterError("weighting length differs from rank");
  const int n = rs.rank();
  auto [norm, twisted] = normalize_d(rs, rho);

  BlockPartition bp{rs.family(), n, 0, {}, {}, BlockCase::A, twisted, norm};
  const int vertices = rs.family() == Family::A ? n + 1 : n;
  int prev = 0;
  for (int i = 1; i <= n; ++i) {
    if (norm[i - 1] == 2) {
      bp.sizes.push_back(i - prev);
      prev = i;
    }
  }
  bp.sizes.push_back(vertices - prev);
  bp.m = static_cast<int>(bp.sizes.size()) - 1;
  const int m = bp.m;
  const auto& N = bp.sizes;

  // head: N_0..N_{k-1}, then the middle entries, then the head mirrored
  auto lift = [&](int k, std::vector<int> middle) {
    std::vector<int> out(N.begin(), N.begin() + k);
    out.insert(out.end(), middle.begin(), middle.end());
    for (int j = k - 1; j >= 0; --j) out.push_back(N[j]);
    return out;
  };

  switch (rs.family()) {
    case Family::A:
      bp.tag = BlockCase::A;
      bp.lifted = N;
      break;
    case Family::B:
      bp.tag = BlockCase::B;
      bp.lifted = lift(m, {2 * N[m] + 1});
      break;
    case Family::C:
      if (norm[n - 1] == 2) {
        bp.tag = BlockCase::C2;
        bp.lifted = lift(m, {});
      } else {
        bp.tag = BlockCase::C0;
        bp.lifted = lift(m, {2 * N[m]});
      }
      break;
    case Family::D:
      if (norm[n - 2] == 2) {
        bp.tag = BlockCase::D22;
        bp.lifted = lift(m - 1, {2});
      } else if (norm[n - 1] == 2) {
        bp.tag = BlockCase::D02;
        bp.lifted = lift(m, {});
      } else {
        bp.tag = BlockCase::D00;
        bp.lifted = lift(m, {2 * N[m]});
      }
      break;
    default: break;
  }
  return bp;
}

namespace {

// N_0 = 1 and N_{i-1} <= N_i <= N_{i-1} + 1 for 1 <= i <= last
bool staircase_ok(const std::vector<int>& N, int last) {
  if (N.empty() || N[0] != 1) return false;
  for (int i = 1; i <= last; ++i) {
    if (N[i] < N[i - 1] || N[i] > N[i - 1] + 1) return false;
  }
  return true;
}

}  // namespace

bool is_distinguished_closed_form(const RootSystem& rs, const WeightFunction& rho) {
  if (!is_classical(rs.family())) throw UnsupportedOperation("closed-form classification exists for classical types only");
  if (rs.family() == Family::A) {
    if (rho.rank() != rs.rank()) throw ParameterError("weighting length differs from rank");
    return rho.regular();
  }
  const auto bp = block_partition(rs, rho);
  const auto& N = bp.sizes;
  const int m = bp.m;
  switch (bp.tag) {
    case BlockCase::B:
      if (m == 0 || !staircase_ok(N, m - 1)) return false;
      return N[m - 1] <= 2 * N[m] + 1 && 2 * N[m] + 1 <= N[m - 1] + 1;
    case BlockCase::C2: return m >= 1 && staircase_ok(N, m - 1);
    case BlockCase::C0: return false;
    case BlockCase::D22: return m >= 2 && staircase_ok(N, m - 2) && N[m - 2] <= 2;
    case BlockCase::D00:
      return m >= 1 && staircase_ok(N, m - 1) && N[m] == (N[m - 1] + 1) / 2;
    case BlockCase::D02: return false;
    default: return false;
  }
}

}  // namespace rootzeta
