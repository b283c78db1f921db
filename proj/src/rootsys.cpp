#include "rootzeta/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rootzeta/errors.hpp"

namespace rootzeta {

namespace {

constexpr int kMaxRank = 24;

void validate_rank(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok || rank > kMaxRank) {
    std::ostringstream msg;
    msg << "unsupported root system " << family_char(family) << rank;
    throw ParameterError(msg.str());
  }
}

int ambient_dimension(Family family, int rank) { return family == Family::A ? rank + 1 : rank; }

std::vector<int> unit(int dim, int i, int scale = 1) {
  std::vector<int> v(dim, 0);
  v[i] = scale;
  return v;
}

std::vector<std::vector<int>> simple_ambient(Family family, int rank) {
  const int dim = ambient_dimension(family, rank);
  std::vector<std::vector<int>> out;
  const int chain = family == Family::A ? rank : rank - 1;
  for (int i = 0; i < chain; ++i) {
    auto v = unit(dim, i);
    v[i + 1] = -1;
    out.push_back(std::move(v));
  }
  switch (family) {
    case Family::B: out.push_back(unit(dim, rank - 1)); break;
    case Family::C: out.push_back(unit(dim, rank - 1, 2)); break;
    case Family::D: {
      auto v = unit(dim, rank - 2);
      v[rank - 1] = 1;
      out.push_back(std::move(v));
      break;
    }
    default: break;
  }
  return out;
}

std::vector<std::vector<int>> ambient_roots(Family family, int rank) {
  const int dim = ambient_dimension(family, rank);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      auto v = unit(dim, i);
      v[j] = -1;
      out.push_back(v);
      if (family != Family::A && i < j) {
        v[j] = 1;
        out.push_back(v);
        for (auto& x : v) x = -x;
        out.push_back(v);
      }
    }
  }
  if (family == Family::B || family == Family::C) {
    const int scale = family == Family::B ? 1 : 2;
    for (int i = 0; i < dim; ++i) {
      out.push_back(unit(dim, i, scale));
      out.push_back(unit(dim, i, -scale));
    }
  }
  return out;
}

std::vector<int> to_delta(Family family, int rank, std::span<const int> v) {
  const int dim = ambient_dimension(family, rank);
  if (static_cast<int>(v.size()) != dim) throw ParameterError("ambient vector has wrong dimension");
  std::vector<int> prefix(dim);
  std::partial_sum(v.begin(), v.end(), prefix.begin());
  std::vector<int> c(prefix.begin(), prefix.begin() + rank);
  auto halve = [](int x) {
    if (x % 2 != 0) throw ParameterError("vector is not in the root lattice");
    return x / 2;
  };
  switch (family) {
    case Family::A:
      if (prefix[dim - 1] != 0) throw ParameterError("vector is not in the root lattice");
      break;
    case Family::C: c[rank - 1] = halve(prefix[rank - 1]); break;
    case Family::D:
      c[rank - 2] = halve(prefix[rank - 2] - v[rank - 1]);
      c[rank - 1] = halve(prefix[rank - 1]);
      break;
    default: break;
  }
  return c;
}

std::vector<int> exceptional_cartan(Family family, int rank) {
  std::vector<int> a(static_cast<std::size_t>(rank) * rank, 0);
  auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i) * rank + j]; };
  for (int i = 0; i < rank; ++i) at(i, i) = 2;
  switch (family) {
    case Family::G:
      // alpha_1 short, alpha_2 long
      at(0, 1) = -3;
      at(1, 0) = -1;
      break;
    case Family::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      at(0, 1) = at(1, 0) = -1;
      at(1, 2) = -1;
      at(2, 1) = -2;
      at(2, 3) = at(3, 2) = -1;
      break;
    case Family::E: {
      // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4
      const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {1, 3}, {4, 5}, {5, 6}, {6, 7}};
      for (auto [i, j] : edges) {
        if (i < rank && j < rank) at(i, j) = at(j, i) = -1;
      }
      break;
    }
    default: throw std::logic_error("not an exceptional family");
  }
  return a;
}

std::vector<std::vector<int>> closure(int rank, const std::vector<int>& cartan) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& r : frontier) {
      for (int i = 0; i < rank; ++i) {
        int pairing = 0;
        for (int k = 0; k < rank; ++k) pairing += r[k] * cartan[static_cast<std::size_t>(i) * rank + k];
        if (pairing == 0) continue;
        auto s = r;
        s[i] -= pairing;
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      case 'E': case 'e': return Family::E;
      case 'F': case 'f': return Family::F;
      case 'G': case 'g': return Family::G;
      default: break;
    }
  }
  throw ParameterError("unknown root system family '" + std::string(text) + "'");
}

char family_char(Family f) { return static_cast<char>(f); }

bool is_classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

bool Root::positive() const {
  return std::all_of(coords.begin(), coords.end(), [](Coord c) { return c >= 0; });
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

std::vector<int> cartan_matrix(Family family, int rank) {
  validate_rank(family, rank);
  if (!is_classical(family)) return exceptional_cartan(family, rank);
  const auto simple = simple_ambient(family, rank);
  auto dot = [](const std::vector<int>& x, const std::vector<int>& y) {
    return std::inner_product(x.begin(), x.end(), y.begin(), 0);
  };
  std::vector<int> a(static_cast<std::size_t>(rank) * rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      a[static_cast<std::size_t>(i) * rank + j] = 2 * dot(simple[i], simple[j]) / dot(simple[i], simple[i]);
    }
  }
  return a;
}

RootSystem RootSystem::build(Family family, int rank) {
  validate_rank(family, rank);
  if (!is_classical(family)) return build_by_closure(family, rank);
  std::vector<std::vector<int>> coords;
  for (const auto& v : ambient_roots(family, rank)) coords.push_back(to_delta(family, rank, v));
  RootSystem rs(family, rank, std::move(coords), cartan_matrix(family, rank));
  rs.attach_ambient();
  return rs;
}

RootSystem RootSystem::build_by_closure(Family family, int rank) {
  validate_rank(family, rank);
  auto cartan = cartan_matrix(family, rank);
  auto coords = closure(rank, cartan);
  RootSystem rs(family, rank, std::move(coords), std::move(cartan));
  if (is_classical(family)) rs.attach_ambient();
  return rs;
}

RootSystem::RootSystem(Family family, int rank, std::vector<std::vector<int>> coords, std::vector<int> cartan)
    : family_(family), rank_(rank), cartan_(std::move(cartan)) {
  auto height = [](const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::sort(coords.begin(), coords.end(), [&](const auto& x, const auto& y) {
    const int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });
  if (coords.size() > 0xFFFF) throw ParameterError("root table too large");
  const std::size_t n = coords.size();
  coords_.reserve(n * rank);
  positive_.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& c = coords[r];
    const bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    const bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (nonneg == nonpos) throw std::logic_error("root with mixed-sign coordinates");
    positive_[r] = nonneg ? 1 : 0;
    for (int x : c) coords_.push_back(static_cast<Coord>(x));
    lookup_.emplace(c, static_cast<RootIndex>(r));
  }
  if (lookup_.size() != n) throw std::logic_error("duplicate root");

  negation_.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    auto neg = coords[r];
    for (auto& x : neg) x = -x;
    auto it = lookup_.find(neg);
    if (it == lookup_.end()) throw std::logic_error("root table not closed under negation");
    negation_[r] = it->second;
  }

  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    auto it = lookup_.find(e);
    if (it == lookup_.end()) throw std::logic_error("simple root missing from table");
    simple_.push_back(it->second);
  }

  reflect_.resize(static_cast<std::size_t>(rank) * n);
  pairs_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      auto s = coords[r];
      int pairing = 0;
      for (int k = 0; k < rank; ++k) pairing += s[k] * cartan_[static_cast<std::size_t>(i) * rank + k];
      s[i] -= pairing;
      auto it = lookup_.find(s);
      if (it == lookup_.end()) throw std::logic_error("root table not closed under reflections");
      reflect_[static_cast<std::size_t>(i) * n + r] = it->second;
      if (it->second > r) pairs_[i].emplace_back(static_cast<RootIndex>(r), it->second);
    }
  }
}

void RootSystem::attach_ambient() {
  ambient_dim_ = ambient_dimension(family_, rank_);
  simple_ambient_ = simple_ambient(family_, rank_);
  ambient_.assign(size() * ambient_dim_, 0);
  for (std::size_t r = 0; r < size(); ++r) {
    const auto c = coords(static_cast<RootIndex>(r));
    std::vector<int> cv(c.begin(), c.end());
    const auto v = delta_to_ambient(cv);
    std::copy(v.begin(), v.end(), ambient_.begin() + static_cast<std::ptrdiff_t>(r * ambient_dim_));
    ambient_lookup_.emplace(v, static_cast<RootIndex>(r));
  }
}

std::string RootSystem::name() const { return std::string(1, family_char(family_)) + std::to_string(rank_); }

int RootSystem::height(RootIndex r) const { return root(r).height(); }

std::optional<RootIndex> RootSystem::find(std::span<const int> c) const {
  auto it = lookup_.find(std::vector<int>(c.begin(), c.end()));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::span<const int> RootSystem::ambient(RootIndex r) const {
  if (!has_ambient()) throw UnsupportedOperation("no ambient presentation for " + name());
  return {ambient_.data() + static_cast<std::size_t>(r) * ambient_dim_, static_cast<std::size_t>(ambient_dim_)};
}

std::optional<RootIndex> RootSystem::find_ambient(std::span<const int> v) const {
  if (!has_ambient()) throw UnsupportedOperation("no ambient presentation for " + name());
  auto it = ambient_lookup_.find(std::vector<int>(v.begin(), v.end()));
  if (it == ambient_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> RootSystem::ambient_to_delta(std::span<const int> v) const {
  if (!has_ambient()) throw UnsupportedOperation("no ambient presentation for " + name());
  return to_delta(family_, rank_, v);
}

std::vector<int> RootSystem::delta_to_ambient(std::span<const int> c) const {
  if (simple_ambient_.empty()) throw UnsupportedOperation("no ambient presentation for " + name());
  if (static_cast<int>(c.size()) != rank_) throw ParameterError("coordinate vector has wrong length");
  std::vector<int> v(ambient_dimension(family_, rank_), 0);
  for (int i = 0; i < rank_; ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += c[i] * simple_ambient_[i][k];
  }
  return v;
}

RootIndex abs_root(const RootSystem& rs, RootIndex r) {
  if (r >= rs.size()) throw ParameterError("root index out of range");
  return rs.abs(r);
}

std::vector<std::vector<int>> classical_ambient(const RootSystem& rs) {
  if (!is_classical(rs.family())) throw UnsupportedOperation("ambient coordinates exist for classical types only");
  std::vector<std::vector<int>> out;
  out.reserve(rs.size());
  for (std::size_t r = 0; r < rs.size(); ++r) {
    auto v = rs.ambient(static_cast<RootIndex>(r));
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

}  // namespace rootzeta
