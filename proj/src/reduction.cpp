#include "rootzeta/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "rootzeta/errors.hpp"

namespace rootzeta {

namespace {

int source_positions(Family family, int n) {
  switch (family) {
    case Family::B: return 2 * n + 1;
    case Family::C:
    case Family::D: return 2 * n;
    case Family::G: return 7;
    default: throw ParameterError("no reduction for this family");
  }
}

void validate(Family family, int n) {
  bool ok = false;
  switch (family) {
    case Family::B:
    case Family::C: ok = n >= 2 && n <= 12; break;
    case Family::D: ok = n >= 3 && n <= 12; break;
    case Family::G: ok = n == 2; break;
    default: break;
  }
  if (!ok) throw ParameterError(std::string("no reduction for ") + family_char(family) + std::to_string(n));
}

// label of position p in 1..P: p for p <= n, 0 in the middle (B), -(mirror) after
int label_of(Family family, int n, int p) {
  if (p <= n) return p;
  if (family == Family::B) return p == n + 1 ? 0 : -(2 * n + 2 - p);
  return -(2 * n + 1 - p);
}

int position_of(Family family, int n, int label) {
  if (label > 0) return label;
  if (label == 0) return n + 1;
  return source_positions(family, n) + 1 + label;
}

std::vector<int> cycles_to_perm(int size, std::initializer_list<std::pair<int, int>> swaps) {
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 1);
  for (auto [a, b] : swaps) std::swap(perm[a - 1], perm[b - 1]);
  return perm;
}

std::vector<RootIndex> sorted(std::vector<RootIndex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ReductionMap::ReductionMap(Family family, int n)
    : family_((validate(family, n), family)),
      n_(n),
      source_(RootSystem::build(Family::A, source_positions(family, n) - 1)),
      target_(RootSystem::build(family, n)) {
  const int P = source_positions(family, n);
  const int dim = family == Family::G ? 3 : n;
  matrix_.assign(dim, std::vector<int>(P, 0));
  if (family == Family::G) {
    const int cols[7][3] = {{1, 0, -1}, {0, 1, -1}, {1, -1, 0}, {0, 0, 0}, {-1, 1, 0}, {0, -1, 1}, {-1, 0, 1}};
    for (int p = 0; p < 7; ++p) {
      for (int k = 0; k < 3; ++k) matrix_[k][p] = cols[p][k];
    }
  } else {
    for (int p = 1; p <= P; ++p) {
      const int l = label_of(family, n, p);
      if (l != 0) matrix_[(l > 0 ? l : -l) - 1][p - 1] = l > 0 ? 1 : -1;
    }
  }

  delta_.assign(target_.rank(), std::vector<int>(source_.rank(), 0));
  for (int d = 0; d < source_.rank(); ++d) {
    const auto img = apply_ambient(source_.ambient(source_.simple(d)));
    for (int g = 0; g < target_.rank(); ++g) delta_[g][d] = img[g];
  }

  image_root_.resize(source_.size());
  fibers_.resize(target_.size());
  for (std::size_t r = 0; r < source_.size(); ++r) {
    const auto img = apply_ambient(source_.ambient(static_cast<RootIndex>(r)));
    image_root_[r] = target_.find(img);
    if (image_root_[r]) fibers_[*image_root_[r]].push_back(static_cast<RootIndex>(r));
  }
}

std::vector<int> ReductionMap::target_delta(std::span<const int> v) const {
  if (family_ != Family::G) return target_.ambient_to_delta(v);
  if (v[0] + v[1] + v[2] != 0) throw ParameterError("vector is not in the root lattice");
  // a alpha + b beta = (a - b, 2b - a, -b)
  return {v[0] - v[2], -v[2]};
}

std::vector<int> ReductionMap::apply_ambient(std::span<const int> source_ambient) const {
  if (static_cast<int>(source_ambient.size()) != source_.ambient_dim()) throw ParameterError("vector has wrong dimension");
  std::vector<int> v(matrix_.size(), 0);
  for (std::size_t k = 0; k < matrix_.size(); ++k) {
    for (std::size_t p = 0; p < source_ambient.size(); ++p) v[k] += matrix_[k][p] * source_ambient[p];
  }
  return target_delta(v);
}

std::vector<int> ReductionMap::apply(std::span<const int> source_delta) const {
  if (static_cast<int>(source_delta.size()) != source_.rank()) throw ParameterError("vector has wrong length");
  std::vector<int> y(target_.rank(), 0);
  for (int g = 0; g < target_.rank(); ++g) {
    for (int d = 0; d < source_.rank(); ++d) y[g] += delta_[g][d] * source_delta[d];
  }
  return y;
}

const std::vector<RootIndex>& ReductionMap::fiber(RootIndex s) const {
  if (s >= target_.size()) throw ParameterError("target root index out of range");
  return fibers_[s];
}

bool ReductionMap::constant_multiplicity() const {
  return std::all_of(fibers_.begin(), fibers_.end(), [&](const auto& f) { return f.size() == fibers_[0].size(); });
}

void ReductionMap::corrupt_fiber(RootIndex s, std::size_t entry) {
  if (s >= target_.size() || entry >= fibers_[s].size()) throw ParameterError("no such fiber entry");
  fibers_[s][entry] = source_.negate(fibers_[s][entry]);
}

WeylEmbedding::WeylEmbedding(const ReductionMap& map)
    : family_(map.family()), n_(map.n()), source_(map.source()), target_(map.target()) {
  if (family_ == Family::G) {
    generators_.push_back(action_from_signed_permutation(source_, cycles_to_perm(7, {{1, 2}, {3, 5}, {6, 7}})));
    generators_.push_back(action_from_signed_permutation(source_, cycles_to_perm(7, {{2, 3}, {5, 6}})));
  }
}

Action WeylEmbedding::operator()(std::span<const RootIndex> target_action) const {
  if (family_ == Family::G) {
    Action a = identity_action(source_);
    for (int i : canonical_word(target_, target_action)) a = compose(a, generators_[i]);
    return a;
  }
  const auto pi = signed_permutation(target_, target_action);
  const int P = source_.ambient_dim();
  std::vector<int> sigma(P);
  for (int p = 1; p <= P; ++p) {
    const int l = label_of(family_, n_, p);
    const int image = l == 0 ? 0 : l > 0 ? pi[l - 1] : -pi[-l - 1];
    sigma[p - 1] = position_of(family_, n_, image);
  }
  return action_from_signed_permutation(source_, sigma);
}

Action WeylEmbedding::generator(int i) const {
  if (i < 0 || i >= target_.rank()) throw ParameterError("generator index out of range");
  const int letter[] = {i};
  return (*this)(action_of_word(target_, letter));
}

Reduction build_reduction(Family family, int n) {
  ReductionMap map(family, n);
  WeylEmbedding phi(map);
  return {std::move(map), std::move(phi)};
}

std::vector<Action> target_elements(const ReductionMap& map, std::size_t exhaustive_limit, std::size_t sample,
                                    std::uint64_t seed) {
  const auto& rs = map.target();
  const bool extended = rs.family() == Family::D;
  const std::uint64_t total = group_order(rs) * (extended ? 2 : 1);
  std::vector<Action> out;
  std::optional<Action> theta;
  if (extended) theta = twist_permutation(rs);
  if (total <= exhaustive_limit) {
    WeylStream stream(rs);
    while (auto w = stream.next()) {
      if (extended) out.push_back(compose(*theta, w->action));
      out.push_back(std::move(w->action));
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, rs.rank() - 1);
  std::uniform_int_distribution<std::size_t> length(0, 2 * rs.positive_count());
  for (std::size_t i = 0; i < sample; ++i) {
    Word w(length(rng));
    for (auto& x : w) x = letter(rng);
    auto a = action_of_word(rs, w);
    if (extended && (rng() & 1)) a = compose(*theta, a);
    out.push_back(std::move(a));
  }
  return out;
}

ReductionProperties check_reduction_properties(const ReductionMap& map, const WeylEmbedding& phi,
                                               std::span<const Action> elements) {
  const auto& S = map.target();
  const auto& R = map.source();
  ReductionProperties props;
  props.positive = true;
  props.root_surjective = true;
  for (std::size_t s = 0; s < S.size(); ++s) {
    const auto& f = map.fiber(static_cast<RootIndex>(s));
    if (f.empty()) props.root_surjective = false;
    if (S.is_positive(static_cast<RootIndex>(s))) {
      for (RootIndex r : f) {
        if (!R.is_positive(r)) props.positive = false;
      }
    }
  }
  props.compatible = true;
  for (const auto& w : elements) {
    const auto pw = phi(w);
    for (std::size_t s = 0; s < S.size() && props.compatible; ++s) {
      std::vector<RootIndex> moved;
      for (RootIndex r : map.fiber(static_cast<RootIndex>(s))) moved.push_back(pw[r]);
      if (sorted(moved) != sorted(map.fiber(w[s]))) props.compatible = false;
    }
    if (!props.compatible) break;
  }
  return props;
}

bool homomorphic_on_generators(const ReductionMap& map, const WeylEmbedding& phi) {
  const auto& S = map.target();
  std::vector<Action> gens;
  for (int i = 0; i < S.rank(); ++i) {
    const int letter[] = {i};
    gens.push_back(action_of_word(S, letter));
  }
  if (S.family() == Family::D) gens.push_back(twist_permutation(S));
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      if (phi(compose(x, y)) != compose(phi(x), phi(y))) return false;
    }
  }
  return true;
}

bool fibers_commute_with_abs(const ReductionMap& map) {
  const auto& S = map.target();
  const auto& R = map.source();
  for (std::size_t s = 0; s < S.size(); ++s) {
    std::set<RootIndex> lhs, rhs;
    for (RootIndex r : map.fiber(S.abs(static_cast<RootIndex>(s)))) lhs.insert(r);
    for (RootIndex r : map.fiber(static_cast<RootIndex>(s))) rhs.insert(R.abs(r));
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<int> pullback_weights(const ReductionMap& map, std::span<const int> target_weights) {
  if (static_cast<int>(target_weights.size()) != map.target().rank()) throw ParameterError("weighting length differs from rank");
  const auto& F = map.delta_matrix();
  std::vector<int> w(map.source().rank(), 0);
  for (int d = 0; d < map.source().rank(); ++d) {
    for (int g = 0; g < map.target().rank(); ++g) w[d] += F[g][d] * target_weights[g];
  }
  return w;
}

bool fibers_respect_weights(const ReductionMap& map, const WeightFunction& rho) {
  const auto target_wc = weight_classes(map.target(), rho);
  const auto pulled = pullback_weights(map, rho.values());
  const auto source_wc = weight_classes(map.source(), pulled);
  for (const auto& [k, roots] : target_wc.by_weight) {
    for (RootIndex s : roots) {
      for (RootIndex r : map.fiber(s)) {
        if (source_wc.weight_of[r] != k) return false;
      }
    }
  }
  return true;
}

std::vector<RootIndex> unmatched_roots(const ReductionMap& map, const WeightFunction& rho, int k) {
  const auto target_wc = weight_classes(map.target(), rho);
  const auto source_wc = weight_classes(map.source(), pullback_weights(map, rho.values()));
  std::set<RootIndex> matched;
  for (RootIndex s : target_wc.of(k)) {
    for (RootIndex r : map.fiber(s)) matched.insert(r);
  }
  std::vector<RootIndex> out;
  for (RootIndex r : source_wc.of(k)) {
    if (!matched.count(r)) out.push_back(r);
  }
  return out;
}

bool score_identity(const ReductionMap& map, const WeylEmbedding& phi, const WeightFunction& rho,
                    std::span<const RootIndex> target_action) {
  const auto& S = map.target();
  const auto& R = map.source();
  const auto wc = weight_classes(S, rho);
  const auto pw = phi(target_action);

  long lcm = 1;
  for (std::size_t s = 0; s < S.size(); ++s) {
    const long m = map.multiplicity(static_cast<RootIndex>(s));
    if (m == 0) return false;
    lcm = std::lcm(lcm, m);
  }

  std::vector<std::int64_t> rhs(S.rank(), 0);
  auto accumulate = [&](int k, int sign) {
    for (RootIndex s : wc.of(k)) {
      const long scale = lcm / map.multiplicity(S.abs(target_action[s]));
      for (RootIndex r : map.fiber(s)) {
        const RootIndex img = R.abs(pw[r]);
        const auto c = R.coords(img);
        const auto fc = map.apply(std::vector<int>(c.begin(), c.end()));
        for (int g = 0; g < S.rank(); ++g) rhs[g] += sign * scale * fc[g];
      }
    }
  };
  accumulate(2, 1);
  accumulate(0, -1);

  const auto z = zeta_of(S, wc, target_action);
  for (int g = 0; g < S.rank(); ++g) {
    if (rhs[g] != lcm * z[g]) return false;
  }
  return true;
}

bool coefficient_identity(const ReductionMap& map, const WeylEmbedding& phi, const WeightFunction& rho,
                          std::span<const RootIndex> target_action) {
  const auto& S = map.target();
  const auto& R = map.source();
  if (!map.constant_multiplicity()) throw ParameterError("fiber sizes are not constant");
  const std::int64_t m = map.multiplicity(0);
  const auto pw = phi(target_action);
  const auto source_wc = weight_classes(R, pullback_weights(map, rho.values()));
  const auto zr = zeta_of(R, source_wc, pw);

  // x = zeta_R(phi(w)) - (sum_{U_2} |phi(w) r| - sum_{U_0} |phi(w) r|)
  std::vector<std::int64_t> x(zr.begin(), zr.end());
  auto correct = [&](int k, int sign) {
    for (RootIndex r : unmatched_roots(map, rho, k)) {
      const auto c = R.coords(R.abs(pw[r]));
      for (int d = 0; d < R.rank(); ++d) x[d] -= sign * c[d];
    }
  };
  correct(2, 1);
  correct(0, -1);

  const auto z = zeta_of(S, rho, target_action);
  const auto& F = map.delta_matrix();
  for (int g = 0; g < S.rank(); ++g) {
    std::int64_t sum = 0;
    for (int d = 0; d < R.rank(); ++d) sum += F[g][d] * x[d];
    if (sum != m * z[g]) return false;
  }
  return true;
}

ReductionSummary check_reduction(const Reduction& reduction) {
  const auto& map = reduction.map;
  const auto elements = target_elements(map);
  const auto props = check_reduction_properties(map, reduction.phi, elements);
  ReductionSummary s;
  s.elements = elements.size();
  s.positive = props.positive;
  s.root_surjective = props.root_surjective;
  s.compatible = props.compatible;
  s.homomorphic = homomorphic_on_generators(map, reduction.phi);
  s.abs_lemma = fibers_commute_with_abs(map);
  s.weight_lemma = true;
  s.score_identity = true;
  const bool constant = map.constant_multiplicity();
  if (constant) s.coefficient_identity = true;
  for (const auto& rho : all_weightings(map.target())) {
    ++s.weightings;
    s.weight_lemma = s.weight_lemma && fibers_respect_weights(map, rho);
    for (const auto& w : elements) {
      if (s.score_identity && !score_identity(map, reduction.phi, rho, w)) s.score_identity = false;
      if (constant && *s.coefficient_identity && !coefficient_identity(map, reduction.phi, rho, w)) {
        s.coefficient_identity = false;
      }
    }
  }
  return s;
}

}  // namespace rootzeta
