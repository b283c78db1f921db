#include "rootzeta/closedform.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

#include "rootzeta/errors.hpp"

namespace rootzeta {

namespace {

void check_bounds(const BlockPartition& bp, std::span<const int> a) {
  if (a.size() != bp.lifted.size()) throw ParameterError("occupancy length differs from the number of blocks");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 0 || a[j] > bp.lifted[j]) throw ParameterError("occupancy entry out of bounds");
  }
}

int occupancy_total(std::span<const int> a) { return std::accumulate(a.begin(), a.end(), 0); }

std::int64_t quarter(std::int64_t x4) {
  if (x4 % 4 != 0) throw std::logic_error("closed-form value is not an integer");
  return x4 / 4;
}

// -Q/2 + e for short coordinates, -Q/4 + e/2 for the long (tail) one
std::int64_t combine(std::int64_t q, std::int64_t e, GammaKind kind) {
  return kind == GammaKind::Short ? quarter(-2 * q + 4 * e) : quarter(-q + 2 * e);
}

int label_of(const BlockPartition& bp, int p) {
  const int n = bp.n;
  if (p <= n) return p;
  if (bp.family == Family::B) return p == n + 1 ? 0 : -(2 * n + 2 - p);
  return -(2 * n + 1 - p);
}

int position_of(const BlockPartition& bp, int label) {
  if (label > 0) return label;
  if (label == 0) return bp.n + 1;
  return bp.positions() + 1 + label;
}

int apply_signed(std::span<const int> perm, int label) {
  if (label == 0) return 0;
  return label > 0 ? perm[label - 1] : -perm[-label - 1];
}

}  // namespace

std::int64_t quad_form_term(std::int64_t d1, std::int64_t d2) { return 2 * d1 * d2; }

std::int64_t quad_sum(std::span<const int> lifted, std::span<const int> a) {
  std::int64_t q = 0;
  std::int64_t p1 = 0, p2 = 0;
  for (std::size_t j = 0; j <= lifted.size(); ++j) {
    const std::int64_t u1 = j < lifted.size() ? a[j] : 0;
    const std::int64_t u2 = j < lifted.size() ? lifted[j] - a[j] : 0;
    q += quad_form_term(u1 - p1, u2 - p2);
    p1 = u1;
    p2 = u2;
  }
  return q;
}

std::int64_t a_type_zeta(const BlockPartition& bp, std::span<const int> a) {
  check_bounds(bp, a);
  const auto& N = bp.sizes;
  std::int64_t cross = 0, inner = 0;
  for (std::size_t j = 1; j < N.size(); ++j) {
    cross += static_cast<std::int64_t>(a[j - 1]) * (N[j] - a[j]) + static_cast<std::int64_t>(a[j]) * (N[j - 1] - a[j - 1]);
  }
  for (std::size_t j = 0; j < N.size(); ++j) inner += static_cast<std::int64_t>(a[j]) * (N[j] - a[j]);
  return cross - 2 * inner;
}

std::int64_t a_type_zeta_quadratic(const BlockPartition& bp, std::span<const int> a) {
  check_bounds(bp, a);
  const auto q = quad_sum(bp.lifted, a);
  if (q % 2 != 0) throw std::logic_error("closed-form value is not an integer");
  return -q / 2;
}

std::int64_t b_type_zeta(const BlockPartition& bp, std::span<const int> a) {
  if (bp.tag != BlockCase::B) throw ParameterError("blocks are not of type B");
  check_bounds(bp, a);
  return combine(quad_sum(bp.lifted, a), 2 * a[bp.m], GammaKind::Short);
}

std::int64_t c_type_zeta(const BlockPartition& bp, std::span<const int> a, GammaKind kind) {
  check_bounds(bp, a);
  const int m = bp.m;
  std::int64_t e = 0;
  switch (bp.tag) {
    case BlockCase::C2: e = a[m - 1] + a[m]; break;
    case BlockCase::C0: e = -2 * a[m]; break;
    default: throw ParameterError("blocks are not of type C");
  }
  return combine(quad_sum(bp.lifted, a), e, kind);
}

std::int64_t d_type_zeta(const BlockPartition& bp, std::span<const int> a, GammaKind kind) {
  check_bounds(bp, a);
  const int m = bp.m;
  std::int64_t e = 0;
  switch (bp.tag) {
    case BlockCase::D22: e = 2 * a[m - 1]; break;
    case BlockCase::D00: e = 2 * a[m]; break;
    case BlockCase::D02: e = -(a[m - 1] + a[m]); break;
    default: throw ParameterError("blocks are not of type D");
  }
  return combine(quad_sum(bp.lifted, a), e, kind);
}

GammaKind gamma_kind(const BlockPartition& bp, std::span<const int> a) {
  const bool last = occupancy_total(a) == bp.n;
  return (bp.family == Family::C || bp.family == Family::D) && last ? GammaKind::Long : GammaKind::Short;
}

std::int64_t closed_form_zeta(const BlockPartition& bp, std::span<const int> a) {
  switch (bp.family) {
    case Family::A: return a_type_zeta(bp, a);
    case Family::B: return b_type_zeta(bp, a);
    case Family::C: return c_type_zeta(bp, a, gamma_kind(bp, a));
    case Family::D: return d_type_zeta(bp, a, gamma_kind(bp, a));
    default: throw UnsupportedOperation("no closed form for exceptional types");
  }
}

bool occupancy_feasible(const BlockPartition& bp, std::span<const int> a) {
  if (a.size() != bp.lifted.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 0 || a[j] > bp.lifted[j]) return false;
  }
  const int total = occupancy_total(a);
  if (bp.family == Family::A) return total >= 1 && total <= bp.positions() - 1;
  if (total == 0) return false;
  const int L = bp.lifted_m();
  for (int i = 0; i <= L; ++i) {
    if (a[i] + a[L - i] > bp.lifted[i]) return false;
  }
  if (bp.family == Family::D && total == bp.n - 1) return false;
  return true;
}

Occupancy induced_occupancy(const BlockPartition& bp, std::span<const int> perm, int k) {
  const int P = bp.positions();
  Occupancy a(bp.lifted.size(), 0);
  if (bp.family == Family::A) {
    if (static_cast<int>(perm.size()) != P) throw ParameterError("permutation has wrong size");
    for (int p = 1; p <= P; ++p) {
      if (perm[p - 1] <= k) ++a[bp.block_of(p)];
    }
    return a;
  }
  if (static_cast<int>(perm.size()) != bp.n) throw ParameterError("signed permutation has wrong size");
  for (int p = 1; p <= P; ++p) {
    if (position_of(bp, apply_signed(perm, label_of(bp, p))) <= k) ++a[bp.block_of(p)];
  }
  return a;
}

Realization occupancy_realize(const RootSystem& rs, const BlockPartition& bp, std::span<const int> a) {
  if (!occupancy_feasible(bp, a)) throw ParameterError("occupancy is not feasible");
  const int P = bp.positions();
  const int k = occupancy_total(a);
  std::vector<int> sigma(P + 1, 0);
  std::vector<bool> used(P + 1, false);

  std::vector<int> start(bp.lifted.size(), 1);
  for (std::size_t j = 1; j < bp.lifted.size(); ++j) start[j] = start[j - 1] + bp.lifted[j - 1];

  if (bp.family == Family::A) {
    int next = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
      for (int t = 0; t < a[j]; ++t) sigma[start[j] + t] = next++;
    }
    for (int p = 1; p <= P; ++p) {
      if (sigma[p] == 0) sigma[p] = next++;
    }
  } else {
    // sigma(P+1-p) = P+1-sigma(p) keeps sigma a signed permutation
    auto assign = [&](int p) {
      int t = 1;
      while (used[t]) ++t;
      sigma[p] = t;
      used[t] = true;
      sigma[P + 1 - p] = P + 1 - t;
      used[P + 1 - t] = true;
    };
    for (std::size_t j = 0; j < a.size(); ++j) {
      int taken = 0;
      for (int p = start[j]; p < start[j] + bp.lifted[j] && taken < a[j]; ++p) {
        if (sigma[p] != 0) continue;
        assign(p);
        ++taken;
      }
    }
    for (int p = 1; p <= P; ++p) {
      if (sigma[p] == 0) assign(p);
    }
  }

  Realization r;
  r.gamma = k;
  if (bp.family == Family::A) {
    r.perm.assign(sigma.begin() + 1, sigma.end());
  } else {
    for (int l = 1; l <= bp.n; ++l) r.perm.push_back(label_of(bp, sigma[position_of(bp, l)]));
  }
  if (induced_occupancy(bp, r.perm, k) != Occupancy(a.begin(), a.end())) {
    throw std::logic_error("realized element does not reproduce the occupancy");
  }
  auto action = action_from_signed_permutation(rs, r.perm);
  if (bp.family == Family::D) {
    auto ext = extended_from_action(rs, std::move(action));
    r.element = std::move(ext.base);
    r.twisted = ext.twisted;
  } else {
    r.element = element_from_action(rs, std::move(action));
  }
  return r;
}

std::optional<Occupancy> refuting_occupancy(const BlockPartition& bp) {
  const auto& NA = bp.lifted;
  const int L = bp.lifted_m();
  auto size_at = [&](int j) { return j < 0 ? 0 : NA[j]; };
  auto ones = [&](int lo, int hi) {
    Occupancy a(NA.size(), 0);
    for (int i = lo; i <= hi; ++i) a[i] = 1;
    return a;
  };

  std::vector<Occupancy> candidates;
  // Lifted sizes over the left half 0..h either drop somewhere, or jump by at
  // least two somewhere (counting N^A_{-1} = 0), unless the weighting is distinguished.
  auto staircase = [&](int h) {
    for (int s = 1; s <= h; ++s) {
      if (size_at(s) <= size_at(s - 1) - 1) {
        candidates.push_back(ones(0, s - 1));
        return;
      }
    }
    for (int s = h; s >= 0; --s) {
      if (size_at(s) >= size_at(s - 1) + 2) {
        candidates.push_back(ones(s, L - s));
        return;
      }
    }
  };
  // smallest s <= h with N^A_j >= 2 on s..h
  auto wide_tail = [&](int h) {
    int s = h + 1;
    while (s > 0 && NA[s - 1] >= 2) --s;
    return s;
  };

  switch (bp.tag) {
    case BlockCase::A: {
      const int m = bp.m;
      if (m == 0) {
        candidates.push_back(ones(0, 0));
        break;
      }
      for (int i = 1; i <= m; ++i) candidates.push_back(ones(0, i - 1));
      for (int i = 1; i <= m; ++i) candidates.push_back(ones(i, m));
      break;
    }
    case BlockCase::B:
    case BlockCase::D00: staircase(bp.m); break;
    case BlockCase::C2:
    case BlockCase::D22: staircase(bp.m - 1); break;
    case BlockCase::C0: {
      const int s = wide_tail(bp.m);
      if (s <= bp.m) candidates.push_back(ones(s, L - s));
      break;
    }
    case BlockCase::D02: {
      const int s = wide_tail(bp.m - 1);
      if (s <= bp.m - 1) candidates.push_back(ones(s, bp.m - 1));
      break;
    }
  }
  for (auto& a : candidates) {
    if (occupancy_feasible(bp, a) && closed_form_zeta(bp, a) <= 0) return a;
  }
  return std::nullopt;
}

Counterexample realized_counterexample(const RootSystem& rs, const WeightFunction& rho, const BlockPartition& bp,
                                       const Realization& r) {
  WeylElement w = r.element;
  int gamma = r.gamma - 1;
  if (bp.family == Family::D) {
    const int n = rs.rank();
    auto flip = [n](int g) { return g == n - 2 ? n - 1 : g == n - 1 ? n - 2 : g; };
    const auto theta = twist_permutation(rs);
    bool twisted = r.twisted;
    if (bp.twisted) {
      // zeta_{theta rho}(x) = zeta_rho(x theta) and x theta = theta (theta x theta)
      const auto x = twisted ? compose(theta, w.action) : w.action;
      auto y = compose(theta, compose(x, theta));
      auto ext = extended_from_action(rs, std::move(y));
      w = std::move(ext.base);
      twisted = ext.twisted;
      gamma = flip(gamma);
    }
    // zeta(theta b) is zeta(b) with the last two coordinates swapped
    if (twisted) gamma = flip(gamma);
  }
  Counterexample cx;
  cx.zeta = zeta_of(rs, rho, w);
  if (cx.zeta[gamma] > 0) throw std::logic_error("closed form and direct evaluation disagree");
  cx.gamma = first_non_positive(cx.zeta);
  cx.word = std::move(w.word);
  return cx;
}

Verdict closedform_verdict(const RootSystem& rs, const WeightFunction& rho) {
  if (!is_classical(rs.family())) throw UnsupportedOperation("no closed form for exceptional types");
  const auto t0 = std::chrono::steady_clock::now();
  const auto bp = block_partition(rs, rho);
  Verdict v;
  v.rho = rho;
  v.distinguished_cardinality = is_distinguished_cardinality(rs, rho);
  v.distinguished_closed_form = is_distinguished_closed_form(rs, rho);

  Occupancy a(bp.lifted.size(), 0);
  bool more = true;
  while (more) {
    if (occupancy_feasible(bp, a)) {
      ++v.stats.scanned;
      if (closed_form_zeta(bp, a) <= 0) {
        v.outcome = Outcome::Counterexample;
        v.counterexample = realized_counterexample(rs, rho, bp, occupancy_realize(rs, bp, a));
        break;
      }
    }
    // odometer, last entry fastest
    more = false;
    for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j) {
      if (a[j] < bp.lifted[j]) {
        ++a[j];
        more = true;
        break;
      }
      a[j] = 0;
    }
  }
  v.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

}  // namespace rootzeta
