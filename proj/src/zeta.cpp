#include "rootzeta/zeta.hpp"

#include <charconv>

#include "rootzeta/errors.hpp"

namespace rootzeta {

namespace {

void add_abs(const RootSystem& rs, RootIndex image, std::int64_t sign, ZetaVector& z) {
  const auto c = rs.coords(image);
  const std::int64_t s = rs.is_positive(image) ? sign : -sign;
  for (std::size_t k = 0; k < z.size(); ++k) z[k] += s * c[k];
}

}  // namespace

ZetaVector zeta_of(const RootSystem& rs, const WeightClasses& wc, std::span<const RootIndex> action) {
  if (action.size() != rs.size()) throw ParameterError("action size differs from root count");
  ZetaVector z(rs.rank(), 0);
  for (RootIndex v : wc.of(2)) add_abs(rs, action[v], 1, z);
  for (RootIndex v : wc.of(0)) add_abs(rs, action[v], -1, z);
  return z;
}

ZetaVector zeta_of(const RootSystem& rs, const WeightFunction& rho, std::span<const RootIndex> action) {
  return zeta_of(rs, weight_classes(rs, rho), action);
}

ZetaVector zeta_of(const RootSystem& rs, const WeightFunction& rho, const WeylElement& w) {
  return zeta_of(rs, rho, w.action);
}

ZetaVector zeta_of(const RootSystem& rs, const WeightFunction& rho, const ExtendedElementD& w) {
  return zeta_of(rs, rho, extended_action(rs, w));
}

bool strictly_positive(std::span<const std::int64_t> z) {
  for (auto x : z) {
    if (x <= 0) return false;
  }
  return true;
}

std::string format_zeta(std::span<const std::int64_t> z) {
  std::string s = "[";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(z[i]);
  }
  s.push_back(']');
  return s;
}

ZetaVector parse_zeta(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') throw ParameterError("malformed zeta vector");
  text = text.substr(1, text.size() - 2);
  ZetaVector z;
  if (text.empty()) return z;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::int64_t x = 0;
    auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), x);
    if (ec != std::errc() || p != piece.data() + piece.size()) throw ParameterError("malformed zeta vector");
    z.push_back(x);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return z;
}

std::vector<std::int8_t> zeta_signs(const WeightClasses& wc) {
  std::vector<std::int8_t> s(wc.weight_of.size(), 0);
  for (RootIndex v : wc.of(2)) s[v] = 1;
  for (RootIndex v : wc.of(0)) s[v] = -1;
  return s;
}

ZetaTracker::ZetaTracker(const RootSystem& rs, const WeightClasses& wc)
    : ZetaTracker(rs, wc, zeta_of(rs, wc, identity_action(rs))) {}

ZetaTracker::ZetaTracker(const RootSystem& rs, const WeightClasses& wc, ZetaVector initial)
    : rank_(rs.rank()), signs_(zeta_signs(wc)), stack_(std::move(initial)) {
  if (stack_.size() != rank_) throw ParameterError("initial zeta has wrong length");
  for (int j = 0; j < rs.rank(); ++j) {
    simple_.push_back(rs.simple(j));
    neg_simple_.push_back(rs.negate(rs.simple(j)));
    for (int k = 0; k < rs.rank(); ++k) cartan_.push_back(rs.cartan(j, k));
  }
  stack_.reserve(rank_ * (rs.positive_count() + 2));
}

}  // namespace rootzeta
