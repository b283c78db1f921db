#include "rootzeta/engine.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <sstream>

#include "rootzeta/checkpoint.hpp"
#include "rootzeta/closedform.hpp"
#include "rootzeta/errors.hpp"
#include "rootzeta/scan.hpp"

namespace rootzeta {

Mode parse_mode(std::string_view text) {
  if (text == "brute") return Mode::Brute;
  if (text == "closedform") return Mode::ClosedForm;
  if (text == "both") return Mode::Both;
  throw ParameterError("unknown mode: " + std::string(text));
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Brute: return "brute";
    case Mode::ClosedForm: return "closedform";
    case Mode::Both: return "both";
  }
  return "?";
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

Verdict brute_verdict(const RootSystem& rs, const WeightFunction& rho, const EngineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ScanConfig config;
  config.jobs = options.jobs;
  config.extended_d = options.extended_d;
  config.split_depth = default_split_depth(rs);
  std::unique_ptr<CheckpointFile> file;
  if (options.checkpoint_dir) {
    CheckpointHeader header{rs.name(), rho.to_string(), options.extended_d ? "extended" : "plain", config.split_depth,
                            split_tasks(rs, config.split_depth).size()};
    file = std::make_unique<CheckpointFile>(checkpoint_path(*options.checkpoint_dir, rs.name(), rho.to_string()), header);
    config.checkpoint = file.get();
  }
  const auto wc = weight_classes(rs, rho);
  auto result = scan(rs, wc, config);

  Verdict v;
  v.rho = rho;
  v.distinguished_cardinality = is_distinguished_cardinality(rs, rho);
  if (is_classical(rs.family())) v.distinguished_closed_form = is_distinguished_closed_form(rs, rho);
  v.outcome = result.counterexample ? Outcome::Counterexample : Outcome::AllPositive;
  v.counterexample = std::move(result.counterexample);
  v.stats.scanned = result.scanned;
  v.stats.wall_ms = elapsed_ms(start);
  return v;
}

}  // namespace

Verdict verify_weighting(const RootSystem& rs, const WeightFunction& rho, const EngineOptions& options) {
  if (rho.rank() != rs.rank()) throw ParameterError("weighting length differs from the rank");
  if (options.jobs < 1) throw ParameterError("jobs must be positive");
  if (options.mode != Mode::Brute && !is_classical(rs.family())) {
    throw UnsupportedOperation("closed forms exist for classical types only");
  }
  if (options.mode == Mode::ClosedForm) {
    const auto start = std::chrono::steady_clock::now();
    auto v = closedform_verdict(rs, rho);
    v.stats.wall_ms = elapsed_ms(start);
    return v;
  }
  auto v = brute_verdict(rs, rho, options);
  if (options.mode == Mode::Both) {
    const auto cf = closedform_verdict(rs, rho);
    if (cf.outcome != v.outcome) {
      throw Discrepancy(rs.name() + " rho=" + rho.to_string() + ": brute force and closed form disagree");
    }
  }
  return v;
}

bool theorem_holds(std::span<const Verdict> verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) {
    return (v.outcome == Outcome::AllPositive) == v.distinguished_cardinality;
  });
}

Totals totals_of(std::span<const Verdict> verdicts) {
  Totals t;
  for (const auto& v : verdicts) {
    ++t.weightings;
    if (v.distinguished_cardinality) ++t.distinguished;
    if (v.counterexample) ++t.counterexamples;
    t.scanned += v.stats.scanned;
    t.wall_ms += v.stats.wall_ms;
  }
  return t;
}

Report verify_all(const RootSystem& rs, const EngineOptions& options) {
  const auto rhos = all_weightings(rs);
  std::vector<std::size_t> order(rhos.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_partition(order.begin(), order.end(),
                        [&](std::size_t i) { return !is_distinguished_cardinality(rs, rhos[i]); });

  Report report;
  report.family = rs.family();
  report.rank = rs.rank();
  report.verdicts.resize(rhos.size());
  std::size_t done = 0;
  for (std::size_t i : order) {
    report.verdicts[i] = verify_weighting(rs, rhos[i], options);
    ++done;
    if (options.progress) {
      const auto& v = report.verdicts[i];
      *options.progress << "[" << done << "/" << rhos.size() << "] " << rs.name() << " rho=" << rhos[i].to_string()
                        << (v.distinguished_cardinality ? " distinguished" : "")
                        << (v.counterexample ? " counterexample" : " all positive") << " scanned=" << v.stats.scanned
                        << "\n"
                        << std::flush;
    }
  }
  report.theorem_holds = theorem_holds(report.verdicts);
  report.totals = totals_of(report.verdicts);
  return report;
}

CrosscheckResult crosscheck(const RootSystem& rs, int jobs) {
  if (!is_classical(rs.family())) throw UnsupportedOperation("closed forms exist for classical types only");
  const int n = rs.rank();
  const bool d = rs.family() == Family::D;
  CrosscheckResult result;
  auto mismatch = [&](const std::string& what) {
    if (result.ok) result.first_mismatch = what;
    result.ok = false;
  };

  std::vector<Action> elements;
  std::vector<std::string> labels;
  WeylStream stream(rs);
  while (auto w = stream.next()) {
    if (d) {
      elements.push_back(compose(twist_permutation(rs), w->action));
      labels.push_back("twist(" + format_word(w->word) + ")");
    }
    elements.push_back(std::move(w->action));
    labels.push_back(format_word(w->word));
  }
  std::vector<std::vector<int>> perms;
  for (const auto& a : elements) perms.push_back(signed_permutation(rs, a));

  EngineOptions brute;
  brute.jobs = jobs;
  for (const auto& rho : all_weightings(rs)) {
    const auto bp = block_partition(rs, rho);
    // closed forms describe the normalized weighting
    const auto wc = weight_classes(rs, bp.normalized);
    for (std::size_t e = 0; e < elements.size(); ++e) {
      const auto z = zeta_of(rs, wc, elements[e]);
      for (int k = 1; k <= n; ++k) {
        if (d && k == n - 1) continue;
        const auto a = induced_occupancy(bp, perms[e], k);
        ++result.comparisons;
        if (!occupancy_feasible(bp, a) || closed_form_zeta(bp, a) != z[k - 1]) {
          std::ostringstream what;
          what << rs.name() << " rho=" << rho.to_string() << " element=" << labels[e]
               << " gamma=" << k << " zeta=" << format_zeta(z);
          mismatch(what.str());
        }
      }
    }
    const auto cf = closedform_verdict(rs, rho);
    const auto bv = verify_weighting(rs, rho, brute);
    ++result.comparisons;
    if (cf.outcome != bv.outcome) mismatch(rs.name() + " rho=" + rho.to_string() + ": verdicts differ");
  }
  return result;
}

}  // namespace rootzeta
