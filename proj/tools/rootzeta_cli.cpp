#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rootzeta/closedform.hpp"
#include "rootzeta/engine.hpp"
#include "rootzeta/errors.hpp"
#include "rootzeta/reduction.hpp"
#include "rootzeta/report.hpp"

using namespace rootzeta;

namespace {

struct Args {
  std::string family;
  int rank = 0;
  std::string rho;
  std::string mode = "brute";
  int jobs = 1;
  std::string out;
  std::string format = "text";
  bool long_run = false;
  bool extended = false;
  std::string checkpoint;
};

// Exit statuses
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

constexpr std::uint64_t kLongThreshold = 10'000'000;

void write_output(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw ParameterError("cannot write " + a.out);
  f << text;
}

RootSystem system_of(const Args& a) { return RootSystem::build(parse_family(a.family), a.rank); }

EngineOptions engine_options(const Args& a, const RootSystem& rs) {
  if (!a.long_run && ((rs.family() == Family::E && rs.rank() >= 7) || group_order(rs) > kLongThreshold)) {
    throw ParameterError(rs.name() + " is a long job; pass --long");
  }
  EngineOptions o;
  o.mode = parse_mode(a.mode);
  o.jobs = a.jobs;
  o.extended_d = a.extended;
  if (!a.checkpoint.empty()) {
    o.checkpoint_dir = a.checkpoint;
  } else if (a.long_run) {
    o.checkpoint_dir = "rootzeta-checkpoints";
  }
  if (a.long_run) o.progress = &std::cerr;
  return o;
}

Report run_report(const Args& a, const RootSystem& rs) {
  const auto o = engine_options(a, rs);
  if (a.rho.empty()) return verify_all(rs, o);
  Report r;
  r.family = rs.family();
  r.rank = rs.rank();
  r.verdicts.push_back(verify_weighting(rs, WeightFunction::parse(a.rho, rs.rank()), o));
  r.theorem_holds = theorem_holds(r.verdicts);
  r.totals = totals_of(r.verdicts);
  return r;
}

int cmd_verify(const Args& a) {
  const auto rs = system_of(a);
  const auto report = run_report(a, rs);
  write_output(a, emit(report, parse_format(a.format)));
  return report.theorem_holds ? kPass : kFail;
}

int cmd_counterexamples(const Args& a) {
  const auto rs = system_of(a);
  const auto report = run_report(a, rs);
  const auto format = parse_format(a.format);
  write_output(a, format == Format::Text ? counterexample_listing(report) : emit(report, format));
  return report.theorem_holds ? kPass : kFail;
}

int cmd_classify(const Args& a) {
  const auto rs = system_of(a);
  const auto format = parse_format(a.format);
  std::vector<WeightFunction> rhos;
  if (a.rho.empty()) {
    rhos = all_weightings(rs);
  } else {
    rhos.push_back(WeightFunction::parse(a.rho, rs.rank()));
  }
  bool agree = true;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream table;
  if (format == Format::Csv) table << "rho,v2,v0,distinguished,bala_carter\n";
  std::size_t count = 0;
  for (const auto& rho : rhos) {
    const auto wc = weight_classes(rs, rho);
    const bool card = is_distinguished_cardinality(rs, rho);
    std::optional<bool> closed;
    if (is_classical(rs.family())) closed = is_distinguished_closed_form(rs, rho);
    if (closed && *closed != card) agree = false;
    if (card) ++count;
    const std::string cf = closed ? (*closed ? "true" : "false") : "";
    if (format == Format::Json) {
      rows.push_back({{"rho", rho.to_string()},
                      {"v2", wc.count(2)},
                      {"v0", wc.count(0)},
                      {"distinguished", card},
                      {"bala_carter", closed ? nlohmann::ordered_json(*closed) : nlohmann::ordered_json()}});
    } else if (format == Format::Csv) {
      table << rho.to_string() << ',' << wc.count(2) << ',' << wc.count(0) << ',' << (card ? "true" : "false") << ','
            << cf << '\n';
    } else {
      table << rho.to_string() << "  #V2=" << wc.count(2) << " #V0=" << wc.count(0)
            << (card ? "  distinguished" : "  -") << (closed ? (*closed ? "  blocks: distinguished" : "  blocks: -") : "")
            << '\n';
    }
  }
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["family"] = std::string(1, family_char(rs.family()));
    j["rank"] = rs.rank();
    j["weightings"] = rows;
    j["distinguished"] = count;
    j["agree"] = agree;
    write_output(a, j.dump(2) + "\n");
  } else {
    if (format == Format::Text) table << rs.name() << ": " << count << " of " << rhos.size() << " distinguished\n";
    write_output(a, table.str());
  }
  return agree ? kPass : kFail;
}

int cmd_crosscheck(const Args& a) {
  const auto rs = system_of(a);
  const auto r = crosscheck(rs, a.jobs);
  std::ostringstream out;
  out << rs.name() << ": " << r.comparisons << " comparisons, " << (r.ok ? "all agree" : "MISMATCH") << "\n";
  if (!r.ok) out << "first mismatch: " << r.first_mismatch << "\n";
  write_output(a, out.str());
  return r.ok ? kPass : kFail;
}

int cmd_reduction(const Args& a) {
  const auto reduction = build_reduction(parse_family(a.family), a.rank);
  const auto s = check_reduction(reduction);
  std::ostringstream out;
  auto line = [&](const char* name, bool ok) { out << "  " << name << ": " << (ok ? "holds" : "FAILS") << "\n"; };
  out << reduction.map.target().name() << " from " << reduction.map.source().name() << ", " << s.elements
      << " elements, " << s.weightings << " weightings\n";
  line("positive", s.positive);
  line("root-surjective", s.root_surjective);
  line("compatible", s.compatible);
  line("homomorphic on generators", s.homomorphic);
  line("fibers commute with |.|", s.abs_lemma);
  line("fibers respect weights", s.weight_lemma);
  line("fiber-weighted zeta identity", s.score_identity);
  if (s.coefficient_identity) {
    line("coefficient identity", *s.coefficient_identity);
  } else {
    out << "  coefficient identity: skipped (fiber sizes vary)\n";
  }
  write_output(a, out.str());
  return s.all_hold() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positivity of zeta(w) over Weyl groups versus the distinguished criterion"};
  app.require_subcommand(1);
  Args a;

  auto add_common = [&](CLI::App* sub, bool rho) {
    sub->add_option("--family", a.family, "A, B, C, D, E, F or G")->required()->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
    sub->add_option("--rank", a.rank, "rank")->required()->check(CLI::PositiveNumber);
    sub->add_option("--out", a.out, "write output here instead of stdout");
    sub->add_option("--format", a.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
    if (rho) sub->add_option("--rho", a.rho, "weighting as a digit string, gamma_1 first");
  };
  auto add_scan = [&](CLI::App* sub) {
    sub->add_option("--mode", a.mode, "brute, closedform or both")->check(CLI::IsMember({"brute", "closedform", "both"}));
    sub->add_flag("--long", a.long_run, "allow E7, E8 and other long scans; checkpoints by default");
    sub->add_option("--checkpoint", a.checkpoint, "checkpoint directory");
    sub->add_flag("--extended", a.extended, "type D: scan the extended group, skipping gamma_{n-1}");
  };

  auto* verify = app.add_subcommand("verify", "check the equivalence for every weighting (or --rho)");
  add_common(verify, true);
  add_scan(verify);
  auto* classify = app.add_subcommand("classify", "distinguished weightings by cardinality and by block sizes");
  add_common(classify, true);
  auto* counterexamples = app.add_subcommand("counterexamples", "canonical counterexample for each weighting");
  add_common(counterexamples, true);
  add_scan(counterexamples);
  auto* cross = app.add_subcommand("crosscheck", "closed forms against literal zeta (classical types)");
  add_common(cross, false);
  auto* reduction = app.add_subcommand("reduction-check", "properties of the map from type A (B, C, D, G)");
  add_common(reduction, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(a);
    if (*classify) return cmd_classify(a);
    if (*counterexamples) return cmd_counterexamples(a);
    if (*cross) return cmd_crosscheck(a);
    if (*reduction) return cmd_reduction(a);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const UnsupportedOperation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Discrepancy& e) {
    std::cerr << "discrepancy: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
