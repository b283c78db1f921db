#include "rootzeta/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "rootzeta/errors.hpp"

namespace rootzeta {

using nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw ParameterError("unknown format: " + std::string(text));
}

namespace {

std::string_view outcome_name(Outcome o) { return o == Outcome::AllPositive ? "all_positive" : "counterexample"; }

Outcome parse_outcome(const std::string& s) {
  if (s == "all_positive") return Outcome::AllPositive;
  if (s == "counterexample") return Outcome::Counterexample;
  throw ParameterError("unknown outcome: " + s);
}

ordered_json build(const Report& report, bool timing) {
  ordered_json j;
  j["family"] = std::string(1, family_char(report.family));
  j["rank"] = report.rank;
  j["weightings"] = ordered_json::array();
  for (const auto& v : report.verdicts) {
    ordered_json w;
    w["rho"] = v.rho.to_string();
    w["distinguished"] = v.distinguished_cardinality;
    w["bala_carter"] = v.distinguished_closed_form ? ordered_json(*v.distinguished_closed_form) : ordered_json();
    w["outcome"] = outcome_name(v.outcome);
    if (v.counterexample) {
      const auto& c = *v.counterexample;
      ordered_json cj;
      cj["word"] = format_word(c.word);
      cj["gamma_index"] = c.gamma + 1;
      cj["zeta"] = c.zeta;
      if (c.twisted) cj["twisted"] = true;
      w["counterexample"] = cj;
    }
    w["scanned"] = v.stats.scanned;
    if (timing) w["wall_ms"] = v.stats.wall_ms;
    j["weightings"].push_back(w);
  }
  j["theorem_holds"] = report.theorem_holds;
  ordered_json t;
  t["weightings"] = report.totals.weightings;
  t["distinguished"] = report.totals.distinguished;
  t["counterexamples"] = report.totals.counterexamples;
  t["scanned"] = report.totals.scanned;
  if (timing) t["wall_ms"] = report.totals.wall_ms;
  j["totals"] = t;
  return j;
}

}  // namespace

std::string to_json(const Report& report) { return build(report, true).dump(2) + "\n"; }

std::string timing_free_json(const Report& report) { return build(report, false).dump(2) + "\n"; }

Report report_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    Report r;
    r.family = parse_family(j.at("family").get<std::string>());
    r.rank = j.at("rank").get<int>();
    for (const auto& w : j.at("weightings")) {
      Verdict v;
      v.rho = WeightFunction::parse(w.at("rho").get<std::string>(), r.rank);
      v.distinguished_cardinality = w.at("distinguished").get<bool>();
      if (!w.at("bala_carter").is_null()) v.distinguished_closed_form = w.at("bala_carter").get<bool>();
      v.outcome = parse_outcome(w.at("outcome").get<std::string>());
      if (w.contains("counterexample")) {
        const auto& cj = w.at("counterexample");
        Counterexample c;
        c.word = parse_word(cj.at("word").get<std::string>(), r.rank);
        c.gamma = cj.at("gamma_index").get<int>() - 1;
        c.zeta = cj.at("zeta").get<ZetaVector>();
        c.twisted = cj.value("twisted", false);
        v.counterexample = std::move(c);
      }
      v.stats.scanned = w.at("scanned").get<std::uint64_t>();
      v.stats.wall_ms = w.value("wall_ms", 0.0);
      r.verdicts.push_back(std::move(v));
    }
    r.theorem_holds = j.at("theorem_holds").get<bool>();
    r.totals = totals_of(r.verdicts);
    if (j.contains("totals")) r.totals.wall_ms = j.at("totals").value("wall_ms", r.totals.wall_ms);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed report: ") + e.what());
  }
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "family,rank,rho,distinguished,bala_carter,outcome,word,gamma_index,zeta,twisted,scanned,wall_ms\n";
  for (const auto& v : report.verdicts) {
    out << family_char(report.family) << ',' << report.rank << ',' << v.rho.to_string() << ','
        << (v.distinguished_cardinality ? "true" : "false") << ','
        << (v.distinguished_closed_form ? (*v.distinguished_closed_form ? "true" : "false") : "") << ','
        << outcome_name(v.outcome) << ',';
    if (v.counterexample) {
      const auto& c = *v.counterexample;
      out << format_word(c.word) << ',' << c.gamma + 1 << ",\"" << format_zeta(c.zeta) << "\","
          << (c.twisted ? "true" : "false");
    } else {
      out << ",,,";
    }
    out << ',' << v.stats.scanned << ',' << std::fixed << std::setprecision(3) << v.stats.wall_ms << '\n';
    out.unsetf(std::ios::floatfield);
  }
  return out.str();
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << family_char(report.family) << report.rank << ": " << report.verdicts.size() << " weightings, "
      << report.totals.distinguished << " distinguished, " << report.totals.counterexamples << " with counterexamples\n";
  for (const auto& v : report.verdicts) {
    out << "  " << v.rho.to_string() << (v.distinguished_cardinality ? "  distinguished  " : "  -              ");
    if (v.counterexample) {
      const auto& c = *v.counterexample;
      out << "w=" << (c.word.empty() ? "e" : format_word(c.word)) << (c.twisted ? " (twisted)" : "")
          << " gamma_" << c.gamma + 1 << " zeta=" << format_zeta(c.zeta);
    } else {
      out << "all positive";
    }
    out << "  scanned " << v.stats.scanned << "\n";
  }
  out << "theorem holds: " << (report.theorem_holds ? "yes" : "NO") << "\n";
  return out.str();
}

std::string emit(const Report& report, Format format) {
  switch (format) {
    case Format::Json: return to_json(report);
    case Format::Csv: return to_csv(report);
    case Format::Text: return to_text(report);
  }
  return {};
}

std::string counterexample_listing(const Report& report) {
  std::ostringstream out;
  for (const auto& v : report.verdicts) {
    if (!v.counterexample) continue;
    const auto& c = *v.counterexample;
    out << "rho=" << v.rho.to_string() << " word=\"" << format_word(c.word) << "\" gamma=" << c.gamma + 1
        << " zeta=" << format_zeta(c.zeta) << (c.twisted ? " twisted" : "") << "\n";
  }
  return out.str();
}

}  // namespace rootzeta
