#include "binsub/report.hpp"

#include <sstream>

namespace binsub {

namespace {

std::string join_values(const std::vector<std::uint64_t>& values) {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

ordered_json sigmas_to_json(const SigmaSpec& spec) {
  ordered_json rows = ordered_json::array();
  for (const auto& s : spec.sigmas) rows.push_back(s);
  return rows;
}

std::vector<std::vector<std::uint64_t>> sigmas_from_json(
    const nlohmann::json& j) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& row : j) out.push_back(row.get<std::vector<std::uint64_t>>());
  return out;
}

ordered_json witness_to_json(const FailureWitness& w) {
  ordered_json j;
  ordered_json subset = ordered_json::array();
  for (int c : w.subset) subset.push_back(c + 1);  // 1-based factors outside
  j["subset"] = subset;
  j["letter"] = w.letter + 1;
  j["status"] = status_to_json(w.status);
  return j;
}

FailureWitness witness_from_json(const nlohmann::json& j) {
  FailureWitness w;
  for (const auto& c : j.at("subset")) w.subset.push_back(c.get<int>() - 1);
  w.letter = j.at("letter").get<int>() - 1;
  w.status = status_from_json(j.at("status"));
  return w;
}

ordered_json profile_to_json(const SurjectionProfile& p) {
  ordered_json j;
  j["m"] = p.m;
  j["max_k"] = p.max_k;
  ordered_json by_k = ordered_json::array();
  for (const auto& s : p.by_k) {
    ordered_json e;
    e["k"] = s.k;
    e["known"] = s.known;
    e["onto_all"] = s.onto_all;
    e["virtual_all"] = s.virtual_all;
    e["witness"] = s.witness ? witness_to_json(*s.witness) : ordered_json();
    by_k.push_back(std::move(e));
  }
  j["by_k"] = std::move(by_k);
  return j;
}

SurjectionProfile profile_from_json(const nlohmann::json& j) {
  SurjectionProfile p;
  p.m = j.at("m").get<int>();
  p.max_k = j.at("max_k").get<int>();
  for (const auto& e : j.at("by_k")) {
    KtupleSummary s;
    s.k = e.at("k").get<int>();
    s.known = e.at("known").get<bool>();
    s.onto_all = e.at("onto_all").get<bool>();
    s.virtual_all = e.at("virtual_all").get<bool>();
    if (!e.at("witness").is_null()) s.witness = witness_from_json(e.at("witness"));
    p.by_k.push_back(std::move(s));
  }
  return p;
}

ordered_json codes_to_json(const F2Summary& c) {
  ordered_json j;
  j["k_f2"] = c.k_f2;
  ordered_json per_letter = ordered_json::array();
  for (const auto& s : c.per_letter) {
    ordered_json e;
    e["length"] = s.length;
    e["dimension"] = s.dimension;
    e["dual_dimension"] = s.dual_dimension;
    e["code_weight"] = s.code_weight ? ordered_json(*s.code_weight) : ordered_json();
    e["dual_weight"] = s.dual_weight ? ordered_json(*s.dual_weight) : ordered_json();
    per_letter.push_back(std::move(e));
  }
  j["per_letter"] = std::move(per_letter);
  ordered_json by_k = ordered_json::array();
  for (const auto& s : c.by_k) {
    ordered_json e;
    e["k"] = s.k;
    e["onto_all"] = s.onto_all;
    by_k.push_back(std::move(e));
  }
  j["f2_onto_by_k"] = std::move(by_k);
  return j;
}

F2Summary codes_from_json(const nlohmann::json& j) {
  F2Summary c;
  c.k_f2 = j.at("k_f2").get<int>();
  for (const auto& e : j.at("per_letter")) {
    LetterCodeSummary s;
    s.length = e.at("length").get<int>();
    s.dimension = e.at("dimension").get<int>();
    s.dual_dimension = e.at("dual_dimension").get<int>();
    if (!e.at("code_weight").is_null()) s.code_weight = e.at("code_weight").get<int>();
    if (!e.at("dual_weight").is_null()) s.dual_weight = e.at("dual_weight").get<int>();
    c.per_letter.push_back(s);
  }
  for (const auto& e : j.at("f2_onto_by_k")) {
    c.by_k.push_back({e.at("k").get<int>(), e.at("onto_all").get<bool>()});
  }
  return c;
}

ordered_json wfp_to_json(const WfpLevel& w) {
  if (w.all) return ordered_json("all");
  return ordered_json(w.k);
}

WfpLevel wfp_from_json(const nlohmann::json& j, int m) {
  WfpLevel w;
  if (j.is_string()) {
    w.all = true;
    w.k = m;
  } else {
    w.k = j.get<int>();
    w.all = (w.k == m);
  }
  return w;
}

}  // namespace

ordered_json status_to_json(const LatticeImageStatus& status) {
  ordered_json j;
  switch (status.kind) {
    case LatticeImageStatus::Kind::Onto: j["kind"] = "onto"; break;
    case LatticeImageStatus::Kind::FiniteIndex: j["kind"] = "finite_index"; break;
    case LatticeImageStatus::Kind::InfiniteIndex: j["kind"] = "infinite_index"; break;
  }
  j["rank"] = status.rank;
  j["index"] = status.index.str();
  return j;
}

LatticeImageStatus status_from_json(const nlohmann::json& j) {
  LatticeImageStatus s;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "onto") s.kind = LatticeImageStatus::Kind::Onto;
  else if (kind == "finite_index") s.kind = LatticeImageStatus::Kind::FiniteIndex;
  else if (kind == "infinite_index") s.kind = LatticeImageStatus::Kind::InfiniteIndex;
  else throw Error(ErrorCode::BadArgument, "unknown status kind: " + kind);
  s.rank = j.at("rank").get<int>();
  s.index = BigInt(j.at("index").get<std::string>());
  return s;
}

ReportDocument make_report(const SubgroupModel& model, std::string source,
                           const AnalyzeOptions& options) {
  ReportDocument doc;
  doc.source = std::move(source);
  doc.input_spec = model.spec;
  doc.canonical_spec = canonicalize(model.spec);
  doc.diagonal = model.diagonal;
  doc.analysis = analyze(model, options);
  return doc;
}

ordered_json report_to_json(const ReportDocument& doc) {
  ordered_json j;
  j["schema_version"] = doc.schema_version;
  ordered_json input;
  input["source"] = doc.source;
  input["m"] = doc.input_spec.m;
  input["r"] = doc.input_spec.letters();
  input["diagonal"] = doc.diagonal;
  input["sigmas"] = sigmas_to_json(doc.input_spec);
  input["canonical_sigmas"] = sigmas_to_json(doc.canonical_spec);
  j["input"] = std::move(input);

  const AnalysisReport& a = doc.analysis;
  ordered_json an;
  an["generator_count"] = a.generator_count;
  an["h1_rank_lower_bound"] = a.h1_rank_lower_bound;
  an["rank_bound_attained"] = a.rank_bound_attained;
  an["wfp_max"] = wfp_to_json(a.wfp_max);
  an["conilpotency_upper"] = a.conilpotency_upper;
  an["conilpotency_excluded"] =
      a.conilpotency_excluded ? ordered_json(*a.conilpotency_excluded)
                              : ordered_json();
  an["profile"] = profile_to_json(a.profile);
  an["codes"] = codes_to_json(a.codes);
  an["assumption_notes"] = a.assumption_notes;
  j["analysis"] = std::move(an);

  j["timing_ms"] = doc.timing_ms ? ordered_json(*doc.timing_ms) : ordered_json();
  return j;
}

ReportDocument report_from_json(const nlohmann::json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  const auto& input = j.at("input");
  doc.source = input.at("source").get<std::string>();
  doc.input_spec.m = input.at("m").get<int>();
  doc.input_spec.sigmas = sigmas_from_json(input.at("sigmas"));
  doc.canonical_spec.m = doc.input_spec.m;
  doc.canonical_spec.sigmas = sigmas_from_json(input.at("canonical_sigmas"));
  doc.diagonal = input.at("diagonal").get<bool>();

  const auto& an = j.at("analysis");
  AnalysisReport& a = doc.analysis;
  a.m = doc.input_spec.m;
  a.letters = doc.input_spec.letters();
  a.generator_count = an.at("generator_count").get<int>();
  a.h1_rank_lower_bound = an.at("h1_rank_lower_bound").get<int>();
  a.rank_bound_attained = an.at("rank_bound_attained").get<bool>();
  a.wfp_max = wfp_from_json(an.at("wfp_max"), a.m);
  a.conilpotency_upper = an.at("conilpotency_upper").get<int>();
  if (!an.at("conilpotency_excluded").is_null()) {
    a.conilpotency_excluded = an.at("conilpotency_excluded").get<int>();
  }
  a.profile = profile_from_json(an.at("profile"));
  a.codes = codes_from_json(an.at("codes"));
  a.assumption_notes =
      an.at("assumption_notes").get<std::vector<std::string>>();

  if (!j.at("timing_ms").is_null()) doc.timing_ms = j.at("timing_ms").get<double>();
  return doc;
}

namespace {

std::string subset_display(const std::vector<int>& subset) {
  std::string s = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(subset[i] + 1);
  }
  s += '}';
  return s;
}

void append_timing(std::ostringstream& os, std::optional<double> timing_ms) {
  os << "timing_ms: ";
  if (timing_ms) os << *timing_ms;
  else os << "-";
  os << '\n';
}

}  // namespace

std::string report_to_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "binsub report schema=" << doc.schema_version << '\n';
  os << "source: " << doc.source << '\n';
  os << "input: m=" << doc.input_spec.m << " r=" << doc.input_spec.letters()
     << " diagonal=" << yesno(doc.diagonal) << '\n';
  for (size_t i = 0; i < doc.input_spec.sigmas.size(); ++i) {
    os << "sigma " << (i + 1) << ": " << join_values(doc.input_spec.sigmas[i])
       << '\n';
  }
  for (size_t i = 0; i < doc.canonical_spec.sigmas.size(); ++i) {
    os << "canonical sigma " << (i + 1) << ": "
       << join_values(doc.canonical_spec.sigmas[i]) << '\n';
  }
  const AnalysisReport& a = doc.analysis;
  os << "generator_count: " << a.generator_count << '\n';
  os << "h1_rank_lower_bound: " << a.h1_rank_lower_bound << '\n';
  os << "rank_bound_attained: " << yesno(a.rank_bound_attained) << '\n';
  os << "wfp_max: ";
  if (a.wfp_max.all) os << "all";
  else os << a.wfp_max.k;
  os << '\n';
  os << "conilpotency_upper: " << a.conilpotency_upper << '\n';
  os << "conilpotency_excluded: ";
  if (a.conilpotency_excluded) os << *a.conilpotency_excluded;
  else os << "-";
  os << '\n';
  os << "k_f2: " << a.codes.k_f2 << '\n';
  os << "profile:" << '\n';
  for (const auto& s : a.profile.by_k) {
    os << "  k=" << s.k;
    if (!s.known) {
      os << " UNKNOWN";
      if (s.witness) {
        os << " witness=" << subset_display(s.witness->subset) << " letter="
           << (s.witness->letter + 1) << " status="
           << s.witness->status.to_string();
      }
      os << '\n';
      continue;
    }
    os << " onto_all=" << yesno(s.onto_all)
       << " virtual_all=" << yesno(s.virtual_all);
    if (s.witness) {
      os << " witness=" << subset_display(s.witness->subset) << " letter="
         << (s.witness->letter + 1) << " status="
         << s.witness->status.to_string();
    }
    os << '\n';
  }
  os << "codes:" << '\n';
  for (size_t i = 0; i < a.codes.per_letter.size(); ++i) {
    const auto& c = a.codes.per_letter[i];
    os << "  letter " << (i + 1) << ": [" << c.length << "," << c.dimension
       << "] dual_dimension=" << c.dual_dimension << " code_weight=";
    if (c.code_weight) os << *c.code_weight;
    else os << "-";
    os << " dual_weight=";
    if (c.dual_weight) os << *c.dual_weight;
    else os << "-";
    os << '\n';
  }
  os << "f2_onto_by_k:";
  for (const auto& s : a.codes.by_k) {
    os << ' ' << s.k << "=" << yesno(s.onto_all);
  }
  os << '\n';
  os << "assumptions:" << '\n';
  for (const auto& note : a.assumption_notes) os << "  - " << note << '\n';
  append_timing(os, doc.timing_ms);
  return os.str();
}

namespace {

const char* mode_name(SearchMode mode) {
  switch (mode) {
    case SearchMode::MinRows: return "min-rows";
    case SearchMode::Count: return "count";
    case SearchMode::Enumerate: return "enumerate";
  }
  return "?";
}

const char* target_name(SurjTarget target) {
  switch (target) {
    case SurjTarget::OverZ: return "z";
    case SurjTarget::OverF2: return "f2";
    case SurjTarget::VirtualOverZ: return "virtual-z";
  }
  return "?";
}

ordered_json witness_summary_to_json(const SearchWitnessSummary& s) {
  ordered_json j;
  j["generator_count"] = s.generator_count;
  j["wfp_max"] = s.wfp_max.all ? ordered_json("all") : ordered_json(s.wfp_max.k);
  j["conilpotency_upper"] = s.conilpotency_upper;
  j["k_f2"] = s.k_f2;
  return j;
}

}  // namespace

ordered_json search_to_json(const SearchResult& result,
                            std::optional<double> timing_ms) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  ordered_json q;
  q["m"] = result.query.m;
  q["k"] = result.query.target_k;
  q["mode"] = mode_name(result.query.mode);
  q["l"] = result.query.mode == SearchMode::MinRows ? ordered_json()
                                                    : ordered_json(result.query.l);
  q["limit"] = result.query.limit;
  q["diagonal"] = result.query.diagonal;
  q["target"] = target_name(result.query.target);
  q["canonical_only"] = result.query.canonical_only;
  j["query"] = std::move(q);

  ordered_json r;
  r["optimal_l"] =
      result.optimal_l ? ordered_json(*result.optimal_l) : ordered_json();
  r["count_canonical"] = result.count_canonical.str();
  r["count_ordered"] = result.count_ordered.str();
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : result.witnesses) {
    ordered_json e;
    e["sigmas"] = ordered_json::array({w.sigma});
    e["diagonal"] = result.query.diagonal;
    e["summary"] = witness_summary_to_json(w.summary);
    witnesses.push_back(std::move(e));
  }
  r["witnesses"] = std::move(witnesses);
  r["nodes_explored"] = result.nodes_explored;
  r["budget_exhausted"] = result.budget_exhausted;
  j["result"] = std::move(r);
  j["timing_ms"] = timing_ms ? ordered_json(*timing_ms) : ordered_json();
  return j;
}

std::string search_to_text(const SearchResult& result,
                           std::optional<double> timing_ms) {
  std::ostringstream os;
  os << "binsub search schema=" << kReportSchemaVersion << '\n';
  os << "query: m=" << result.query.m << " k=" << result.query.target_k
     << " mode=" << mode_name(result.query.mode);
  if (result.query.mode != SearchMode::MinRows) os << " l=" << result.query.l;
  os << " target=" << target_name(result.query.target)
     << " diagonal=" << yesno(result.query.diagonal)
     << " canonical_only=" << yesno(result.query.canonical_only) << '\n';
  os << "optimal_l: ";
  if (result.optimal_l) os << *result.optimal_l;
  else os << "-";
  os << '\n';
  os << "count_canonical: " << result.count_canonical.str() << '\n';
  os << "count_ordered: " << result.count_ordered.str() << '\n';
  for (size_t i = 0; i < result.witnesses.size(); ++i) {
    const auto& w = result.witnesses[i];
    os << "witness " << (i + 1) << ": sigma=" << join_values(w.sigma)
       << " generator_count=" << w.summary.generator_count << " wfp_max=";
    if (w.summary.wfp_max.all) os << "all";
    else os << w.summary.wfp_max.k;
    os << " conilpotency_upper=" << w.summary.conilpotency_upper
       << " k_f2=" << w.summary.k_f2 << '\n';
  }
  os << "nodes_explored: " << result.nodes_explored << '\n';
  os << "budget_exhausted: " << yesno(result.budget_exhausted) << '\n';
  append_timing(os, timing_ms);
  return os.str();
}

}  // namespace binsub
