#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "binsub/projection.hpp"
#include "binsub/search.hpp"
#include "binsub/sigma.hpp"

namespace binsub {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

// Self-describing analysis document: canonical input echo, every derived
// invariant, and the assumption notes needed to read them without the tool.
struct ReportDocument {
  int schema_version = kReportSchemaVersion;
  std::string source;  // "builtin:b0", a file path, or "inline"
  SigmaSpec input_spec;
  SigmaSpec canonical_spec;
  bool diagonal = false;
  AnalysisReport analysis;
  std::optional<double> timing_ms;  // omitted from determinism comparisons

  bool operator==(const ReportDocument&) const = default;
};

ReportDocument make_report(const SubgroupModel& model, std::string source,
                           const AnalyzeOptions& options = {});

ordered_json report_to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);
std::string report_to_text(const ReportDocument& doc);

// Search results serialize one way only; witnesses embed a {"sigmas": ...}
// object that the analyze input parser accepts directly.
ordered_json search_to_json(const SearchResult& result,
                            std::optional<double> timing_ms);
std::string search_to_text(const SearchResult& result,
                           std::optional<double> timing_ms);

ordered_json status_to_json(const LatticeImageStatus& status);
LatticeImageStatus status_from_json(const nlohmann::json& j);

}  // namespace binsub
