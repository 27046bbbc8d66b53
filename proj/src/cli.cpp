#include "binsub/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "binsub/io.hpp"
#include "binsub/nilpotent.hpp"
#include "binsub/report.hpp"
#include "binsub/search.hpp"

namespace binsub {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

double default_budget() {
  const char* env = std::getenv("BINSUB_BUDGET");
  if (!env) return 0.0;
  try {
    return std::stod(env);
  } catch (const std::exception&) {
    return 0.0;
  }
}

struct CommonFlags {
  std::string format = "text";
  int threads = 1;
  double budget = default_budget();
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--threads", flags.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", flags.budget,
                  "Wall-time budget in seconds (0 = unlimited)");
  cmd->add_flag("--timing", flags.timing, "Include wall time in the output");
}

struct BuiltinFlags {
  std::string name;
  int m = 0;
};

SubgroupModel resolve_model(const std::string& input_path,
                            const BuiltinFlags& builtin, bool diagonal,
                            int r_flag, std::string& source) {
  if (!builtin.name.empty()) {
    if (builtin.m == 0) {
      throw Error(ErrorCode::BadArgument, "--builtin requires --m");
    }
    const int r = r_flag > 0 ? r_flag : 1;
    source = "builtin:" + builtin.name;
    if (builtin.name == "b0") {
      SubgroupModel model = builtin_b0(builtin.m, r);
      model.diagonal = diagonal;
      return model;
    }
    if (builtin.name == "b1") {
      return diagonal ? builtin_b1_diagonal(builtin.m, r)
                      : builtin_b1(builtin.m, r);
    }
    throw Error(ErrorCode::BadArgument,
                "unknown builtin '" + builtin.name + "' (use b0 or b1)");
  }
  if (input_path.empty()) {
    throw Error(ErrorCode::BadArgument,
                "provide an input file or --builtin NAME");
  }
  source = input_path;
  return load_sigma_file(input_path, r_flag, diagonal);
}

bool profile_incomplete(const AnalysisReport& report) {
  for (const auto& s : report.profile.by_k) {
    if (!s.known) return true;
  }
  return false;
}

int run_analyze(const std::string& input_path, const BuiltinFlags& builtin,
                bool diagonal, int r_flag, int max_k,
                const CommonFlags& flags, std::ostream& out) {
  std::string source;
  SubgroupModel model =
      resolve_model(input_path, builtin, diagonal, r_flag, source);

  AnalyzeOptions options;
  options.max_k = max_k;
  options.threads = flags.threads;
  options.budget_seconds = flags.budget;

  const auto t0 = std::chrono::steady_clock::now();
  ReportDocument doc = make_report(model, source, options);
  if (flags.timing) {
    doc.timing_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  }
  if (flags.format == "json") {
    out << report_to_json(doc).dump(2) << '\n';
  } else {
    out << report_to_text(doc);
  }
  return profile_incomplete(doc.analysis) ? kExitBudget : kExitOk;
}

int run_search_cmd(SearchQuery query, const CommonFlags& flags,
                   std::ostream& out) {
  query.threads = flags.threads;
  query.budget_seconds = flags.budget;
  const auto t0 = std::chrono::steady_clock::now();
  SearchResult result = run_search(query);
  std::optional<double> timing;
  if (flags.timing) {
    timing = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
  }
  if (flags.format == "json") {
    out << search_to_json(result, timing).dump(2) << '\n';
  } else {
    out << search_to_text(result, timing);
  }
  return result.budget_exhausted ? kExitBudget : kExitOk;
}

void print_weights(const SubgroupModel& model, const std::string& source,
                   const CommonFlags& flags, std::ostream& out) {
  F2Summary codes = f2_profile(model, /*max_k=*/2);
  if (flags.format == "json") {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["source"] = source;
    j["m"] = model.m();
    j["diagonal"] = model.diagonal;
    j["k_f2"] = codes.k_f2;
    ordered_json per_letter = ordered_json::array();
    for (const auto& c : codes.per_letter) {
      ordered_json e;
      e["length"] = c.length;
      e["dimension"] = c.dimension;
      e["dual_dimension"] = c.dual_dimension;
      e["code_weight"] = c.code_weight ? ordered_json(*c.code_weight) : ordered_json();
      e["dual_weight"] = c.dual_weight ? ordered_json(*c.dual_weight) : ordered_json();
      per_letter.push_back(std::move(e));
    }
    j["per_letter"] = std::move(per_letter);
    out << j.dump(2) << '\n';
    return;
  }
  out << "source: " << source << '\n';
  out << "k_f2: " << codes.k_f2 << '\n';
  for (size_t i = 0; i < codes.per_letter.size(); ++i) {
    const auto& c = codes.per_letter[i];
    out << "letter " << (i + 1) << ": [" << c.length << "," << c.dimension
        << "] dual_dimension=" << c.dual_dimension << " code_weight=";
    if (c.code_weight) out << *c.code_weight;
    else out << "-";
    out << " dual_weight=";
    if (c.dual_weight) out << *c.dual_weight;
    else out << "-";
    out << '\n';
  }
}

void print_matrix_rows(const BinaryArray& array, std::ostream& out) {
  for (int j = 0; j < array.rows; ++j) {
    for (int k = 0; k < array.cols; ++k) {
      if (k) out << ' ';
      out << (array.bit(j, k) ? '1' : '0');
    }
    out << '\n';
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Exact analyzer and search tool for binary subgroups of "
               "direct products of free groups"};
  app.require_subcommand(1);

  // analyze
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Analyze a sigma specification or a builtin family");
  std::string analyze_input;
  BuiltinFlags analyze_builtin;
  bool analyze_diagonal = false;
  int analyze_r = 0;
  int analyze_max_k = 0;
  CommonFlags analyze_flags;
  analyze_cmd->add_option("input", analyze_input,
                          "Sigma file (text or JSON), or - for stdin");
  analyze_cmd->add_option("--builtin", analyze_builtin.name,
                          "Builtin family: b0 or b1");
  analyze_cmd->add_option("--m", analyze_builtin.m, "Number of factors");
  analyze_cmd->add_option("--r", analyze_r,
                          "Letters (builtin or single-line input)")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--diagonal", analyze_diagonal,
                        "Adjoin the diagonal generators");
  analyze_cmd->add_option("--max-k", analyze_max_k,
                          "Only scan tuple sizes up to this k");
  add_common(analyze_cmd, analyze_flags);

  // search
  auto* search_cmd =
      app.add_subcommand("search", "Search the space of sigma lists");
  SearchQuery query;
  std::string mode_name = "min-rows";
  bool target_virtual = false;
  bool target_f2 = false;
  bool ordered = false;
  CommonFlags search_flags;
  search_cmd->add_option("--m", query.m, "Number of factors")->required();
  search_cmd->add_option("--k", query.target_k, "Tuple size target")
      ->required();
  search_cmd->add_option("--mode", mode_name, "min-rows, count, or enumerate")
      ->check(CLI::IsMember({"min-rows", "count", "enumerate"}));
  search_cmd->add_option("--l", query.l, "Row count (count/enumerate)");
  search_cmd->add_option("--max-l", query.max_l,
                         "Row-count cap for min-rows");
  search_cmd->add_option("--limit", query.limit,
                         "Witness cap for enumerate");
  search_cmd->add_flag("--diagonal", query.diagonal,
                       "Adjoin the diagonal generators");
  search_cmd->add_flag("--virtual", target_virtual,
                       "Require finite index instead of surjection");
  search_cmd->add_flag("--f2", target_f2, "Check surjectivity over F2 only");
  search_cmd->add_flag("--ordered", ordered,
                       "Report ordered counts as the primary count");
  add_common(search_cmd, search_flags);

  // code
  auto* code_cmd =
      app.add_subcommand("code", "Convert between codes and sigma lists");
  code_cmd->require_subcommand(1);
  auto* weights_cmd = code_cmd->add_subcommand(
      "weights", "Code and dual-code weights of a model");
  std::string weights_input;
  BuiltinFlags weights_builtin;
  bool weights_diagonal = false;
  int weights_r = 0;
  CommonFlags weights_flags;
  weights_cmd->add_option("input", weights_input, "Sigma file or -");
  weights_cmd->add_option("--builtin", weights_builtin.name, "b0 or b1");
  weights_cmd->add_option("--m", weights_builtin.m, "Number of factors");
  weights_cmd->add_option("--r", weights_r, "Letters")
      ->check(CLI::PositiveNumber);
  weights_cmd->add_flag("--diagonal", weights_diagonal,
                        "Adjoin the diagonal generators");
  add_common(weights_cmd, weights_flags);

  auto* from_sigma_cmd = code_cmd->add_subcommand(
      "from-sigma", "Print the binary array of a sigma list");
  std::string from_sigma_values;
  from_sigma_cmd->add_option("sigma", from_sigma_values, "e.g. 1,2,4")
      ->required();

  auto* to_sigma_cmd = code_cmd->add_subcommand(
      "to-sigma", "Read a 0/1 matrix and print the sigma list it defines");
  std::string to_sigma_input = "-";
  to_sigma_cmd->add_option("input", to_sigma_input, "Matrix file or -");

  // table
  auto* table_cmd =
      app.add_subcommand("table", "Print Witt / Hirsch / p_c values");
  std::vector<int> witt_args, hirsch_args, pc_args;
  table_cmd->add_option("--witt", witt_args, "K N: W_1(K)..W_N(K)")
      ->expected(2);
  table_cmd->add_option("--hirsch", hirsch_args, "K C: h(K,1)..h(K,C)")
      ->expected(2);
  table_cmd->add_option("--pc", pc_args, "C T: p_C(T)")->expected(2);

  std::vector<const char*> argv;
  argv.push_back("binsub");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*analyze_cmd) {
      return run_analyze(analyze_input, analyze_builtin, analyze_diagonal,
                         analyze_r, analyze_max_k, analyze_flags, out);
    }
    if (*search_cmd) {
      if (mode_name == "min-rows") query.mode = SearchMode::MinRows;
      else if (mode_name == "count") query.mode = SearchMode::Count;
      else query.mode = SearchMode::Enumerate;
      if (target_virtual && target_f2) {
        throw Error(ErrorCode::BadArgument,
                    "--virtual and --f2 are mutually exclusive");
      }
      if (target_virtual) query.target = SurjTarget::VirtualOverZ;
      if (target_f2) query.target = SurjTarget::OverF2;
      query.canonical_only = !ordered;
      return run_search_cmd(query, search_flags, out);
    }
    if (*weights_cmd) {
      std::string source;
      SubgroupModel model = resolve_model(weights_input, weights_builtin,
                                          weights_diagonal, weights_r, source);
      print_weights(model, source, weights_flags, out);
      return kExitOk;
    }
    if (*from_sigma_cmd) {
      auto values = parse_csv_integers(from_sigma_values);
      std::vector<std::vector<std::int64_t>> raw{values};
      SigmaSpec spec = validate_spec(raw);
      print_matrix_rows(build_array(spec.sigmas[0]), out);
      return kExitOk;
    }
    if (*to_sigma_cmd) {
      int length = 0;
      auto rows = parse_bit_matrix(read_file_or_stdin(to_sigma_input), length);
      SigmaSpec spec = sigma_from_code(length, rows);
      for (size_t k = 0; k < spec.sigmas[0].size(); ++k) {
        if (k) out << ',';
        out << spec.sigmas[0][k];
      }
      out << '\n';
      return kExitOk;
    }
    if (*table_cmd) {
      if (!witt_args.empty()) {
        for (int n = 1; n <= witt_args[1]; ++n) {
          if (n > 1) out << ',';
          out << witt(n, witt_args[0]).str();
        }
        out << '\n';
      }
      if (!hirsch_args.empty()) {
        for (int c = 1; c <= hirsch_args[1]; ++c) {
          if (c > 1) out << ',';
          out << hirsch(hirsch_args[0], c).str();
        }
        out << '\n';
      }
      if (!pc_args.empty()) {
        BigRat v = poly_pc(pc_args[0], BigRat(pc_args[1]));
        if (boost::multiprecision::denominator(v) == 1) {
          out << boost::multiprecision::numerator(v).str() << '\n';
        } else {
          out << boost::multiprecision::numerator(v).str() << '/'
              << boost::multiprecision::denominator(v).str() << '\n';
        }
      }
      if (witt_args.empty() && hirsch_args.empty() && pc_args.empty()) {
        throw Error(ErrorCode::BadArgument,
                    "table needs one of --witt, --hirsch, --pc");
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return kExitValidation;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "error: no subcommand selected\n";
  return kExitValidation;
}

}  // namespace binsub
