#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "binsub/io.hpp"
#include "binsub/nilpotent.hpp"
#include "binsub/report.hpp"
#include "binsub/search.hpp"

namespace py = pybind11;
using namespace binsub;

namespace {

// arbitrary-precision values cross the boundary as decimal strings; the
// python wrapper turns them back into int / Fraction
py::object big_to_py(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

SubgroupModel model_from_lists(
    const std::vector<std::vector<std::int64_t>>& sigmas, bool diagonal) {
  return make_model(validate_spec(sigmas), diagonal);
}

SubgroupModel resolve_builtin(const std::string& name, int m, int r,
                              bool diagonal) {
  if (name == "b0") {
    SubgroupModel model = builtin_b0(m, r);
    model.diagonal = diagonal;
    return model;
  }
  if (name == "b1") {
    return diagonal ? builtin_b1_diagonal(m, r) : builtin_b1(m, r);
  }
  throw Error(ErrorCode::BadArgument, "unknown builtin '" + name + "'");
}

AnalyzeOptions make_options(int max_k, int threads, double budget) {
  AnalyzeOptions options;
  options.max_k = max_k;
  options.threads = threads;
  options.budget_seconds = budget;
  return options;
}

std::string analyze_to_json(const SubgroupModel& model,
                            const std::string& source,
                            const AnalyzeOptions& options) {
  return report_to_json(make_report(model, source, options)).dump();
}

SurjTarget target_from_name(const std::string& name) {
  if (name == "z") return SurjTarget::OverZ;
  if (name == "f2") return SurjTarget::OverF2;
  if (name == "virtual-z" || name == "virtual") return SurjTarget::VirtualOverZ;
  throw Error(ErrorCode::BadArgument, "unknown target '" + name + "'");
}

SearchMode mode_from_name(const std::string& name) {
  if (name == "min-rows") return SearchMode::MinRows;
  if (name == "count") return SearchMode::Count;
  if (name == "enumerate") return SearchMode::Enumerate;
  throw Error(ErrorCode::BadArgument, "unknown mode '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact analysis of binary subgroups of direct products";

  py::register_exception<Error>(m, "BinsubError");
  py::register_exception<InternalError>(m, "BinsubInternalError");

  m.def("build_array",
        [](const std::vector<std::int64_t>& sigma) {
          std::vector<std::uint64_t> values;
          for (std::int64_t v : sigma) {
            if (v < 1) throw Error(ErrorCode::NonPositiveEntry, "values must be >= 1");
            values.push_back(static_cast<std::uint64_t>(v));
          }
          for (size_t a = 0; a < values.size(); ++a) {
            for (size_t b = a + 1; b < values.size(); ++b) {
              if (values[a] == values[b]) {
                throw Error(ErrorCode::DuplicateEntry,
                            "repeated value " + std::to_string(values[a]),
                            static_cast<long long>(a),
                            static_cast<long long>(b));
              }
            }
          }
          BinaryArray a = build_array(values);
          std::vector<std::vector<int>> rows(static_cast<size_t>(a.rows));
          for (int j = 0; j < a.rows; ++j) {
            for (int k = 0; k < a.cols; ++k) {
              rows[static_cast<size_t>(j)].push_back(a.bit(j, k) ? 1 : 0);
            }
          }
          return rows;
        },
        py::arg("sigma"),
        "Binary-expansion array of a list of distinct positive integers, "
        "as rows of 0/1 (units row first).");

  m.def("canonicalize",
        [](const std::vector<std::vector<std::int64_t>>& sigmas) {
          SigmaSpec spec = canonicalize(validate_spec(sigmas));
          return spec.sigmas;
        },
        py::arg("sigmas"));

  m.def("analyze_json",
        [](const std::vector<std::vector<std::int64_t>>& sigmas, bool diagonal,
           int max_k, int threads, double budget) {
          return analyze_to_json(model_from_lists(sigmas, diagonal), "inline",
                                 make_options(max_k, threads, budget));
        },
        py::arg("sigmas"), py::arg("diagonal") = false, py::arg("max_k") = 0,
        py::arg("threads") = 1, py::arg("budget") = 0.0,
        "Full analysis report as a JSON string.");

  m.def("analyze_builtin_json",
        [](const std::string& name, int m_, int r, bool diagonal, int max_k,
           int threads, double budget) {
          return analyze_to_json(resolve_builtin(name, m_, r, diagonal),
                                 "builtin:" + name,
                                 make_options(max_k, threads, budget));
        },
        py::arg("name"), py::arg("m"), py::arg("r") = 1,
        py::arg("diagonal") = false, py::arg("max_k") = 0,
        py::arg("threads") = 1, py::arg("budget") = 0.0);

  m.def("search_json",
        [](int m_, int k, const std::string& mode, int l, long long limit,
           bool diagonal, const std::string& target, bool ordered, int threads,
           double budget) {
          SearchQuery query;
          query.m = m_;
          query.target_k = k;
          query.mode = mode_from_name(mode);
          query.l = l;
          query.limit = limit;
          query.diagonal = diagonal;
          query.target = target_from_name(target);
          query.canonical_only = !ordered;
          query.threads = threads;
          query.budget_seconds = budget;
          return search_to_json(run_search(query), std::nullopt).dump();
        },
        py::arg("m"), py::arg("k"), py::arg("mode") = "min-rows",
        py::arg("l") = 0, py::arg("limit") = 10, py::arg("diagonal") = false,
        py::arg("target") = "z", py::arg("ordered") = false,
        py::arg("threads") = 1, py::arg("budget") = 0.0);

  m.def("mobius", [](std::uint64_t n) { return mobius(n); }, py::arg("n"));
  m.def("witt", [](int n, int k) { return big_to_py(witt(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("hirsch", [](int k, int c) { return big_to_py(hirsch(k, c)); },
        py::arg("k"), py::arg("c"));
  m.def("max_m_for", [](int d, int c) { return big_to_py(max_m_for(d, c)); },
        py::arg("d"), py::arg("c"));
  m.def("excluded_classes",
        [](int d, int m_) { return excluded_classes(d, m_); }, py::arg("d"),
        py::arg("m"));
  m.def("pc_value",
        [](int c, long long num, long long den) {
          BigRat v = poly_pc(c, BigRat(num, den));
          return py::make_tuple(
              big_to_py(boost::multiprecision::numerator(v)),
              big_to_py(boost::multiprecision::denominator(v)));
        },
        py::arg("c"), py::arg("num"), py::arg("den") = 1,
        "p_c at the rational num/den, as a (numerator, denominator) pair.");

  m.def("dual_weights",
        [](const std::vector<std::vector<std::int64_t>>& sigmas,
           bool diagonal) {
          SubgroupModel model = model_from_lists(sigmas, diagonal);
          F2Summary codes = f2_profile(model, /*max_k=*/2);
          std::vector<py::object> out;
          for (const auto& s : codes.per_letter) {
            out.push_back(s.dual_weight ? py::cast(*s.dual_weight)
                                        : py::none());
          }
          return out;
        },
        py::arg("sigmas"), py::arg("diagonal") = false);

  m.attr("__version__") = "0.1.0";
}
