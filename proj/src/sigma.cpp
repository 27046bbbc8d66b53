#include "binsub/sigma.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace binsub {

namespace {

int bit_length(std::uint64_t x) { return 64 - std::countl_zero(x); }

}  // namespace

std::uint64_t BinaryArray::column_value(int col) const {
  std::uint64_t v = 0;
  for (int j = 0; j < rows; ++j) {
    if (bit(j, col)) v |= (std::uint64_t{1} << j);
  }
  return v;
}

SigmaSpec validate_spec(const std::vector<std::vector<std::int64_t>>& raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::BadShape, "need at least one sigma list");
  }
  const size_t m = raw[0].size();
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != m) {
      throw Error(ErrorCode::LengthMismatch,
                  "sigma list " + std::to_string(i + 1) + " has " +
                      std::to_string(raw[i].size()) + " entries, expected " +
                      std::to_string(m),
                  static_cast<long long>(i));
    }
  }
  if (m < 2) {
    throw Error(ErrorCode::BadShape, "need at least 2 factors (m >= 2)");
  }
  if (m > static_cast<size_t>(kMaxFactors)) {
    throw Error(ErrorCode::BadShape,
                "m = " + std::to_string(m) + " exceeds the word width cap of " +
                    std::to_string(kMaxFactors));
  }

  SigmaSpec spec;
  spec.m = static_cast<int>(m);
  spec.sigmas.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    std::vector<std::uint64_t> row;
    row.reserve(m);
    for (size_t k = 0; k < m; ++k) {
      if (raw[i][k] < 1) {
        throw Error(ErrorCode::NonPositiveEntry,
                    "sigma list " + std::to_string(i + 1) + " entry " +
                        std::to_string(k + 1) + " is " +
                        std::to_string(raw[i][k]) + "; values must be >= 1",
                    static_cast<long long>(i), static_cast<long long>(k));
      }
      row.push_back(static_cast<std::uint64_t>(raw[i][k]));
    }
    // duplicate scan; lists are short, quadratic is fine
    for (size_t a = 0; a < m; ++a) {
      for (size_t b = a + 1; b < m; ++b) {
        if (row[a] == row[b]) {
          throw Error(ErrorCode::DuplicateEntry,
                      "sigma list " + std::to_string(i + 1) + " repeats value " +
                          std::to_string(row[a]) + " at positions " +
                          std::to_string(a + 1) + " and " +
                          std::to_string(b + 1),
                      static_cast<long long>(i), static_cast<long long>(a),
                      static_cast<long long>(b));
        }
      }
    }
    spec.sigmas.push_back(std::move(row));
  }
  return spec;
}

BinaryArray build_array(const std::vector<std::uint64_t>& sigma) {
  if (sigma.empty()) {
    throw Error(ErrorCode::BadShape, "empty sigma list");
  }
  if (sigma.size() > static_cast<size_t>(kMaxFactors)) {
    throw Error(ErrorCode::BadShape, "too many columns for one word");
  }
  int l = 0;
  for (std::uint64_t x : sigma) {
    if (x == 0) throw Error(ErrorCode::NonPositiveEntry, "zero sigma value");
    l = std::max(l, bit_length(x));
  }
  BinaryArray a;
  a.rows = l;
  a.cols = static_cast<int>(sigma.size());
  a.row_bits.assign(static_cast<size_t>(l), 0);
  for (int k = 0; k < a.cols; ++k) {
    std::uint64_t x = sigma[static_cast<size_t>(k)];
    for (int j = 0; j < l; ++j) {
      if ((x >> j) & 1u) a.row_bits[static_cast<size_t>(j)] |= (std::uint64_t{1} << k);
    }
  }
  return a;
}

SubgroupModel make_model(SigmaSpec spec, bool diagonal) {
  SubgroupModel model;
  model.arrays.reserve(spec.sigmas.size());
  for (const auto& sigma : spec.sigmas) model.arrays.push_back(build_array(sigma));
  model.spec = std::move(spec);
  model.diagonal = diagonal;
  return model;
}

namespace {

SubgroupModel repeated_sigma_model(int m, int r, std::vector<std::uint64_t> sigma,
                                   bool diagonal) {
  if (m < 2 || m > kMaxFactors) {
    throw Error(ErrorCode::BadShape, "m must be in [2, " +
                                         std::to_string(kMaxFactors) + "]");
  }
  if (r < 1) throw Error(ErrorCode::BadShape, "r must be >= 1");
  SigmaSpec spec;
  spec.m = m;
  spec.sigmas.assign(static_cast<size_t>(r), sigma);
  return make_model(std::move(spec), diagonal);
}

}  // namespace

SubgroupModel builtin_b0(int m, int r) {
  std::vector<std::uint64_t> sigma(static_cast<size_t>(m));
  std::iota(sigma.begin(), sigma.end(), std::uint64_t{1});
  return repeated_sigma_model(m, r, std::move(sigma), false);
}

SubgroupModel builtin_b1(int m, int r) {
  std::vector<std::uint64_t> sigma(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) sigma[static_cast<size_t>(k)] = 2u * static_cast<std::uint64_t>(k + 1) + 1;
  return repeated_sigma_model(m, r, std::move(sigma), false);
}

SubgroupModel builtin_b1_diagonal(int m, int r) {
  std::vector<std::uint64_t> sigma(static_cast<size_t>(m));
  std::iota(sigma.begin(), sigma.end(), std::uint64_t{1});
  return repeated_sigma_model(m, r, std::move(sigma), true);
}

SubgroupModel row_merge(const SubgroupModel& model, int letter, int j1,
                        int j2) {
  if (letter < 0 || letter >= model.letters()) {
    throw Error(ErrorCode::IndexOutOfRange, "letter index out of range", letter);
  }
  const BinaryArray& a = model.arrays[static_cast<size_t>(letter)];
  if (j1 < 0 || j1 >= a.rows || j2 < 0 || j2 >= a.rows || j1 == j2) {
    throw Error(ErrorCode::IndexOutOfRange, "row index out of range", j1, j2);
  }
  std::uint64_t r1 = a.row_bits[static_cast<size_t>(j1)];
  std::uint64_t r2 = a.row_bits[static_cast<size_t>(j2)];
  if (r1 & r2) {
    int col = std::countr_zero(r1 & r2);
    throw Error(ErrorCode::Overlap,
                "rows " + std::to_string(j1) + " and " + std::to_string(j2) +
                    " both have a 1 in column " + std::to_string(col + 1),
                j1, j2, col);
  }
  BinaryArray merged = a;
  merged.row_bits[static_cast<size_t>(j1)] = r1 | r2;

  SubgroupModel out = model;
  out.arrays[static_cast<size_t>(letter)] = merged;
  auto& sigma = out.spec.sigmas[static_cast<size_t>(letter)];
  for (int k = 0; k < merged.cols; ++k) sigma[static_cast<size_t>(k)] = merged.column_value(k);
  return out;
}

SigmaSpec canonicalize(const SigmaSpec& spec) {
  SigmaSpec out = spec;
  std::sort(out.sigmas.begin(), out.sigmas.end());
  bool all_equal = true;
  for (const auto& s : out.sigmas) {
    if (s != out.sigmas[0]) { all_equal = false; break; }
  }
  if (all_equal) {
    // one shared sigma: reordering entries only permutes the direct factors
    for (auto& s : out.sigmas) std::sort(s.begin(), s.end());
  }
  return out;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::Overlap: return "Overlap";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::DuplicateColumn: return "DuplicateColumn";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

}  // namespace binsub
