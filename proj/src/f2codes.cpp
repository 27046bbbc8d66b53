#include "binsub/f2codes.hpp"

#include <algorithm>
#include <bit>

#include "binsub/combinatorics.hpp"
#include "binsub/zlattice.hpp"

namespace binsub {

namespace {

// reduced row echelon form over F2; rows ordered by pivot column
std::vector<std::uint64_t> rref(std::vector<std::uint64_t> rows, int length) {
  std::vector<std::uint64_t> out;
  for (int col = 0; col < length; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    size_t piv = rows.size();
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] & bit) {
        piv = i;
        break;
      }
    }
    if (piv == rows.size()) continue;
    std::uint64_t p = rows[piv];
    rows.erase(rows.begin() + static_cast<long>(piv));
    for (auto& r : rows) {
      if (r & bit) r ^= p;
    }
    for (auto& r : out) {
      if (r & bit) r ^= p;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

LinearCode make_code(int length, std::vector<std::uint64_t> rows,
                     std::string name) {
  if (length < 1 || length > kMaxFactors) {
    throw Error(ErrorCode::BadShape, "code length must be in [1, 64]");
  }
  const std::uint64_t mask =
      length == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
  for (std::uint64_t r : rows) {
    if (r & ~mask) {
      throw Error(ErrorCode::BadArgument, "generator row wider than the code");
    }
  }
  LinearCode c;
  c.length = length;
  c.generators = std::move(rows);
  c.basis = rref(c.generators, length);
  c.dimension = static_cast<int>(c.basis.size());
  c.name = std::move(name);
  return c;
}

LinearCode code_from_block(const BinaryArray& array, bool diagonal) {
  std::vector<std::uint64_t> rows = array.row_bits;
  if (diagonal) {
    const std::uint64_t ones = array.cols == 64
                                   ? ~std::uint64_t{0}
                                   : ((std::uint64_t{1} << array.cols) - 1);
    rows.push_back(ones);
  }
  return make_code(array.cols, std::move(rows));
}

LinearCode dual_code(const LinearCode& code) {
  // free columns of the RREF give the standard nullspace basis
  std::vector<int> pivot_col(code.basis.size());
  std::uint64_t pivot_mask = 0;
  for (size_t i = 0; i < code.basis.size(); ++i) {
    pivot_col[i] = std::countr_zero(code.basis[i]);
    pivot_mask |= std::uint64_t{1} << pivot_col[i];
  }
  std::vector<std::uint64_t> dual_rows;
  for (int f = 0; f < code.length; ++f) {
    if (pivot_mask & (std::uint64_t{1} << f)) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (size_t i = 0; i < code.basis.size(); ++i) {
      if (code.basis[i] & (std::uint64_t{1} << f)) {
        v |= std::uint64_t{1} << pivot_col[i];
      }
    }
    dual_rows.push_back(v);
  }
  return make_code(code.length, std::move(dual_rows),
                   code.name.empty() ? "" : code.name + "^perp");
}

namespace {

void check_enumeration_cap(int dimension, std::uint64_t cap) {
  if (dimension >= 64 || (std::uint64_t{1} << dimension) > cap) {
    throw Error(ErrorCode::CapExceeded,
                "codeword enumeration over 2^" + std::to_string(dimension) +
                    " exceeds the cap",
                dimension);
  }
}

// codeword counts by weight, via a Gray-code walk of the span
std::vector<std::uint64_t> weight_distribution(
    const std::vector<std::uint64_t>& basis, int length) {
  std::vector<std::uint64_t> counts(static_cast<size_t>(length) + 1, 0);
  counts[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  std::uint64_t word = 0;
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= basis[static_cast<size_t>(std::countr_zero(i))];
    ++counts[static_cast<size_t>(std::popcount(word))];
  }
  return counts;
}

}  // namespace

std::optional<int> min_weight(const LinearCode& code, std::uint64_t cap) {
  if (code.dimension == 0) return std::nullopt;
  const int m = code.length;
  const int codim = m - code.dimension;
  if (code.dimension <= codim) {
    check_enumeration_cap(code.dimension, cap);
    const std::uint64_t total = std::uint64_t{1} << code.dimension;
    std::uint64_t word = 0;
    int best = m + 1;
    for (std::uint64_t i = 1; i < total; ++i) {
      word ^= code.basis[static_cast<size_t>(std::countr_zero(i))];
      best = std::min(best, std::popcount(word));
    }
    return best;
  }

  // the dual is the smaller side: enumerate its weight distribution and
  // transform back (MacWilliams); 2^codim * A_w = sum_j B_j * K_w(j)
  check_enumeration_cap(codim, cap);
  LinearCode dual = dual_code(code);
  std::vector<std::uint64_t> b = weight_distribution(dual.basis, m);
  for (int w = 1; w <= m; ++w) {
    BigInt sum = 0;
    for (int j = 0; j <= m; ++j) {
      if (b[static_cast<size_t>(j)] == 0) continue;
      BigInt kraw = 0;
      for (int i = 0; i <= std::min(j, w); ++i) {
        BigInt term = BigInt(binomial(j, i)) * BigInt(binomial(m - j, w - i));
        if (i & 1) kraw -= term;
        else kraw += term;
      }
      sum += BigInt(b[static_cast<size_t>(j)]) * kraw;
    }
    if (sum != 0) {
      if (sum < 0 || sum % (BigInt(1) << codim) != 0) {
        throw InternalError("MacWilliams transform produced a non-count at w=" +
                            std::to_string(w));
      }
      return w;
    }
  }
  throw InternalError("nonzero code with no nonzero weight");
}

SigmaSpec sigma_from_code(int length, const std::vector<std::uint64_t>& rows) {
  if (length < 2 || length > kMaxFactors) {
    throw Error(ErrorCode::BadShape, "code length must be in [2, 64]");
  }
  if (rows.size() > 63) {
    throw Error(ErrorCode::BadShape, "too many rows for integer columns");
  }
  std::vector<std::uint64_t> sigma(static_cast<size_t>(length), 0);
  for (int k = 0; k < length; ++k) {
    std::uint64_t v = 0;
    for (size_t j = 0; j < rows.size(); ++j) {
      if ((rows[j] >> k) & 1u) v |= std::uint64_t{1} << j;
    }
    if (v == 0) {
      throw Error(ErrorCode::ZeroColumn,
                  "column " + std::to_string(k + 1) + " is all zero", k);
    }
    sigma[static_cast<size_t>(k)] = v;
  }
  for (int a = 0; a < length; ++a) {
    for (int b = a + 1; b < length; ++b) {
      if (sigma[static_cast<size_t>(a)] == sigma[static_cast<size_t>(b)]) {
        throw Error(ErrorCode::DuplicateColumn,
                    "columns " + std::to_string(a + 1) + " and " +
                        std::to_string(b + 1) + " are equal",
                    a, b);
      }
    }
  }
  SigmaSpec spec;
  spec.m = length;
  spec.sigmas.push_back(std::move(sigma));
  return spec;
}

namespace {

int f2_rank_of_columns(const std::vector<std::uint64_t>& block_rows,
                       const std::vector<int>& cols) {
  // gather the selected columns of each row into a k-bit word, then eliminate
  std::vector<std::uint64_t> pivots;
  int rank = 0;
  for (std::uint64_t row : block_rows) {
    std::uint64_t w = 0;
    for (size_t j = 0; j < cols.size(); ++j) {
      if ((row >> cols[j]) & 1u) w |= std::uint64_t{1} << j;
    }
    for (std::uint64_t p : pivots) {
      std::uint64_t low = p & (~p + 1);
      if (w & low) w ^= p;
    }
    if (w) {
      pivots.push_back(w);
      ++rank;
      if (rank == static_cast<int>(cols.size())) break;
    }
  }
  return rank;
}

}  // namespace

F2Summary f2_profile(const SubgroupModel& model, int max_k,
                     std::uint64_t weight_cap) {
  const int m = model.m();
  if (max_k <= 0 || max_k > m) max_k = m;

  F2Summary out;
  int min_dual_weight = m + 1;  // +1 marks "no dual codeword at all"
  for (int i = 0; i < model.letters(); ++i) {
    LinearCode code = code_from_block(model.arrays[static_cast<size_t>(i)],
                                      model.diagonal);
    LinearCode dual = dual_code(code);
    LetterCodeSummary s;
    s.length = m;
    s.dimension = code.dimension;
    s.dual_dimension = dual.dimension;
    s.code_weight = min_weight(code, weight_cap);
    s.dual_weight = min_weight(dual, weight_cap);
    if (s.dual_weight) min_dual_weight = std::min(min_dual_weight, *s.dual_weight);
    out.per_letter.push_back(s);
  }
  out.k_f2 = std::min(m, min_dual_weight - 1);

  // independent route: direct subset enumeration of column ranks
  std::vector<const std::vector<std::uint64_t>*> blocks;
  std::vector<std::vector<std::uint64_t>> materialized;
  materialized.reserve(model.arrays.size());
  for (const auto& a : model.arrays) {
    std::vector<std::uint64_t> rows = a.row_bits;
    if (model.diagonal) {
      rows.push_back(a.cols == 64 ? ~std::uint64_t{0}
                                  : ((std::uint64_t{1} << a.cols) - 1));
    }
    materialized.push_back(std::move(rows));
  }
  for (const auto& rows : materialized) blocks.push_back(&rows);

  for (int k = 2; k <= max_k; ++k) {
    bool all_onto = true;
    std::vector<int> subset(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) subset[static_cast<size_t>(j)] = j;
    do {
      for (const auto* rows : blocks) {
        if (f2_rank_of_columns(*rows, subset) < k) {
          all_onto = false;
          break;
        }
      }
      if (!all_onto) break;
    } while (next_subset(subset, m));
    out.by_k.push_back({k, all_onto});

    // the enumeration must match the dual-weight characterization
    const bool by_weight = k <= out.k_f2;
    if (all_onto != by_weight) {
      throw InternalError("f2_profile: subset enumeration disagrees with the "
                          "dual weight at k=" + std::to_string(k));
    }
  }
  return out;
}

}  // namespace binsub
