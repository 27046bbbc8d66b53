#pragma once

#include <cstdint>
#include <vector>

#include "binsub/errors.hpp"

namespace binsub {

// Columns are stored as bits of one machine word, so at most 64 factors.
inline constexpr int kMaxFactors = 64;

// r lists of m distinct positive integers; list i gives the column values
// for basis letter i.
struct SigmaSpec {
  int m = 0;
  std::vector<std::vector<std::uint64_t>> sigmas;

  int letters() const { return static_cast<int>(sigmas.size()); }
  bool operator==(const SigmaSpec&) const = default;
};

// l x m matrix over {0,1}; column k is the binary expansion of the k-th
// sigma value, units in row 0. Row j is kept as an m-bit mask.
struct BinaryArray {
  int rows = 0;  // l
  int cols = 0;  // m
  std::vector<std::uint64_t> row_bits;

  bool bit(int row, int col) const {
    return (row_bits[static_cast<size_t>(row)] >> col) & 1u;
  }
  // Reads column k back as an integer (round trip with build_array).
  std::uint64_t column_value(int col) const;

  bool operator==(const BinaryArray&) const = default;
};

// Abelianized generator data of one binary subgroup: one array per letter,
// plus an optional all-ones row per block for the diagonal elements.
struct SubgroupModel {
  SigmaSpec spec;
  std::vector<BinaryArray> arrays;
  bool diagonal = false;

  int m() const { return spec.m; }
  int letters() const { return spec.letters(); }
  bool operator==(const SubgroupModel&) const = default;
};

// Checks shape, positivity and per-list distinctness of raw input.
// Throws Error with codes LengthMismatch / NonPositiveEntry /
// DuplicateEntry (letter, first position, second position) / BadShape.
SigmaSpec validate_spec(const std::vector<std::vector<std::int64_t>>& raw);

// Binary-expansion array of one list; row count is the largest bit length.
BinaryArray build_array(const std::vector<std::uint64_t>& sigma);

SubgroupModel make_model(SigmaSpec spec, bool diagonal);

// sigma_i = (1, 2, ..., m) for every letter.
SubgroupModel builtin_b0(int m, int r);
// sigma_i = (3, 5, ..., 2m+1) for every letter.
SubgroupModel builtin_b1(int m, int r);
// The b0 spec with the diagonal flag set; spans the same lattice per block
// as builtin_b1.
SubgroupModel builtin_b1_diagonal(int m, int r);

// Replaces row j1 of block `letter` by the bitwise OR of rows j1 and j2.
// Valid only when no column has a 1 in both rows (the supports are
// disjoint, so OR equals integer sum and the modeled subgroup is
// unchanged). Throws Error(Overlap) otherwise.
SubgroupModel row_merge(const SubgroupModel& model, int letter, int j1,
                        int j2);

// Deterministic representative of the permutation orbit: sigma lists sorted
// lexicographically; when all lists are equal, entries sorted ascending.
SigmaSpec canonicalize(const SigmaSpec& spec);

}  // namespace binsub
