#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "binsub/errors.hpp"

namespace binsub {

// Everything in this module is exact; Smith-form intermediates can outgrow a
// machine word, so entries are arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> entries;  // row-major

  static IntMatrix zero(int rows, int cols);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  BigInt& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const {
    return entries[static_cast<size_t>(r) * cols + c];
  }

  bool operator==(const IntMatrix&) const = default;
};

// Answer to "what is the row lattice L <= Z^k of this matrix":
//   Onto            L = Z^k              (rank k, index 1)
//   FiniteIndex(d)  rank k, [Z^k : L] = d > 1
//   InfiniteIndex   rank < k
struct LatticeImageStatus {
  enum class Kind { Onto, FiniteIndex, InfiniteIndex };

  Kind kind = Kind::InfiniteIndex;
  int rank = 0;     // rational rank of L
  BigInt index = 0; // [Z^k : L] when finite, 0 otherwise

  static LatticeImageStatus onto(int k) { return {Kind::Onto, k, 1}; }
  static LatticeImageStatus finite(int k, BigInt idx) {
    return {Kind::FiniteIndex, k, std::move(idx)};
  }
  static LatticeImageStatus infinite(int rank) {
    return {Kind::InfiniteIndex, rank, 0};
  }

  bool is_onto() const { return kind == Kind::Onto; }
  bool is_finite_or_onto() const { return kind != Kind::InfiniteIndex; }

  std::string to_string() const;
  bool operator==(const LatticeImageStatus&) const = default;
};

// Selected columns in the given order; indices must be distinct and in range.
IntMatrix column_submatrix(const IntMatrix& m, std::span<const int> cols);

// Elementary divisors d1 | d2 | ... of the Smith normal form, all positive;
// the length is the rational rank.
std::vector<BigInt> smith_divisors(IntMatrix m);

LatticeImageStatus lattice_status(const IntMatrix& m);

// Rank of the matrix reduced mod 2, by word-wise elimination. Needs cols <= 64.
int rank_f2(const IntMatrix& m);

// Exact determinant (Bareiss fraction-free elimination).
BigInt determinant(const IntMatrix& m);

// Independent check of lattice_status built on determinantal divisors only:
// the gcd of all k x k minors equals d1*...*dk, which is the index when the
// rank is full. Enumerates row subsets, so cols must stay <= cap.
LatticeImageStatus minor_gcd_oracle(const IntMatrix& m, int cap = 8);

// Canonical row Hermite normal form (positive pivots, entries above a pivot
// reduced, zero rows dropped). Two matrices span the same row lattice iff
// their Hermite forms are equal.
IntMatrix hermite_form(const IntMatrix& m);

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace binsub
