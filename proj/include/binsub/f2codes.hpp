#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binsub/sigma.hpp"

namespace binsub {

// Row span of a set of length-m bit vectors. `basis` is the canonical
// reduced row-echelon basis, so two codes are equal as subspaces iff their
// basis vectors are equal.
struct LinearCode {
  int length = 0;                        // m <= 64
  std::vector<std::uint64_t> generators; // rows as given
  std::vector<std::uint64_t> basis;      // canonical RREF basis
  int dimension = 0;
  std::string name;

  bool operator==(const LinearCode&) const = default;
};

LinearCode make_code(int length, std::vector<std::uint64_t> rows,
                     std::string name = "");

// Row span of one block; the all-ones vector is adjoined when the model
// carries diagonal elements.
LinearCode code_from_block(const BinaryArray& array, bool diagonal);

// Vectors orthogonal to every codeword under the F2 dot product.
LinearCode dual_code(const LinearCode& code);

inline constexpr std::uint64_t kDefaultWeightCap = std::uint64_t{1} << 24;

// Minimum Hamming weight over nonzero codewords; nullopt for the zero code.
// Enumerates all 2^dimension codewords, so dimension is capped.
std::optional<int> min_weight(const LinearCode& code,
                              std::uint64_t cap = kDefaultWeightCap);

// Reads the columns of a 0/1 matrix as binary integers (units in row 0),
// giving the single-sigma spec whose array reproduces the matrix up to
// trailing zero rows. Columns must be nonzero and pairwise distinct.
SigmaSpec sigma_from_code(int length, const std::vector<std::uint64_t>& rows);

struct LetterCodeSummary {
  int length = 0;
  int dimension = 0;
  int dual_dimension = 0;
  std::optional<int> code_weight;
  std::optional<int> dual_weight;  // nullopt when the dual is the zero code

  bool operator==(const LetterCodeSummary&) const = default;
};

struct F2KSummary {
  int k = 0;
  bool onto_all = false;
  bool operator==(const F2KSummary&) const = default;
};

// F2-level surjection data for a whole model. by_k comes from direct subset
// enumeration; k_f2 from the dual weights. The two characterizations are
// cross-checked on every call (a mismatch is an internal error).
struct F2Summary {
  std::vector<LetterCodeSummary> per_letter;
  int k_f2 = 0;  // all k-tuples are F2-onto exactly for k <= k_f2
  std::vector<F2KSummary> by_k;  // k = 2 .. max_k

  bool operator==(const F2Summary&) const = default;
};

F2Summary f2_profile(const SubgroupModel& model, int max_k = 0,
                     std::uint64_t weight_cap = kDefaultWeightCap);

}  // namespace binsub
