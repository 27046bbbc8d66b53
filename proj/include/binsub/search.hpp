#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "binsub/projection.hpp"
#include "binsub/sigma.hpp"
#include "binsub/zlattice.hpp"

namespace binsub {

enum class SurjTarget { OverZ, OverF2, VirtualOverZ };
enum class SearchMode { MinRows, Count, Enumerate };

struct SearchQuery {
  int m = 0;
  int target_k = 2;
  SearchMode mode = SearchMode::MinRows;
  int l = 0;                // row count for Count / Enumerate
  int max_l = kMaxFactors;  // MinRows gives up past this row count
  long long limit = 10;     // Enumerate keeps this many witnesses
  bool diagonal = false;
  SurjTarget target = SurjTarget::OverZ;
  bool canonical_only = true;
  int threads = 1;
  double budget_seconds = 0.0;  // 0 = unlimited

  bool operator==(const SearchQuery&) const = default;
};

struct SearchWitnessSummary {
  int generator_count = 0;
  WfpLevel wfp_max;
  int conilpotency_upper = 0;
  int k_f2 = 0;

  bool operator==(const SearchWitnessSummary&) const = default;
};

struct SearchWitness {
  std::vector<std::uint64_t> sigma;  // canonical (ascending) column values
  SearchWitnessSummary summary;

  bool operator==(const SearchWitness&) const = default;
};

// Counts are canonical column sets (ascending value lists); the ordered count
// multiplies by m! since distinct columns make every orbit free.
struct SearchResult {
  SearchQuery query;
  std::optional<int> optimal_l;
  BigInt count_canonical = 0;
  BigInt count_ordered = 0;
  std::vector<SearchWitness> witnesses;
  std::uint64_t nodes_explored = 0;
  bool budget_exhausted = false;
};

SearchResult min_rows(const SearchQuery& query);
SearchResult count_sigmas(const SearchQuery& query);
SearchResult enumerate_extremal(const SearchQuery& query);
SearchResult run_search(const SearchQuery& query);

}  // namespace binsub
