#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "binsub/f2codes.hpp"
#include "binsub/sigma.hpp"
#include "binsub/zlattice.hpp"

namespace binsub {

// Lexicographically first k-subset whose projection is not onto, together
// with the first letter whose block fails and that block's status.
struct FailureWitness {
  std::vector<int> subset;  // 0-based factor indices, ascending
  int letter = 0;           // 0-based
  LatticeImageStatus status;

  bool operator==(const FailureWitness&) const = default;
};

struct KtupleSummary {
  int k = 0;
  bool known = true;  // false when the time budget cut the scan short
  bool onto_all = false;
  bool virtual_all = false;
  std::optional<FailureWitness> witness;

  bool operator==(const KtupleSummary&) const = default;
};

struct SurjectionProfile {
  int m = 0;
  int max_k = 0;
  std::vector<KtupleSummary> by_k;  // k = 2 .. max_k

  const KtupleSummary& at_k(int k) const;
  bool operator==(const SurjectionProfile&) const = default;
};

struct KtupleStatus {
  std::vector<LatticeImageStatus> per_letter;
  LatticeImageStatus combined;  // over the direct sum of the letter blocks
};

struct AnalyzeOptions {
  int max_k = 0;               // 0 = every k up to m
  int threads = 1;
  double budget_seconds = 0.0; // 0 = unlimited; k=2 is always completed
};

// Largest k with all j <= k virtually surjected; all=true means the whole
// m-tuple, i.e. finite index in the ambient product.
struct WfpLevel {
  bool all = false;
  int k = 2;

  bool operator==(const WfpLevel&) const = default;
};

struct AnalysisReport {
  int m = 0;
  int letters = 0;
  int generator_count = 0;
  int h1_rank_lower_bound = 0;
  bool rank_bound_attained = false;
  SurjectionProfile profile;
  WfpLevel wfp_max;
  int conilpotency_upper = 0;                 // gamma_c containment guaranteed
  std::optional<int> conilpotency_excluded;   // needs >= 2 letters
  F2Summary codes;
  std::vector<std::string> assumption_notes;

  bool operator==(const AnalysisReport&) const = default;
};

// One letter's block as an exact integer matrix (rows of the array plus the
// all-ones row when the model carries diagonal elements).
IntMatrix block_matrix(const SubgroupModel& model, int letter);

KtupleStatus ktuple_status(const SubgroupModel& model,
                           std::span<const int> subset);

SurjectionProfile surjection_profile(const SubgroupModel& model,
                                     const AnalyzeOptions& options = {});

WfpLevel wfp_max(const SurjectionProfile& profile);

// min over k with onto_all_k of ceil((m-1)/(k-1))
int conilpotency_upper(const SurjectionProfile& profile, int m);

int generator_count(const SubgroupModel& model);
int h1_rank_lower_bound(const SubgroupModel& model);

AnalysisReport analyze(const SubgroupModel& model,
                       const AnalyzeOptions& options = {});

}  // namespace binsub
