#include "binsub/projection.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>

#include "binsub/combinatorics.hpp"
#include "binsub/nilpotent.hpp"
#include "binsub/parallel.hpp"

namespace binsub {

const KtupleSummary& SurjectionProfile::at_k(int k) const {
  if (k < 2 || k > max_k) {
    throw Error(ErrorCode::IndexOutOfRange,
                "no profile entry for k = " + std::to_string(k), k);
  }
  return by_k[static_cast<size_t>(k - 2)];
}

IntMatrix block_matrix(const SubgroupModel& model, int letter) {
  if (letter < 0 || letter >= model.letters()) {
    throw Error(ErrorCode::IndexOutOfRange, "letter index out of range", letter);
  }
  const BinaryArray& a = model.arrays[static_cast<size_t>(letter)];
  const int rows = a.rows + (model.diagonal ? 1 : 0);
  IntMatrix m = IntMatrix::zero(rows, a.cols);
  for (int j = 0; j < a.rows; ++j) {
    for (int k = 0; k < a.cols; ++k) {
      if (a.bit(j, k)) m.at(j, k) = 1;
    }
  }
  if (model.diagonal) {
    for (int k = 0; k < a.cols; ++k) m.at(a.rows, k) = 1;
  }
  return m;
}

namespace {

// letters sharing a block only pay for one status computation
struct UniqueBlocks {
  std::vector<IntMatrix> matrices;
  std::vector<int> letter_to_unique;
};

UniqueBlocks unique_blocks(const SubgroupModel& model) {
  UniqueBlocks u;
  std::map<std::vector<std::uint64_t>, int> seen;
  for (int i = 0; i < model.letters(); ++i) {
    auto [it, inserted] =
        seen.emplace(model.arrays[static_cast<size_t>(i)].row_bits,
                     static_cast<int>(u.matrices.size()));
    if (inserted) u.matrices.push_back(block_matrix(model, i));
    u.letter_to_unique.push_back(it->second);
  }
  return u;
}

LatticeImageStatus combine_statuses(
    const std::vector<LatticeImageStatus>& per_letter, int k) {
  const int total = k * static_cast<int>(per_letter.size());
  bool all_onto = true;
  bool all_full = true;
  int rank_sum = 0;
  BigInt index = 1;
  for (const auto& st : per_letter) {
    rank_sum += st.rank;
    if (!st.is_onto()) all_onto = false;
    if (st.kind == LatticeImageStatus::Kind::InfiniteIndex) {
      all_full = false;
    } else {
      index *= st.index;
    }
  }
  if (all_onto) return LatticeImageStatus::onto(total);
  if (all_full) return LatticeImageStatus::finite(total, std::move(index));
  return LatticeImageStatus::infinite(rank_sum);
}

}  // namespace

KtupleStatus ktuple_status(const SubgroupModel& model,
                           std::span<const int> subset) {
  const int k = static_cast<int>(subset.size());
  if (k < 2 || k > model.m()) {
    throw Error(ErrorCode::BadArgument, "subset size must be in [2, m]");
  }
  UniqueBlocks u = unique_blocks(model);
  std::vector<LatticeImageStatus> unique_status;
  unique_status.reserve(u.matrices.size());
  for (const auto& mat : u.matrices) {
    unique_status.push_back(lattice_status(column_submatrix(mat, subset)));
  }
  KtupleStatus out;
  out.per_letter.reserve(static_cast<size_t>(model.letters()));
  for (int i = 0; i < model.letters(); ++i) {
    out.per_letter.push_back(
        unique_status[static_cast<size_t>(u.letter_to_unique[static_cast<size_t>(i)])]);
  }
  out.combined = combine_statuses(out.per_letter, k);
  return out;
}

namespace {

struct ChunkScan {
  bool has_fail = false;
  FailureWitness fail_witness;
  bool has_inf = false;
};

constexpr std::uint64_t kChunk = 512;

KtupleSummary scan_k(const UniqueBlocks& u, int m, int k, int threads,
                     const std::optional<std::chrono::steady_clock::time_point>&
                         deadline) {
  const std::uint64_t total = binomial(m, k);
  const std::uint64_t jobs = (total + kChunk - 1) / kChunk;

  auto eval = [&](std::uint64_t job) -> ChunkScan {
    ChunkScan scan;
    const std::uint64_t begin = job * kChunk;
    const std::uint64_t end = std::min(total, begin + kChunk);
    std::vector<int> subset = unrank_subset(begin, m, k);
    std::vector<LatticeImageStatus> status(u.matrices.size());
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      bool any_bad = false;
      bool any_inf = false;
      for (size_t b = 0; b < u.matrices.size(); ++b) {
        status[b] = lattice_status(column_submatrix(u.matrices[b], subset));
        if (!status[b].is_onto()) any_bad = true;
        if (status[b].kind == LatticeImageStatus::Kind::InfiniteIndex) {
          any_inf = true;
        }
      }
      if (any_bad && !scan.has_fail) {
        int letter = 0;
        while (status[static_cast<size_t>(
                          u.letter_to_unique[static_cast<size_t>(letter)])]
                   .is_onto()) {
          ++letter;
        }
        scan.has_fail = true;
        scan.fail_witness.subset = subset;
        scan.fail_witness.letter = letter;
        scan.fail_witness.status =
            status[static_cast<size_t>(u.letter_to_unique[static_cast<size_t>(letter)])];
      }
      if (any_inf) {
        scan.has_inf = true;
        break;  // nothing after the first infinite subset is ever consumed
      }
      next_subset(subset, m);
    }
    return scan;
  };

  bool any_fail = false;
  bool any_inf = false;
  bool cut = false;
  std::optional<FailureWitness> witness;
  auto consume = [&](std::uint64_t, ChunkScan& scan) -> bool {
    if (scan.has_fail && !witness) {
      witness = std::move(scan.fail_witness);
      any_fail = true;
    }
    if (scan.has_inf) {
      any_inf = true;
      return false;
    }
    if (deadline && k > 2 &&
        std::chrono::steady_clock::now() > *deadline) {
      cut = true;
      return false;
    }
    return true;
  };

  run_ordered<ChunkScan>(jobs, threads, eval, consume);

  KtupleSummary s;
  s.k = k;
  s.witness = std::move(witness);
  if (any_inf) {
    s.known = true;
    s.onto_all = false;
    s.virtual_all = false;
  } else if (cut) {
    s.known = false;
    s.onto_all = false;
    s.virtual_all = false;
  } else {
    s.known = true;
    s.onto_all = !any_fail;
    s.virtual_all = true;
  }
  return s;
}

}  // namespace

SurjectionProfile surjection_profile(const SubgroupModel& model,
                                     const AnalyzeOptions& options) {
  const int m = model.m();
  int max_k = options.max_k;
  if (max_k <= 0 || max_k > m) max_k = m;
  if (max_k < 2) max_k = 2;

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (options.budget_seconds > 0) {
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(options.budget_seconds));
  }

  UniqueBlocks u = unique_blocks(model);
  SurjectionProfile profile;
  profile.m = m;
  profile.max_k = max_k;
  for (int k = 2; k <= max_k; ++k) {
    if (deadline && k > 2 && std::chrono::steady_clock::now() > *deadline) {
      KtupleSummary s;
      s.k = k;
      s.known = false;
      profile.by_k.push_back(std::move(s));
      continue;
    }
    profile.by_k.push_back(
        scan_k(u, m, k, std::max(1, options.threads), deadline));
  }
  return profile;
}

WfpLevel wfp_max(const SurjectionProfile& profile) {
  int best = 1;
  for (const auto& s : profile.by_k) {
    if (s.known && s.virtual_all) {
      best = s.k;
    } else {
      break;
    }
  }
  WfpLevel w;
  w.k = best;
  w.all = (best == profile.m);
  return w;
}

int conilpotency_upper(const SurjectionProfile& profile, int m) {
  int best = std::numeric_limits<int>::max();
  for (const auto& s : profile.by_k) {
    if (s.known && s.onto_all) {
      best = std::min(best, (m - 2) / (s.k - 1) + 1);  // ceil((m-1)/(k-1))
    }
  }
  if (best == std::numeric_limits<int>::max()) {
    throw InternalError("no onto level found; pair surjection must hold");
  }
  return best;
}

int generator_count(const SubgroupModel& model) {
  int count = 0;
  for (const auto& a : model.arrays) count += a.rows;
  if (model.diagonal) count += model.letters();
  return count;
}

int h1_rank_lower_bound(const SubgroupModel& model) {
  int rank = 0;
  for (int i = 0; i < model.letters(); ++i) {
    rank += static_cast<int>(smith_divisors(block_matrix(model, i)).size());
  }
  return rank;
}

AnalysisReport analyze(const SubgroupModel& model,
                       const AnalyzeOptions& options) {
  AnalysisReport rep;
  rep.m = model.m();
  rep.letters = model.letters();
  rep.generator_count = generator_count(model);
  rep.h1_rank_lower_bound = h1_rank_lower_bound(model);
  rep.rank_bound_attained = rep.generator_count == rep.h1_rank_lower_bound;

  rep.profile = surjection_profile(model, options);
  const KtupleSummary& pairs = rep.profile.at_k(2);
  if (pairs.known && !pairs.onto_all) {
    throw InternalError("pair surjection failed on a valid model");
  }

  rep.wfp_max = wfp_max(rep.profile);
  rep.conilpotency_upper = conilpotency_upper(rep.profile, rep.m);
  if (rep.letters >= 2) {
    rep.conilpotency_excluded = excluded_classes(rep.generator_count, rep.m);
    if (*rep.conilpotency_excluded > rep.conilpotency_upper) {
      throw InternalError("containment exclusion exceeds the containment bound");
    }
  }

  rep.codes = f2_profile(model, options.max_k);
  for (const auto& s : rep.profile.by_k) {
    if (s.known && s.onto_all && s.k > rep.codes.k_f2) {
      throw InternalError("integral surjection without mod-2 surjection at k=" +
                          std::to_string(s.k));
    }
  }

  bool truncated = rep.profile.max_k < rep.m;
  for (const auto& s : rep.profile.by_k) {
    if (!s.known) truncated = true;
  }
  rep.assumption_notes.push_back(
      "Derived finiteness and containment levels are exact for full subdirect "
      "products of non-abelian limit-group factors marked by isomorphisms on "
      "first homology; for weaker targets the positive statements persist but "
      "the negative ones may fail.");
  rep.assumption_notes.push_back(
      "Over targets generated by elements of finite order every such subgroup "
      "has finite index; mod-2 code data cannot see past this, so the "
      "Z-level profile is the authoritative one.");
  if (rep.letters == 1) {
    rep.assumption_notes.push_back(
        "Single-letter models have an abelian marked factor; the "
        "generator-count exclusion bound needs at least two letters and is "
        "omitted.");
  }
  if (truncated) {
    rep.assumption_notes.push_back(
        "The surjection profile was not computed for every k (max-k limit or "
        "time budget); wfp_max and containment bounds use scanned levels "
        "only.");
  }
  return rep;
}

}  // namespace binsub
