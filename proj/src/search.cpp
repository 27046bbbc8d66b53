#include "binsub/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>

#include "binsub/combinatorics.hpp"
#include "binsub/parallel.hpp"

namespace binsub {

namespace {

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

int bit_length(std::uint64_t x) { return 64 - std::countl_zero(x); }

std::uint64_t value_cap(int l) {
  return l >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << l) - 1);
}

// Decides whether one k-subset of column values meets the surjectivity
// target. Column values double as F2 vectors (bit j = row j), which gives
// one-sided shortcuts in both integral modes: full mod-2 rank certifies full
// rational rank, and less than full mod-2 rank rules out an integral
// surjection.
class SubsetChecker {
 public:
  SubsetChecker(int rows, bool diagonal, SurjTarget target)
      : rows_(rows), diagonal_(diagonal), target_(target) {}

  bool passes(const std::vector<std::uint64_t>& vals) {
    auto it = cache_.find(vals);
    if (it != cache_.end()) return it->second;
    bool ok = evaluate(vals);
    cache_.emplace(vals, ok);
    return ok;
  }

 private:
  int f2_rank(const std::vector<std::uint64_t>& vals) const {
    std::vector<std::uint64_t> pivots;
    int rank = 0;
    for (std::uint64_t v : vals) {
      std::uint64_t w = v;
      if (diagonal_ && rows_ < 64) w |= std::uint64_t{1} << rows_;
      for (std::uint64_t p : pivots) {
        std::uint64_t low = p & (~p + 1);
        if (w & low) w ^= p;
      }
      if (w) {
        pivots.push_back(w);
        ++rank;
      }
    }
    return rank;
  }

  IntMatrix matrix_of(const std::vector<std::uint64_t>& vals) const {
    const int k = static_cast<int>(vals.size());
    IntMatrix m = IntMatrix::zero(rows_ + (diagonal_ ? 1 : 0), k);
    for (int j = 0; j < rows_; ++j) {
      for (int i = 0; i < k; ++i) {
        if ((vals[static_cast<size_t>(i)] >> j) & 1u) m.at(j, i) = 1;
      }
    }
    if (diagonal_) {
      for (int i = 0; i < k; ++i) m.at(rows_, i) = 1;
    }
    return m;
  }

  bool evaluate(const std::vector<std::uint64_t>& vals) const {
    const int k = static_cast<int>(vals.size());
    const int rk2 = f2_rank(vals);
    switch (target_) {
      case SurjTarget::OverF2:
        return rk2 == k;
      case SurjTarget::OverZ:
        if (rk2 < k) return false;
        return lattice_status(matrix_of(vals)).is_onto();
      case SurjTarget::VirtualOverZ:
        if (rk2 == k) return true;
        return lattice_status(matrix_of(vals)).is_finite_or_onto();
    }
    return false;
  }

  int rows_;
  bool diagonal_;
  SurjTarget target_;
  std::map<std::vector<std::uint64_t>, bool> cache_;
};

struct SubtreeResult {
  BigInt count = 0;
  std::vector<std::vector<std::uint64_t>> collected;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
};

struct Dfs {
  int m;
  int k;
  std::uint64_t vmax;
  SubsetChecker checker;
  bool stop_at_first;
  long long collect_limit;
  Deadline deadline;

  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> scratch;
  SubtreeResult out;
  bool found = false;

  Dfs(int m, int k, int rows, std::uint64_t vmax, bool diagonal,
      SurjTarget target, bool stop_at_first, long long collect_limit,
      Deadline deadline)
      : m(m), k(k), vmax(vmax), checker(rows, diagonal, target),
        stop_at_first(stop_at_first), collect_limit(collect_limit),
        deadline(deadline) {
    prefix.reserve(static_cast<size_t>(m));
    scratch.resize(static_cast<size_t>(k));
  }

  // every k-subset of prefix+v that contains v must meet the target; subsets
  // not containing v were approved when their own last column was placed
  bool column_ok(std::uint64_t v) {
    const int placed = static_cast<int>(prefix.size());
    if (placed + 1 < k) return true;
    std::vector<int> pick(static_cast<size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i) pick[static_cast<size_t>(i)] = i;
    do {
      for (int i = 0; i < k - 1; ++i) {
        scratch[static_cast<size_t>(i)] = prefix[static_cast<size_t>(pick[static_cast<size_t>(i)])];
      }
      scratch[static_cast<size_t>(k - 1)] = v;
      if (!checker.passes(scratch)) return false;
    } while (next_subset(pick, placed));
    return true;
  }

  void run(std::uint64_t next_min) {
    if (static_cast<int>(prefix.size()) == m) {
      out.count += 1;
      found = true;
      if (static_cast<long long>(out.collected.size()) < collect_limit) {
        out.collected.push_back(prefix);
      }
      return;
    }
    const std::uint64_t slack =
        static_cast<std::uint64_t>(m - 1 - static_cast<int>(prefix.size()));
    if (vmax < slack) return;
    const std::uint64_t last = vmax - slack;
    for (std::uint64_t v = next_min; v <= last; ++v) {
      ++out.nodes;
      if (deadline && (out.nodes & 1023) == 0 && Clock::now() > *deadline) {
        out.budget_hit = true;
        return;
      }
      if (column_ok(v)) {
        prefix.push_back(v);
        run(v + 1);
        prefix.pop_back();
        if (out.budget_hit || (found && stop_at_first)) return;
      }
    }
  }
};

struct LevelOutcome {
  BigInt count = 0;
  std::vector<std::vector<std::uint64_t>> collected;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  bool found = false;
};

// One row count l: splits on the first column value; subtree results are
// consumed in first-column order so counts, witness order, and the MinRows
// stopping point are independent of the worker count.
LevelOutcome scan_level(const SearchQuery& query, int l, bool stop_at_first,
                        long long collect_limit, Deadline deadline) {
  LevelOutcome out;
  const std::uint64_t vmax = value_cap(l);
  if (vmax < static_cast<std::uint64_t>(query.m)) return out;
  const std::uint64_t first_last = vmax - static_cast<std::uint64_t>(query.m - 1);

  auto eval = [&](std::uint64_t job) -> SubtreeResult {
    const std::uint64_t v1 = 1 + job;
    Dfs dfs(query.m, query.target_k, l, vmax, query.diagonal, query.target,
            stop_at_first, collect_limit, deadline);
    ++dfs.out.nodes;
    if (dfs.column_ok(v1)) {
      dfs.prefix.push_back(v1);
      dfs.run(v1 + 1);
    }
    return std::move(dfs.out);
  };

  auto consume = [&](std::uint64_t, SubtreeResult& r) -> bool {
    out.count += r.count;
    out.nodes += r.nodes;
    for (auto& s : r.collected) {
      if (static_cast<long long>(out.collected.size()) >= collect_limit) break;
      out.collected.push_back(std::move(s));
    }
    if (r.budget_hit) {
      out.budget_hit = true;
      return false;
    }
    if (stop_at_first && r.count > 0) {
      out.found = true;
      return false;
    }
    return true;
  };

  run_ordered<SubtreeResult>(first_last, std::max(1, query.threads), eval,
                             consume);
  if (out.count > 0) out.found = true;
  return out;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void validate_query(const SearchQuery& query, bool needs_l) {
  if (query.m < 2 || query.m > kMaxFactors) {
    throw Error(ErrorCode::BadShape, "m must be in [2, 64]");
  }
  if (query.target_k < 2 || query.target_k > query.m) {
    throw Error(ErrorCode::BadArgument, "target k must be in [2, m]");
  }
  if (needs_l && (query.l < 1 || query.l > kMaxFactors)) {
    throw Error(ErrorCode::BadArgument, "row count l must be in [1, 64]");
  }
  if (query.limit < 0) {
    throw Error(ErrorCode::BadArgument, "limit must be >= 0");
  }
}

Deadline make_deadline(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(seconds));
}

SearchWitnessSummary summarize(const std::vector<std::uint64_t>& sigma,
                               bool diagonal) {
  SigmaSpec spec;
  spec.m = static_cast<int>(sigma.size());
  spec.sigmas.push_back(sigma);
  AnalysisReport rep = analyze(make_model(std::move(spec), diagonal));
  SearchWitnessSummary s;
  s.generator_count = rep.generator_count;
  s.wfp_max = rep.wfp_max;
  s.conilpotency_upper = rep.conilpotency_upper;
  s.k_f2 = rep.codes.k_f2;
  return s;
}

}  // namespace

SearchResult min_rows(const SearchQuery& query) {
  validate_query(query, false);
  SearchResult result;
  result.query = query;
  Deadline deadline = make_deadline(query.budget_seconds);

  const int l_start = bit_length(static_cast<std::uint64_t>(query.m));
  for (int l = l_start; l <= query.max_l; ++l) {
    LevelOutcome level = scan_level(query, l, /*stop_at_first=*/true,
                                    /*collect_limit=*/1, deadline);
    result.nodes_explored += level.nodes;
    if (level.budget_hit) {
      result.budget_exhausted = true;
      return result;
    }
    if (level.found) {
      result.optimal_l = l;
      result.witnesses.push_back(
          {level.collected.front(),
           summarize(level.collected.front(), query.diagonal)});
      return result;
    }
  }
  throw Error(ErrorCode::Infeasible,
              "no row count up to " + std::to_string(query.max_l) +
                  " meets the target",
              query.max_l);
}

SearchResult count_sigmas(const SearchQuery& query) {
  validate_query(query, true);
  SearchResult result;
  result.query = query;
  LevelOutcome level = scan_level(query, query.l, /*stop_at_first=*/false,
                                  /*collect_limit=*/0,
                                  make_deadline(query.budget_seconds));
  result.nodes_explored = level.nodes;
  result.budget_exhausted = level.budget_hit;
  result.count_canonical = level.count;
  result.count_ordered = level.count * factorial(query.m);
  return result;
}

SearchResult enumerate_extremal(const SearchQuery& query) {
  validate_query(query, true);
  SearchResult result;
  result.query = query;
  LevelOutcome level = scan_level(query, query.l, /*stop_at_first=*/false,
                                  query.limit,
                                  make_deadline(query.budget_seconds));
  result.nodes_explored = level.nodes;
  result.budget_exhausted = level.budget_hit;
  result.count_canonical = level.count;
  result.count_ordered = level.count * factorial(query.m);
  result.witnesses.reserve(level.collected.size());
  for (auto& sigma : level.collected) {
    SearchWitnessSummary summary = summarize(sigma, query.diagonal);
    result.witnesses.push_back({std::move(sigma), summary});
  }
  return result;
}

SearchResult run_search(const SearchQuery& query) {
  switch (query.mode) {
    case SearchMode::MinRows: return min_rows(query);
    case SearchMode::Count: return count_sigmas(query);
    case SearchMode::Enumerate: return enumerate_extremal(query);
  }
  throw Error(ErrorCode::BadArgument, "unknown search mode");
}

}  // namespace binsub
