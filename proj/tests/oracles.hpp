#pragma once

// Test-only oracles: brute-force counterparts of the production algorithms.
// Everything here is written from the definitions, independent of the main
// code paths it checks.

#include <cstdint>
#include <random>
#include <vector>

#include "binsub/combinatorics.hpp"
#include "binsub/search.hpp"
#include "binsub/sigma.hpp"
#include "binsub/zlattice.hpp"

namespace binsub::testing {

inline IntMatrix random_binary_matrix(std::mt19937_64& rng, int max_dim) {
  const int rows = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_dim));
  const int cols = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_dim));
  IntMatrix m = IntMatrix::zero(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<int>(rng() & 1u);
  }
  return m;
}

inline SubgroupModel random_model(std::mt19937_64& rng, int max_m, int max_r,
                                  int max_l) {
  for (;;) {
    const int m = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_m - 1));
    const int r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_r));
    int l_min = 1;
    while ((std::uint64_t{1} << l_min) - 1 < static_cast<std::uint64_t>(m)) ++l_min;
    if (l_min > max_l) continue;
    const int l = l_min + static_cast<int>(rng() % static_cast<std::uint64_t>(max_l - l_min + 1));
    const std::uint64_t cap = (std::uint64_t{1} << l) - 1;
    SigmaSpec spec;
    spec.m = m;
    for (int i = 0; i < r; ++i) {
      std::vector<std::uint64_t> sigma;
      while (static_cast<int>(sigma.size()) < m) {
        std::uint64_t v = 1 + rng() % cap;
        bool seen = false;
        for (std::uint64_t u : sigma) seen = seen || u == v;
        if (!seen) sigma.push_back(v);
      }
      spec.sigmas.push_back(std::move(sigma));
    }
    return make_model(std::move(spec), (rng() & 1u) != 0);
  }
}

// Lyndon words: strings strictly smaller than all their proper rotations.
inline long long count_binary_lyndon_words(int n) {
  long long count = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    bool lyndon = true;
    for (int s = 1; s < n && lyndon; ++s) {
      std::uint64_t rot =
          ((w >> s) | (w << (n - s))) & ((std::uint64_t{1} << n) - 1);
      if (rot <= w) lyndon = false;
    }
    if (lyndon) ++count;
  }
  return count;
}

// Direct check of one subset target, straight from the definitions.
inline bool naive_subset_passes(const std::vector<std::uint64_t>& values,
                                int rows, bool diagonal, SurjTarget target) {
  const int k = static_cast<int>(values.size());
  IntMatrix m = IntMatrix::zero(rows + (diagonal ? 1 : 0), k);
  for (int j = 0; j < rows; ++j) {
    for (int i = 0; i < k; ++i) {
      if ((values[static_cast<size_t>(i)] >> j) & 1u) m.at(j, i) = 1;
    }
  }
  if (diagonal) {
    for (int i = 0; i < k; ++i) m.at(rows, i) = 1;
  }
  switch (target) {
    case SurjTarget::OverF2: return rank_f2(m) == k;
    case SurjTarget::OverZ: return lattice_status(m).is_onto();
    case SurjTarget::VirtualOverZ: return lattice_status(m).is_finite_or_onto();
  }
  return false;
}

inline bool naive_sigma_passes(const std::vector<std::uint64_t>& sigma, int l,
                               int k, bool diagonal, SurjTarget target) {
  const int m = static_cast<int>(sigma.size());
  std::vector<int> pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  do {
    std::vector<std::uint64_t> values;
    for (int i : pick) values.push_back(sigma[static_cast<size_t>(i)]);
    if (!naive_subset_passes(values, l, diagonal, target)) return false;
  } while (next_subset(pick, m));
  return true;
}

// Unpruned enumeration of every canonical sigma at one row count.
inline long long naive_count(int m, int l, int k, bool diagonal,
                             SurjTarget target,
                             std::vector<std::vector<std::uint64_t>>* found =
                                 nullptr) {
  const std::uint64_t cap = (std::uint64_t{1} << l) - 1;
  if (cap < static_cast<std::uint64_t>(m)) return 0;
  std::vector<int> pick(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) pick[static_cast<size_t>(i)] = i;
  long long count = 0;
  do {
    std::vector<std::uint64_t> sigma;
    for (int i : pick) sigma.push_back(static_cast<std::uint64_t>(i + 1));
    if (naive_sigma_passes(sigma, l, k, diagonal, target)) {
      ++count;
      if (found) found->push_back(sigma);
    }
  } while (next_subset(pick, static_cast<int>(cap)));
  return count;
}

// Smallest row count whose naive count is positive, up to max_l.
inline std::optional<int> naive_min_rows(int m, int k, bool diagonal,
                                         SurjTarget target, int max_l) {
  for (int l = 1; l <= max_l; ++l) {
    if (naive_count(m, l, k, diagonal, target) > 0) return l;
  }
  return std::nullopt;
}

}  // namespace binsub::testing
