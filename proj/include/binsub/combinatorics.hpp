#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace binsub {

// C(n,k) for n <= 64; every value fits in a 64-bit word.
inline std::uint64_t binomial(int n, int k) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int i = 0; i <= 64; ++i) {
      t[static_cast<size_t>(i)][0] = 1;
      for (int j = 1; j <= i; ++j) {
        t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            t[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
            t[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
      }
    }
    return t;
  }();
  if (k < 0 || k > n || n < 0 || n > 64) return 0;
  return table[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

// Advance an ascending k-subset of {0..n-1} to its lexicographic successor.
inline bool next_subset(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<size_t>(i)] < n - k + i) {
      ++c[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

// idx-th ascending k-subset of {0..m-1} in lexicographic order.
inline std::vector<int> unrank_subset(std::uint64_t idx, int m, int k) {
  std::vector<int> out(static_cast<size_t>(k));
  int v = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (;; ++v) {
      std::uint64_t cnt = binomial(m - 1 - v, k - 1 - pos);
      if (idx < cnt) break;
      idx -= cnt;
    }
    out[static_cast<size_t>(pos)] = v++;
  }
  return out;
}

}  // namespace binsub
