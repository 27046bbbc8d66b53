#include "binsub/zlattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "binsub/combinatorics.hpp"

namespace binsub {

namespace mp = boost::multiprecision;

IntMatrix IntMatrix::zero(int rows, int cols) {
  IntMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
  return m;
}

IntMatrix IntMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m;
  m.rows = static_cast<int>(rows.size());
  m.cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m.cols) {
      throw Error(ErrorCode::LengthMismatch, "ragged matrix rows");
    }
    for (std::int64_t v : r) m.entries.emplace_back(v);
  }
  return m;
}

std::string LatticeImageStatus::to_string() const {
  switch (kind) {
    case Kind::Onto: return "Onto";
    case Kind::FiniteIndex: return "FiniteIndex(" + index.str() + ")";
    case Kind::InfiniteIndex:
      return "InfiniteIndex(rank " + std::to_string(rank) + ")";
  }
  return "?";
}

IntMatrix column_submatrix(const IntMatrix& m, std::span<const int> cols) {
  std::set<int> seen;
  for (int c : cols) {
    if (c < 0 || c >= m.cols) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "column index " + std::to_string(c) + " out of range", c);
    }
    if (!seen.insert(c).second) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "repeated column index " + std::to_string(c), c);
    }
  }
  IntMatrix out = IntMatrix::zero(m.rows, static_cast<int>(cols.size()));
  for (int r = 0; r < m.rows; ++r) {
    for (size_t j = 0; j < cols.size(); ++j) {
      out.at(r, static_cast<int>(j)) = m.at(r, cols[j]);
    }
  }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// smallest nonzero |entry| in the trailing submatrix, or {-1,-1}
std::pair<int, int> min_nonzero(const IntMatrix& m, int t) {
  int pi = -1, pj = -1;
  BigInt best = 0;
  for (int i = t; i < m.rows; ++i) {
    for (int j = t; j < m.cols; ++j) {
      const BigInt& v = m.at(i, j);
      if (v == 0) continue;
      BigInt a = mp::abs(v);
      if (pi < 0 || a < best) {
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return {pi, pj};
}

// floor division, denominator > 0
BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b < 0) q -= 1;
  return q;
}

}  // namespace

std::vector<BigInt> smith_divisors(IntMatrix m) {
  std::vector<BigInt> divisors;
  const int bound = std::min(m.rows, m.cols);
  for (int t = 0; t < bound; ++t) {
    auto [pi, pj] = min_nonzero(m, t);
    if (pi < 0) break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);
    for (;;) {
      // clear column t with truncated division; remainders stay below |pivot|
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        BigInt q = m.at(i, t) / m.at(t, t);
        if (q != 0) {
          for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
        }
      }
      // clear row t
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        BigInt q = m.at(t, j) / m.at(t, t);
        if (q != 0) {
          for (int i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
        }
      }
      bool dirty = false;
      for (int i = t + 1; i < m.rows && !dirty; ++i) dirty = m.at(i, t) != 0;
      for (int j = t + 1; j < m.cols && !dirty; ++j) dirty = m.at(t, j) != 0;
      if (dirty) {
        auto [qi, qj] = min_nonzero(m, t);
        swap_rows(m, t, qi);
        swap_cols(m, t, qj);
        continue;
      }
      // pivot must divide everything that remains, or the divisor chain breaks
      int bi = -1;
      for (int i = t + 1; i < m.rows && bi < 0; ++i) {
        for (int j = t + 1; j < m.cols; ++j) {
          if (m.at(i, j) % m.at(t, t) != 0) {
            bi = i;
            break;
          }
        }
      }
      if (bi >= 0) {
        for (int j = t; j < m.cols; ++j) m.at(t, j) += m.at(bi, j);
        continue;
      }
      break;
    }
    divisors.push_back(mp::abs(m.at(t, t)));
  }
  return divisors;
}

LatticeImageStatus lattice_status(const IntMatrix& m) {
  if (m.cols < 1) throw Error(ErrorCode::BadArgument, "need at least 1 column");
  std::vector<BigInt> d = smith_divisors(m);
  const int rank = static_cast<int>(d.size());
  if (rank < m.cols) return LatticeImageStatus::infinite(rank);
  BigInt index = 1;
  for (const BigInt& v : d) index *= v;
  if (index == 1) return LatticeImageStatus::onto(m.cols);
  return LatticeImageStatus::finite(m.cols, std::move(index));
}

int rank_f2(const IntMatrix& m) {
  if (m.cols > 64) {
    throw Error(ErrorCode::BadArgument, "rank_f2 needs cols <= 64");
  }
  std::vector<std::uint64_t> pivots;
  int rank = 0;
  for (int i = 0; i < m.rows; ++i) {
    std::uint64_t w = 0;
    for (int j = 0; j < m.cols; ++j) {
      if (m.at(i, j) % 2 != 0) w |= (std::uint64_t{1} << j);
    }
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

BigInt determinant(const IntMatrix& m) {
  if (m.rows != m.cols) {
    throw Error(ErrorCode::BadArgument, "determinant of non-square matrix");
  }
  const int n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      }
      if (piv < 0) return 0;
      swap_rows(a, k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  BigInt det = a.at(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

namespace {

IntMatrix select(const IntMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
  IntMatrix out = IntMatrix::zero(static_cast<int>(rows.size()),
                                  static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < cols.size(); ++j) {
      out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
    }
  }
  return out;
}

std::vector<int> iota_vec(int k) {
  std::vector<int> v(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = i;
  return v;
}

}  // namespace

LatticeImageStatus minor_gcd_oracle(const IntMatrix& m, int cap) {
  const int k = m.cols;
  if (k < 1) throw Error(ErrorCode::BadArgument, "need at least 1 column");
  if (k > cap) {
    throw Error(ErrorCode::CapExceeded,
                "minor oracle supports at most " + std::to_string(cap) +
                    " columns, got " + std::to_string(k),
                k, cap);
  }
  const std::vector<int> all_cols = iota_vec(k);
  BigInt g = 0;
  if (m.rows >= k) {
    std::vector<int> rows = iota_vec(k);
    do {
      BigInt d = determinant(select(m, rows, all_cols));
      g = mp::gcd(g, mp::abs(d));
      if (g == 1) break;
    } while (next_subset(rows, m.rows));
  }
  if (g == 1) return LatticeImageStatus::onto(k);
  if (g > 1) return LatticeImageStatus::finite(k, g);
  // all maximal minors vanish: determinantal rank
  for (int j = std::min(m.rows, k); j >= 1; --j) {
    std::vector<int> rows = iota_vec(j);
    do {
      std::vector<int> cols = iota_vec(j);
      do {
        if (determinant(select(m, rows, cols)) != 0) {
          return LatticeImageStatus::infinite(j);
        }
      } while (next_subset(cols, k));
    } while (next_subset(rows, m.rows));
  }
  return LatticeImageStatus::infinite(0);
}

IntMatrix hermite_form(const IntMatrix& m) {
  IntMatrix h = m;
  int r = 0;
  for (int col = 0; col < h.cols && r < h.rows; ++col) {
    // gcd elimination within this column, below row r
    for (;;) {
      int piv = -1;
      BigInt best = 0;
      for (int i = r; i < h.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        BigInt a = mp::abs(h.at(i, col));
        if (piv < 0 || a < best) {
          best = a;
          piv = i;
        }
      }
      if (piv < 0) break;
      swap_rows(h, r, piv);
      bool reduced = true;
      for (int i = r + 1; i < h.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        BigInt q = h.at(i, col) / h.at(r, col);
        if (q != 0) {
          for (int j = 0; j < h.cols; ++j) h.at(i, j) -= q * h.at(r, j);
        }
        if (h.at(i, col) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h.at(r, col) == 0) continue;
    if (h.at(r, col) < 0) {
      for (int j = 0; j < h.cols; ++j) h.at(r, j) = -h.at(r, j);
    }
    // normalize entries above the pivot into [0, pivot)
    for (int i = 0; i < r; ++i) {
      BigInt q = fdiv(h.at(i, col), h.at(r, col));
      if (q != 0) {
        for (int j = 0; j < h.cols; ++j) h.at(i, j) -= q * h.at(r, j);
      }
    }
    ++r;
  }
  IntMatrix out = IntMatrix::zero(r, h.cols);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < h.cols; ++j) out.at(i, j) = h.at(i, j);
  }
  return out;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.cols) return false;
  return hermite_form(a) == hermite_form(b);
}

}  // namespace binsub
