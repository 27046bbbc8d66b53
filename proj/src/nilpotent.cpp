#include "binsub/nilpotent.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace binsub {

int mobius(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::BadArgument, "mobius needs n >= 1");
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

namespace {

BigInt ipow(int base, int exp) {
  BigInt r = 1, b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// cached by (n,k); callers may hit this concurrently
std::mutex witt_mutex;
std::map<std::pair<int, int>, BigInt> witt_cache;

}  // namespace

BigInt witt(int n, int k) {
  if (n < 1 || k < 1) throw Error(ErrorCode::BadArgument, "witt needs n,k >= 1");
  {
    std::lock_guard<std::mutex> lock(witt_mutex);
    auto it = witt_cache.find({n, k});
    if (it != witt_cache.end()) return it->second;
  }
  BigInt sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(static_cast<std::uint64_t>(d));
    if (mu == 0) continue;
    sum += mu * ipow(k, n / d);
  }
  if (sum % n != 0) {
    throw InternalError("witt(" + std::to_string(n) + "," + std::to_string(k) +
                        "): non-integral value");
  }
  BigInt w = sum / n;
  std::lock_guard<std::mutex> lock(witt_mutex);
  witt_cache.emplace(std::make_pair(n, k), w);
  return w;
}

BigInt hirsch(int k, int c) {
  if (k < 1 || c < 1) throw Error(ErrorCode::BadArgument, "hirsch needs k,c >= 1");
  BigInt h = 0;
  for (int i = 1; i <= c; ++i) h += witt(i, k);
  return h;
}

BigRat poly_pc(int c, const BigRat& t) {
  if (c < 1) throw Error(ErrorCode::BadArgument, "poly_pc needs c >= 1");
  BigRat sum = 0;
  BigRat power = 1;
  for (int i = 1; i <= c; ++i) {
    power *= t;
    sum += power;
  }
  return sum / BigRat(witt(c, 2));
}

BigInt max_m_for(int d, int c) {
  if (d < 2 || c < 1) {
    throw Error(ErrorCode::BadArgument, "max_m_for needs d >= 2, c >= 1");
  }
  return hirsch(d, c) / witt(c, 2);
}

int excluded_classes(int d, int m) {
  if (d < 2 || m < 2) {
    throw Error(ErrorCode::BadArgument, "excluded_classes needs d >= 2, m >= 2");
  }
  // max_m_for(d, .) eventually dominates any fixed m when d >= 3; for d = 2
  // it plateaus, but d = 2 only arises with m <= 3 which resolves at c = 2.
  constexpr int kClassCap = 512;
  for (int c = 1; c <= kClassCap; ++c) {
    if (BigInt(m) <= max_m_for(d, c)) return c;
  }
  throw InternalError("excluded_classes(" + std::to_string(d) + "," +
                      std::to_string(m) + ") did not stabilize");
}

}  // namespace binsub
