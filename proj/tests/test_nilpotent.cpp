#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binsub/nilpotent.hpp"
#include "oracles.hpp"

using namespace binsub;

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(3) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(49) == 0);
  CHECK(mobius(97) == -1);
  CHECK_THROWS_AS(mobius(0), Error);
}

TEST_CASE("witt values for k=2") {
  CHECK(witt(1, 2) == 2);
  CHECK(witt(2, 2) == 1);
  CHECK(witt(3, 2) == 2);
  CHECK(witt(4, 2) == 3);
  CHECK(witt(5, 2) == 6);
  CHECK(witt(6, 2) == 9);
}

TEST_CASE("witt counts binary Lyndon words") {
  for (int n = 1; n <= 14; ++n) {
    CHECK(witt(n, 2) == testing::count_binary_lyndon_words(n));
  }
}

TEST_CASE("necklace identity k^n = sum of d * W_d(k) over divisors") {
  for (int k = 1; k <= 6; ++k) {
    for (int n = 1; n <= 12; ++n) {
      BigInt sum = 0;
      for (int d = 1; d <= n; ++d) {
        if (n % d == 0) sum += d * witt(d, k);
      }
      BigInt expected = 1;
      for (int i = 0; i < n; ++i) expected *= k;
      CHECK(sum == expected);
    }
  }
}

TEST_CASE("hirsch lengths") {
  CHECK(hirsch(2, 1) == 2);
  CHECK(hirsch(2, 2) == 3);
  CHECK(hirsch(2, 3) == 5);
  CHECK(hirsch(12, 2) == 78);
  for (int k = 2; k <= 6; ++k) {
    for (int c = 1; c <= 9; ++c) {
      CHECK(hirsch(k, c + 1) > hirsch(k, c));
      CHECK(hirsch(k + 1, c) > hirsch(k, c));
    }
  }
}

TEST_CASE("p_c evaluations") {
  CHECK(poly_pc(1, BigRat(4)) == BigRat(2));
  CHECK(poly_pc(2, BigRat(3)) == BigRat(12));
  CHECK(poly_pc(3, BigRat(2)) == BigRat(7));
  // rational point: p_1(1/2) = (1/2)/2
  CHECK(poly_pc(1, BigRat(1, 2)) == BigRat(1, 4));
}

TEST_CASE("max_m_for") {
  CHECK(max_m_for(4, 1) == 2);
  CHECK(max_m_for(2, 1) == 1);
  CHECK(max_m_for(12, 1) == 6);
  CHECK(max_m_for(12, 2) == 78);
  // monotone in d everywhere; monotone in c only from d = 3 (the d = 2
  // sequence runs 1, 3, 2, ... because the Witt denominator outpaces h)
  for (int d = 2; d <= 8; ++d) {
    for (int c = 1; c <= 6; ++c) {
      if (d >= 3) CHECK(max_m_for(d, c + 1) >= max_m_for(d, c));
      CHECK(max_m_for(d + 1, c) >= max_m_for(d, c));
    }
  }
  CHECK(max_m_for(2, 2) == 3);
  CHECK(max_m_for(2, 3) == 2);
}

TEST_CASE("excluded_classes") {
  CHECK(excluded_classes(12, 18) == 2);  // c=1 allows only m <= 6
  CHECK(excluded_classes(4, 2) == 1);    // nothing excluded
  CHECK(excluded_classes(2, 3) == 2);
  CHECK_THROWS_AS(excluded_classes(1, 5), Error);
  // crossover is exact: m fits at the returned class, not below it
  for (int d = 3; d <= 12; ++d) {
    for (int m = 2; m <= 40; ++m) {
      int c = excluded_classes(d, m);
      CHECK(BigInt(m) <= max_m_for(d, c));
      if (c > 1) CHECK(BigInt(m) > max_m_for(d, c - 1));
    }
  }
}
