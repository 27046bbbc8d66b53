#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "binsub/errors.hpp"
#include "binsub/zlattice.hpp"

namespace binsub {

using BigRat = boost::multiprecision::cpp_rational;

// Standard Moebius function; 0 on arguments with a squared prime factor.
int mobius(std::uint64_t n);

// W_n(k) = (1/n) * sum over d | n of mobius(d) * k^(n/d).
// The division is always exact; a remainder would mean the formula itself
// was evaluated wrongly and raises InternalError.
BigInt witt(int n, int k);

// h(k,c) = sum of W_i(k) for i = 1..c.
BigInt hirsch(int k, int c);

// p_c(t) = (1/W_c(2)) * (t + t^2 + ... + t^c), over exact rationals.
BigRat poly_pc(int c, const BigRat& t);

// Largest m compatible with a d-generator subgroup containing the c-th
// lower-central term of a finite-index subgroup: floor(h(d,c) / W_c(2)).
BigInt max_m_for(int d, int c);

// Smallest c with m <= max_m_for(d, c); containment of gamma_c is ruled out
// for every smaller c. Needs d >= 2.
int excluded_classes(int d, int m);

}  // namespace binsub
