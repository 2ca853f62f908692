#pragma once

// Explicit finite-sum formulas for S_n(k), B_n(k,j) and F_n(k), plus the
// piecewise expressions for B_n(k,j) on k <= n <= 3k+j+2.
//
// All three sums share one shape:
//
//   sum_{i=1}^{U} (-1)^i C(top - i k, i - 1) 2^{exp - i(k+1)}
//
// with (top, exp, U) = (n, n+1, floor((n+1)/(k+1))) for the S family and
// (n-j-1, n-j, floor((n-j)/(k+1))) for the shifted B family.

#include <cstdint>
#include <vector>

#include "gfib/bigint.hpp"
#include "gfib/engine.hpp"

namespace gfib {

struct BinomialSumTerm {
  std::int64_t i;
  int sign;  // (-1)^i
  std::int64_t binom_top;
  std::int64_t binom_bottom;
  std::uint64_t pow2_exp;

  BigInt value() const;
};

namespace closedform {

/// C(top, bottom) by multiplicative descent; zero outside 0 <= bottom <= top.
BigInt binomial(std::int64_t top, std::int64_t bottom);

/// Terms of sum_{i=1}^{upper} (-1)^i C(top - ik, i-1) 2^{exp - i(k+1)}.
/// An upper bound below 1 yields no terms.
std::vector<BinomialSumTerm> sum_terms(int k, std::int64_t top, std::int64_t exp, std::int64_t upper);
BigInt evaluate(const std::vector<BinomialSumTerm>& terms);

/// S_n(k) = 1 - (k-1) * [S family sum].
BigInt s_closed(int k, std::int64_t n);

/// B_n(k,j) for n >= j+1; throws DomainError for n <= j.
BigInt b_closed(int k, int j, std::int64_t n);

/// F_n(k) for n >= k; F_k is recomputed as the sum of the initial terms.
BigInt f_closed(const SequenceSpec& spec, std::int64_t n);

/// Which piece of the piecewise formula covers n, 1..5, or 0 if none.
int piecewise_branch(int k, int j, std::int64_t n);

/// B_n(k,j) from the piecewise formula on k <= n <= 3k+j+2.
BigInt b_piecewise(int k, int j, std::int64_t n);

}  // namespace closedform
}  // namespace gfib
