#include "gfib/closedform.hpp"

#include <string>

namespace gfib {

BigInt BinomialSumTerm::value() const {
  BigInt v = closedform::binomial(binom_top, binom_bottom);
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), pow2_exp);
  return sign < 0 ? BigInt(-v) : v;
}

namespace closedform {

namespace {

void check_kj(int k, int j) {
  if (k < 2) throw DomainError("order k must be >= 2");
  if (j < 0 || j >= k) throw DomainError("j must satisfy 0 <= j <= k-1");
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

BigInt s_family(int k, std::int64_t n) {
  return evaluate(sum_terms(k, n, n + 1, floor_div(n + 1, k + 1)));
}

BigInt shifted_family(int k, int j, std::int64_t n) {
  return evaluate(sum_terms(k, n - j - 1, n - j, floor_div(n - j, k + 1)));
}

}  // namespace

BigInt binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  if (bottom > top - bottom) bottom = top - bottom;
  BigInt out = 1;
  for (std::int64_t i = 0; i < bottom; ++i) {
    out *= static_cast<unsigned long>(top - i);
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return out;
}

std::vector<BinomialSumTerm> sum_terms(int k, std::int64_t top, std::int64_t exp, std::int64_t upper) {
  std::vector<BinomialSumTerm> terms;
  for (std::int64_t i = 1; i <= upper; ++i) {
    const std::int64_t e = exp - i * (k + 1);
    if (e < 0) throw InternalError("negative power of two in binomial sum");
    terms.push_back({i, (i % 2 == 0) ? 1 : -1, top - i * k, i - 1, static_cast<std::uint64_t>(e)});
  }
  return terms;
}

BigInt evaluate(const std::vector<BinomialSumTerm>& terms) {
  BigInt sum = 0;
  for (const auto& t : terms) sum += t.value();
  return sum;
}

BigInt s_closed(int k, std::int64_t n) {
  if (k < 2) throw DomainError("order k must be >= 2");
  if (n < 0) throw DomainError("s_closed requires n >= 0");
  return 1 - (k - 1) * s_family(k, n);
}

BigInt b_closed(int k, int j, std::int64_t n) {
  check_kj(k, j);
  if (n < j + 1) {
    throw DomainError("closed form for B_n(k,j) requires n >= j+1 (n=" + std::to_string(n) +
                      ", j=" + std::to_string(j) + ")");
  }
  return shifted_family(k, j, n) - s_family(k, n);
}

BigInt f_closed(const SequenceSpec& spec, std::int64_t n) {
  const int k = spec.k();
  if (n < k) throw DomainError("closed form for F_n requires n >= k");
  BigInt out = -spec.first_sum() * s_family(k, n);
  for (int j = 0; j < k; ++j) {
    const auto& c = spec.init()[static_cast<std::size_t>(j)];
    if (sgn(c) != 0) out += c * shifted_family(k, j, n);
  }
  return out;
}

int piecewise_branch(int k, int j, std::int64_t n) {
  check_kj(k, j);
  if (k <= n && n <= k + j) return 1;
  if (k + j + 1 <= n && n <= 2 * k) return 2;
  if (2 * k + 1 <= n && n <= 2 * k + j + 1) return 3;
  if (2 * k + j + 2 <= n && n <= 3 * k + 1) return 4;
  if (3 * k + 2 <= n && n <= 3 * k + j + 2) return 5;
  return 0;
}

BigInt b_piecewise(int k, int j, std::int64_t n) {
  const int branch = piecewise_branch(k, j, n);
  if (branch == 0) {
    throw DomainError("n=" + std::to_string(n) + " outside the piecewise range [k, 3k+j+2]");
  }
  auto p2 = [](std::int64_t e) { return pow2(static_cast<std::uint64_t>(e)); };
  BigInt out = p2(n - k);
  if (branch >= 2) out -= p2(n - k - j - 1);
  if (branch >= 3) out -= from_int(n - 2 * k) * p2(n - 2 * k - 1);
  if (branch >= 4) out += from_int(n - 2 * k - j - 1) * p2(n - 2 * k - j - 2);
  if (branch >= 5) {
    // (n-3k-1)(n-3k) is a product of consecutive integers.
    BigInt tri = from_int(n - 3 * k - 1) * from_int(n - 3 * k);
    mpz_divexact_ui(tri.get_mpz_t(), tri.get_mpz_t(), 2);
    out += tri * p2(n - 3 * k - 2);
  }
  return out;
}

}  // namespace closedform
}  // namespace gfib
