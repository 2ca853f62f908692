#include "gfib/padic.hpp"

#include <bit>

namespace gfib {

std::uint64_t Valuation::value() const {
  if (infinite_) throw DomainError("infinite valuation has no finite value");
  return value_;
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

namespace padic {

std::uint64_t v2(std::int64_t x) {
  if (x == 0) throw DomainError("zero has infinite valuation");
  // Two's complement keeps the trailing zeros of -x equal to those of x.
  return static_cast<std::uint64_t>(std::countr_zero(static_cast<std::uint64_t>(x)));
}

std::uint64_t v2(const BigInt& x) {
  if (sgn(x) == 0) throw DomainError("zero has infinite valuation");
  // mpz_scan1 works on the magnitude limbs, so the sign is ignored.
  return mpz_scan1(x.get_mpz_t(), 0);
}

Valuation v2_or_infinite(std::int64_t x) {
  return x == 0 ? Valuation::infinite() : Valuation::finite(v2(x));
}

Valuation v2_or_infinite(const BigInt& x) {
  return sgn(x) == 0 ? Valuation::infinite() : Valuation::finite(v2(x));
}

Valuation v2_of_word(std::uint64_t x) {
  if (x == 0) return Valuation::infinite();
  return Valuation::finite(static_cast<std::uint64_t>(std::countr_zero(x)));
}

std::uint64_t s2(std::uint64_t n) { return static_cast<std::uint64_t>(std::popcount(n)); }

std::uint64_t s2(const BigInt& n) {
  if (sgn(n) < 0) throw DomainError("digit sum of a negative integer");
  return mpz_popcount(n.get_mpz_t());
}

std::uint64_t v2_factorial(std::uint64_t n) { return n - s2(n); }

std::uint64_t v2_binomial(std::uint64_t m, std::uint64_t n) {
  if (n > m) throw DomainError("v2_binomial requires n <= m");
  return s2(n) + s2(m - n) - s2(m);
}

std::uint64_t v2_binomial(const BigInt& m, const BigInt& n) {
  if (sgn(n) < 0 || n > m) throw DomainError("v2_binomial requires 0 <= n <= m");
  const BigInt diff = m - n;
  return s2(n) + s2(diff) - s2(m);
}

}  // namespace padic
}  // namespace gfib
