#pragma once

// 2-adic primitives: binary digit sums, 2-adic orders, and the
// factorial/binomial valuation identities built on them.

#include <compare>
#include <cstdint>
#include <string>

#include "gfib/bigint.hpp"

namespace gfib {

/// 2-adic order of an integer; zero maps to the infinite valuation.
///
/// Infinite compares greater than every finite value, so side conditions
/// such as "v2(a) <= 4" are false and "v2(a) >= 2" true for a = 0.
class Valuation {
 public:
  static constexpr Valuation infinite() { return Valuation(true, 0); }
  static constexpr Valuation finite(std::uint64_t v) { return Valuation(false, v); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Throws DomainError when infinite.
  std::uint64_t value() const;

  std::string to_string() const;

  constexpr bool operator==(const Valuation&) const = default;
  constexpr std::strong_ordering operator<=>(const Valuation& o) const {
    if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(std::uint64_t v) const { return !infinite_ && value_ == v; }
  constexpr std::strong_ordering operator<=>(std::uint64_t v) const {
    if (infinite_) return std::strong_ordering::greater;
    return value_ <=> v;
  }

 private:
  constexpr Valuation(bool inf, std::uint64_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::uint64_t value_;
};

namespace padic {

/// Largest v with 2^v | x; sign ignored. Throws DomainError for x = 0.
std::uint64_t v2(std::int64_t x);
std::uint64_t v2(const BigInt& x);

Valuation v2_or_infinite(std::int64_t x);
Valuation v2_or_infinite(const BigInt& x);
/// Word-sized unsigned argument, used by the scale-free predictors.
Valuation v2_of_word(std::uint64_t x);

/// Number of ones in the binary expansion of n.
std::uint64_t s2(std::uint64_t n);
/// Throws DomainError for negative n.
std::uint64_t s2(const BigInt& n);

/// v2(n!) = n - s2(n).
std::uint64_t v2_factorial(std::uint64_t n);

/// v2(C(m, n)) = s2(n) + s2(m - n) - s2(m), without forming the binomial.
/// Throws DomainError when n > m.
std::uint64_t v2_binomial(std::uint64_t m, std::uint64_t n);
std::uint64_t v2_binomial(const BigInt& m, const BigInt& n);

}  // namespace padic
}  // namespace gfib
