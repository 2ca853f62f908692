#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gfib {

/// Signed arbitrary-precision integer used for every sequence term.
using BigInt = mpz_class;

/// Precondition failures on caller-supplied arguments.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an identity that must hold exactly fails; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt pow2(std::uint64_t exponent);

/// Parses an optionally signed decimal integer; throws DomainError on junk.
BigInt parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& x);

inline BigInt from_int(std::int64_t v) {
  BigInt out;
  if (v >= 0) {
    mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(v));
  } else {
    mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
  }
  return out;
}

inline BigInt from_uint(std::uint64_t v) {
  BigInt out;
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(v));
  return out;
}

}  // namespace gfib
