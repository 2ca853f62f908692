#include "gfib/bigint.hpp"

#include <cctype>

namespace gfib {

BigInt pow2(std::uint64_t exponent) {
  BigInt out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), exponent);
  return out;
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw DomainError("not an integer: '" + s + "'");
  for (std::size_t p = i; p < s.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(s[p]))) {
      throw DomainError("not an integer: '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  BigInt out;
  if (mpz_set_str(out.get_mpz_t(), s.c_str(), 10) != 0) {
    throw DomainError("not an integer: '" + s + "'");
  }
  return out;
}

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

}  // namespace gfib
