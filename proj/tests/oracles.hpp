#pragma once

// Test-only reference computations. Deliberately naive and independent of
// the library code paths they check.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Naive k-term sum, F_0 .. F_{n_max}.
inline std::vector<mpz_class> terms(const std::vector<mpz_class>& init, std::int64_t n_max) {
  const auto k = static_cast<std::int64_t>(init.size());
  std::vector<mpz_class> f;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (n < k) {
      f.push_back(init[static_cast<std::size_t>(n)]);
      continue;
    }
    mpz_class s = 0;
    for (std::int64_t i = 1; i <= k; ++i) s += f[static_cast<std::size_t>(n - i)];
    f.push_back(s);
  }
  return f;
}

inline std::vector<mpz_class> unit(int k, int j) {
  std::vector<mpz_class> v(static_cast<std::size_t>(k), 0);
  v[static_cast<std::size_t>(j)] = 1;
  return v;
}

inline std::vector<mpz_class> basis(int k, int j, std::int64_t n_max) { return terms(unit(k, j), n_max); }

inline std::vector<mpz_class> ones(int k, std::int64_t n_max) {
  return terms(std::vector<mpz_class>(static_cast<std::size_t>(k), 1), n_max);
}

/// 2-adic order by repeated halving; nullopt for zero.
inline std::optional<std::uint64_t> v2(mpz_class x) {
  if (x == 0) return std::nullopt;
  if (x < 0) x = -x;
  std::uint64_t v = 0;
  while (mpz_even_p(x.get_mpz_t())) {
    x /= 2;
    ++v;
  }
  return v;
}

inline mpz_class binomial(unsigned long m, unsigned long n) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), m, n);
  return out;
}

inline mpz_class factorial(unsigned long n) {
  mpz_class out = 1;
  for (unsigned long i = 2; i <= n; ++i) out *= i;
  return out;
}

inline std::vector<mpz_class> random_init(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<mpz_class> v;
  for (int i = 0; i < k; ++i) v.emplace_back(d(rng));
  return v;
}

}  // namespace oracle
