#include <doctest.h>

#include <random>

#include "gfib/closedform.hpp"
#include "gfib/engine.hpp"
#include "oracles.hpp"

using gfib::BigInt;
using gfib::DomainError;
using gfib::SequenceSpec;
namespace cf = gfib::closedform;
namespace engine = gfib::engine;

TEST_CASE("binomial by multiplicative descent") {
  for (unsigned long m = 0; m <= 120; ++m) {
    for (unsigned long n = 0; n <= m; ++n) {
      REQUIRE(cf::binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)) == oracle::binomial(m, n));
    }
  }
  CHECK(cf::binomial(5, -1) == 0);
  CHECK(cf::binomial(5, 6) == 0);
  CHECK(cf::binomial(-1, 0) == 0);
  CHECK(cf::binomial(1000000000, 3) == oracle::binomial(1000000000, 3));
}

TEST_CASE("sum terms carry sign and exponent of their family") {
  const int k = 3;
  const std::int64_t n = 40;
  const auto terms = cf::sum_terms(k, n, n + 1, (n + 1) / (k + 1));
  REQUIRE(terms.size() == 10);
  for (const auto& t : terms) {
    CHECK(t.sign == (t.i % 2 == 0 ? 1 : -1));
    CHECK(t.pow2_exp == static_cast<std::uint64_t>(n + 1 - t.i * (k + 1)));
    CHECK(t.binom_top == n - t.i * k);
    CHECK(t.binom_bottom == t.i - 1);
  }
  CHECK(cf::sum_terms(k, 2, 3, 0).empty());
  CHECK(cf::evaluate({}) == 0);
}

TEST_CASE("closed form for S") {
  CHECK(cf::s_closed(3, 2) == 1);
  CHECK(cf::s_closed(3, 7) == 31);
  CHECK(cf::s_closed(2, 5) == 8);
  CHECK_THROWS_AS(cf::s_closed(3, -1), DomainError);
  for (int k = 2; k <= 8; ++k) {
    const auto s = oracle::ones(k, 150);
    for (std::int64_t n = 0; n <= 150; ++n) REQUIRE(cf::s_closed(k, n) == s[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("closed form for B") {
  CHECK(cf::b_closed(3, 0, 1) == 0);
  CHECK(cf::b_closed(3, 0, 9) == 24);
  CHECK(cf::b_closed(4, 2, 5) == 2);
  CHECK_THROWS_AS(cf::b_closed(3, 1, 1), DomainError);
  CHECK_THROWS_AS(cf::b_closed(3, 3, 9), DomainError);
  for (int k = 2; k <= 8; ++k) {
    for (int j = 0; j < k; ++j) {
      const auto b = oracle::basis(k, j, 150);
      for (std::int64_t n = j + 1; n <= 150; ++n) REQUIRE(cf::b_closed(k, j, n) == b[static_cast<std::size_t>(n)]);
      // Both sums are empty on j+1 <= n <= k-1.
      for (std::int64_t n = j + 1; n <= k - 1; ++n) CHECK(cf::b_closed(k, j, n) == 0);
    }
  }
}

TEST_CASE("closed form for B agrees with the S-difference form") {
  for (int k = 2; k <= 8; ++k) {
    const auto s = engine::generate(engine::ones_spec(k), 300);
    for (int j = 0; j < k; ++j) {
      for (std::int64_t n = j + 1; n <= 300; n += 3) REQUIRE(cf::b_closed(k, j, n) == engine::b_via_s(s, j, n));
    }
  }
}

TEST_CASE("closed form for general F") {
  CHECK(cf::f_closed(SequenceSpec(2, {2, 5}), 5) == 31);
  CHECK(cf::f_closed(engine::ones_spec(3), 7) == 31);
  CHECK(cf::f_closed(engine::basis_spec(3, 0), 9) == 24);
  CHECK_THROWS_AS(cf::f_closed(engine::ones_spec(3), 2), DomainError);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const int k = 2 + static_cast<int>(rng() % 7);
    const auto init = oracle::random_init(rng, k);
    const SequenceSpec spec(k, init);
    const auto ref = oracle::terms(init, 150);
    for (std::int64_t n = k; n <= 150; ++n) {
      REQUIRE(cf::f_closed(spec, n) == ref[static_cast<std::size_t>(n)]);
      BigInt combo = 0;
      for (int j = 0; j < k; ++j) combo += init[static_cast<std::size_t>(j)] * cf::b_closed(k, j, n);
      REQUIRE(cf::f_closed(spec, n) == combo);
    }
  }
}

TEST_CASE("piecewise B on k <= n <= 3k+j+2") {
  CHECK(cf::b_piecewise(4, 2, 5) == 2);
  CHECK(cf::b_piecewise(3, 0, 5) == 2);
  CHECK(cf::b_piecewise(3, 1, 8) == 20);
  CHECK_THROWS_AS(cf::b_piecewise(3, 1, 2), DomainError);
  CHECK_THROWS_AS(cf::b_piecewise(3, 1, 3 * 3 + 1 + 3), DomainError);

  for (int k = 2; k <= 12; ++k) {
    for (int j = 0; j < k; ++j) {
      const auto b = oracle::basis(k, j, 3 * k + j + 2);
      int prev = 1;
      for (std::int64_t n = k; n <= 3 * k + j + 2; ++n) {
        const int branch = cf::piecewise_branch(k, j, n);
        // Branches tile the range in order without gaps.
        REQUIRE(branch >= prev);
        REQUIRE(branch <= prev + 1);
        prev = branch;
        REQUIRE(cf::b_piecewise(k, j, n) == b[static_cast<std::size_t>(n)]);
        if (branch == 5) CHECK((n - 3 * k - 1) * (n - 3 * k) % 2 == 0);
      }
      CHECK(cf::piecewise_branch(k, j, k - 1) == 0);
      CHECK(cf::piecewise_branch(k, j, 3 * k + j + 3) == 0);
    }
  }
}
