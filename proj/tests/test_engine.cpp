#include <doctest.h>

#include <random>

#include "gfib/engine.hpp"
#include "oracles.hpp"

using gfib::BigInt;
using gfib::DomainError;
using gfib::SequenceSpec;
using gfib::SequenceWindow;
namespace engine = gfib::engine;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<BigInt> collect(const SequenceWindow& w) { return {w.terms().begin(), w.terms().end()}; }

}  // namespace

TEST_CASE("SequenceSpec validation") {
  CHECK_THROWS_AS(SequenceSpec(1, ints({1})), DomainError);
  CHECK_THROWS_AS(SequenceSpec(3, ints({1, 2})), DomainError);
  CHECK_NOTHROW(SequenceSpec(2, ints({0, 1})));
  CHECK(SequenceSpec(3, ints({1, 2, 3})).first_sum() == 6);
}

TEST_CASE("generate") {
  CHECK(collect(engine::generate(SequenceSpec(3, ints({1, 0, 0})), 9)) == ints({1, 0, 0, 1, 1, 2, 4, 7, 13, 24}));
  CHECK(collect(engine::generate(SequenceSpec(3, ints({1, 1, 1})), 7)) == ints({1, 1, 1, 3, 5, 9, 17, 31}));
  CHECK(collect(engine::generate(SequenceSpec(4, ints({0, 1, 1, 1})), 7)) == ints({0, 1, 1, 1, 3, 6, 11, 21}));
  CHECK(collect(engine::generate(SequenceSpec(4, ints({0, 1, 1, 1})), 1)) == ints({0, 1}));
  CHECK_THROWS_AS(engine::generate(engine::ones_spec(3), -1), DomainError);
}

TEST_CASE("generate matches the naive k-term sum") {
  std::mt19937_64 rng(3);
  for (int k = 2; k <= 8; ++k) {
    const auto init = oracle::random_init(rng, k);
    const auto w = engine::generate(SequenceSpec(k, init), 300);
    const auto ref = oracle::terms(init, 300);
    for (std::int64_t n = 0; n <= 300; ++n) REQUIRE(w[n] == ref[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("named initial vectors") {
  CHECK(engine::basis_spec(3, 0).init() == ints({1, 0, 0}));
  CHECK(engine::basis_spec(3, 2).init() == ints({0, 0, 1}));
  CHECK(engine::basis_spec(2, 1).init() == ints({0, 1}));
  CHECK_THROWS_AS(engine::basis_spec(3, 3), DomainError);
  CHECK_THROWS_AS(engine::basis_spec(3, -1), DomainError);
  CHECK(engine::ones_spec(4).init() == ints({1, 1, 1, 1}));
  CHECK(engine::t_spec(3).init() == ints({0, 1, 1}));
  CHECK(engine::t_spec(2).init() == ints({0, 1}));
}

TEST_CASE("extend_backward") {
  const auto s4 = engine::extend_backward(engine::ones_spec(4), 4);
  CHECK(s4.start() == -4);
  CHECK(s4[-1] == -2);
  CHECK(s4[-2] == 1);
  CHECK(s4[-3] == 1);
  CHECK(s4[-4] == 1);
  CHECK(engine::extend_backward(engine::ones_spec(4), 1)[-1] == -2);
  CHECK(engine::extend_backward(engine::basis_spec(3, 0), 1)[-1] == -1);
  CHECK_THROWS_AS(engine::extend_backward(engine::ones_spec(3), 0), DomainError);

  for (int k = 2; k <= 8; ++k) {
    const auto w = engine::extend_backward(engine::ones_spec(k), k);
    CHECK(w[-1] == -(k - 2));
    for (int d = 2; d <= k; ++d) CHECK(w[-d] == 1);
  }
}

TEST_CASE("windows satisfy the recurrence across negative indices") {
  std::mt19937_64 rng(5);
  for (int k = 2; k <= 6; ++k) {
    const SequenceSpec spec(k, oracle::random_init(rng, k));
    const auto w = engine::window(spec, -40, 60);
    CHECK(w.start() == -40);
    CHECK(w.end() == 61);
    for (std::int64_t n = w.start() + k; n < w.end(); ++n) {
      BigInt sum = 0;
      for (int i = 1; i <= k; ++i) sum += w[n - i];
      REQUIRE(w[n] == sum);
    }
    for (int i = 0; i < k; ++i) CHECK(w[i] == spec.init()[static_cast<std::size_t>(i)]);
  }
  const auto small = engine::window(engine::ones_spec(4), -2, 1);
  CHECK(collect(small) == ints({1, -2, 1, 1}));
  CHECK_THROWS_AS(engine::window(engine::ones_spec(4), 3, 1), DomainError);
  CHECK_THROWS_AS(small.at(2), DomainError);
}

TEST_CASE("backward then forward regenerates the initial terms") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const int k = 2 + static_cast<int>(rng() % 6);
    const SequenceSpec spec(k, oracle::random_init(rng, k));
    const auto back = engine::extend_backward(spec, 25);
    // Reseed the recurrence with the k oldest terms and run it forward.
    std::vector<BigInt> seed(back.terms().begin(), back.terms().begin() + k);
    const auto fwd = engine::generate(SequenceSpec(k, seed), 25 + k - 1);
    for (int i = 0; i < k; ++i) REQUIRE(fwd[25 + i] == spec.init()[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("decompose and recompose") {
  const SequenceSpec f(2, ints({2, 5}));
  CHECK(engine::decompose(f) == ints({2, 5}));
  const auto b0 = engine::generate(engine::basis_spec(2, 0), 3);
  const auto b1 = engine::generate(engine::basis_spec(2, 1), 3);
  CHECK(b0[3] == 1);
  CHECK(b1[3] == 2);
  CHECK(2 * b0[3] + 5 * b1[3] == 12);
  CHECK(engine::generate(f, 3)[3] == 12);

  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const auto init = oracle::random_init(rng, k);
    const SequenceSpec spec(k, init);
    const auto coeffs = engine::decompose(spec);
    const auto combo = engine::recompose(k, coeffs, 200);
    const auto ref = oracle::terms(init, 200);
    for (std::int64_t n = 0; n <= 200; ++n) REQUIRE(combo[n] == ref[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("S and T are sums of basis sequences") {
  for (int k = 2; k <= 8; ++k) {
    const auto s = oracle::ones(k, 300);
    std::vector<BigInt> t_init(static_cast<std::size_t>(k), 1);
    t_init[0] = 0;
    const auto t = oracle::terms(t_init, 300);
    std::vector<SequenceWindow> b;
    for (int j = 0; j < k; ++j) b.push_back(engine::generate(engine::basis_spec(k, j), 300));
    for (std::int64_t n = 0; n <= 300; ++n) {
      BigInt all = 0;
      for (int j = 0; j < k; ++j) all += b[static_cast<std::size_t>(j)][n];
      REQUIRE(all == s[static_cast<std::size_t>(n)]);
      REQUIRE(all - b[0][n] == t[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("doubling relation") {
  CHECK(engine::doubling_term(engine::generate(engine::ones_spec(3), 5), 5) == 9);
  CHECK(engine::doubling_term(engine::generate(engine::basis_spec(3, 0), 9), 9) == 24);
  CHECK(engine::doubling_term(engine::generate(engine::t_spec(2), 3), 3) == 2);
  CHECK_THROWS_AS(engine::doubling_term(engine::generate(engine::ones_spec(3), 5), 3), DomainError);
  // n = 9 needs F_8, which a window ending at 5 lacks.
  CHECK_THROWS_AS(engine::doubling_term(engine::generate(engine::ones_spec(3), 5), 9), DomainError);
}

TEST_CASE("telescoped doubling sum") {
  CHECK(engine::telescoped_term(engine::generate(engine::ones_spec(3), 7), 7, 4) == 31);
  CHECK(engine::telescoped_term(engine::generate(engine::basis_spec(3, 0), 7), 7, 7) == 7);
  CHECK(engine::telescoped_term(engine::generate(engine::basis_spec(3, 1), 8), 8, 5) == 20);
  const auto w = engine::generate(engine::ones_spec(3), 10);
  CHECK_THROWS_AS(engine::telescoped_term(w, 7, 3), DomainError);
  CHECK_THROWS_AS(engine::telescoped_term(w, 5, 6), DomainError);
}

TEST_CASE("doubling and telescoped forms agree with the recurrence") {
  std::mt19937_64 rng(17);
  for (int k = 2; k <= 8; ++k) {
    const SequenceSpec spec(k, oracle::random_init(rng, k));
    const auto w = engine::generate(spec, 400);
    for (std::int64_t n = k + 1; n <= 400; ++n) REQUIRE(engine::doubling_term(w, n) == w[n]);
    std::uniform_int_distribution<std::int64_t> d(k + 1, 400);
    for (int t = 0; t < 200; ++t) {
      auto m = d(rng);
      auto n = d(rng);
      if (n < m) std::swap(m, n);
      REQUIRE(engine::telescoped_term(w, n, m) == w[n]);
    }
  }
}

TEST_CASE("B via differences of S") {
  CHECK(engine::b_via_s(3, 1, 5) == 3);
  CHECK(engine::b_via_s(4, 2, 5) == 2);
  CHECK(engine::b_via_s(2, 0, 1) == 0);
  CHECK_THROWS_AS(engine::b_via_s(3, 1, 1), DomainError);

  for (int k = 2; k <= 8; ++k) {
    const auto s = engine::generate(engine::ones_spec(k), 300);
    for (int j = 0; j < k; ++j) {
      const auto b = oracle::basis(k, j, 300);
      for (std::int64_t n = j + 1; n <= 300; ++n) REQUIRE(engine::b_via_s(s, j, n) == b[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("index decomposition") {
  CHECK(engine::index_decomp(3, 7) == gfib::IndexDecomp{2, -1});
  CHECK(engine::index_decomp(3, 10) == gfib::IndexDecomp{2, 2});
  CHECK(engine::index_decomp(4, 5) == gfib::IndexDecomp{1, 0});
  CHECK(engine::index_decomp(3, 0) == gfib::IndexDecomp{0, 0});
  CHECK(engine::index_decomp(3, 3) == gfib::IndexDecomp{1, -1});
  for (int k = 2; k <= 10; ++k) {
    for (std::uint64_t n = 0; n < 500; ++n) {
      const auto [a, r] = engine::index_decomp(k, n);
      REQUIRE(r >= -1);
      REQUIRE(r <= k - 1);
      REQUIRE(static_cast<std::int64_t>(a) * (k + 1) + r == static_cast<std::int64_t>(n));
    }
  }
}

TEST_CASE("term counter tracks materialization") {
  const auto before = engine::terms_materialized();
  (void)engine::generate(engine::ones_spec(3), 9);
  CHECK(engine::terms_materialized() - before >= 10);
}
