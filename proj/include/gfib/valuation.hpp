#pragma once

// 2-adic orders of basis sequences B_n(k,j) and general sequences F_n(k).
//
// Every predictor here is index arithmetic on machine words (plus small
// binomials for F); none of them touches sequence terms. Each rule is only
// applied under its exact printed hypotheses, and anything else is reported
// as not covered.
//
// Coordinates: n = a(k+1) + r with -1 <= r <= k-1 (engine::index_decomp).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfib/bigint.hpp"
#include "gfib/engine.hpp"
#include "gfib/padic.hpp"

namespace gfib {

enum class DeltaCase { low_r, high_r };

/// Gap quantities certifying that one explicit term of the structural
/// expansion of B_n(k,j) dominates 2-adically.
///   low_r  (-1 <= r <= j-1, a >= 2): d1, d2
///   high_r ( j <= r <= k-1, a >= 1): d3, d4
struct Deltas {
  DeltaCase kind;
  std::uint64_t a;
  int r;
  std::optional<std::int64_t> d1, d2, d3, d4;
};

/// A predicted valuation tagged with the rule that produced it, or not covered.
struct Prediction {
  std::optional<Valuation> value;
  std::string rule;

  bool covered() const { return value.has_value(); }
  static Prediction not_covered() { return {}; }
  static Prediction of(Valuation v, std::string rule) { return {v, std::move(rule)}; }
};

/// residual is expected to vanish modulo 2^modulus_exp.
struct ResidualCheck {
  std::uint64_t modulus_exp;
  BigInt residual;

  bool holds() const { return mpz_divisible_2exp_p(residual.get_mpz_t(), modulus_exp) != 0; }
};

struct Mismatch {
  std::int64_t n;
  Valuation predicted;
  Valuation actual;
  std::string rule;
};

struct CoverageReport {
  int k = 0;
  int j = 0;
  std::int64_t n_max = 0;
  std::uint64_t correct = 0;
  std::uint64_t wrong = 0;
  std::uint64_t not_covered = 0;
  std::vector<std::int64_t> uncovered;
  std::vector<Mismatch> mismatches;

  double coverage() const {
    const auto total = correct + wrong + not_covered;
    return total == 0 ? 0.0 : static_cast<double>(correct + wrong) / static_cast<double>(total);
  }
};

namespace valuation {

/// Throws DomainError for low_r with a < 2, or high_r with a = 0.
Deltas deltas(int k, int j, std::uint64_t n);

/// Every rule that applies to (k, j, n), in precedence order:
/// initial values, T4i, L5, L6, L7, T5i..T5vi, L4i/L4ii (a = 1), T4ii, T4iii.
std::vector<Prediction> b_rules(int k, int j, std::uint64_t n);

/// First applicable rule of b_rules, else not covered.
Prediction predict_b(int k, int j, std::uint64_t n);

/// Literal case tables for k = 3 and k = 4. Throws DomainError for bad j.
Prediction predict_b_k3(int j, std::uint64_t n);
Prediction predict_b_k4(int j, std::uint64_t n);
/// Dispatches to the k = 3 / k = 4 tables; not covered for other k.
Prediction predict_b_table(int k, int j, std::uint64_t n);

/// Every F-valuation rule that applies, in precedence order:
/// Fn2i, Fn1i (r = -1); CorI..CorIV, Fn2ii (r >= 0, a >= 2).
std::vector<Prediction> f_rules(const SequenceSpec& spec, std::uint64_t n);
/// First applicable rule of f_rules. Throws DomainError for n < k.
Prediction predict_f(const SequenceSpec& spec, std::uint64_t n);

/// B_n(k,j) minus the explicit terms of its structural expansion.
ResidualCheck theorem3_residual(int k, int j, std::uint64_t n);
ResidualCheck theorem3_residual(const SequenceWindow& basis_window, int j, std::uint64_t n);

/// F_n minus the explicit terms of its structural expansion; modulus 2^{k+1}.
ResidualCheck fn1_residual(const SequenceSpec& spec, std::uint64_t n);
ResidualCheck fn1_residual(const SequenceWindow& window, std::uint64_t n);

/// Checks predict_b (and the k = 3/4 tables) against the recurrence for all
/// n <= n_max.
CoverageReport verify_range(int k, int j, std::int64_t n_max);

}  // namespace valuation
}  // namespace gfib
