#pragma once

// Recurrence engine for k-order generalized Fibonacci sequences
//
//   F_n = F_{n-1} + F_{n-2} + ... + F_{n-k}
//
// This is the ground truth every closed form and valuation rule is checked
// against. Windows may start at a negative index; terms there are obtained
// by running the recurrence backwards.

#include <cstdint>
#include <span>
#include <vector>

#include "gfib/bigint.hpp"

namespace gfib {

/// Order k plus the k initial terms F_0 .. F_{k-1}.
class SequenceSpec {
 public:
  /// Throws DomainError unless k >= 2 and init.size() == k.
  SequenceSpec(int k, std::vector<BigInt> init);

  int k() const { return k_; }
  const std::vector<BigInt>& init() const { return init_; }

  /// F_k, the sum of the initial terms.
  BigInt first_sum() const;

  bool operator==(const SequenceSpec&) const = default;

 private:
  int k_;
  std::vector<BigInt> init_;
};

/// Contiguous run of terms F_start .. F_{start + size - 1}. Immutable.
class SequenceWindow {
 public:
  SequenceWindow(SequenceSpec spec, std::int64_t start, std::vector<BigInt> terms);

  const SequenceSpec& spec() const { return spec_; }
  std::int64_t start() const { return start_; }
  /// One past the last stored index.
  std::int64_t end() const { return start_ + static_cast<std::int64_t>(terms_.size()); }
  bool covers(std::int64_t n) const { return n >= start_ && n < end(); }
  std::span<const BigInt> terms() const { return terms_; }

  /// Throws DomainError when n is outside the window.
  const BigInt& at(std::int64_t n) const;
  const BigInt& operator[](std::int64_t n) const { return terms_[static_cast<std::size_t>(n - start_)]; }

 private:
  SequenceSpec spec_;
  std::int64_t start_;
  std::vector<BigInt> terms_;
};

/// Canonical n = a(k+1) + r with -1 <= r <= k-1.
struct IndexDecomp {
  std::uint64_t a;
  int r;
  bool operator==(const IndexDecomp&) const = default;
};

namespace engine {

/// Total number of terms materialized by generate/extend_backward/window in
/// this process. Debug aid for asserting that a code path touches no terms.
std::uint64_t terms_materialized();

/// F_0 .. F_{n_max}.
SequenceWindow generate(const SequenceSpec& spec, std::int64_t n_max);

/// F_{-depth} .. F_{k-1}, running F_{n-k} = F_n - F_{n-1} - ... - F_{n-k+1}.
SequenceWindow extend_backward(const SequenceSpec& spec, std::int64_t depth);

/// F_from .. F_to for any from <= to; from may be negative.
SequenceWindow window(const SequenceSpec& spec, std::int64_t from, std::int64_t to);

/// Unit vector e_j: the basis sequence B(k, j).
SequenceSpec basis_spec(int k, int j);
/// All-ones initial terms: S(k).
SequenceSpec ones_spec(int k);
/// Initial terms (0, 1, ..., 1): T(k).
SequenceSpec t_spec(int k);

/// Coefficients of spec in the basis B(k, 0..k-1); these are its initial terms.
std::vector<BigInt> decompose(const SequenceSpec& spec);

/// sum_j coeffs[j] * B_n(k, j) for n in [0, n_max], built from basis windows.
SequenceWindow recompose(int k, std::span<const BigInt> coeffs, std::int64_t n_max);

/// 2 F_{n-1} - F_{n-k-1}; requires n >= k+1 and both indices in the window.
BigInt doubling_term(const SequenceWindow& w, std::int64_t n);

/// 2^{n-m+1} F_{m-1} - sum_{i=m-k-1}^{n-k-1} 2^{n-k-1-i} F_i, for n >= m >= k+1.
BigInt telescoped_term(const SequenceWindow& w, std::int64_t n, std::int64_t m);

/// (S_n - S_{n-j-1}) / (k-1) for n >= j+1. The division is checked exact.
BigInt b_via_s(int k, int j, std::int64_t n);
/// Same, reading S from a caller-provided window.
BigInt b_via_s(const SequenceWindow& s_window, int j, std::int64_t n);

IndexDecomp index_decomp(int k, std::uint64_t n);

}  // namespace engine
}  // namespace gfib
