#include "gfib/engine.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace gfib {

namespace {

std::atomic<std::uint64_t> g_materialized{0};

void count_terms(std::size_t n) { g_materialized.fetch_add(n, std::memory_order_relaxed); }

void check_k(int k) {
  if (k < 2) throw DomainError("order k must be >= 2, got " + std::to_string(k));
}

// Forward terms F_0 .. F_{last}, last >= k-1 not required.
std::vector<BigInt> forward_terms(const SequenceSpec& spec, std::int64_t last) {
  const int k = spec.k();
  std::vector<BigInt> out;
  if (last < 0) return out;
  out.reserve(static_cast<std::size_t>(last) + 1);
  for (std::int64_t n = 0; n <= last && n < k; ++n) out.push_back(spec.init()[static_cast<std::size_t>(n)]);
  if (last < k) return out;

  BigInt sum = 0;
  for (const auto& v : spec.init()) sum += v;
  out.push_back(sum);  // F_k
  for (std::int64_t n = k + 1; n <= last; ++n) {
    // sum currently holds F_{n-1}; slide to F_{n-1} + ... + F_{n-k}.
    sum += out[static_cast<std::size_t>(n - 1)];
    sum -= out[static_cast<std::size_t>(n - k - 1)];
    out.push_back(sum);
  }
  return out;
}

// F_{-depth} .. F_{k-1}.
std::vector<BigInt> backward_terms(const SequenceSpec& spec, std::int64_t depth) {
  const int k = spec.k();
  // rev[0] = F_{k-1}, rev[1] = F_{k-2}, ...
  std::vector<BigInt> rev(spec.init().rbegin(), spec.init().rend());
  rev.reserve(rev.size() + static_cast<std::size_t>(depth));
  for (std::int64_t step = 0; step < depth; ++step) {
    // F_m = F_{m+k} - F_{m+k-1} - ... - F_{m+1}, with m = -1 - step.
    const std::size_t top = rev.size() - static_cast<std::size_t>(k);
    BigInt v = rev[top];
    for (std::size_t i = top + 1; i < rev.size(); ++i) v -= rev[i];
    rev.push_back(std::move(v));
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace

SequenceSpec::SequenceSpec(int k, std::vector<BigInt> init) : k_(k), init_(std::move(init)) {
  check_k(k);
  if (init_.size() != static_cast<std::size_t>(k)) {
    throw DomainError("expected " + std::to_string(k) + " initial terms, got " +
                      std::to_string(init_.size()));
  }
}

BigInt SequenceSpec::first_sum() const {
  BigInt sum = 0;
  for (const auto& v : init_) sum += v;
  return sum;
}

SequenceWindow::SequenceWindow(SequenceSpec spec, std::int64_t start, std::vector<BigInt> terms)
    : spec_(std::move(spec)), start_(start), terms_(std::move(terms)) {}

const BigInt& SequenceWindow::at(std::int64_t n) const {
  if (!covers(n)) {
    throw DomainError("index " + std::to_string(n) + " outside window [" + std::to_string(start_) +
                      ", " + std::to_string(end() - 1) + "]");
  }
  return (*this)[n];
}

namespace engine {

std::uint64_t terms_materialized() { return g_materialized.load(std::memory_order_relaxed); }

SequenceWindow generate(const SequenceSpec& spec, std::int64_t n_max) {
  if (n_max < 0) throw DomainError("generate requires n_max >= 0");
  auto terms = forward_terms(spec, n_max);
  count_terms(terms.size());
  return SequenceWindow(spec, 0, std::move(terms));
}

SequenceWindow extend_backward(const SequenceSpec& spec, std::int64_t depth) {
  if (depth < 1) throw DomainError("extend_backward requires depth >= 1");
  auto terms = backward_terms(spec, depth);
  count_terms(terms.size());
  return SequenceWindow(spec, -depth, std::move(terms));
}

SequenceWindow window(const SequenceSpec& spec, std::int64_t from, std::int64_t to) {
  if (from > to) throw DomainError("window requires from <= to");
  if (from >= 0) {
    auto terms = forward_terms(spec, to);
    terms.erase(terms.begin(), terms.begin() + from);
    count_terms(terms.size());
    return SequenceWindow(spec, from, std::move(terms));
  }
  const int k = spec.k();
  auto terms = backward_terms(spec, -from);  // F_from .. F_{k-1}
  if (to >= k) {
    auto fwd = forward_terms(spec, to);
    terms.insert(terms.end(), std::make_move_iterator(fwd.begin() + k), std::make_move_iterator(fwd.end()));
  } else {
    terms.resize(static_cast<std::size_t>(to - from + 1));
  }
  count_terms(terms.size());
  return SequenceWindow(spec, from, std::move(terms));
}

SequenceSpec basis_spec(int k, int j) {
  check_k(k);
  if (j < 0 || j >= k) {
    throw DomainError("basis index j must satisfy 0 <= j <= k-1, got j=" + std::to_string(j));
  }
  std::vector<BigInt> init(static_cast<std::size_t>(k), BigInt(0));
  init[static_cast<std::size_t>(j)] = 1;
  return SequenceSpec(k, std::move(init));
}

SequenceSpec ones_spec(int k) {
  check_k(k);
  return SequenceSpec(k, std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(1)));
}

SequenceSpec t_spec(int k) {
  check_k(k);
  std::vector<BigInt> init(static_cast<std::size_t>(k), BigInt(1));
  init[0] = 0;
  return SequenceSpec(k, std::move(init));
}

std::vector<BigInt> decompose(const SequenceSpec& spec) { return spec.init(); }

SequenceWindow recompose(int k, std::span<const BigInt> coeffs, std::int64_t n_max) {
  check_k(k);
  if (coeffs.size() != static_cast<std::size_t>(k)) throw DomainError("recompose needs k coefficients");
  if (n_max < 0) throw DomainError("recompose requires n_max >= 0");
  std::vector<BigInt> terms(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  for (int j = 0; j < k; ++j) {
    const auto& c = coeffs[static_cast<std::size_t>(j)];
    if (sgn(c) == 0) continue;
    const auto basis = generate(basis_spec(k, j), n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) terms[static_cast<std::size_t>(n)] += c * basis[n];
  }
  return SequenceWindow(SequenceSpec(k, std::vector<BigInt>(coeffs.begin(), coeffs.end())), 0,
                        std::move(terms));
}

BigInt doubling_term(const SequenceWindow& w, std::int64_t n) {
  const int k = w.spec().k();
  if (n < k + 1) throw DomainError("doubling relation requires n >= k+1");
  return 2 * w.at(n - 1) - w.at(n - k - 1);
}

BigInt telescoped_term(const SequenceWindow& w, std::int64_t n, std::int64_t m) {
  const int k = w.spec().k();
  if (m < k + 1 || n < m) throw DomainError("telescoped sum requires n >= m >= k+1");
  BigInt out = w.at(m - 1);
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(n - m + 1));
  BigInt tail = 0;
  // Horner form of sum_{i} 2^{n-k-1-i} F_i.
  for (std::int64_t i = m - k - 1; i <= n - k - 1; ++i) {
    tail *= 2;
    tail += w.at(i);
  }
  return out - tail;
}

BigInt b_via_s(const SequenceWindow& s_window, int j, std::int64_t n) {
  const int k = s_window.spec().k();
  if (j < 0 || j >= k) throw DomainError("j out of range");
  if (n < j + 1) throw DomainError("S-difference form requires n >= j+1");
  BigInt diff = s_window.at(n) - s_window.at(n - j - 1);
  BigInt q, rem;
  const BigInt div = k - 1;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), diff.get_mpz_t(), div.get_mpz_t());
  if (sgn(rem) != 0) {
    throw InternalError("S_n - S_{n-j-1} not divisible by k-1 at k=" + std::to_string(k) +
                        " j=" + std::to_string(j) + " n=" + std::to_string(n));
  }
  return q;
}

BigInt b_via_s(int k, int j, std::int64_t n) {
  check_k(k);
  if (n < j + 1) throw DomainError("S-difference form requires n >= j+1");
  return b_via_s(window(ones_spec(k), std::min<std::int64_t>(0, n - j - 1), n), j, n);
}

IndexDecomp index_decomp(int k, std::uint64_t n) {
  check_k(k);
  const auto m = static_cast<std::uint64_t>(k) + 1;
  std::uint64_t a = n / m;
  auto r = static_cast<int>(n % m);
  if (r == k) {
    r = -1;
    ++a;
  }
  return {a, r};
}

}  // namespace engine
}  // namespace gfib
