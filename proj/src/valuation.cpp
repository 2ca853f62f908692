#include "gfib/valuation.hpp"

#include <string>

#include "gfib/closedform.hpp"

namespace gfib::valuation {

namespace {

using padic::v2_binomial;
using padic::v2_of_word;

void check_kj(int k, int j) {
  if (k < 2) throw DomainError("order k must be >= 2");
  if (j < 0 || j >= k) throw DomainError("j must satisfy 0 <= j <= k-1, got " + std::to_string(j));
}

std::int64_t s64(std::uint64_t x) { return static_cast<std::int64_t>(x); }
std::uint64_t u64(std::int64_t x) { return static_cast<std::uint64_t>(x); }

Valuation fin(std::int64_t v) { return Valuation::finite(u64(v)); }

// v2(C(m, n)) for signed arguments known to satisfy 0 <= n <= m.
std::int64_t vb(std::int64_t m, std::int64_t n) { return s64(v2_binomial(u64(m), u64(n))); }

// v2(a(a+1)) evaluated factor by factor; one of the two is odd.
Valuation v2_consecutive(std::uint64_t a) {
  const auto x = v2_of_word(a);
  const auto y = v2_of_word(a + 1);
  if (x.is_infinite() || y.is_infinite()) return Valuation::infinite();
  return Valuation::finite(x.value() + y.value());
}

bool even(std::uint64_t a) { return a % 2 == 0; }

BigInt sign_of_parity(std::uint64_t a) { return even(a) ? BigInt(1) : BigInt(-1); }

BigInt binom(std::int64_t top, std::int64_t bottom) { return closedform::binomial(top, bottom); }

BigInt shifted(BigInt x, std::int64_t e) {
  mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), u64(e));
  return x;
}

}  // namespace

Deltas deltas(int k, int j, std::uint64_t n) {
  check_kj(k, j);
  const auto [a_u, r] = engine::index_decomp(k, n);
  const std::int64_t a = s64(a_u);
  Deltas d{};
  d.a = a_u;
  d.r = r;
  if (r <= j - 1) {
    if (a < 2) throw DomainError("deltas: low-r case is out of definitional range for a < 2");
    d.kind = DeltaCase::low_r;
    const std::int64_t lead = vb(a + r, a - 1) + (r + 1);
    d.d1 = (r + k + 2) - lead;
    d.d2 = vb(a + r + k - j - 1, a - 2) + (r + k + 1 - j) - lead;
  } else {
    if (a < 1) throw DomainError("deltas: high-r case is out of definitional range for a < 1");
    d.kind = DeltaCase::high_r;
    const std::int64_t lead = vb(a + r - j - 1, a - 1) + (r - j);
    d.d3 = (r + k + 1 - j) - lead;
    d.d4 = vb(a + r, a - 1) + (r + 1) - lead;
  }
  return d;
}

std::vector<Prediction> b_rules(int k, int j, std::uint64_t n) {
  check_kj(k, j);
  std::vector<Prediction> hits;
  if (n < static_cast<std::uint64_t>(k)) {
    // B_n(k,j) for n < k is the unit vector itself.
    hits.push_back(Prediction::of(n == static_cast<std::uint64_t>(j) ? Valuation::finite(0)
                                                                     : Valuation::infinite(),
                                  "Init"));
    return hits;
  }

  const auto [a, r] = engine::index_decomp(k, n);
  const auto va = v2_of_word(a);
  const auto va1 = v2_of_word(a + 1);
  const auto uk = static_cast<std::uint64_t>(k);

  if (r == -1 || r == j) hits.push_back(Prediction::of(Valuation::finite(0), "T4i"));

  if (r == 0 && 1 <= j && j < k - 1 && va == uk + 1) {
    hits.push_back(Prediction::of(Valuation::finite(uk + 2), "L5"));
  }
  // v2(a) <= k/2 is tested as 2 v2(a) <= k.
  if (r == 0 && j == k - 1 && even(a) && va.is_finite() && 2 * va.value() <= uk) {
    hits.push_back(Prediction::of(Valuation::finite(1 + 2 * va.value()), "L6"));
  }
  if (r == 1 && j == 0 && even(a) && va.is_finite() && 2 * va.value() <= uk) {
    hits.push_back(Prediction::of(Valuation::finite(1 + 2 * va.value()), "L7"));
  }

  if (r == 0 && j >= 1 && !even(a)) hits.push_back(Prediction::of(Valuation::finite(1), "T5i"));
  if (r == 0 && 1 <= j && j <= k - 2 && even(a) && va <= uk) {
    hits.push_back(Prediction::of(Valuation::finite(1 + va.value()), "T5ii"));
  }
  if (r == 1 && j >= 2 && !even(a) && va1 <= uk + 1) {
    hits.push_back(Prediction::of(Valuation::finite(1 + va1.value()), "T5iii"));
  }
  if (r == 1 && j >= 2 && even(a) && va <= uk + 1) {
    hits.push_back(Prediction::of(Valuation::finite(1 + va.value()), "T5iv"));
  }
  if (r == 1 && j == 0 && !even(a)) hits.push_back(Prediction::of(Valuation::finite(1), "T5v"));
  if (r == j + 1 && r <= k - 1 && j >= 1 && va <= uk) {
    hits.push_back(Prediction::of(Valuation::finite(1 + va.value()), "T5vi"));
  }

  const std::int64_t sn = s64(n);
  if (a == 1) {
    // k <= n <= 2k: 2^{n-k}, or 2^{n-k-j-1} (2^{j+1} - 1).
    if (sn <= k + j) {
      hits.push_back(Prediction::of(fin(sn - k), "L4i"));
    } else {
      hits.push_back(Prediction::of(fin(sn - k - j - 1), "L4ii"));
    }
    return hits;
  }

  if (0 <= r && r <= j - 1 && a >= 2) {
    const auto d = deltas(k, j, n);
    if (*d.d1 > 0 && *d.d2 > 0) {
      hits.push_back(Prediction::of(fin(r + 1 + vb(s64(a) + r, s64(a) - 1)), "T4ii"));
    }
  }
  if (j + 1 <= r && r <= k - 1 && a >= 1) {
    const auto d = deltas(k, j, n);
    if (*d.d3 > 0 && *d.d4 > 0) {
      hits.push_back(Prediction::of(fin(r - j + vb(s64(a) + r - j - 1, s64(a) - 1)), "T4iii"));
    }
  }
  return hits;
}

Prediction predict_b(int k, int j, std::uint64_t n) {
  auto hits = b_rules(k, j, n);
  if (hits.empty()) return Prediction::not_covered();
  return std::move(hits.front());
}

Prediction predict_b_k3(int j, std::uint64_t n) {
  if (j < 0 || j > 2) throw DomainError("k=3 table requires 0 <= j <= 2");
  const std::uint64_t a = n / 4;
  const auto m4 = n % 4;
  const auto zero = Valuation::finite(0);
  switch (j) {
    case 0:
      if (m4 == 0) return Prediction::of(zero, "K3J0.case1:n=4a");
      if (n % 8 == 5) return Prediction::of(Valuation::finite(1), "K3J0.case2:n=8a+5");
      if (n % 16 == 9) return Prediction::of(Valuation::finite(3), "K3J0.case3:n=16a+9");
      if (m4 == 2) {
        const auto w = v2_consecutive(a);
        if (w <= 4) return Prediction::of(Valuation::finite(1 + w.value()), "K3J0.case4:n=4a+2");
      }
      if (m4 == 3) return Prediction::of(zero, "K3J0.case5:n=4a+3");
      break;
    case 1:
      if (m4 == 0 && v2_of_word(a) <= 4) {
        return Prediction::of(Valuation::finite(1 + v2_of_word(a).value()), "K3J1.case1:n=4a");
      }
      if (n % 2 == 1) return Prediction::of(zero, "K3J1.case2:n=2a+1");
      if (m4 == 2 && v2_of_word(a) <= 3) {
        return Prediction::of(Valuation::finite(1 + v2_of_word(a).value()), "K3J1.case3:n=4a+2");
      }
      break;
    default:
      if (n % 8 == 4) return Prediction::of(Valuation::finite(1), "K3J2.case1:n=8a+4");
      if (n % 16 == 8) return Prediction::of(Valuation::finite(3), "K3J2.case2:n=16a+8");
      if (m4 == 1) {
        const auto w = v2_consecutive(a);
        if (w <= 4) return Prediction::of(Valuation::finite(1 + w.value()), "K3J2.case3:n=4a+1");
      }
      if (m4 == 2) return Prediction::of(zero, "K3J2.case4:n=4a+2");
      if (m4 == 3) return Prediction::of(zero, "K3J2.case5:n=4a+3");
      break;
  }
  return Prediction::not_covered();
}

Prediction predict_b_k4(int j, std::uint64_t n) {
  if (j < 0 || j > 3) throw DomainError("k=4 table requires 0 <= j <= 3");
  const std::uint64_t a = n / 5;
  const auto m5 = n % 5;
  const auto va = v2_of_word(a);
  const auto zero = Valuation::finite(0);
  const std::string tag = "K4J" + std::to_string(j) + ".case" + std::to_string(m5 + 1) + ":n=5a" +
                          (m5 == 0 ? std::string() : "+" + std::to_string(m5));
  auto hit = [&](Valuation v) { return Prediction::of(v, tag); };
  auto one_plus = [&](Valuation v) { return hit(Valuation::finite(1 + v.value())); };

  switch (j) {
    case 0:
      if (m5 == 0) return hit(zero);
      if (m5 == 1 && va <= 2) return hit(Valuation::finite(1 + 2 * va.value()));
      if (m5 == 2 && v2_consecutive(a) <= 5) return one_plus(v2_consecutive(a));
      if (m5 == 3 && v2_of_word(a + 3) >= 2) return hit(Valuation::finite(3));
      if (m5 == 4) return hit(zero);
      break;
    case 1:
      if (m5 == 0 && va <= 5) return one_plus(va);
      if (m5 == 1) return hit(zero);
      if (m5 == 2 && va <= 4) return one_plus(va);
      if (m5 == 3 && v2_consecutive(a) <= 5) return one_plus(v2_consecutive(a));
      if (m5 == 4) return hit(zero);
      break;
    case 2:
      if (m5 == 0 && va <= 5) return one_plus(va);
      if (m5 == 1 && v2_consecutive(a) <= 5) return one_plus(v2_consecutive(a));
      if (m5 == 2) return hit(zero);
      if (m5 == 3 && va <= 4) return one_plus(va);
      if (m5 == 4) return hit(zero);
      break;
    default:
      if (m5 == 0 && va <= 2) return hit(Valuation::finite(1 + 2 * va.value()));
      if (m5 == 1 && v2_consecutive(a) <= 5) return one_plus(v2_consecutive(a));
      // a - 1 wraps for a = 0; n = 2 has v2(-1) = 0.
      if (m5 == 2 && (a == 0 ? Valuation::finite(0) : v2_of_word(a - 1)) >= 2) {
        return hit(Valuation::finite(3));
      }
      if (m5 == 3 || m5 == 4) return hit(zero);
      break;
  }
  return Prediction::not_covered();
}

Prediction predict_b_table(int k, int j, std::uint64_t n) {
  if (k == 3) return predict_b_k3(j, n);
  if (k == 4) return predict_b_k4(j, n);
  return Prediction::not_covered();
}

std::vector<Prediction> f_rules(const SequenceSpec& spec, std::uint64_t n) {
  const int k = spec.k();
  if (n < static_cast<std::uint64_t>(k)) throw DomainError("F-valuation rules require n >= k");
  const auto [a_u, r] = engine::index_decomp(k, n);
  const std::int64_t a = s64(a_u);
  const auto& F = spec.init();
  auto Fi = [&](int i) -> const BigInt& { return F[static_cast<std::size_t>(i)]; };
  auto v = [](const BigInt& x) { return padic::v2_or_infinite(x); };
  std::vector<Prediction> hits;

  if (r == -1) {
    const BigInt fk = spec.first_sum();
    if (v(fk) == 0) hits.push_back(Prediction::of(Valuation::finite(0), "Fn2i"));
    if (a >= 2) {
      // F_n = -(-1)^a [F_k + sum_j F_j C(k+a-j-2, a-2) 2^{k-j}] mod 2^{k+1}.
      BigInt x = fk;
      for (int j = 0; j < k; ++j) {
        if (sgn(Fi(j)) != 0) x += shifted(Fi(j) * binom(k + a - j - 2, a - 2), k - j);
      }
      const auto vx = v(x);
      if (vx <= static_cast<std::uint64_t>(k)) hits.push_back(Prediction::of(vx, "Fn1i"));
    }
    return hits;
  }
  if (a < 2) return hits;

  // term(t) = 2^t C(a+t-1, a-1) F_{r-t}; W is their sum over t = 0..r.
  auto coef = [&](int t) { return binom(a + t - 1, a - 1); };
  auto term = [&](int t) { return shifted(coef(t) * Fi(r - t), t); };

  if (v(Fi(r)) == 0) hits.push_back(Prediction::of(Valuation::finite(0), "CorI"));
  if (r >= 1 && v(Fi(r)) == 1 && v(from_int(a) * Fi(r - 1)) > 0) {
    hits.push_back(Prediction::of(Valuation::finite(1), "CorII"));
  }
  if (r >= 2) {
    const BigInt x = Fi(r) + 2 * from_int(a) * Fi(r - 1);
    if (v(x) <= 2 && v(binom(a + 1, a - 1) * Fi(r - 2)) > 0) hits.push_back(Prediction::of(v(x), "CorIII"));
  }
  BigInt partial = 0;
  for (int i = 1; i <= r; ++i) {
    partial += term(i - 1);
    if (v(partial) <= static_cast<std::uint64_t>(i) && v(coef(i) * Fi(r - i)) > 0) {
      hits.push_back(Prediction::of(v(partial), "CorIV.i=" + std::to_string(i)));
      break;
    }
  }
  BigInt w = 0;
  for (int t = 0; t <= r; ++t) w += term(t);
  if (v(w) <= static_cast<std::uint64_t>(r)) hits.push_back(Prediction::of(v(w), "Fn2ii"));
  return hits;
}

Prediction predict_f(const SequenceSpec& spec, std::uint64_t n) {
  auto hits = f_rules(spec, n);
  if (hits.empty()) return Prediction::not_covered();
  return std::move(hits.front());
}

ResidualCheck theorem3_residual(const SequenceWindow& basis_window, int j, std::uint64_t n) {
  const int k = basis_window.spec().k();
  check_kj(k, j);
  const auto [a_u, r] = engine::index_decomp(k, n);
  const std::int64_t a = s64(a_u);
  const BigInt sign = sign_of_parity(a_u);
  const BigInt& b = basis_window.at(s64(n));
  if (r <= j - 1) {
    if (a < 2) throw DomainError("structural congruence (low r) requires a >= 2");
    const BigInt explicit_terms = -sign * shifted(binom(a + r + k - j - 1, a - 2), r + k + 1 - j) -
                                  sign * shifted(binom(a + r, a - 1), r + 1);
    return {u64(r + k + 2), b - explicit_terms};
  }
  if (a < 1) throw DomainError("structural congruence (high r) requires a >= 1");
  const BigInt explicit_terms =
      -sign * shifted(binom(a + r, a - 1), r + 1) + sign * shifted(binom(a + r - j - 1, a - 1), r - j);
  return {u64(r + k + 1 - j), b - explicit_terms};
}

ResidualCheck theorem3_residual(int k, int j, std::uint64_t n) {
  check_kj(k, j);
  return theorem3_residual(engine::generate(engine::basis_spec(k, j), s64(n)), j, n);
}

ResidualCheck fn1_residual(const SequenceWindow& window, std::uint64_t n) {
  const auto& spec = window.spec();
  const int k = spec.k();
  const auto [a_u, r] = engine::index_decomp(k, n);
  const std::int64_t a = s64(a_u);
  if (a < 2) throw DomainError("structural congruence for F_n requires a >= 2");
  const BigInt sign = sign_of_parity(a_u);
  const BigInt fk = spec.first_sum();
  const auto& F = spec.init();
  BigInt explicit_terms = 0;
  if (r == -1) {
    BigInt sum = 0;
    for (int j = 0; j < k; ++j) sum += shifted(F[static_cast<std::size_t>(j)] * binom(k + a - j - 2, a - 2), k - j);
    explicit_terms = -sign * fk - sign * sum;
  } else {
    BigInt low = 0;
    for (int j = 0; j <= r; ++j) low += shifted(F[static_cast<std::size_t>(j)] * binom(a + r - j - 1, a - 1), r - j);
    BigInt high = 0;
    for (int j = r + 1; j < k; ++j) {
      high += shifted(F[static_cast<std::size_t>(j)] * binom(k + a + r - j - 1, a - 2), k + 1 + r - j);
    }
    explicit_terms = -sign * shifted(fk * binom(a + r, a - 1), r + 1) + sign * low - sign * high;
  }
  return {u64(k + 1), window.at(s64(n)) - explicit_terms};
}

ResidualCheck fn1_residual(const SequenceSpec& spec, std::uint64_t n) {
  return fn1_residual(engine::generate(spec, s64(n)), n);
}

CoverageReport verify_range(int k, int j, std::int64_t n_max) {
  check_kj(k, j);
  if (n_max < k) throw DomainError("verify_range requires n_max >= k");
  CoverageReport rep;
  rep.k = k;
  rep.j = j;
  rep.n_max = n_max;
  const auto oracle = engine::generate(engine::basis_spec(k, j), n_max);
  const bool tabled = (k == 3 || k == 4);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const auto actual = padic::v2_or_infinite(oracle[n]);
    bool covered = false;
    bool wrong = false;
    auto check = [&](const Prediction& p) {
      if (!p.covered()) return;
      covered = true;
      if (*p.value != actual) {
        wrong = true;
        rep.mismatches.push_back({n, *p.value, actual, p.rule});
      }
    };
    check(predict_b(k, j, u64(n)));
    if (tabled) check(predict_b_table(k, j, u64(n)));
    if (wrong) {
      ++rep.wrong;
    } else if (covered) {
      ++rep.correct;
    } else {
      ++rep.not_covered;
      rep.uncovered.push_back(n);
    }
  }
  return rep;
}

}  // namespace gfib::valuation
