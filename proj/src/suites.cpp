#include "gfib/suites.hpp"

#include <cstdio>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "gfib/closedform.hpp"
#include "gfib/engine.hpp"
#include "gfib/padic.hpp"
#include "gfib/valuation.hpp"

namespace gfib::suites {

namespace {

constexpr std::uint64_t kSeed = 0x5eed2adcULL;

// Partial result from one worker; merged in submission order.
struct Partial {
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> info;

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++checks;
    if (!ok) failures.push_back(describe());
  }
};

std::string triple(const char* what, int k, int j, std::int64_t n) {
  std::ostringstream os;
  os << what << " k=" << k << " j=" << j << " n=" << n;
  return os.str();
}

SuiteResult run_parallel(std::string name, std::vector<std::function<Partial()>> tasks) {
  std::vector<std::future<Partial>> futures;
  futures.reserve(tasks.size());
  for (auto& t : tasks) futures.push_back(std::async(std::launch::async, std::move(t)));
  SuiteResult res;
  res.name = std::move(name);
  for (auto& f : futures) {
    Partial p = f.get();
    res.checks += p.checks;
    res.failures += p.failures.size();
    for (auto& s : p.failures) res.failure_lines.push_back(std::move(s));
    for (auto& s : p.info) res.info_lines.push_back(std::move(s));
  }
  return res;
}

SequenceSpec random_spec(std::mt19937_64& rng, int k_lo, int k_hi) {
  std::uniform_int_distribution<int> kd(k_lo, k_hi);
  std::uniform_int_distribution<int> vd(-9, 9);
  const int k = kd(rng);
  std::vector<BigInt> init;
  for (int i = 0; i < k; ++i) init.emplace_back(vd(rng));
  return SequenceSpec(k, std::move(init));
}

std::string spec_text(const SequenceSpec& s) {
  std::string out = "init=";
  for (std::size_t i = 0; i < s.init().size(); ++i) {
    if (i > 0) out += ',';
    out += to_decimal(s.init()[i]);
  }
  return out;
}

}  // namespace

SuiteResult closedform_suite(int k_max, std::int64_t n_max) {
  std::vector<std::function<Partial()>> tasks;
  for (int k = 2; k <= k_max; ++k) {
    tasks.emplace_back([k, n_max] {
      Partial p;
      const std::int64_t top = std::max<std::int64_t>(n_max, 4 * k + 2);
      const auto s = engine::generate(engine::ones_spec(k), top);
      for (std::int64_t n = 0; n <= n_max; ++n) {
        p.expect(closedform::s_closed(k, n) == s[n], [&] { return triple("s_closed", k, -1, n); });
      }
      for (int j = 0; j < k; ++j) {
        const auto b = engine::generate(engine::basis_spec(k, j), top);
        for (std::int64_t n = j + 1; n <= n_max; ++n) {
          p.expect(closedform::b_closed(k, j, n) == b[n], [&] { return triple("b_closed", k, j, n); });
          p.expect(engine::b_via_s(s, j, n) == b[n], [&] { return triple("b_via_s", k, j, n); });
        }
        for (std::int64_t n = k; n <= 3 * k + j + 2; ++n) {
          p.expect(closedform::b_piecewise(k, j, n) == b[n], [&] { return triple("b_piecewise", k, j, n); });
        }
      }
      std::mt19937_64 rng(kSeed + static_cast<std::uint64_t>(k));
      for (int t = 0; t < 5; ++t) {
        const auto spec = random_spec(rng, k, k);
        const auto f = engine::generate(spec, n_max);
        for (std::int64_t n = k; n <= n_max; ++n) {
          p.expect(closedform::f_closed(spec, n) == f[n], [&] { return triple("f_closed", k, -1, n) + " " + spec_text(spec); });
        }
      }
      return p;
    });
  }
  return run_parallel("closedform", std::move(tasks));
}

SuiteResult valuation_suite(int k_max, std::int64_t n_max) {
  std::vector<std::function<Partial()>> tasks;
  for (int k = 2; k <= k_max; ++k) {
    for (int j = 0; j < k; ++j) {
      tasks.emplace_back([k, j, n_max] {
        Partial p;
        const auto rep = valuation::verify_range(k, j, std::max<std::int64_t>(n_max, k));
        p.checks += rep.correct + rep.wrong + rep.not_covered;
        for (const auto& m : rep.mismatches) {
          p.failures.push_back(triple("predict_b", k, j, m.n) + " rule=" + m.rule + " predicted=" +
                               m.predicted.to_string() + " actual=" + m.actual.to_string());
        }
        // Every applicable rule, not just the first, must match.
        const auto oracle = engine::generate(engine::basis_spec(k, j), rep.n_max);
        for (std::int64_t n = 0; n <= rep.n_max; ++n) {
          const auto actual = padic::v2_or_infinite(oracle[n]);
          for (const auto& hit : valuation::b_rules(k, j, static_cast<std::uint64_t>(n))) {
            p.expect(*hit.value == actual, [&] { return triple("rule", k, j, n) + " " + hit.rule; });
          }
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "k=%d j=%d correct=%llu wrong=%llu not_covered=%llu coverage=%.4f", k, j,
                      static_cast<unsigned long long>(rep.correct), static_cast<unsigned long long>(rep.wrong),
                      static_cast<unsigned long long>(rep.not_covered), rep.coverage());
        p.info.emplace_back(buf);
        return p;
      });
    }
  }
  tasks.emplace_back([k_max, n_max] {
    Partial p;
    std::mt19937_64 rng(kSeed);
    std::uint64_t covered = 0;
    std::uint64_t total = 0;
    for (int t = 0; t < 20; ++t) {
      const auto spec = random_spec(rng, 2, std::max(2, std::min(k_max, 6)));
      const auto f = engine::generate(spec, n_max);
      for (std::int64_t n = spec.k(); n <= n_max; ++n) {
        const auto actual = padic::v2_or_infinite(f[n]);
        const auto hits = valuation::f_rules(spec, static_cast<std::uint64_t>(n));
        ++total;
        if (!hits.empty()) ++covered;
        for (const auto& hit : hits) {
          p.expect(*hit.value == actual, [&] { return triple("predict_f", spec.k(), -1, n) + " " + hit.rule + " " + spec_text(spec); });
        }
      }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "predict_f random specs: covered=%llu of %llu", static_cast<unsigned long long>(covered),
                  static_cast<unsigned long long>(total));
    p.info.emplace_back(buf);
    return p;
  });
  return run_parallel("valuation", std::move(tasks));
}

SuiteResult identities_suite(int k_max, std::int64_t n_max) {
  std::vector<std::function<Partial()>> tasks;
  tasks.emplace_back([] {
    Partial p;
    using namespace padic;
    for (std::uint64_t m = 1; m <= 100000; ++m) {
      const auto vm = v2(static_cast<std::int64_t>(m));
      for (std::uint64_t n = 1; vm < 63 && n < (std::uint64_t{1} << vm); ++n) {
        p.expect(s2(m - n) + s2(n) + v2(static_cast<std::int64_t>(n)) == s2(m) + vm, [&] { return triple("s2_borrow", 0, -1, static_cast<std::int64_t>(m)); });
      }
      p.expect(s2(m - 1) + 1 == s2(m) + v2(static_cast<std::int64_t>(m)), [&] { return triple("s2_decrement", 0, -1, static_cast<std::int64_t>(m)); });
    }
    // s2(n) - s2(m) = n - m - sum v2(i), via prefix sums.
    std::vector<std::uint64_t> prefix(10001, 0);
    for (std::uint64_t i = 1; i <= 10000; ++i) prefix[i] = prefix[i - 1] + v2(static_cast<std::int64_t>(i));
    for (std::uint64_t m = 0; m <= 10000; m += 7) {
      for (std::uint64_t n = m + 1; n <= 10000; ++n) {
        const auto lhs = static_cast<std::int64_t>(s2(n)) - static_cast<std::int64_t>(s2(m));
        const auto rhs = static_cast<std::int64_t>(n - m) - static_cast<std::int64_t>(prefix[n] - prefix[m]);
        p.expect(lhs == rhs, [&] { return triple("s2_difference", 0, static_cast<int>(m), static_cast<std::int64_t>(n)); });
      }
    }
    return p;
  });
  for (int k = 2; k <= k_max; ++k) {
    tasks.emplace_back([k, n_max] {
      Partial p;
      std::vector<SequenceWindow> basis;
      for (int j = 0; j < k; ++j) basis.push_back(engine::generate(engine::basis_spec(k, j), n_max));
      const auto s = engine::generate(engine::ones_spec(k), n_max);
      const auto t = engine::generate(engine::t_spec(k), n_max);
      for (std::int64_t n = 0; n <= n_max; ++n) {
        BigInt ssum = 0;
        for (int j = 0; j < k; ++j) ssum += basis[static_cast<std::size_t>(j)][n];
        const BigInt tsum = ssum - basis[0][n];
        p.expect(ssum == s[n], [&] { return triple("s_basis_sum", k, -1, n); });
        p.expect(tsum == t[n], [&] { return triple("t_basis_sum", k, -1, n); });
      }
      const auto back = engine::extend_backward(engine::ones_spec(k), k);
      p.expect(back[-1] == -(k - 2), [&] { return triple("S_{-1}", k, -1, -1); });
      for (int d = 2; d <= k; ++d) p.expect(back[-d] == 1, [&] { return triple("S_{-d}", k, -1, -d); });

      std::mt19937_64 rng(kSeed ^ static_cast<std::uint64_t>(k));
      for (int rep = 0; rep < 5; ++rep) {
        const auto spec = random_spec(rng, k, k);
        const auto f = engine::generate(spec, n_max);
        const auto coeffs = engine::decompose(spec);
        const auto again = engine::recompose(k, coeffs, n_max);
        for (std::int64_t n = 0; n <= n_max; ++n) p.expect(again[n] == f[n], [&] { return triple("decompose_roundtrip", k, -1, n); });
        for (std::int64_t n = k + 1; n <= n_max; ++n) {
          p.expect(engine::doubling_term(f, n) == f[n], [&] { return triple("doubling", k, -1, n); });
        }
        std::uniform_int_distribution<std::int64_t> md(k + 1, std::max<std::int64_t>(k + 1, n_max));
        for (int trial = 0; trial < 20 && n_max >= k + 1; ++trial) {
          std::int64_t m = md(rng);
          std::int64_t n = md(rng);
          if (n < m) std::swap(n, m);
          p.expect(engine::telescoped_term(f, n, m) == f[n], [&] { return triple("telescoped", k, static_cast<int>(m), n); });
        }
      }
      return p;
    });
  }
  return run_parallel("identities", std::move(tasks));
}

SuiteResult residuals_suite(int k_max, std::int64_t n_max) {
  std::vector<std::function<Partial()>> tasks;
  for (int k = 2; k <= k_max; ++k) {
    for (int j = 0; j < k; ++j) {
      tasks.emplace_back([k, j, n_max] {
        Partial p;
        const auto b = engine::generate(engine::basis_spec(k, j), n_max);
        for (std::int64_t n = 0; n <= n_max; ++n) {
          const auto [a, r] = engine::index_decomp(k, static_cast<std::uint64_t>(n));
          const bool applicable = (r <= j - 1) ? a >= 2 : a >= 1;
          if (!applicable) continue;
          p.expect(valuation::theorem3_residual(b, j, static_cast<std::uint64_t>(n)).holds(), [&] { return triple("theorem3_residual", k, j, n); });
        }
        return p;
      });
    }
  }
  tasks.emplace_back([k_max, n_max] {
    Partial p;
    std::mt19937_64 rng(kSeed + 99);
    for (int t = 0; t < 20; ++t) {
      const auto spec = random_spec(rng, 2, std::max(2, std::min(k_max, 6)));
      const auto f = engine::generate(spec, n_max);
      for (std::int64_t n = spec.k(); n <= n_max; ++n) {
        if (engine::index_decomp(spec.k(), static_cast<std::uint64_t>(n)).a < 2) continue;
        p.expect(valuation::fn1_residual(f, static_cast<std::uint64_t>(n)).holds(), [&] { return triple("fn1_residual", spec.k(), -1, n) + " " + spec_text(spec); });
      }
    }
    return p;
  });
  return run_parallel("residuals", std::move(tasks));
}

}  // namespace gfib::suites
