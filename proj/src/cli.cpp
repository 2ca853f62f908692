#include "gfib/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "gfib/closedform.hpp"
#include "gfib/engine.hpp"
#include "gfib/records.hpp"
#include "gfib/suites.hpp"
#include "gfib/valuation.hpp"

namespace gfib::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SoundnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<BigInt> parse_init(const std::string& text) {
  std::vector<BigInt> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_bigint(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

SequenceSpec spec_from_init(int k, const std::string& text) {
  auto init = parse_init(text);
  if (init.size() != static_cast<std::size_t>(k)) {
    throw UsageError("--init has " + std::to_string(init.size()) + " values but --k is " + std::to_string(k));
  }
  return SequenceSpec(k, std::move(init));
}

unsigned long long oracle_limit_from_env() {
  if (const char* env = std::getenv("GFIB_ORACLE_LIMIT")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("GFIB_ORACLE_LIMIT is not a number: ") + env);
    }
  }
  return kDefaultOracleLimit;
}

class Emitter {
 public:
  Emitter(std::ostream& out, Format f) : out_(out), format_(f) {
    const auto h = records::header(f);
    if (!h.empty()) out_ << h << '\n';
  }
  void emit(const OutputRecord& rec) { out_ << records::format_record(rec, format_) << '\n'; }

 private:
  std::ostream& out_;
  Format format_;
};

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  int k = 0;
  std::optional<std::string> init;
  std::optional<int> basis;
  bool ones = false;
  bool t = false;
  long long from = 0;
  long long to = 0;
  std::string format = "csv";
};

void cmd_gen(const GenArgs& g, std::ostream& out) {
  const int chosen = int(g.init.has_value()) + int(g.basis.has_value()) + int(g.ones) + int(g.t);
  if (chosen != 1) throw UsageError("gen needs exactly one of --init, --basis, --ones, --t");
  if (g.from < -kBackwardDepthLimit) {
    throw UsageError("--from below -" + std::to_string(kBackwardDepthLimit) + " is not supported");
  }
  if (g.from > g.to) throw UsageError("--from must not exceed --to");
  const auto fmt = records::parse_format(g.format);
  const SequenceSpec spec = g.init    ? spec_from_init(g.k, *g.init)
                            : g.basis ? engine::basis_spec(g.k, *g.basis)
                            : g.ones  ? engine::ones_spec(g.k)
                                      : engine::t_spec(g.k);
  const auto w = engine::window(spec, g.from, g.to);
  Emitter em(out, fmt);
  for (std::int64_t n = g.from; n <= g.to; ++n) {
    OutputRecord rec;
    rec.k = g.k;
    rec.j = g.basis;
    rec.n = n;
    rec.value = to_decimal(w[n]);
    rec.v2 = padic::v2_or_infinite(w[n]);
    em.emit(rec);
  }
}

// ---- closed ---------------------------------------------------------------

struct ClosedArgs {
  std::string which;
  int k = 0;
  std::optional<int> j;
  std::optional<std::string> init;
  long long n = 0;
  bool check = false;
  std::string format = "csv";
};

void cmd_closed(const ClosedArgs& c, std::ostream& out) {
  const auto fmt = records::parse_format(c.format);
  auto need_j = [&] {
    if (!c.j) throw UsageError("--which " + c.which + " requires --j");
    return *c.j;
  };
  BigInt value;
  std::optional<SequenceSpec> oracle_spec;
  OutputRecord rec;
  rec.k = c.k;
  rec.n = c.n;
  if (c.which == "s") {
    value = closedform::s_closed(c.k, c.n);
    oracle_spec = engine::ones_spec(c.k);
  } else if (c.which == "b" || c.which == "b-piecewise") {
    const int j = need_j();
    rec.j = j;
    value = (c.which == "b") ? closedform::b_closed(c.k, j, c.n) : closedform::b_piecewise(c.k, j, c.n);
    oracle_spec = engine::basis_spec(c.k, j);
  } else if (c.which == "f") {
    if (!c.init) throw UsageError("--which f requires --init");
    oracle_spec = spec_from_init(c.k, *c.init);
    value = closedform::f_closed(*oracle_spec, c.n);
  } else {
    throw UsageError("--which must be one of s, b, f, b-piecewise");
  }
  rec.value = to_decimal(value);
  rec.v2 = padic::v2_or_infinite(value);
  if (c.check) {
    const auto w = engine::generate(*oracle_spec, c.n);
    rec.agree = (w[c.n] == value);
  }
  Emitter(out, fmt).emit(rec);
  if (rec.agree == false) throw SoundnessError("closed form disagrees with the recurrence");
}

// ---- v2 -------------------------------------------------------------------

struct V2Args {
  int k = 0;
  std::optional<int> j;
  std::optional<std::string> init;
  unsigned long long n = 0;
  bool predict_only = false;
  bool no_value = false;
  std::optional<unsigned long long> oracle_limit;
  std::string format = "csv";
};

void cmd_v2(const V2Args& v, std::ostream& out) {
  const auto fmt = records::parse_format(v.format);
  if (v.j.has_value() == v.init.has_value()) throw UsageError("v2 needs exactly one of --j or --init");
  const auto limit = v.oracle_limit.value_or(oracle_limit_from_env());
  if (!v.predict_only && v.n > limit) {
    throw UsageError("n=" + std::to_string(v.n) + " exceeds the oracle limit " + std::to_string(limit) +
                     "; pass --predict-only");
  }

  OutputRecord rec;
  rec.k = v.k;
  rec.j = v.j;
  rec.n = static_cast<std::int64_t>(v.n);

  Prediction pred;
  std::optional<SequenceSpec> spec;
  if (v.j) {
    spec = engine::basis_spec(v.k, *v.j);
    pred = valuation::predict_b_table(v.k, *v.j, v.n);
    if (!pred.covered()) pred = valuation::predict_b(v.k, *v.j, v.n);
  } else {
    spec = spec_from_init(v.k, *v.init);
    if (v.n >= static_cast<unsigned long long>(v.k)) pred = valuation::predict_f(*spec, v.n);
  }
  if (pred.covered()) {
    rec.predicted = pred.value;
    rec.rule = pred.rule;
  }

  if (!v.predict_only) {
    const auto w = engine::generate(*spec, rec.n);
    const auto& term = w[rec.n];
    if (!v.no_value) rec.value = to_decimal(term);
    rec.v2 = padic::v2_or_infinite(term);
    if (rec.predicted) rec.agree = (*rec.predicted == *rec.v2);
  }
  Emitter(out, fmt).emit(rec);
  if (rec.agree == false) {
    throw SoundnessError("prediction " + rec.predicted->to_string() + " (" + pred.rule + ") disagrees with v2 " +
                         rec.v2->to_string());
  }
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int k_max = 8;
  long long n_max = 400;
};

constexpr std::size_t kMaxFailureLines = 50;

int cmd_verify(const VerifyArgs& v, std::ostream& out) {
  if (v.k_max < 2) throw UsageError("--k-max must be >= 2");
  if (v.n_max < 0) throw UsageError("--n-max must be >= 0");
  std::vector<std::string> names;
  if (v.suite == "all") {
    names = {"closedform", "valuation", "identities", "residuals"};
  } else if (v.suite == "closedform" || v.suite == "valuation" || v.suite == "identities" ||
             v.suite == "residuals") {
    names = {v.suite};
  } else {
    throw UsageError("--suite must be one of closedform, valuation, identities, residuals, all");
  }
  bool ok = true;
  for (const auto& name : names) {
    suites::SuiteResult res;
    if (name == "closedform") res = suites::closedform_suite(v.k_max, v.n_max);
    if (name == "valuation") res = suites::valuation_suite(v.k_max, v.n_max);
    if (name == "identities") res = suites::identities_suite(v.k_max, v.n_max);
    if (name == "residuals") res = suites::residuals_suite(v.k_max, v.n_max);
    out << "suite=" << res.name << " checks=" << res.checks << " failures=" << res.failures << ' '
        << (res.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& line : res.info_lines) out << "  " << line << '\n';
    for (std::size_t i = 0; i < res.failure_lines.size() && i < kMaxFailureLines; ++i) {
      out << "  FAIL " << res.failure_lines[i] << '\n';
    }
    if (res.failure_lines.size() > kMaxFailureLines) {
      out << "  ... " << res.failure_lines.size() - kMaxFailureLines << " more failures\n";
    }
    ok = ok && res.passed();
  }
  return ok ? kOk : kUnsound;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized Fibonacci sequences and their 2-adic orders", "gfib"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Print terms F_from .. F_to with their 2-adic orders");
  g->add_option("--k", gen.k, "Order k >= 2")->required();
  auto* g_init = g->add_option("--init", gen.init, "Comma-separated initial terms F_0..F_{k-1}");
  auto* g_basis = g->add_option("--basis", gen.basis, "Basis sequence B(k, j)");
  auto* g_ones = g->add_flag("--ones", gen.ones, "All-ones initial terms (S)");
  auto* g_t = g->add_flag("--t", gen.t, "Initial terms 0,1,...,1 (T)");
  g_init->excludes(g_basis, g_ones, g_t);
  g_basis->excludes(g_ones, g_t);
  g_ones->excludes(g_t);
  g->add_option("--from", gen.from, "First index (may be negative)");
  g->add_option("--to", gen.to, "Last index")->required();
  g->add_option("--format", gen.format, "csv, json or tsv");

  ClosedArgs closed;
  auto* c = app.add_subcommand("closed", "Evaluate a closed-form expression");
  c->add_option("--which", closed.which, "s, b, f or b-piecewise")->required();
  c->add_option("--k", closed.k, "Order k >= 2")->required();
  c->add_option("--j", closed.j, "Basis index");
  c->add_option("--init", closed.init, "Initial terms for --which f");
  c->add_option("--n", closed.n, "Index")->required();
  c->add_flag("--check", closed.check, "Compare against the recurrence");
  c->add_option("--format", closed.format, "csv, json or tsv");

  V2Args v2;
  auto* v = app.add_subcommand("v2", "Predict (and check) the 2-adic order of one term");
  v->add_option("--k", v2.k, "Order k >= 2")->required();
  v->add_option("--j", v2.j, "Basis index");
  v->add_option("--init", v2.init, "Initial terms of a general sequence");
  v->add_option("--n", v2.n, "Index")->required();
  v->add_flag("--predict-only", v2.predict_only, "Skip the recurrence");
  v->add_flag("--no-value", v2.no_value, "Omit the decimal value");
  v->add_option("--oracle-limit", v2.oracle_limit, "Largest n for which the recurrence is run");
  v->add_option("--format", v2.format, "csv, json or tsv");

  VerifyArgs verify;
  auto* vf = app.add_subcommand("verify", "Run self-check suites against the recurrence");
  vf->add_option("--suite", verify.suite, "closedform, valuation, identities, residuals or all");
  vf->add_option("--k-max", verify.k_max, "Largest order to check");
  vf->add_option("--n-max", verify.n_max, "Largest index to check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "gfib: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (g->parsed()) cmd_gen(gen, out);
    if (c->parsed()) cmd_closed(closed, out);
    if (v->parsed()) cmd_v2(v2, out);
    if (vf->parsed()) return cmd_verify(verify, out);
  } catch (const UsageError& e) {
    err << "gfib: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "gfib: " << e.what() << '\n';
    return kUsage;
  } catch (const SoundnessError& e) {
    err << "gfib: soundness violation: " << e.what() << '\n';
    return kUnsound;
  } catch (const InternalError& e) {
    err << "gfib: internal error: " << e.what() << '\n';
    return kUnsound;
  }
  return kOk;
}

}  // namespace gfib::cli
