// pq: command-line front end for the (p,q)-calculus library.
//
// Exit codes: 0 success, 1 identity-suite failure, 2 usage or parse error.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqcalc/identities.hpp"
#include "pqcalc/integration.hpp"
#include "pqcalc/json_io.hpp"
#include "pqcalc/pqpower.hpp"
#include "pqcalc/taylor.hpp"

namespace {

constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string p = "2";
  std::string q = "1";
  bool json = false;
  long max_terms = pq::TruncationPolicy{}.max_terms;
  double tail_tol = pq::TruncationPolicy{}.tail_tol;

  pq::PqParams params() const { return pq::PqParams(pq::Rational::parse(p), pq::Rational::parse(q)); }

  pq::TruncationPolicy policy() const {
    pq::TruncationPolicy out;
    out.max_terms = max_terms;
    out.tail_tol = tail_tol;
    out.validate();
    return out;
  }
};

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

/// Rational literal, decimal, or "inf".
double parse_real(const std::string& s) {
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  try {
    return pq::Rational::parse(s).to_double();
  } catch (const pq::Error&) {
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !std::isfinite(v)) throw pq::Error(pq::ErrorCode::Parse, "not a number: '" + s + "'");
  return v;
}

pq::NumericFn parse_function(const std::string& spec) {
  pq::NumericFn fn;
  if (spec.rfind("poly:", 0) == 0) return pq::from_polynomial(pq::Polynomial::parse(spec.substr(5)));
  if (spec == "recip") {
    fn.eval = [](double x) { return 1.0 / x; };
    return fn;
  }
  if (spec == "log") {
    fn.eval = [](double x) { return std::log(x); };
    return fn;
  }
  if (spec.rfind("powneg:", 0) == 0) {
    const double r = parse_real(spec.substr(7));
    fn.eval = [r](double x) { return std::pow(x, -r); };
    return fn;
  }
  throw pq::Error(pq::ErrorCode::Parse, "unknown function spec '" + spec + "' (poly:..., recip, log, powneg:r)");
}

void print_real(double v) { std::cout << std::setprecision(15) << v << '\n'; }

int run_bracket(const CliConfig& cfg, const std::string& arg) {
  const auto params = cfg.params();
  if (is_integer_literal(arg)) {
    const auto value = pq::bracket(std::stoll(arg), params);
    if (cfg.json) {
      std::cout << nlohmann::json{{"value", value.str()}}.dump() << '\n';
    } else {
      std::cout << value << '\n';
    }
    return 0;
  }
  const auto value = pq::bracket_alpha(parse_real(arg), params);
  if (cfg.json) {
    std::cout << nlohmann::json{{"value", value.value()}}.dump() << '\n';
  } else {
    print_real(value.value());
  }
  return 0;
}

int run_derive(const CliConfig& cfg, const std::string& arg, int k) {
  if (k < 0) throw pq::Error(pq::ErrorCode::NegativeArgument, "--k must be >= 0");
  const auto params = cfg.params();
  if (arg.rfind("pqpow", 0) == 0) {
    pq::ScaledPower result{pq::Rational(1), pq::parse_pq_power(arg, params)};
    for (int i = 0; i < k; ++i) {
      const auto step = pq::derive_pq_power(result.expr);
      result = {result.coeff * step.coeff, step.expr};
    }
    if (cfg.json) {
      std::cout << nlohmann::json{{"coeff", result.coeff.str()}, {"expr", result.expr.str()}}.dump() << '\n';
    } else {
      std::cout << result.coeff << " * " << result.expr.str() << '\n';
    }
    return 0;
  }
  const auto derived = pq::pq_derive_poly_k(pq::Polynomial::parse(arg), k, params);
  if (cfg.json) {
    std::cout << nlohmann::json{{"polynomial", derived.str()}}.dump() << '\n';
  } else {
    std::cout << derived.str() << '\n';
  }
  return 0;
}

int run_taylor(const CliConfig& cfg, const std::string& poly, const std::string& a, bool reversed) {
  const auto params = cfg.params();
  const auto f = pq::Polynomial::parse(poly);
  const auto center = pq::Rational::parse(a);
  const auto expansion =
      reversed ? pq::taylor_expand_reversed(f, center, params) : pq::taylor_expand(f, center, params);
  const bool exact = expansion.reconstruct(params) == f;
  auto j = pq::to_json(expansion);
  if (cfg.json) {
    j["exact"] = exact;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << j.dump() << '\n' << "exact: " << (exact ? "true" : "false") << '\n';
  }
  return 0;
}

int run_integrate(const CliConfig& cfg, const std::string& spec, const std::vector<std::string>& bounds,
                  bool improper, bool to_inf) {
  const auto params = cfg.params();
  const auto policy = cfg.policy();
  const auto f = parse_function(spec);
  if (improper && to_inf) throw CLI::ValidationError("--improper and --to-inf are exclusive");
  pq::IntegralResult result;
  if (improper) {
    if (!bounds.empty()) throw CLI::ValidationError("--improper takes no bounds");
    result = pq::integral_improper(f, params, policy);
  } else if (to_inf) {
    if (bounds.size() != 1) throw CLI::ValidationError("--to-inf takes exactly one bound");
    result = pq::integral_to_infinity(f, parse_real(bounds[0]), params, policy);
  } else {
    if (bounds.size() != 2) throw CLI::ValidationError("integrate needs two bounds a b");
    const double a = parse_real(bounds[0]);
    const double b = parse_real(bounds[1]);
    // ∫_a^a is zero; the library only accepts a < b.
    result = a == b ? pq::IntegralResult{0.0, 0, 0.0, params.regime(), pq::SeriesStatus::Converged}
                    : pq::integral(f, a, b, params, policy);
  }
  std::cout << pq::to_json(result).dump() << '\n';
  return 0;
}

int run_identities(const CliConfig& cfg, const pq::SuiteOptions& options) {
  const auto report = pq::run_identity_suite(options);
  if (cfg.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& o : report.outcomes) {
      out.push_back({{"label", o.label}, {"passed", o.passed}, {"trials", o.trials}, {"ok", o.ok()}, {"notes", o.notes}});
    }
    std::cout << nlohmann::json{{"outcomes", out}, {"all_passed", report.all_passed()}}.dump(2) << '\n';
  } else {
    for (const auto& o : report.outcomes) {
      std::cout << (o.ok() ? "PASS " : "FAIL ") << std::left << std::setw(30) << o.label << std::right
                << std::setw(5) << o.passed << '/' << o.trials << "  " << o.description << '\n';
      for (const auto& note : o.notes) std::cout << "      " << note << '\n';
    }
    std::cout << (report.all_passed() ? "all identities hold" : "IDENTITY FAILURES") << " (seed " << options.seed
              << ", " << options.trials << " trials each)\n";
  }
  return report.all_passed() ? 0 : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(p,q)-calculus: twin-basic numbers, (p,q)-derivatives, power bases, Taylor expansions, integrals"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--p", cfg.p, "p as a rational literal (default 2)");
  app.add_option("--q", cfg.q, "q as a rational literal (default 1)");
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--max-terms", cfg.max_terms, "series truncation: maximum number of terms");
  app.add_option("--tail-tol", cfg.tail_tol, "series truncation: term magnitude counted as converged");

  std::string bracket_arg;
  auto* bracket_cmd = app.add_subcommand("bracket", "twin-basic number [n] (integer n, exact) or [alpha] (real)");
  bracket_cmd->add_option("n", bracket_arg, "integer n or real alpha")->required();

  std::string derive_arg;
  int derive_k = 1;
  auto* derive_cmd = app.add_subcommand("derive", "k-th (p,q)-derivative of a polynomial \"c0,c1,...\" or pqpow(...)");
  derive_cmd->add_option("expr", derive_arg, "coefficient list or pqpow(a=..,n=..,gamma=..) / pqpowrev(...)")->required();
  derive_cmd->add_option("--k", derive_k, "derivative order (default 1)");

  std::string taylor_poly;
  std::string taylor_a;
  bool taylor_reversed = false;
  auto* taylor_cmd = app.add_subcommand("taylor", "(p,q)-Taylor expansion of a polynomial about a");
  taylor_cmd->add_option("poly", taylor_poly, "coefficient list c0,c1,...")->required();
  taylor_cmd->add_option("a", taylor_a, "expansion point (rational)")->required();
  taylor_cmd->add_flag("--reversed", taylor_reversed, "expand over (a ⊖ x)^k instead of (x ⊖ a)^k");

  std::string integrate_fn;
  std::vector<std::string> integrate_bounds;
  bool integrate_improper = false;
  bool integrate_to_inf = false;
  auto* integrate_cmd = app.add_subcommand("integrate", "(p,q)-integral of poly:c0,c1,..., recip, log or powneg:r");
  integrate_cmd->add_option("fn", integrate_fn, "function spec")->required();
  integrate_cmd->add_option("bounds", integrate_bounds, "a b, or a with --to-inf");
  integrate_cmd->add_flag("--improper", integrate_improper, "integrate over [0, inf)");
  integrate_cmd->add_flag("--to-inf", integrate_to_inf, "integrate over [a, inf)");

  pq::SuiteOptions suite;
  std::string only;
  auto* identities_cmd = app.add_subcommand("identities", "run the seeded identity suite");
  identities_cmd->add_option("--seed", suite.seed, "random seed");
  identities_cmd->add_option("--trials", suite.trials, "trials per identity (default 50)");
  identities_cmd->add_option("--only", only, "run a single identity by label");
  identities_cmd->add_flag("--self-test-fail", suite.inject_failure, "add a false identity to check failure reporting");
  identities_cmd->add_flag_callback("--list", [] {
    for (const auto& label : pq::identity_labels()) std::cout << label << '\n';
    throw CLI::Success();
  }, "list identity labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help, --list and friends arrive here with exit code 0.
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*bracket_cmd) return run_bracket(cfg, bracket_arg);
    if (*derive_cmd) return run_derive(cfg, derive_arg, derive_k);
    if (*taylor_cmd) return run_taylor(cfg, taylor_poly, taylor_a, taylor_reversed);
    if (*integrate_cmd) return run_integrate(cfg, integrate_fn, integrate_bounds, integrate_improper, integrate_to_inf);
    if (*identities_cmd) {
      if (!only.empty()) suite.only = only;
      return run_identities(cfg, suite);
    }
  } catch (const pq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
