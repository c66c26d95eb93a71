#include "cli/cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <string_view>

#include <CLI11.hpp>

#include "bstick/errors.hpp"
#include "bstick/exact.hpp"
#include "bstick/montecarlo.hpp"
#include "bstick/verification.hpp"
#include "cli/records.hpp"

namespace bstick::cli {
namespace {

struct CommonOptions {
  std::string format = "csv";

  Format parsed_format() const { return format == "json" ? Format::Json : Format::Csv; }
};

void add_format_option(CLI::App& cmd, CommonOptions& common) {
  cmd.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

/// x as "num/den", an integer, or a decimal rounded to the nearest rational
/// with denominator <= 10^6.
Rational parse_x(const std::string& text) {
  if (text.find_first_of(".eE") != std::string::npos) return Rational::from_decimal(text, BigInt(1'000'000));
  return Rational::parse(text);
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw InvalidArgument("BSTICK_SEED must be a decimal 64-bit unsigned integer, got '" + text + "'");
  }
  return value;
}

struct Range {
  int low;
  int high;
};

Range parse_range(const std::string& text, const char* what) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InvalidArgument(std::string("malformed ") + what + " range '" + text + "'; expected LOW:HIGH or VALUE");
    }
    return v;
  };
  const auto colon = text.find(':');
  Range r{};
  if (colon == std::string::npos) {
    r.low = r.high = parse_int(text);
  } else {
    r.low = parse_int(std::string_view(text).substr(0, colon));
    r.high = parse_int(std::string_view(text).substr(colon + 1));
  }
  if (r.low > r.high) throw InvalidArgument(std::string(what) + " range '" + text + "' is empty");
  return r;
}

OutputRecord exact_record(std::optional<int> k, int n, std::string event, const Rational& value) {
  OutputRecord record;
  record.kind = "exact";
  record.k = k;
  record.n = n;
  record.event = std::move(event);
  record.value_exact = value.to_string();
  record.value_decimal = value.to_decimal(12);
  record.timestamp = utc_timestamp();
  return record;
}

// exact ------------------------------------------------------------------

struct ExactArgs {
  CommonOptions common;
  std::string formula = "theorem1";
  std::optional<int> k;
  int n = 0;
  std::optional<std::string> x;
  int cap = kDefaultExactCap;
  bool allow_double = false;
};

int do_exact(const ExactArgs& args, std::ostream& out, std::ostream& err) {
  const ExactOptions options{args.cap};
  const bool is_theorem1 = args.formula == "theorem1";
  const bool is_whitworth = args.formula == "whitworth";
  if (is_theorem1 && !args.k) throw InvalidArgument("--formula theorem1 requires --k");
  if (!is_theorem1 && args.k) throw InvalidArgument("--k is only accepted with --formula theorem1");
  if (is_whitworth && !args.x) throw InvalidArgument("--formula whitworth requires --x");
  if (!is_whitworth && args.x) throw InvalidArgument("--x is only accepted with --formula whitworth");

  OutputRecord record;
  const int n = args.n;
  if (is_theorem1) {
    const ProblemSpec spec(*args.k, n);
    if (n > args.cap && args.allow_double) {
      const auto approx = theorem1_pkn_double(spec);
      if (approx.cancellation_warning) {
        err << "warning: catastrophic cancellation in double-precision evaluation (max|term|/|result| = "
            << format_decimal(approx.cancellation_ratio, 3) << "); the value is unreliable\n";
      }
      record.kind = "exact";
      record.k = spec.k();
      record.n = n;
      record.event = "theorem1:double";
      record.value_decimal = format_decimal(approx.value, 12);
      record.timestamp = utc_timestamp();
    } else {
      record = exact_record(spec.k(), n, "theorem1", theorem1_pkn(spec, options));
    }
  } else if (args.formula == "pnn") {
    record = exact_record(n, n, "pnn", pnn_closed(n, options));
  } else if (args.formula == "p3n") {
    record = exact_record(3, n, "p3n", p3n_closed(n, options));
  } else if (args.formula == "p4n-beta") {
    record = exact_record(4, n, "p4n-beta", p4n_beta(n, options));
  } else if (args.formula == "p5n-beta") {
    record = exact_record(5, n, "p5n-beta", p5n_beta(n, options));
  } else if (is_whitworth) {
    const Rational x = parse_x(*args.x);
    record = exact_record(std::nullopt, n, "whitworth:x=" + x.to_string(), whitworth_survivor(n, x, options));
  } else {
    record = exact_record(std::nullopt, n, "exists-triangle", exists_triangle_prob(n, options));
  }
  write_records(out, std::span(&record, 1), args.common.parsed_format());
  return kSuccess;
}

// table ------------------------------------------------------------------

struct TableArgs {
  CommonOptions common;
  std::string k_range;
  std::string n_range;
  int cap = kDefaultExactCap;
};

int do_table(const TableArgs& args, std::ostream& out) {
  const Range ks = parse_range(args.k_range, "--k");
  const Range ns = parse_range(args.n_range, "--n");
  if (ks.low < 3) throw InvalidArgument("--k range must start at 3 or above");
  const ExactOptions options{args.cap};
  std::vector<OutputRecord> records;
  for (int k = ks.low; k <= ks.high; ++k) {
    for (int n = std::max(ns.low, k); n <= ns.high; ++n) {
      records.push_back(exact_record(k, n, "theorem1", theorem1_pkn(ProblemSpec(k, n), options)));
    }
  }
  write_records(out, records, args.common.parsed_format());
  return kSuccess;
}

// simulate ---------------------------------------------------------------

struct SimulateArgs {
  CommonOptions common;
  int n = 0;
  std::string event;
  std::optional<int> k;
  std::optional<std::string> x;
  std::uint64_t trials = 1'000'000;
  std::optional<std::uint64_t> seed;
  std::string model = "uniform";
  unsigned workers = 0;
  std::uint64_t chunk_size = kDefaultChunkSize;
  bool oracle = false;
  double ci_level = 0.95;
  std::uint64_t budget = kDefaultDrawBudget;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const Environment& env) {
  if (flag) return *flag;
  if (env.seed) return parse_seed(*env.seed);
  return 0;
}

int do_simulate(const SimulateArgs& args, const Environment& env, std::ostream& out) {
  SimulationConfig config;
  config.n = args.n;
  std::string event_text;
  std::optional<int> record_k;
  if (args.event == "max-spacing") {
    if (!args.x) throw InvalidArgument("--event max-spacing requires --x");
    if (args.k) throw InvalidArgument("--k is not used by --event max-spacing");
    const Rational x = parse_x(*args.x);
    if (x.sign() <= 0 || x >= Rational(1)) throw InvalidArgument("--x must lie in (0,1)");
    config.event = MaxSpacingExceeds{x.to_double()};
    event_text = "max-spacing:x=" + x.to_string();
  } else {
    if (!args.k) throw InvalidArgument("--event " + args.event + " requires --k");
    if (args.x) throw InvalidArgument("--x is only used by --event max-spacing");
    if (args.event == "all") {
      config.event = AllKSubsetsPolygon{*args.k};
    } else {
      config.event = ExistsKPolygon{*args.k};
    }
    event_text = args.event + ":k=" + std::to_string(*args.k);
    record_k = *args.k;
  }
  config.model = args.model == "exponential" ? SamplerModel::ExponentialNormalized : SamplerModel::UniformBreaks;
  config.trials = args.trials;
  config.seed = resolve_seed(args.seed, env);
  config.chunk_size = args.chunk_size;
  config.use_oracle = args.oracle;
  config.ci_level = args.ci_level;
  config.workers = args.workers;
  config.draw_budget = args.budget;

  const auto result = estimate(config);

  OutputRecord record;
  record.kind = "estimate";
  record.k = record_k;
  record.n = config.n;
  record.event = event_text + ";model=" + std::string(to_string(result.model));
  record.value_decimal = format_decimal(result.p_hat, 12);
  record.ci_low = format_decimal(result.ci_low, 12);
  record.ci_high = format_decimal(result.ci_high, 12);
  record.trials = result.trials;
  record.seed = result.seed;
  record.generator_id = std::string(result.generator_id);
  record.timestamp = utc_timestamp();
  write_records(out, std::span(&record, 1), args.common.parsed_format());
  return kSuccess;
}

// verify -----------------------------------------------------------------

struct VerifyArgs {
  CommonOptions common;
  std::string suite = "all";
  int n_max = 20;
  std::uint64_t trials = 100'000;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_path;
  unsigned workers = 0;
};

int do_verify(const VerifyArgs& args, const Environment& env, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(args.seed, env);
  const bool all = args.suite == "all";

  // Open the destination first so an unwritable path fails fast.
  std::ofstream file;
  if (args.out_path) {
    file.open(*args.out_path, std::ios::out | std::ios::trunc);
    if (!file) {
      err << "error: cannot write report to '" << *args.out_path << "'\n";
      return kIoError;
    }
  }

  VerificationReport report;
  if (all || args.suite == "exact") report.append(run_exact_crosschecks(args.n_max));
  if (all || args.suite == "identities") report.append(run_identity_selftests());
  if (all || args.suite == "lemma3") report.append(run_lemma3_checks());
  if (all || args.suite == "mc") report.append(run_mc_crosschecks(args.trials, seed, args.workers));
  report.sort_by_id();

  std::ostream& sink = args.out_path ? static_cast<std::ostream&>(file) : out;
  write_report(sink, report, args.common.parsed_format());
  sink.flush();
  if (!sink) {
    err << "error: failed while writing the report\n";
    return kIoError;
  }
  err << "verify: " << report.entries.size() << " checks, " << report.failure_count() << " failed\n";
  for (const auto& e : report.entries) {
    if (!e.passed) err << "  FAILED " << e.check_id << ": expected " << e.expected << ", got " << e.actual << '\n';
  }
  return report.all_passed() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Broken-stick polygon probabilities: exact values, simulation and cross-checks", "bstick"};
  app.require_subcommand(1);

  ExactArgs exact_args;
  auto* exact = app.add_subcommand("exact", "Evaluate one closed-form probability exactly");
  exact->add_option("--formula", exact_args.formula, "Formula to evaluate")
      ->check(CLI::IsMember({"theorem1", "pnn", "p3n", "p4n-beta", "p5n-beta", "whitworth", "exists-triangle"}))
      ->capture_default_str();
  exact->add_option("--k", exact_args.k, "Polygon side count (theorem1)");
  exact->add_option("--n", exact_args.n, "Number of pieces")->required();
  exact->add_option("--x", exact_args.x, "Threshold for whitworth: num/den or decimal");
  exact->add_option("--cap", exact_args.cap, "Largest n evaluated exactly")->capture_default_str();
  exact->add_flag("--allow-double", exact_args.allow_double,
                  "Above the cap, evaluate theorem1 in double precision instead of failing");
  add_format_option(*exact, exact_args.common);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Tabulate theorem1 over ranges of k and n");
  table->add_option("--k", table_args.k_range, "k range LOW:HIGH")->required();
  table->add_option("--n", table_args.n_range, "n range LOW:HIGH")->required();
  table->add_option("--cap", table_args.cap, "Largest n evaluated exactly")->capture_default_str();
  add_format_option(*table, table_args.common);

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of an event probability");
  simulate->add_option("--n", sim_args.n, "Number of pieces")->required();
  simulate->add_option("--event", sim_args.event, "Event to estimate")
      ->required()
      ->check(CLI::IsMember({"all", "exists", "max-spacing"}));
  simulate->add_option("--k", sim_args.k, "Polygon side count (all, exists)");
  simulate->add_option("--x", sim_args.x, "Threshold (max-spacing): num/den or decimal");
  simulate->add_option("--trials", sim_args.trials, "Number of trials")->capture_default_str();
  simulate->add_option("--seed", sim_args.seed, "Seed (default: $BSTICK_SEED, else 0)");
  simulate->add_option("--model", sim_args.model, "Sampler model")
      ->check(CLI::IsMember({"uniform", "exponential"}))
      ->capture_default_str();
  simulate->add_option("--workers", sim_args.workers, "Worker threads (0 = all cores); results do not depend on it")
      ->capture_default_str();
  simulate->add_option("--chunk-size", sim_args.chunk_size, "Trials per chunk")->capture_default_str();
  simulate->add_flag("--oracle", sim_args.oracle, "Decide polygon events by subset enumeration (n <= 15)");
  simulate->add_option("--ci-level", sim_args.ci_level, "Wilson interval confidence level")->capture_default_str();
  simulate->add_option("--budget", sim_args.budget, "Maximum trials * n")->capture_default_str();
  add_format_option(*simulate, sim_args.common);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run cross-validation suites and write a report");
  verify->add_option("--suite", verify_args.suite, "Suite to run")
      ->check(CLI::IsMember({"exact", "identities", "lemma3", "mc", "all"}))
      ->capture_default_str();
  verify->add_option("--n-max", verify_args.n_max, "Largest n for exact cross-checks")->capture_default_str();
  verify->add_option("--trials", verify_args.trials, "Trials per Monte Carlo check")->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "Seed (default: $BSTICK_SEED, else 0)");
  verify->add_option("--out", verify_args.out_path, "Report file (default: stdout)");
  verify->add_option("--workers", verify_args.workers, "Worker threads (0 = all cores)")->capture_default_str();
  add_format_option(*verify, verify_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*exact) return do_exact(exact_args, out, err);
    if (*table) return do_table(table_args, out);
    if (*simulate) return do_simulate(sim_args, env, out);
    if (*verify) return do_verify(verify_args, env, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  std::vector<const char*> argv{"bstick"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err, env);
}

}  // namespace bstick::cli
