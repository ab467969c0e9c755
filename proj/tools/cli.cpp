#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "horn/catalog.hpp"
#include "horn/harness.hpp"
#include "horn/series.hpp"

namespace horn::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::to_string(v);
}

struct Common {
  std::string function;
  std::vector<double> params;
  std::vector<double> point;
  int max_m = SeriesConfig{}.max_m;
  int max_n = SeriesConfig{}.max_n;
  double tail_tol = SeriesConfig{}.tail_tol;
  std::string mode = "compensated";
  std::string format = "text";
  std::string output;
};

void add_series_options(CLI::App* sub, Common& c) {
  sub->add_option("--max-m", c.max_m, "Truncation in m")->capture_default_str();
  sub->add_option("--max-n", c.max_n, "Truncation in n")->capture_default_str();
  sub->add_option("--tail-tol", c.tail_tol, "Target absolute tail of the series")
      ->capture_default_str();
  sub->add_option("--mode", c.mode, "Summation mode")
      ->check(CLI::IsMember({"plain", "compensated"}))
      ->capture_default_str();
}

void add_function_options(CLI::App* sub, Common& c, bool with_point) {
  sub->add_option("-f,--function", c.function, "h1 .. h7")->required();
  sub->add_option("--params", c.params,
                  "Comma-separated parameters in series order:\n"
                  "  h1 a,b,c,d   h2 a,b,c,d,e   h3 a,b,c   h4 a,b,c,d\n"
                  "  h5 a,b,c     h6 a,b,c       h7 a,b,c,d")
      ->delimiter(',')
      ->required();
  if (with_point) sub->add_option("--point", c.point, "x,y")->delimiter(',')->required();
}

SeriesConfig series_config(const Common& c) {
  SeriesConfig cfg;
  cfg.max_m = c.max_m;
  cfg.max_n = c.max_n;
  cfg.tail_tol = c.tail_tol;
  cfg.mode = c.mode == "plain" ? SummationMode::plain : SummationMode::compensated;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

HornId function_id(const Common& c) {
  const auto id = parse_horn_id(c.function);
  if (!id) throw UsageError("unknown function '" + c.function + "' (expected h1 .. h7)");
  if (c.params.size() != param_arity(*id)) {
    throw UsageError(std::string(to_string(*id)) + " takes " +
                     std::to_string(param_arity(*id)) + " parameters, got " +
                     std::to_string(c.params.size()));
  }
  return *id;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw UsageError("cannot write " + c.output);
  f << text;
}

int cmd_eval(const Common& c, std::ostream& out) {
  const HornId id = function_id(c);
  if (c.point.size() != 2) throw UsageError("--point takes x,y");
  const EvalResult r =
      eval(id, ParamVector(c.params), {c.point[0], c.point[1]}, series_config(c));
  std::string text;
  if (c.format == "json") {
    nlohmann::json j = {{"function", std::string(to_string(id))},
                        {"value", r.value},
                        {"err_estimate", r.err_estimate},
                        {"terms_used", r.terms_used},
                        {"in_domain", r.in_domain},
                        {"truncated_cleanly", r.truncated_cleanly}};
    text = j.dump(2) + "\n";
  } else if (c.format == "csv") {
    text = "value,err_estimate,terms_used,in_domain,truncated_cleanly\n" + shortest(r.value) +
           "," + shortest(r.err_estimate) + "," + std::to_string(r.terms_used) + "," +
           (r.in_domain ? "true" : "false") + "," + (r.truncated_cleanly ? "true" : "false") +
           "\n";
  } else {
    std::ostringstream os;
    os << "value             " << shortest(r.value) << '\n'
       << "err_estimate      " << shortest(r.err_estimate) << '\n'
       << "terms_used        " << r.terms_used << '\n'
       << "in_domain         " << (r.in_domain ? "true" : "false") << '\n'
       << "truncated_cleanly " << (r.truncated_cleanly ? "true" : "false") << '\n';
    text = os.str();
  }
  emit(c, text, out);
  return kOk;
}

struct Grid {
  double lo, hi;
  int n;
};

Grid parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw UsageError("grid axis '" + spec + "' is not lo:hi:n");
  try {
    Grid g{std::stod(parts[0]), std::stod(parts[1]), std::stoi(parts[2])};
    if (g.n < 1) throw UsageError("grid count must be positive");
    return g;
  } catch (const std::logic_error&) {
    throw UsageError("grid axis '" + spec + "' is not lo:hi:n");
  }
}

double grid_value(const Grid& g, int i) {
  return g.n == 1 ? g.lo : g.lo + (g.hi - g.lo) * i / (g.n - 1);
}

int cmd_table(const Common& c, const std::string& grid, std::ostream& out) {
  const HornId id = function_id(c);
  const auto comma = grid.find(',');
  if (comma == std::string::npos) throw UsageError("--grid takes x0:x1:nx,y0:y1:ny");
  const Grid gx = parse_axis(grid.substr(0, comma));
  const Grid gy = parse_axis(grid.substr(comma + 1));
  const SeriesConfig cfg = series_config(c);
  const ParamVector params(c.params);

  std::ostringstream os;
  os << "x,y,value,err_estimate,in_domain\n";
  for (int i = 0; i < gx.n; ++i) {
    for (int j = 0; j < gy.n; ++j) {
      const EvalPoint p{grid_value(gx, i), grid_value(gy, j)};
      const EvalResult r = eval(id, params, p, cfg);
      os << shortest(p.x) << ',' << shortest(p.y) << ',' << shortest(r.value) << ','
         << shortest(r.err_estimate) << ',' << (r.in_domain ? "true" : "false") << '\n';
    }
  }
  emit(c, os.str(), out);
  return kOk;
}

std::vector<IdentityRecord> filtered(const std::string& prefix) {
  std::vector<IdentityRecord> out;
  for (const auto& r : catalog()) {
    if (r.id.compare(0, prefix.size(), prefix) == 0) out.push_back(r);
  }
  return out;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("HORN_KERNEL_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc{} || ptr != end) throw UsageError("HORN_KERNEL_SEED is not an integer");
  return v;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Horn hypergeometric functions H1..H7: evaluation and identity verification",
               "horn"};
  app.require_subcommand(1);
  Common c;

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one function at one point");
  add_function_options(eval_cmd, c, true);
  add_series_options(eval_cmd, c);

  CLI::App* table_cmd = app.add_subcommand("table", "CSV grid of values");
  std::string grid;
  add_function_options(table_cmd, c, false);
  table_cmd->add_option("--grid", grid, "x0:x1:nx,y0:y1:ny")->required();
  add_series_options(table_cmd, c);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Sample and check catalogued identities");
  CLI::App* list_cmd = app.add_subcommand("list-identities", "Print the identity registry");

  std::string prefix;
  SamplePlan plan;
  TolerancePolicy tol = TolerancePolicy::standard();
  int jobs = 1;
  bool timing = false;
  std::string seed_text;
  verify_cmd->add_option("--identity", prefix, "Only identities whose id starts with this");
  verify_cmd->add_option("--samples", plan.n_samples, "Samples per identity and free value")
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed_text, "Seed (default: $HORN_KERNEL_SEED or 0)");
  verify_cmd->add_option("--k", plan.k_values, "Recursion depths")->delimiter(',');
  verify_cmd->add_option("--s", plan.s_values, "Operator orders")->delimiter(',');
  verify_cmd->add_option("--R", plan.R, "Truncation of summation identities")
      ->capture_default_str();
  verify_cmd->add_option("--a-tol", tol.a_tol, "Absolute tolerance")->capture_default_str();
  verify_cmd->add_option("--r-tol", tol.r_tol, "Relative tolerance (families without override)")
      ->capture_default_str();
  verify_cmd->add_option("-j,--jobs", jobs, "Worker threads, 0 = all cores")
      ->capture_default_str();
  verify_cmd->add_flag("--timing", timing, "Include wall time in the report");
  add_series_options(verify_cmd, c);
  list_cmd->add_option("--identity", prefix, "Only identities whose id starts with this");

  for (CLI::App* sub : {eval_cmd, table_cmd, verify_cmd}) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
  }
  list_cmd->add_option("-o,--output", c.output, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(c, out);
    if (table_cmd->parsed()) return cmd_table(c, grid, out);
    if (list_cmd->parsed()) {
      emit(c, registry_json(filtered(prefix)) + "\n", out);
      return kOk;
    }

    // verify
    if (seed_text.empty()) {
      plan.seed = default_seed();
    } else {
      const char* b = seed_text.data();
      auto [ptr, ec] = std::from_chars(b, b + seed_text.size(), plan.seed);
      if (ec != std::errc{} || ptr != b + seed_text.size()) {
        throw UsageError("--seed is not a nonnegative integer");
      }
    }
    const SeriesConfig cfg = series_config(c);
    try {
      plan.validate();
      tol.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const std::vector<IdentityRecord> records = filtered(prefix);
    if (records.empty()) err << "warning: no identity matches '" << prefix << "'\n";
    VerificationReport report = run(records, plan, tol, cfg, jobs);
    if (!timing) report.wall_time_s.reset();
    std::string text;
    if (c.format == "json") {
      text = report_json(report) + "\n";
    } else if (c.format == "csv") {
      text = report_csv(report);
    } else {
      text = report_text(report);
    }
    emit(c, text, out);
    return report.has_blocking_dispute() ? kDisputed : kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const HornError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericDomain;
  }
}

}  // namespace horn::cli
