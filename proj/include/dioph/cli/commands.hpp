#pragma once

// Command implementations for the `dioph` tool. Each command writes its
// result to `out`, diagnostics to `err`, and returns the exit status:
// 0 no violation, 1 violation found, 2 usage or IO error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dioph/atlas/catalog.hpp"
#include "dioph/cli/config.hpp"
#include "dioph/estimator/fit.hpp"
#include "dioph/estimator/minima.hpp"
#include "dioph/exponents/profile.hpp"
#include "dioph/exponents/rules.hpp"
#include "dioph/exponents/theta.hpp"
#include "dioph/io/json_io.hpp"

namespace dioph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = dioph::detail::trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string endpoint_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline void emit_reports(const std::vector<BoundReport>& reports, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "csv") {
    out << "rule,params,status,slack_lo,slack_hi,details\n";
    for (const auto& r : reports) {
      Json s = interval_json(r.slack);
      out << r.rule_id << "," << csv_quote(params_to_string(r.params)) << "," << status_name(r.status) << ","
          << endpoint_text(s["lo"]) << "," << endpoint_text(s["hi"]) << "," << csv_quote(r.details) << "\n";
    }
    return;
  }
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  out << arr.dump(2) << "\n";
}

inline std::string counts_line(const std::vector<BoundReport>& reports) {
  std::ostringstream s;
  s << "SATISFIED " << count_status(reports, Status::Satisfied) << ", VIOLATED "
    << count_status(reports, Status::Violated) << ", INAPPLICABLE " << count_status(reports, Status::Inapplicable)
    << ", INDETERMINATE " << count_status(reports, Status::Indeterminate);
  return s.str();
}

/// Rules named in `spec` ("all" or a comma list) over all legal parameters;
/// unknown ids are reported on `err` and skipped.
inline std::vector<BoundReport> run_rules(const ExponentProfile& profile, const std::string& spec, int n_max,
                                          std::ostream& err) {
  if (spec == "all") return run_all_rules(profile, n_max);
  std::vector<BoundReport> reports;
  for (const auto& id : split_list(spec)) {
    if (!rule_exists(id)) {
      err << "warning: unknown rule '" << id << "' skipped\n";
      continue;
    }
    const auto& rule = find_rule(id);
    for (const auto& params : enumerate_params(rule, n_max)) reports.push_back(evaluate_rule(rule, profile, params));
  }
  return reports;
}

}  // namespace detail

/// Rows (n, theta_lo, theta_hi, asymptote, residual * n^5) rounded to `digits`.
inline int cmd_theta(const RunConfig& cfg, std::ostream& out) {
  struct Row {
    int n;
    std::string lo, hi, asym, residual;
  };
  std::vector<Row> rows;
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
    const BigRational n6 = BigRational(pow_int(BigInt(n), 6));
    const BigRational eps = BigRational(1) / (BigRational(pow10(static_cast<unsigned long>(cfg.digits + 3))) * n6);
    Interval t = theta(n, eps);
    Interval a = theta_asymptote(n);
    BigRational mid = (t.lo().value() + t.hi().value()) / 2;
    BigRational residual = (mid - a.lo().value()) * BigRational(pow_int(BigInt(n), 5));
    rows.push_back(Row{n, to_decimal(t.lo().value(), cfg.digits), to_decimal(t.hi().value(), cfg.digits),
                       to_decimal(a.lo().value(), cfg.digits), to_decimal(residual, cfg.digits)});
  }
  if (cfg.format == "csv") {
    out << "n,theta_lo,theta_hi,asymptote,residual_n5\n";
    for (const auto& r : rows) out << r.n << "," << r.lo << "," << r.hi << "," << r.asym << "," << r.residual << "\n";
  } else {
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back(Json{{"n", r.n}, {"theta_lo", r.lo}, {"theta_hi", r.hi}, {"asymptote", r.asym}, {"residual_n5", r.residual}});
    out << arr.dump(2) << "\n";
  }
  return kExitOk;
}

/// Profile source: a file path, or "atlas:<id>" for a curated profile.
inline ExponentProfile load_profile(const std::string& source) {
  if (source.rfind("atlas:", 0) == 0) return known_profile(source.substr(6)).profile;
  return parse_profile(detail::read_file(source));
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.profile.empty()) {
    err << "error: bounds needs --profile\n";
    return kExitUsage;
  }
  ExponentProfile profile = load_profile(cfg.profile);
  auto reports = detail::run_rules(profile, cfg.rules, cfg.n_max, err);
  detail::emit_reports(reports, cfg, out);
  err << detail::counts_line(reports) << "\n";
  return count_status(reports, Status::Violated) > 0 ? kExitViolation : kExitOk;
}

namespace detail {

inline std::vector<Problem> problems_of(const std::string& name) {
  if (name == "SIMULTANEOUS") return {Problem::Simultaneous};
  if (name == "POLYNOMIAL") return {Problem::Polynomial};
  return {Problem::Simultaneous, Problem::Polynomial};
}

/// Records for one (problem, n) over the grid; failures are reported per height.
inline std::vector<Json> estimate_series(const NumberSpec& spec, Problem problem, int n, int j_max,
                                         const std::vector<BigInt>& grid, const RunConfig& cfg,
                                         std::vector<MinimaRecord>& records) {
  const EstimatorConfig ec = cfg.estimator();
  std::vector<Json> errors;
  auto run_grid = [&](const std::vector<BigInt>& g) {
    if (cfg.mode == "AUTO") return estimate_grid(spec, problem, n, g, j_max, ec);
    Method m = parse_method(cfg.mode);
    if (problem == Problem::Simultaneous && j_max == 1 && m == Method::Exhaustive) return simultaneous_scan(spec, n, g, ec);
    return minima_grid(spec, problem, n, g, j_max, m, ec);
  };
  try {
    records = run_grid(grid);
    return errors;
  } catch (const Error&) {
    // Retry height by height so the heights that work still produce output.
  }
  records.clear();
  for (const auto& x : grid) {
    try {
      auto r = run_grid({x});
      records.insert(records.end(), r.begin(), r.end());
    } catch (const Error& e) {
      errors.push_back(Json{{"error", e.what()},
                            {"spec", spec.id()},
                            {"problem", std::string(problem_name(problem))},
                            {"n", n},
                            {"X", dioph::detail::integer_json(x)}});
    }
  }
  return errors;
}

}  // namespace detail

inline int cmd_estimate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  NumberSpec spec = resolve_spec(cfg.number);
  const auto grid = cfg.grid.heights();
  const bool csv = cfg.format == "csv";
  if (cfg.header) {
    Json h{{"header", Json{{"tool", "dioph"}, {"generated", detail::utc_timestamp()}, {"spec", spec.id()},
                          {"spec_kind", std::string(spec_kind_name(spec.kind()))}}}};
    out << (csv ? "# " : "") << h.dump() << "\n";
  }
  if (csv) out << "type,problem,n,j,X,lo,hi,witness,method\n";
  bool any_error = false;
  std::vector<FitSummary> summaries;
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
    for (Problem problem : detail::problems_of(cfg.problem)) {
      const int j_max = std::min(cfg.j, n + 1);
      std::vector<MinimaRecord> records;
      auto errors = detail::estimate_series(spec, problem, n, j_max, grid, cfg, records);
      for (const auto& r : records) {
        Json j = record_json(r);
        if (csv) {
          out << "record," << j["problem"].get<std::string>() << "," << r.n << "," << r.j << "," << r.X.get_str() << ","
              << detail::endpoint_text(j["minimum_lo"]) << "," << detail::endpoint_text(j["minimum_hi"]) << ","
              << detail::csv_quote(j["witness"].dump()) << "," << j["method"].get<std::string>() << "\n";
        } else {
          out << j.dump() << "\n";
        }
      }
      for (const auto& e : errors) {
        any_error = true;
        err << "error: " << e["error"].get<std::string>() << " (" << e["problem"].get<std::string>() << ", n=" << n
            << ", X=" << e["X"].dump() << ")\n";
        if (!csv) out << e.dump() << "\n";
      }
      for (const auto& [j, recs] : split_by_index(records)) {
        FitSummary s{spec.id(), std::string(spec_kind_name(spec.kind())), problem, n, j, {}};
        try {
          s.fit = fit_exponent(recs);
        } catch (const Error& e) {
          err << "warning: no fit for " << problem_name(problem) << " n=" << n << " j=" << j << ": " << e.what() << "\n";
          continue;
        }
        summaries.push_back(s);
      }
    }
  }
  for (const auto& s : summaries) {
    Json j = summary_json(s);
    if (csv) {
      out << "summary_ordinary," << j["problem"].get<std::string>() << "," << s.n << "," << s.j << ",,"
          << detail::endpoint_text(j["ordinary_lo"]) << "," << detail::endpoint_text(j["ordinary_hi"]) << ",,\n";
      out << "summary_uniform," << j["problem"].get<std::string>() << "," << s.n << "," << s.j << ",,"
          << detail::endpoint_text(j["uniform_lo"]) << "," << detail::endpoint_text(j["uniform_hi"]) << ",,\n";
    } else {
      out << j.dump() << "\n";
    }
  }
  return any_error ? kExitUsage : kExitOk;
}

/// Empirical profile from the summary lines of an estimate stream.
inline ExponentProfile profile_from_estimates(std::istream& in) {
  ExponentProfile profile;
  bool transcendental = true;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (dioph::detail::trim(line).empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, "estimates line " + std::to_string(lineno) + ": " + e.what());
    }
    if (j.contains("header")) {
      if (j["header"].value("spec_kind", std::string()) == "ALGEBRAIC") transcendental = false;
      continue;
    }
    if (!j.value("summary", false)) continue;
    FitSummary s = summary_from_json(j);
    if (s.spec_kind == "ALGEBRAIC") transcendental = false;
    if (s.problem == Problem::Simultaneous) {
      profile = profile.with(lambda(s.n, s.j), s.fit.ordinary).with(lambda_hat(s.n, s.j), s.fit.uniform);
    } else {
      profile = profile.with(w(s.n, s.j), s.fit.ordinary).with(w_hat(s.n, s.j), s.fit.uniform);
    }
  }
  return profile.with_transcendental(transcendental);
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.estimates.empty()) {
    err << "error: verify needs --estimates\n";
    return kExitUsage;
  }
  std::ifstream in(cfg.estimates);
  if (!in) {
    err << "error: cannot read '" << cfg.estimates << "'\n";
    return kExitUsage;
  }
  ExponentProfile profile = profile_from_estimates(in).widened(parse_rational(cfg.tolerance));
  auto reports = detail::run_rules(profile, cfg.rules, std::max(cfg.n_max, profile.max_dimension()), err);
  std::vector<BoundReport> violated;
  for (const auto& r : reports)
    if (r.status == Status::Violated) violated.push_back(r);
  if (cfg.format == "csv") {
    out << "# " << detail::counts_line(reports) << "\n";
    detail::emit_reports(violated, cfg, out);
  } else {
    Json counts{{"SATISFIED", count_status(reports, Status::Satisfied)},
                {"VIOLATED", violated.size()},
                {"INAPPLICABLE", count_status(reports, Status::Inapplicable)},
                {"INDETERMINATE", count_status(reports, Status::Indeterminate)}};
    Json v = Json::array();
    for (const auto& r : violated) v.push_back(report_json(r));
    out << Json{{"counts", counts}, {"violated", v}}.dump(2) << "\n";
  }
  err << detail::counts_line(reports) << "\n";
  return violated.empty() ? kExitOk : kExitViolation;
}

inline int cmd_atlas_list(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "csv") {
    out << "id,kind,payload\n";
    for (const auto& s : list_atlas())
      out << s.id() << "," << spec_kind_name(s.kind()) << "," << detail::csv_quote(s.payload()) << "\n";
    return kExitOk;
  }
  out << emit_atlas(list_atlas());
  return kExitOk;
}

inline int cmd_atlas_profile(const std::string& id, std::ostream& out) {
  out << emit_profile(known_profile(id).profile);
  return kExitOk;
}

/// Parses arguments, merges the optional config file (flags win), and runs the command.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diophantine exponent toolkit: theta tables, rule suites, minima estimation"};
  app.require_subcommand(1);
  app.fallthrough();

  std::map<std::string, std::string> given;
  std::string config_path;
  app.add_option("--config", config_path, "key = value config file; flags override it");
  auto opt = [&](const std::string& key, const std::string& help) {
    return app.add_option("--" + key, given[key], help);
  };
  opt("number", "atlas id or inline spec record");
  opt("n", "dimension or range a:b");
  opt("problem", "SIMULTANEOUS, POLYNOMIAL or BOTH");
  opt("j", "largest minima index");
  opt("grid", "height grid lo:hi:ratio");
  opt("mode", "AUTO, EXHAUSTIVE or LATTICE");
  opt("digits", "decimal digits for theta");
  opt("rules", "'all' or comma-separated rule ids");
  opt("n-max", "largest dimension for rule parameters");
  opt("tolerance", "widening applied to fitted exponents");
  opt("out", "output file (default stdout)");
  opt("format", "json or csv");
  opt("budget", "exhaustive polynomial enumeration budget");
  opt("guard-digits", "extra oracle digits");
  opt("profile", "profile file or atlas:<id>");
  opt("estimates", "estimate stream from 'estimate'");
  bool no_header = false;
  bool include_vanishing = false;
  app.add_flag("--no-header", no_header, "omit the timestamped header line");
  app.add_flag("--include-vanishing", include_vanishing, "count polynomials vanishing at the number");

  auto* theta_cmd = app.add_subcommand("theta", "theta bounds for the uniform exponent");
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate rules on a profile");
  auto* estimate_cmd = app.add_subcommand("estimate", "successive minima and fitted exponents");
  auto* verify_cmd = app.add_subcommand("verify", "check fitted exponents against the rules");
  auto* atlas_cmd = app.add_subcommand("atlas", "built-in numbers and curated profiles");
  atlas_cmd->require_subcommand(1);
  atlas_cmd->fallthrough();
  auto* atlas_list = atlas_cmd->add_subcommand("list", "list atlas numbers");
  atlas_list->fallthrough();
  auto* atlas_profile = atlas_cmd->add_subcommand("profile", "print a curated profile");
  atlas_profile->fallthrough();
  std::string profile_id;
  atlas_profile->add_option("id", profile_id, "curated profile id")->required();
  for (auto* sub : {theta_cmd, bounds_cmd, estimate_cmd, verify_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  RunConfig cfg;
  if (theta_cmd->parsed()) cfg.format = "csv";
  try {
    if (!config_path.empty()) cfg = parse_config(detail::read_file(config_path), cfg);
    for (const auto& [key, value] : given)
      if (app.get_option("--" + key)->count() > 0) cfg.set(key, value);
    if (no_header) cfg.header = false;
    if (include_vanishing) cfg.include_vanishing = true;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "error: cannot write '" << cfg.out << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (theta_cmd->parsed()) return cmd_theta(cfg, *sink);
    if (bounds_cmd->parsed()) return cmd_bounds(cfg, *sink, err);
    if (estimate_cmd->parsed()) return cmd_estimate(cfg, *sink, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, *sink, err);
    if (atlas_list->parsed()) return cmd_atlas_list(cfg, *sink);
    if (atlas_profile->parsed()) return cmd_atlas_profile(profile_id, *sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dioph::cli
