#pragma once

// Run configuration shared by the command-line tool and its config files.
// Text form: one `key = value` per line, '#' comments, keys as the long flags.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/estimator/minima.hpp"
#include "dioph/exponents/profile.hpp"
#include "dioph/numerics/rational.hpp"

namespace dioph {

/// Inclusive integer range "a:b" or a single value "a".
struct IntRange {
  int lo = 1;
  int hi = 1;

  std::string to_string() const { return lo == hi ? std::to_string(lo) : std::to_string(lo) + ":" + std::to_string(hi); }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

inline int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, what + ": expected an integer, got '" + text + "'");
  }
}

inline IntRange parse_range(const std::string& text) {
  auto colon = text.find(':');
  IntRange r;
  if (colon == std::string::npos) {
    r.lo = r.hi = parse_int(detail::trim(text), "range");
  } else {
    r.lo = parse_int(detail::trim(text.substr(0, colon)), "range");
    r.hi = parse_int(detail::trim(text.substr(colon + 1)), "range");
  }
  if (r.lo < 1 || r.hi < r.lo) throw Error(ErrorCode::ParseError, "range '" + text + "' must satisfy 1 <= lo <= hi");
  return r;
}

/// Height grid "lo:hi:ratio".
struct GridSpec {
  BigInt lo = 10;
  BigInt hi = 100000;
  std::string ratio = "1.5";

  std::vector<BigInt> heights() const { return geometric_grid(lo, hi, std::stod(ratio)); }
  std::string to_string() const { return lo.get_str() + ":" + hi.get_str() + ":" + ratio; }
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline GridSpec parse_grid(const std::string& text) {
  auto a = text.find(':');
  auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) throw Error(ErrorCode::ParseError, "grid must be lo:hi:ratio, got '" + text + "'");
  GridSpec g;
  try {
    g.lo = BigInt(detail::trim(text.substr(0, a)));
    g.hi = BigInt(detail::trim(text.substr(a + 1, b - a - 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "grid bounds must be integers: '" + text + "'");
  }
  g.ratio = detail::trim(text.substr(b + 1));
  double r = 0;
  try {
    r = std::stod(g.ratio);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "grid ratio must be a number: '" + g.ratio + "'");
  }
  if (g.lo < 1 || g.hi < g.lo || !(r > 1.0)) throw Error(ErrorCode::ParseError, "grid needs 1 <= lo <= hi and ratio > 1");
  return g;
}

struct RunConfig {
  std::string number = "sqrt2";
  IntRange n{1, 1};
  /// SIMULTANEOUS, POLYNOMIAL or BOTH.
  std::string problem = "BOTH";
  int j = 1;
  GridSpec grid;
  /// AUTO, EXHAUSTIVE or LATTICE.
  std::string mode = "AUTO";
  int digits = 4;
  std::string rules = "all";
  int n_max = 8;
  std::string tolerance = "0.1";
  std::string out;
  std::string format = "json";
  bool header = true;
  std::string budget = "1e8";
  int guard_digits = 10;
  bool include_vanishing = false;
  std::string profile;
  std::string estimates;

  static const std::vector<std::string>& keys() {
    static const std::vector<std::string> k{"number", "n",      "problem",      "j",        "grid",          "mode",
                                            "digits", "rules",  "n-max",        "tolerance", "out",          "format",
                                            "header", "budget", "guard-digits", "include-vanishing", "profile", "estimates"};
    return k;
  }

  std::string get(const std::string& key) const {
    if (key == "number") return number;
    if (key == "n") return n.to_string();
    if (key == "problem") return problem;
    if (key == "j") return std::to_string(j);
    if (key == "grid") return grid.to_string();
    if (key == "mode") return mode;
    if (key == "digits") return std::to_string(digits);
    if (key == "rules") return rules;
    if (key == "n-max") return std::to_string(n_max);
    if (key == "tolerance") return tolerance;
    if (key == "out") return out;
    if (key == "format") return format;
    if (key == "header") return header ? "true" : "false";
    if (key == "budget") return budget;
    if (key == "guard-digits") return std::to_string(guard_digits);
    if (key == "include-vanishing") return include_vanishing ? "true" : "false";
    if (key == "profile") return profile;
    if (key == "estimates") return estimates;
    throw Error(ErrorCode::ParseError, "unknown config key '" + key + "'");
  }

  /// Sets one key from its textual value, validating it.
  void set(const std::string& key, const std::string& value) {
    auto upper = [](std::string s) {
      for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      return s;
    };
    if (key == "number") {
      number = value;
    } else if (key == "n") {
      n = parse_range(value);
    } else if (key == "problem") {
      problem = upper(value);
      if (problem != "SIMULTANEOUS" && problem != "POLYNOMIAL" && problem != "BOTH")
        throw Error(ErrorCode::ParseError, "problem must be SIMULTANEOUS, POLYNOMIAL or BOTH");
    } else if (key == "j") {
      j = parse_int(value, "j");
      if (j < 1) throw Error(ErrorCode::ParseError, "j must be >= 1");
    } else if (key == "grid") {
      grid = parse_grid(value);
    } else if (key == "mode") {
      mode = upper(value);
      if (mode != "AUTO" && mode != "EXHAUSTIVE" && mode != "LATTICE")
        throw Error(ErrorCode::ParseError, "mode must be AUTO, EXHAUSTIVE or LATTICE");
    } else if (key == "digits") {
      digits = parse_int(value, "digits");
      if (digits < 1 || digits > 200) throw Error(ErrorCode::ParseError, "digits must lie in 1..200");
    } else if (key == "rules") {
      rules = value;
    } else if (key == "n-max") {
      n_max = parse_int(value, "n-max");
      if (n_max < 1) throw Error(ErrorCode::ParseError, "n-max must be >= 1");
    } else if (key == "tolerance") {
      BigRational t = parse_rational(value);
      if (t < 0) throw Error(ErrorCode::ParseError, "tolerance must be >= 0");
      tolerance = value;
    } else if (key == "out") {
      out = value;
    } else if (key == "format") {
      format = value;
      if (format != "json" && format != "csv") throw Error(ErrorCode::ParseError, "format must be json or csv");
    } else if (key == "header") {
      header = detail::parse_bool(value);
    } else if (key == "budget") {
      double b = 0;
      try {
        b = std::stod(value);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "budget must be a number");
      }
      if (!(b >= 1)) throw Error(ErrorCode::ParseError, "budget must be >= 1");
      budget = value;
    } else if (key == "guard-digits") {
      guard_digits = parse_int(value, "guard-digits");
      if (guard_digits < 1) throw Error(ErrorCode::ParseError, "guard-digits must be >= 1");
    } else if (key == "include-vanishing") {
      include_vanishing = detail::parse_bool(value);
    } else if (key == "profile") {
      profile = value;
    } else if (key == "estimates") {
      estimates = value;
    } else {
      throw Error(ErrorCode::ParseError, "unknown config key '" + key + "'");
    }
  }

  EstimatorConfig estimator() const {
    EstimatorConfig c;
    c.guard_digits = guard_digits;
    c.exhaustive_budget = std::stod(budget);
    c.include_vanishing = include_vanishing;
    return c;
  }

  std::string to_text() const {
    std::ostringstream s;
    for (const auto& k : keys()) s << k << " = " << get(k) << "\n";
    return s.str();
  }

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline RunConfig parse_config(std::string_view text, RunConfig base = {}) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string stmt = detail::trim(line);
    if (stmt.empty()) continue;
    auto eq = stmt.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ParseError, "config line " + std::to_string(lineno) + ": expected 'key = value'");
    try {
      base.set(detail::trim(stmt.substr(0, eq)), detail::trim(stmt.substr(eq + 1)));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

}  // namespace dioph
