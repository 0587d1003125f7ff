#pragma once

// JSON forms of minima records, fit summaries and bound reports.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "dioph/error.hpp"
#include "dioph/estimator/fit.hpp"
#include "dioph/estimator/minima.hpp"
#include "dioph/exponents/rules.hpp"

namespace dioph {

using Json = nlohmann::json;

namespace detail {

/// Double not above (down) or not below (up) the exact value.
inline double directed_double(const BigRational& q, bool up) {
  double d = q.get_d();
  const BigRational back = from_double(d);
  if (up && back < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  if (!up && back > q) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  return d;
}

inline Json endpoint_json(const ExtReal& v, bool up) {
  if (v.is_pos_inf()) return "inf";
  if (v.is_neg_inf()) return "-inf";
  return directed_double(v.value(), up);
}

inline ExtReal endpoint_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return ExtReal::pos_inf();
    if (s == "-inf") return ExtReal::neg_inf();
    return ExtReal(parse_rational(s));
  }
  if (j.is_number()) return ExtReal(from_double(j.get<double>()));
  throw Error(ErrorCode::ParseError, "interval endpoint must be a number or \"inf\"");
}

inline Json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<long>(v.get_si());
  return v.get_str();
}

inline BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer");
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace detail

/// Outward-rounded interval as {lo, hi} doubles (or "inf").
inline Json interval_json(const Interval& v) {
  return Json{{"lo", detail::endpoint_json(v.lo(), false)}, {"hi", detail::endpoint_json(v.hi(), true)}};
}

inline Json record_json(const MinimaRecord& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json row = Json::array();
    for (const auto& a : w) row.push_back(detail::integer_json(a));
    witnesses.push_back(row);
  }
  return Json{{"spec", r.spec_id},
              {"problem", std::string(problem_name(r.problem))},
              {"n", r.n},
              {"j", r.j},
              {"X", detail::integer_json(r.X)},
              {"minimum_lo", detail::endpoint_json(r.minimum.lo(), false)},
              {"minimum_hi", detail::endpoint_json(r.minimum.hi(), true)},
              {"witness", witnesses},
              {"method", std::string(method_name(r.method))}};
}

inline MinimaRecord record_from_json(const Json& j) {
  MinimaRecord r;
  r.spec_id = j.value("spec", std::string());
  r.problem = parse_problem(detail::field<std::string>(j, "problem"));
  r.n = detail::field<int>(j, "n");
  r.j = detail::field<int>(j, "j");
  if (!j.contains("X")) throw Error(ErrorCode::ParseError, "missing field 'X'");
  r.X = detail::integer_from_json(j.at("X"));
  if (!j.contains("minimum_lo") || !j.contains("minimum_hi"))
    throw Error(ErrorCode::ParseError, "missing minimum bounds");
  r.minimum = Interval(detail::endpoint_from_json(j.at("minimum_lo")), detail::endpoint_from_json(j.at("minimum_hi")));
  if (!j.contains("witness") || !j.at("witness").is_array()) throw Error(ErrorCode::ParseError, "missing witness");
  for (const auto& row : j.at("witness")) {
    std::vector<BigInt> w;
    for (const auto& a : row) w.push_back(detail::integer_from_json(a));
    r.witnesses.push_back(std::move(w));
  }
  r.method = parse_method(detail::field<std::string>(j, "method"));
  return r;
}

/// Fitted exponents of one (problem, n, j) series.
struct FitSummary {
  std::string spec_id;
  std::string spec_kind;
  Problem problem = Problem::Simultaneous;
  int n = 1;
  int j = 1;
  ExponentFit fit;
};

inline Json summary_json(const FitSummary& s) {
  return Json{{"summary", true},
              {"spec", s.spec_id},
              {"spec_kind", s.spec_kind},
              {"problem", std::string(problem_name(s.problem))},
              {"n", s.n},
              {"j", s.j},
              {"ordinary_lo", detail::endpoint_json(s.fit.ordinary.lo(), false)},
              {"ordinary_hi", detail::endpoint_json(s.fit.ordinary.hi(), true)},
              {"uniform_lo", detail::endpoint_json(s.fit.uniform.lo(), false)},
              {"uniform_hi", detail::endpoint_json(s.fit.uniform.hi(), true)}};
}

inline FitSummary summary_from_json(const Json& j) {
  FitSummary s;
  s.spec_id = j.value("spec", std::string());
  s.spec_kind = j.value("spec_kind", std::string());
  s.problem = parse_problem(detail::field<std::string>(j, "problem"));
  s.n = detail::field<int>(j, "n");
  s.j = detail::field<int>(j, "j");
  for (const char* key : {"ordinary_lo", "ordinary_hi", "uniform_lo", "uniform_hi"})
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  s.fit.ordinary = Interval(detail::endpoint_from_json(j.at("ordinary_lo")), detail::endpoint_from_json(j.at("ordinary_hi")));
  s.fit.uniform = Interval(detail::endpoint_from_json(j.at("uniform_lo")), detail::endpoint_from_json(j.at("uniform_hi")));
  return s;
}

inline Json report_json(const BoundReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json comparisons = Json::array();
  for (const auto& c : r.comparisons)
    comparisons.push_back(Json{{"label", c.label}, {"lhs", interval_json(c.lhs)}, {"rhs", interval_json(c.rhs)}});
  return Json{{"rule", r.rule_id},
              {"params", params},
              {"status", std::string(status_name(r.status))},
              {"slack", interval_json(r.slack)},
              {"details", r.details},
              {"comparisons", comparisons}};
}

}  // namespace dioph
