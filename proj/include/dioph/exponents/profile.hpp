#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/exponents/key.hpp"
#include "dioph/numerics/interval.hpp"

namespace dioph {

enum class Provenance { KnownExact, PaperBound, Empirical };

inline std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::KnownExact: return "KNOWN_EXACT";
    case Provenance::PaperBound: return "PAPER_BOUND";
    case Provenance::Empirical: return "EMPIRICAL";
  }
  return "?";
}

inline Provenance parse_provenance(std::string_view s) {
  for (Provenance p : {Provenance::KnownExact, Provenance::PaperBound, Provenance::Empirical})
    if (provenance_name(p) == s) return p;
  throw Error(ErrorCode::ParseError, "unknown provenance '" + std::string(s) + "'");
}

/// Interval-valued assignment to exponent symbols. Values are immutable once
/// built; `with` returns a modified copy.
class ExponentProfile {
 public:
  struct Entry {
    Interval value;
    Provenance provenance = Provenance::Empirical;
  };

  ExponentProfile() = default;

  ExponentProfile with(const ExponentKey& key, Interval value, Provenance prov = Provenance::Empirical) const {
    ExponentProfile copy = *this;
    copy.entries_[key] = Entry{std::move(value), prov};
    return copy;
  }

  ExponentProfile without(const ExponentKey& key) const {
    ExponentProfile copy = *this;
    copy.entries_.erase(key);
    return copy;
  }

  ExponentProfile with_transcendental(bool flag) const {
    ExponentProfile copy = *this;
    copy.transcendental_ = flag;
    return copy;
  }

  /// Marks the w-chain as covering every dimension that matters for lim sup w_n/n.
  ExponentProfile with_complete(bool flag) const {
    ExponentProfile copy = *this;
    copy.complete_ = flag;
    return copy;
  }

  /// Metadata assertion that lim sup w_n/n is infinite.
  ExponentProfile with_t_assertion(bool flag) const {
    ExponentProfile copy = *this;
    copy.asserts_t_ = flag;
    return copy;
  }

  std::optional<Interval> get(const ExponentKey& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second.value;
  }

  std::optional<Provenance> provenance(const ExponentKey& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second.provenance;
  }

  bool has(const ExponentKey& key) const { return entries_.count(key) != 0; }
  bool empty() const { return entries_.empty(); }
  const std::map<ExponentKey, Entry>& entries() const { return entries_; }

  bool transcendental() const { return transcendental_; }
  bool complete() const { return complete_; }
  bool asserts_t() const { return asserts_t_; }

  /// Largest dimension mentioned by any entry (0 for an empty profile).
  int max_dimension() const {
    int n = 0;
    for (const auto& [key, entry] : entries_) n = std::max(n, key.n);
    return n;
  }

  /// Every endpoint enlarged by `by` (lower endpoints of nonnegative values stay >= 0).
  ExponentProfile widened(const BigRational& by) const {
    ExponentProfile copy = *this;
    for (auto& [key, entry] : copy.entries_) {
      Interval w = entry.value.widened(by);
      if (w.lo() < ExtReal(0) && !(entry.value.lo() < ExtReal(0))) w = Interval(ExtReal(0), w.hi());
      entry.value = w;
    }
    return copy;
  }

 private:
  std::map<ExponentKey, Entry> entries_;
  bool transcendental_ = true;
  bool complete_ = false;
  bool asserts_t_ = false;
};

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline ExtReal parse_ext(std::string_view token) {
  std::string t = trim(token);
  if (t == "inf" || t == "+inf" || t == "infinity") return ExtReal::pos_inf();
  if (t == "-inf") return ExtReal::neg_inf();
  return ExtReal(parse_rational(t));
}

inline bool parse_bool(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw Error(ErrorCode::ParseError, "expected true|false, got '" + v + "'");
}

}  // namespace detail

/// Text profile format, one statement per line:
///   transcendental = true|false
///   complete = true|false
///   asserts_t = true|false
///   kind.n.j = [lo, hi] @ PROVENANCE     (or a single value; "@ ..." optional)
/// Numbers are integers, fractions p/q, decimals, or inf. '#' starts a comment.
inline ExponentProfile parse_profile(std::string_view text) {
  ExponentProfile profile;
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
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'name = value'");
    std::string name = detail::trim(stmt.substr(0, eq));
    std::string rhs = detail::trim(stmt.substr(eq + 1));
    if (name == "transcendental") {
      profile = profile.with_transcendental(detail::parse_bool(rhs));
      continue;
    }
    if (name == "complete") {
      profile = profile.with_complete(detail::parse_bool(rhs));
      continue;
    }
    if (name == "asserts_t") {
      profile = profile.with_t_assertion(detail::parse_bool(rhs));
      continue;
    }
    ExponentKey key = parse_key(name);
    Provenance prov = Provenance::Empirical;
    if (auto at = rhs.find('@'); at != std::string::npos) {
      prov = parse_provenance(detail::trim(rhs.substr(at + 1)));
      rhs = detail::trim(rhs.substr(0, at));
    }
    Interval value;
    try {
      if (!rhs.empty() && rhs.front() == '[') {
        if (rhs.back() != ']') throw Error(ErrorCode::ParseError, "unterminated interval");
        std::string inner = rhs.substr(1, rhs.size() - 2);
        auto comma = inner.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "interval needs 'lo, hi'");
        value = Interval(detail::parse_ext(inner.substr(0, comma)), detail::parse_ext(inner.substr(comma + 1)));
      } else {
        value = Interval::point(detail::parse_ext(rhs));
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
    profile = profile.with(key, value, prov);
  }
  return profile;
}

/// Inverse of parse_profile; endpoints are written as exact fractions.
inline std::string emit_profile(const ExponentProfile& profile) {
  std::ostringstream out;
  out << "transcendental = " << (profile.transcendental() ? "true" : "false") << "\n";
  if (profile.complete()) out << "complete = true\n";
  if (profile.asserts_t()) out << "asserts_t = true\n";
  for (const auto& [key, entry] : profile.entries()) {
    out << key.to_string() << " = [" << entry.value.lo().to_string() << ", " << entry.value.hi().to_string()
        << "] @ " << provenance_name(entry.provenance) << "\n";
  }
  return out.str();
}

}  // namespace dioph
