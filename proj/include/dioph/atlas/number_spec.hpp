#pragma once

// Concrete real numbers with exact-arithmetic approximation oracles.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/exponents/classify.hpp"
#include "dioph/numerics/rational.hpp"

namespace dioph {

enum class SpecKind { Algebraic, LiouvilleSeries, ContinuedFraction, DecimalLiteral };

inline std::string_view spec_kind_name(SpecKind k) {
  switch (k) {
    case SpecKind::Algebraic: return "ALGEBRAIC";
    case SpecKind::LiouvilleSeries: return "LIOUVILLE_SERIES";
    case SpecKind::ContinuedFraction: return "CONTINUED_FRACTION";
    case SpecKind::DecimalLiteral: return "DECIMAL_LITERAL";
  }
  return "?";
}

inline SpecKind parse_spec_kind(std::string_view s) {
  for (SpecKind k : {SpecKind::Algebraic, SpecKind::LiouvilleSeries, SpecKind::ContinuedFraction,
                     SpecKind::DecimalLiteral})
    if (spec_kind_name(k) == s) return k;
  throw Error(ErrorCode::ParseError, "unknown spec kind '" + std::string(s) + "'");
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline BigInt parse_bigint(const std::string& s) {
  std::string t = strip(s);
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (start == t.size() || !std::all_of(t.begin() + static_cast<long>(start), t.end(), ::isdigit))
    throw Error(ErrorCode::ParseError, "bad integer '" + t + "'");
  return BigInt(t[0] == '+' ? t.substr(1) : t);
}

/// Value of sum c_i t^i.
inline BigRational eval_coeffs(const std::vector<BigInt>& c, const BigRational& t) {
  BigRational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + BigRational(*it);
  return acc;
}

/// Positive divisors of |v| (v != 0), by trial division.
inline std::vector<BigInt> divisors(const BigInt& v) {
  BigInt a = abs(v);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Fibonacci word over {0,1}: fixed point of 0 -> 01, 1 -> 0.
inline std::vector<int> fibonacci_word(std::size_t length) {
  std::vector<int> word{0};
  while (word.size() < length) {
    std::vector<int> next;
    next.reserve(word.size() * 2);
    for (int letter : word) {
      next.push_back(0);
      if (letter == 0) next.push_back(1);
    }
    word = std::move(next);
  }
  word.resize(length);
  return word;
}

}  // namespace detail

/// A real number zeta with an oracle approximate(p) satisfying |zeta - q| <= 10^-p.
///
/// Payload formats:
///   ALGEBRAIC           "c0,c1,...,cd @ lo,hi"   minimal polynomial (constant first), isolating interval
///   LIOUVILLE_SERIES    "b"                      sum over k >= 1 of b^-(k!)
///   CONTINUED_FRACTION  "fibonacci a0 a b"       [a0; Fibonacci word over {a, b}]
///                       "periodic q0 q1 ... / r1 r2 ..."   preperiod then period
///   DECIMAL_LITERAL     "d.ddd..."               truncation of zeta to the given digits
class NumberSpec {
 public:
  NumberSpec(std::string id, SpecKind kind, std::string payload, MahlerClass class_hint = {})
      : id_(std::move(id)), kind_(kind), payload_(detail::strip(payload)), class_hint_(class_hint) {
    parse();
  }

  const std::string& id() const { return id_; }
  SpecKind kind() const { return kind_; }
  const std::string& payload() const { return payload_; }
  const MahlerClass& class_hint() const { return class_hint_; }

  bool is_algebraic() const { return kind_ == SpecKind::Algebraic; }
  /// ALGEBRAIC specs are irrational algebraic numbers; every other kind stands for a transcendental.
  bool transcendental() const { return !is_algebraic(); }

  /// Minimal polynomial, constant coefficient first (ALGEBRAIC only).
  const std::vector<BigInt>& minimal_polynomial() const { return coeffs_; }
  int degree() const { return is_algebraic() ? static_cast<int>(coeffs_.size()) - 1 : 0; }

  /// Rational q with |zeta - q| <= 10^-p.
  BigRational approximate(int p) const {
    if (p < 1) throw Error(ErrorCode::InvalidParams, "precision must be >= 1");
    switch (kind_) {
      case SpecKind::Algebraic: return approximate_algebraic(p);
      case SpecKind::LiouvilleSeries: return approximate_liouville(p);
      case SpecKind::ContinuedFraction: return approximate_cf(p);
      case SpecKind::DecimalLiteral: return approximate_decimal(p);
    }
    return 0;
  }

  /// Partial quotient number k (k = 0 is the integer part). CONTINUED_FRACTION only.
  BigInt partial_quotient(std::size_t k) const { return partial_quotients(k + 1)[k]; }

  /// The first `count` partial quotients.
  std::vector<BigInt> partial_quotients(std::size_t count) const {
    if (kind_ != SpecKind::ContinuedFraction) throw Error(ErrorCode::BadKind, id_ + " is not a continued fraction");
    std::vector<BigInt> out;
    out.reserve(count);
    if (fibonacci_) {
      auto word = detail::fibonacci_word(count);
      for (std::size_t k = 0; k < count; ++k) out.push_back(k == 0 ? cf_a0_ : (word[k - 1] == 0 ? cf_a_ : cf_b_));
      return out;
    }
    for (std::size_t k = 0; k < count; ++k)
      out.push_back(k < prefix_.size() ? prefix_[k] : period_[(k - prefix_.size()) % period_.size()]);
    return out;
  }

  /// "id; KIND; payload"
  std::string to_record() const { return id_ + "; " + std::string(spec_kind_name(kind_)) + "; " + payload_; }

  friend bool operator==(const NumberSpec& a, const NumberSpec& b) {
    return a.id_ == b.id_ && a.kind_ == b.kind_ && a.payload_ == b.payload_;
  }

 private:
  void parse() {
    switch (kind_) {
      case SpecKind::Algebraic: parse_algebraic(); break;
      case SpecKind::LiouvilleSeries: {
        BigInt b = detail::parse_bigint(payload_);
        if (b < 2) throw Error(ErrorCode::InvalidParams, "Liouville base must be >= 2");
        base_ = b;
        break;
      }
      case SpecKind::ContinuedFraction: parse_cf(); break;
      case SpecKind::DecimalLiteral: parse_decimal(); break;
    }
  }

  void parse_algebraic() {
    auto at = payload_.find('@');
    if (at == std::string::npos) throw Error(ErrorCode::ParseError, "ALGEBRAIC payload needs '@ lo,hi'");
    for (const auto& tok : detail::split_on(payload_.substr(0, at), ',')) coeffs_.push_back(detail::parse_bigint(tok));
    auto bounds = detail::split_on(payload_.substr(at + 1), ',');
    if (bounds.size() != 2) throw Error(ErrorCode::ParseError, "isolating interval needs 'lo,hi'");
    iso_lo_ = parse_rational(detail::strip(bounds[0]));
    iso_hi_ = parse_rational(detail::strip(bounds[1]));
    if (iso_hi_ <= iso_lo_) throw Error(ErrorCode::InvalidParams, "isolating interval is empty");
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    int d = static_cast<int>(coeffs_.size()) - 1;
    if (d < 2) throw Error(ErrorCode::NotIrreducible, "minimal polynomial must have degree >= 2");
    if (d > 3) throw Error(ErrorCode::InvalidParams, "irreducibility is only verified up to degree 3");
    // Degree <= 3: reducible over Q iff there is a rational root p/q, p | c0, q | cd.
    if (coeffs_.front() == 0) throw Error(ErrorCode::NotIrreducible, "polynomial has the root 0");
    for (const auto& num : detail::divisors(coeffs_.front()))
      for (const auto& den : detail::divisors(coeffs_.back()))
        for (int s : {1, -1})
          if (detail::eval_coeffs(coeffs_, make_rational(s * num, den)) == 0)
            throw Error(ErrorCode::NotIrreducible,
                        "polynomial has the rational root " + to_fraction_string(make_rational(s * num, den)));
    int s_lo = sgn(detail::eval_coeffs(coeffs_, iso_lo_));
    int s_hi = sgn(detail::eval_coeffs(coeffs_, iso_hi_));
    if (s_lo * s_hi >= 0) throw Error(ErrorCode::NoSignChange, "isolating interval shows no sign change");
  }

  void parse_cf() {
    auto toks = detail::split_ws(payload_);
    if (toks.empty()) throw Error(ErrorCode::ParseError, "empty continued fraction payload");
    if (toks[0] == "fibonacci") {
      if (toks.size() != 4) throw Error(ErrorCode::ParseError, "expected 'fibonacci a0 a b'");
      fibonacci_ = true;
      cf_a0_ = detail::parse_bigint(toks[1]);
      cf_a_ = detail::parse_bigint(toks[2]);
      cf_b_ = detail::parse_bigint(toks[3]);
      if (cf_a_ < 1 || cf_b_ < 1) throw Error(ErrorCode::InvalidParams, "partial quotients must be positive");
      return;
    }
    if (toks[0] != "periodic") throw Error(ErrorCode::ParseError, "unknown quotient generator '" + toks[0] + "'");
    bool in_period = false;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      if (toks[i] == "/") {
        if (in_period) throw Error(ErrorCode::ParseError, "repeated '/'");
        in_period = true;
        continue;
      }
      (in_period ? period_ : prefix_).push_back(detail::parse_bigint(toks[i]));
    }
    if (prefix_.empty()) throw Error(ErrorCode::ParseError, "continued fraction needs the integer part");
    if (period_.empty()) throw Error(ErrorCode::InvalidParams, "a terminating continued fraction is rational");
    for (std::size_t i = 1; i < prefix_.size(); ++i)
      if (prefix_[i] < 1) throw Error(ErrorCode::InvalidParams, "partial quotients must be positive");
    for (const auto& q : period_)
      if (q < 1) throw Error(ErrorCode::InvalidParams, "partial quotients must be positive");
  }

  void parse_decimal() {
    const std::string& s = payload_;
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    std::size_t dot = s.find('.', pos);
    std::string int_part = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
    auto digits_only = [](const std::string& t) { return std::all_of(t.begin(), t.end(), ::isdigit); };
    if (int_part.empty() || !digits_only(int_part) || !digits_only(frac))
      throw Error(ErrorCode::ParseError, "bad digit string");
    negative_ = neg;
    int_part_ = BigInt(int_part);
    frac_digits_ = frac;
  }

  BigRational approximate_algebraic(int p) const {
    // Largest k with sign(P(k/10^p)) == sign(P(lo)); the root lies in [k, k+1]/10^p.
    BigInt scale = pow10(static_cast<unsigned long>(p));
    int s_lo = sgn(detail::eval_coeffs(coeffs_, iso_lo_));
    auto side = [&](const BigInt& k) {
      BigRational t = make_rational(k, scale);
      if (t <= iso_lo_) return s_lo;
      if (t >= iso_hi_) return -s_lo;
      // Sign of 10^(p d) P(k/10^p), an integer.
      BigInt acc = 0;
      BigInt scale_pow = 1;
      for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * k + coeffs_[i] * scale_pow;
        scale_pow *= scale;
      }
      return sgn(acc);
    };
    BigInt lo = floor_of(iso_lo_ * BigRational(scale));
    BigInt hi = ceil_of(iso_hi_ * BigRational(scale));
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      if (side(mid) == s_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return make_rational(lo, scale);
  }

  BigRational approximate_liouville(int p) const {
    // Tail after term K is below 2 b^-((K+1)!).
    BigRational target = make_rational(BigInt(1), pow10(static_cast<unsigned long>(p)));
    BigRational sum = 0;
    unsigned long fact = 1;
    for (unsigned long k = 1;; ++k) {
      fact *= k;
      sum += make_rational(BigInt(1), pow_int(base_, fact));
      unsigned long next = fact * (k + 1);
      // b^next >= 2 * 10^p, checked through bit lengths first to avoid huge powers.
      double log_b = std::log10(base_.get_d());
      if (static_cast<double>(next) * log_b > static_cast<double>(p) + 1.0) return sum;
      if (BigRational(2) / BigRational(pow_int(base_, next)) <= target) return sum;
    }
  }

  BigRational approximate_cf(int p) const {
    // Convergents p_k/q_k until 1/(q_k q_{k+1}) <= 10^-p.
    BigInt bound = pow10(static_cast<unsigned long>(p));
    std::vector<BigInt> quotients = partial_quotients(64);
    BigInt p_prev = 1, q_prev = 0;
    BigInt p_cur = quotients[0], q_cur = 1;
    for (std::size_t k = 1;; ++k) {
      if (k == quotients.size()) quotients = partial_quotients(2 * k);
      const BigInt& a = quotients[k];
      BigInt p_next = a * p_cur + p_prev;
      BigInt q_next = a * q_cur + q_prev;
      if (q_cur * q_next >= bound) return make_rational(p_cur, q_cur);
      p_prev = p_cur;
      q_prev = q_cur;
      p_cur = p_next;
      q_cur = q_next;
    }
  }

  BigRational approximate_decimal(int p) const {
    if (static_cast<std::size_t>(p) > frac_digits_.size())
      throw Error(ErrorCode::PrecisionUnreachable, id_ + " has only " + std::to_string(frac_digits_.size()) +
                                                        " digits, " + std::to_string(p) + " requested");
    BigInt scale = pow10(static_cast<unsigned long>(p));
    BigInt value = int_part_ * scale + (p > 0 ? BigInt(frac_digits_.substr(0, static_cast<std::size_t>(p))) : 0);
    BigRational q = make_rational(value, scale);
    return negative_ ? BigRational(-q) : q;
  }

  std::string id_;
  SpecKind kind_;
  std::string payload_;
  MahlerClass class_hint_;

  std::vector<BigInt> coeffs_;
  BigRational iso_lo_, iso_hi_;
  BigInt base_;
  bool fibonacci_ = false;
  BigInt cf_a0_, cf_a_, cf_b_;
  std::vector<BigInt> prefix_, period_;
  bool negative_ = false;
  BigInt int_part_;
  std::string frac_digits_;
};

/// Parses one "id; KIND; payload" record.
inline NumberSpec parse_spec_record(const std::string& line) {
  auto first = line.find(';');
  auto second = first == std::string::npos ? std::string::npos : line.find(';', first + 1);
  if (second == std::string::npos) throw Error(ErrorCode::ParseError, "expected 'id; KIND; payload'");
  std::string id = detail::strip(line.substr(0, first));
  if (id.empty()) throw Error(ErrorCode::ParseError, "empty spec id");
  SpecKind kind = parse_spec_kind(detail::strip(line.substr(first + 1, second - first - 1)));
  return NumberSpec(id, kind, line.substr(second + 1));
}

/// Atlas file: one record per line, '#' comments and blank lines ignored.
inline std::vector<NumberSpec> parse_atlas(const std::string& text) {
  std::vector<NumberSpec> specs;
  std::istringstream in(text);
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    std::string t = detail::strip(line);
    if (t.empty() || t[0] == '#') continue;
    try {
      specs.push_back(parse_spec_record(t));
    } catch (const Error& e) {
      throw Error(e.code(), "atlas line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return specs;
}

inline std::string emit_atlas(const std::vector<NumberSpec>& specs) {
  std::string out;
  for (const auto& s : specs) out += s.to_record() + "\n";
  return out;
}

}  // namespace dioph
