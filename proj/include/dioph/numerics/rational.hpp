#pragma once

// Exact integer and rational arithmetic on top of GMP.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "dioph/error.hpp"

namespace dioph {

using BigInt = mpz_class;
/// Always canonical: positive denominator, reduced. GMP canonicalizes after
/// every arithmetic operation; values built from raw parts go through `make_rational`.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DegenerateDenominator, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt pow10(unsigned long exp) { return pow_int(BigInt(10), exp); }

inline BigInt pow2(unsigned long exp) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), exp);
  return r;
}

inline BigRational pow_rational(const BigRational& base, unsigned long exp) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return r;
}

inline BigInt floor_of(const BigRational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil_of(const BigRational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Nearest integer, ties toward +infinity.
inline BigInt round_of(const BigRational& q) { return floor_of(q + BigRational(1, 2)); }

inline BigInt isqrt_floor(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline BigInt isqrt_ceil(const BigInt& n) {
  BigInt r = isqrt_floor(n);
  if (r * r < n) ++r;
  return r;
}

inline std::size_t bit_length(const BigInt& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline BigRational abs_rational(const BigRational& q) { return q < 0 ? BigRational(-q) : q; }

/// Exact value of a finite double.
inline BigRational from_double(double x) {
  BigRational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

inline double to_double(const BigRational& q) { return q.get_d(); }

/// Parses "12", "-3/7", "0.125", "1.5e-3".
inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> BigRational { throw Error(ErrorCode::ParseError, "bad number '" + s + "'"); };
  if (s.empty()) return fail();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0) return fail();
    return make_rational(num, den);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) return fail();
    } catch (const std::exception&) {
      return fail();
    }
    s = s.substr(0, e);
  }
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) negative = s[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      return fail();
    }
  }
  if (digits.empty()) return fail();
  BigInt mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long shift = exponent - frac_digits;
  if (shift >= 0) return BigRational(mantissa * pow10(static_cast<unsigned long>(shift)));
  return make_rational(mantissa, pow10(static_cast<unsigned long>(-shift)));
}

enum class Rounding { Nearest, Down, Up };

/// Fixed-point decimal rendering with `digits` fractional digits.
inline std::string to_decimal(const BigRational& q, int digits, Rounding mode = Rounding::Nearest) {
  BigRational scaled = q * BigRational(pow10(static_cast<unsigned long>(digits)));
  BigInt n;
  switch (mode) {
    case Rounding::Nearest: n = round_of(scaled); break;
    case Rounding::Down: n = floor_of(scaled); break;
    case Rounding::Up: n = ceil_of(scaled); break;
  }
  bool negative = n < 0;
  if (negative) n = -n;
  std::string body = n.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return (negative ? "-" : "") + body;
}

inline std::string to_fraction_string(const BigRational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

}  // namespace dioph
