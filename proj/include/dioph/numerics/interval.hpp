#pragma once

// Outward-rounded intervals over the extended reals.
//
// Endpoints are exact rationals or +-infinity. Results whose exact endpoints
// need more than `kDefaultFracBits` fractional bits are rounded outward to
// dyadics, which keeps sizes bounded and results platform independent.

#include <algorithm>
#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "dioph/error.hpp"
#include "dioph/numerics/rational.hpp"

namespace dioph {

inline constexpr unsigned kDefaultFracBits = 128;

/// A real number or one of the two infinities.
class ExtReal {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtReal() = default;
  ExtReal(const BigRational& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT: implicit by design of arithmetic
  ExtReal(long v) : kind_(Kind::Finite), value_(v) {}                // NOLINT
  ExtReal(int v) : kind_(Kind::Finite), value_(v) {}                 // NOLINT

  static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  /// Precondition: finite().
  const BigRational& value() const { return value_; }

  int sign() const {
    if (kind_ == Kind::PosInf) return 1;
    if (kind_ == Kind::NegInf) return -1;
    return sgn(value_);
  }

  double to_double() const {
    if (kind_ == Kind::PosInf) return HUGE_VAL;
    if (kind_ == Kind::NegInf) return -HUGE_VAL;
    return value_.get_d();
  }

  std::string to_string() const {
    if (kind_ == Kind::PosInf) return "inf";
    if (kind_ == Kind::NegInf) return "-inf";
    return to_fraction_string(value_);
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.finite() || a.value_ == b.value_;
  }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.finite() && a.value_ < b.value_;
  }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

  ExtReal operator-() const {
    if (kind_ == Kind::PosInf) return neg_inf();
    if (kind_ == Kind::NegInf) return pos_inf();
    return ExtReal(BigRational(-value_));
  }

 private:
  explicit ExtReal(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  BigRational value_ = 0;
};

namespace detail {

inline ExtReal round_toward(const ExtReal& x, bool up, unsigned frac_bits) {
  if (!x.finite()) return x;
  const BigRational& q = x.value();
  if (bit_length(q.get_den()) <= frac_bits) return x;
  BigRational scaled = q * BigRational(pow2(frac_bits));
  BigInt n = up ? ceil_of(scaled) : floor_of(scaled);
  return ExtReal(make_rational(n, pow2(frac_bits)));
}

// Sum with the indeterminate inf + (-inf) resolved toward `up`'s side.
inline ExtReal add(const ExtReal& a, const ExtReal& b, bool up) {
  if (a.finite() && b.finite()) return ExtReal(BigRational(a.value() + b.value()));
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
    return up ? ExtReal::pos_inf() : ExtReal::neg_inf();
  return a.finite() ? b : a;
}

// Endpoint product; 0 * inf is 0 (endpoints, not limits).
inline ExtReal mul(const ExtReal& a, const ExtReal& b) {
  if (a.finite() && b.finite()) return ExtReal(BigRational(a.value() * b.value()));
  int s = a.sign() * b.sign();
  if (s == 0) return ExtReal(0);
  return s > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
}

}  // namespace detail

/// Closed interval [lo, hi] of extended reals, lo <= hi.
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(const BigRational& v) : lo_(v), hi_(v) {}  // NOLINT: points convert implicitly
  Interval(long v) : lo_(v), hi_(v) {}                // NOLINT
  Interval(int v) : lo_(v), hi_(v) {}                 // NOLINT
  Interval(ExtReal lo, ExtReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw Error(ErrorCode::InvalidParams, "interval with lo > hi");
  }

  static Interval point(const ExtReal& v) { return Interval(v, v); }
  static Interval infinity() { return point(ExtReal::pos_inf()); }
  static Interval entire() { return Interval(ExtReal::neg_inf(), ExtReal::pos_inf()); }

  const ExtReal& lo() const { return lo_; }
  const ExtReal& hi() const { return hi_; }

  bool is_point() const { return lo_ == hi_; }
  bool contains(const ExtReal& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return contains(ExtReal(0)); }
  bool overlaps(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }

  /// hi - lo; +inf when either end is infinite.
  ExtReal width() const {
    if (!lo_.finite() || !hi_.finite()) return ExtReal::pos_inf();
    return ExtReal(BigRational(hi_.value() - lo_.value()));
  }

  double mid_double() const {
    if (lo_.finite() && hi_.finite()) return BigRational((lo_.value() + hi_.value()) / 2).get_d();
    if (lo_.is_pos_inf()) return HUGE_VAL;
    if (hi_.is_neg_inf()) return -HUGE_VAL;
    return lo_.finite() ? HUGE_VAL : (hi_.finite() ? -HUGE_VAL : 0.0);
  }

  Interval rounded(unsigned frac_bits = kDefaultFracBits) const {
    return Interval(detail::round_toward(lo_, false, frac_bits), detail::round_toward(hi_, true, frac_bits));
  }

  /// Interval hull.
  Interval hull(const Interval& o) const { return Interval(std::min(lo_, o.lo_), std::max(hi_, o.hi_)); }

  Interval widened(const BigRational& by) const {
    return Interval(detail::add(lo_, ExtReal(BigRational(-by)), false), detail::add(hi_, ExtReal(by), true));
  }

  std::string to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

  Interval operator-() const { return Interval(-hi_, -lo_); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(detail::add(a.lo_, b.lo_, false), detail::add(a.hi_, b.hi_, true)).rounded();
  }
  friend Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

  friend Interval operator*(const Interval& a, const Interval& b) {
    std::array<ExtReal, 4> p{detail::mul(a.lo_, b.lo_), detail::mul(a.lo_, b.hi_), detail::mul(a.hi_, b.lo_),
                             detail::mul(a.hi_, b.hi_)};
    auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return Interval(*mn, *mx).rounded();
  }

  /// General reciprocal; an argument containing 0 gives the entire line.
  Interval reciprocal() const {
    if (contains_zero()) return entire();
    auto inv = [](const ExtReal& v) { return v.finite() ? ExtReal(BigRational(1 / v.value())) : ExtReal(0); };
    return Interval(inv(hi_), inv(lo_)).rounded();
  }

  friend Interval operator/(const Interval& a, const Interval& b) { return a * b.reciprocal(); }

  friend std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.to_string(); }

 private:
  ExtReal lo_;
  ExtReal hi_;
};

/// Reciprocal of a nonnegative exponent quantity with 1/0 = inf and 1/inf = 0.
/// Negative parts of the argument are clamped to 0.
inline Interval recip_nonneg(const Interval& x) {
  ExtReal lo = x.lo() < ExtReal(0) ? ExtReal(0) : x.lo();
  ExtReal hi = x.hi() < ExtReal(0) ? ExtReal(0) : x.hi();
  auto inv = [](const ExtReal& v) {
    if (v.is_pos_inf()) return ExtReal(0);
    if (v.sign() == 0) return ExtReal::pos_inf();
    return ExtReal(BigRational(1 / v.value()));
  };
  return Interval(inv(hi), inv(lo)).rounded();
}

inline Interval min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

inline Interval max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

/// Certainly a < b for every pair of members.
inline bool certainly_less(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }

/// Outward-rounded square root with `frac_bits` fractional bits.
inline Interval sqrt_interval(const Interval& x, unsigned frac_bits = kDefaultFracBits) {
  if (x.lo() < ExtReal(0)) throw Error(ErrorCode::NegativeArgument, "sqrt of " + x.to_string());
  auto root = [frac_bits](const ExtReal& v, bool up) -> ExtReal {
    if (!v.finite()) return v;
    const BigRational& q = v.value();
    // sqrt(q) * 2^k with k = frac_bits, computed as sqrt(q * 4^k).
    BigRational scaled = q * BigRational(pow2(2 * frac_bits));
    BigInt r = up ? isqrt_ceil(ceil_of(scaled)) : isqrt_floor(floor_of(scaled));
    BigRational result = make_rational(r, pow2(frac_bits));
    // Exact squares stay exact.
    BigRational exact_candidate = make_rational(isqrt_floor(q.get_num()), isqrt_floor(q.get_den()));
    if (exact_candidate * exact_candidate == q) return ExtReal(exact_candidate);
    return ExtReal(result);
  };
  return Interval(root(x.lo(), false), root(x.hi(), true));
}

}  // namespace dioph
