#pragma once

#include <array>
#include <string>

#include "dioph/error.hpp"
#include "dioph/numerics/interval.hpp"
#include "dioph/numerics/rational.hpp"

namespace dioph {

/// c3*T^3 + c2*T^2 + c1*T + c0 with rational coefficients, c3 != 0.
class CubicPoly {
 public:
  CubicPoly(BigRational c3, BigRational c2, BigRational c1, BigRational c0)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    if (c_[3] == 0) throw Error(ErrorCode::InvalidParams, "cubic with zero leading coefficient");
  }

  /// Coefficient of T^k.
  const BigRational& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }

  BigRational operator()(const BigRational& t) const { return ((c_[3] * t + c_[2]) * t + c_[1]) * t + c_[0]; }

  /// Coefficients in reverse order: T^3 p(1/T).
  CubicPoly reversed() const { return CubicPoly(c_[0], c_[1], c_[2], c_[3]); }

  CubicPoly negated() const { return CubicPoly(-c_[3], -c_[2], -c_[1], -c_[0]); }

  std::string to_string() const {
    return to_fraction_string(c_[3]) + "*T^3 + " + to_fraction_string(c_[2]) + "*T^2 + " +
           to_fraction_string(c_[1]) + "*T + " + to_fraction_string(c_[0]);
  }

  friend bool operator==(const CubicPoly& a, const CubicPoly& b) { return a.c_ == b.c_; }

 private:
  std::array<BigRational, 4> c_;
};

/// Encloses {p(t) : t in x}. Horner form in interval arithmetic.
inline Interval eval_poly(const CubicPoly& p, const Interval& x) {
  Interval acc(p.coeff(3));
  for (int k = 2; k >= 0; --k) acc = acc * x + Interval(p.coeff(k));
  return acc;
}

/// Bisection with exact sign tests. Returns an interval of width <= eps that
/// contains a root of p inside [lo, hi]. The midpoint sequence depends only on
/// (p, lo, hi), so a smaller eps refines the result for a larger eps.
inline Interval certified_root(const CubicPoly& p, BigRational lo, BigRational hi, const BigRational& eps) {
  if (eps <= 0) throw Error(ErrorCode::InvalidParams, "eps must be positive");
  if (hi < lo) std::swap(lo, hi);
  int s_lo = sgn(p(lo));
  int s_hi = sgn(p(hi));
  if (s_lo == 0) return Interval(lo);
  if (s_hi == 0) return Interval(hi);
  if (s_lo * s_hi > 0) {
    throw Error(ErrorCode::NoSignChange,
                "p(" + to_fraction_string(lo) + ") and p(" + to_fraction_string(hi) + ") have the same sign");
  }
  while (hi - lo > eps) {
    BigRational mid = (lo + hi) / 2;
    int s_mid = sgn(p(mid));
    if (s_mid == 0) return Interval(mid);
    if (s_mid == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Interval(ExtReal(lo), ExtReal(hi));
}

}  // namespace dioph
