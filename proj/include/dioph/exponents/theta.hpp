#pragma once

// The cubic bound for the uniform exponent in even dimension, its asymptotic
// expansion, and the Schmidt-Summerer transform pair.

#include <string>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/numerics/cubic.hpp"
#include "dioph/numerics/interval.hpp"

namespace dioph {

/// P_n(T) = T^3 + ((n-1)/n) T^2 + (2n-1) T + (1-2n)/n.
inline CubicPoly theta_cubic(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "n must be >= 1");
  BigRational nn(n);
  return CubicPoly(BigRational(1), BigRational((nn - 1) / nn), BigRational(2 * n - 1), BigRational((1 - 2 * nn) / nn));
}

/// Q_n(T) = ((2n-1)/n) T^3 - (2n-1) T^2 + ((1-n)/n) T - 1; its root in (n, inf)
/// is the balancing value of w_n, and its reversal is -P_n.
inline CubicPoly balance_cubic(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "n must be >= 1");
  BigRational nn(n);
  return CubicPoly(BigRational((2 * nn - 1) / nn), BigRational(1 - 2 * n), BigRational((1 - nn) / nn), BigRational(-1));
}

/// Enclosure of width <= eps of the unique root of P_n in (0, 1/n).
inline Interval theta(int n, const BigRational& eps) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "n must be >= 1");
  return certified_root(theta_cubic(n), BigRational(0), BigRational(1, n), eps);
}

/// 1/n - 1/(2n^3) - 1/(4n^4), exact.
inline Interval theta_asymptote(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "n must be >= 1");
  BigRational nn(n);
  BigRational n3 = nn * nn * nn;
  return Interval(BigRational(1 / nn - 1 / (2 * n3) - 1 / (4 * n3 * nn)));
}

namespace constants {

inline Interval sqrt5() { return sqrt_interval(Interval(5)); }

/// (3 + sqrt 5)/2, the maximal uniform quadratic polynomial exponent.
inline Interval gamma() { return (Interval(3) + sqrt5()) * Interval(BigRational(1, 2)); }

/// (sqrt 5 - 1)/2.
inline Interval sigma() { return (sqrt5() - Interval(1)) * Interval(BigRational(1, 2)); }

/// (2 + sqrt 5 - sqrt(7 + 2 sqrt 5))/2.
inline Interval rho() {
  Interval inner = sqrt_interval(Interval(7) + Interval(2) * sqrt5());
  return (Interval(2) + sqrt5() - inner) * Interval(BigRational(1, 2));
}

}  // namespace constants

/// Values obtained under an unproven conjecture; kept as reference metadata
/// only and never evaluated as rules.
struct ConjecturalBound {
  int dimension;       // bound applies to lambda_hat_{dimension}
  BigRational value;   // approximate, 4 decimals
  bool conjectural = true;
};

inline std::vector<ConjecturalBound> conjectural_bounds() {
  return {{4, BigRational(4292, 10000)}, {6, BigRational(3084, 10000)}, {8, BigRational(2387, 10000)}};
}

namespace detail {

// Monotone-increasing function evaluated endpoint-wise for a tight enclosure.
template <typename F>
Interval eval_increasing(const Interval& x, F f) {
  return Interval(f(Interval::point(x.lo())).lo(), f(Interval::point(x.hi())).hi());
}

}  // namespace detail

/// Lower bound (x^2 + (n-2)x)/((n-1)(1-x)) for lambda_n given lambda_hat_n = x.
inline Interval ss_lower(int n, const Interval& lambda_hat) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "n must be >= 2");
  if (lambda_hat.lo() < ExtReal(0)) throw Error(ErrorCode::InvalidParams, "lambda_hat must be >= 0");
  if (lambda_hat.hi() >= ExtReal(1))
    throw Error(ErrorCode::DegenerateDenominator, "lambda_hat must stay below 1, got " + lambda_hat.to_string());
  return detail::eval_increasing(lambda_hat, [n](const Interval& x) {
    Interval num = x * x + Interval(n - 2) * x;
    Interval den = Interval(n - 1) * (Interval(1) - x);
    return num / den;
  });
}

/// Inverse of ss_lower: -A/2 + sqrt(A^2/4 + (n-1)l) with A = n-2+(n-1)l, an
/// upper bound for lambda_hat_n given lambda_n = l. Tends to 1 as l -> inf.
inline Interval ss_upper_transform(int n, const Interval& lambda_n) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "n must be >= 2");
  if (lambda_n.lo() < ExtReal(0)) throw Error(ErrorCode::InvalidParams, "lambda_n must be >= 0");
  return detail::eval_increasing(lambda_n, [n](const Interval& l) {
    if (l.lo().is_pos_inf()) return Interval(1);
    Interval half_a = (Interval(n - 2) + Interval(n - 1) * l) * Interval(BigRational(1, 2));
    return sqrt_interval(half_a * half_a + Interval(n - 1) * l) - half_a;
  });
}

}  // namespace dioph
