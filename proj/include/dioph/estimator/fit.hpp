#pragma once

// Empirical exponents from minima on a height grid.
//
// The uniform estimate is the smallest rate -log m / log X over the tail half
// of the grid. The ordinary estimate is the steepest log-log secant of the
// minimum against witness height, ending at a tail record and spanning a
// height factor of at least kSecantSpan, and never less than the uniform
// estimate. The secant cancels the constant c in m ~ c h^-rate, which biases
// the raw rate at finite height.

#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/estimator/minima.hpp"
#include "dioph/numerics/interval.hpp"

namespace dioph {

inline constexpr long kSecantSpan = 100;

struct ExponentFit {
  Interval ordinary;
  Interval uniform;
};

namespace detail {

inline double log_of(const BigInt& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

/// Natural log of a positive extended real; +inf maps to +inf, 0 to -inf.
inline double log_of(const ExtReal& v) {
  if (v.is_pos_inf()) return std::numeric_limits<double>::infinity();
  const BigRational& q = v.value();
  if (q <= 0) return -std::numeric_limits<double>::infinity();
  return log_of(BigInt(q.get_num())) - log_of(BigInt(q.get_den()));
}

/// Interval from double endpoints, nudged outward by a relative 1e-12.
inline Interval outward(double lo, double hi) {
  auto nudge = [](double v, double dir) {
    if (std::isinf(v)) return v > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
    return ExtReal(from_double(v + dir * (std::fabs(v) * 1e-12 + 1e-300)));
  };
  return Interval(nudge(lo, -1.0), nudge(hi, 1.0));
}

/// Enclosure of -log(minimum) / log(X).
inline Interval rate(const MinimaRecord& r) {
  const double lx = log_of(r.X);
  return outward(-log_of(r.minimum.hi()) / lx, -log_of(r.minimum.lo()) / lx);
}

inline BigInt witness_height(const MinimaRecord& r) {
  const auto& w = r.witnesses.back();
  if (r.problem == Problem::Simultaneous) return abs(w.at(0));
  BigInt h = 0;
  for (const auto& a : w) h = std::max(h, BigInt(abs(a)));
  return h;
}

}  // namespace detail

/// Records of one grid run, grouped by minima index j (1-based).
inline std::map<int, std::vector<MinimaRecord>> split_by_index(const std::vector<MinimaRecord>& records) {
  std::map<int, std::vector<MinimaRecord>> by_j;
  for (const auto& r : records) by_j[r.j].push_back(r);
  return by_j;
}

inline ExponentFit fit_exponent(const std::vector<MinimaRecord>& records) {
  if (records.size() < 8) throw Error(ErrorCode::InsufficientData, "fitting needs at least 8 records");
  for (std::size_t k = 1; k < records.size(); ++k) {
    const auto& a = records[k - 1];
    const auto& b = records[k];
    if (a.problem != b.problem || a.n != b.n || a.j != b.j)
      throw Error(ErrorCode::InvalidParams, "records mix problems, dimensions or indices");
    if (!(a.X < b.X)) throw Error(ErrorCode::InvalidParams, "records must be ordered by increasing X");
  }
  const std::size_t tail = records.size() / 2;

  ExponentFit fit;
  std::optional<Interval> uniform;
  Interval tail_max(ExtReal::neg_inf(), ExtReal::neg_inf());
  for (std::size_t k = tail; k < records.size(); ++k) {
    Interval r = detail::rate(records[k]);
    uniform = uniform ? min(*uniform, r) : r;
    tail_max = max(tail_max, r);
  }
  fit.uniform = *uniform;

  // Secants span at least kSecantSpan in witness height so single
  // partial-quotient jumps do not dominate.
  std::optional<Interval> steepest;
  for (std::size_t k = tail; k < records.size(); ++k) {
    const BigInt h1 = detail::witness_height(records[k]);
    for (std::size_t i = k; i-- > 0;) {
      const BigInt h0 = detail::witness_height(records[i]);
      if (h0 * kSecantSpan > h1) continue;
      if (!(records[i].minimum.lo() > ExtReal(0))) break;
      const double lh = detail::log_of(h1) - detail::log_of(h0);
      const double lo = (detail::log_of(records[i].minimum.lo()) - detail::log_of(records[k].minimum.hi())) / lh;
      const double hi = (detail::log_of(records[i].minimum.hi()) - detail::log_of(records[k].minimum.lo())) / lh;
      Interval s = detail::outward(lo, hi);
      steepest = steepest ? max(*steepest, s) : s;
      break;
    }
  }
  fit.ordinary = steepest ? max(*steepest, fit.uniform) : tail_max;
  return fit;
}

}  // namespace dioph
