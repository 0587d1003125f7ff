#pragma once

// LLL reduction and Fincke-Pohst enumeration over high-precision floats.
// Basis vectors are rows; integer transforms are tracked exactly so every
// enumerated point is returned as exact coordinates in the input basis.

#include <cstddef>
#include <functional>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/numerics/exact_matrix.hpp"
#include "dioph/numerics/rational.hpp"

namespace dioph {

using Real = mpf_class;
using RealMatrix = std::vector<std::vector<Real>>;

namespace detail {

inline Real real(long v, mp_bitcnt_t prec) { return Real(v, prec); }
inline Real real(const BigRational& q, mp_bitcnt_t prec) { return Real(q, prec); }
inline Real real(const BigInt& z, mp_bitcnt_t prec) { return Real(z, prec); }

inline BigInt round_real(const Real& x, mp_bitcnt_t prec) {
  Real h(x + Real(0.5, prec), prec);
  return BigInt(floor(h));
}

struct GramSchmidt {
  RealMatrix mu;          // mu[k][l], l < k
  std::vector<Real> norm; // squared norms of orthogonalized rows
};

inline Real dot(const std::vector<Real>& a, const std::vector<Real>& b, mp_bitcnt_t prec) {
  Real s(0, prec);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline GramSchmidt gram_schmidt(const RealMatrix& rows, mp_bitcnt_t prec) {
  const std::size_t d = rows.size();
  GramSchmidt gs;
  gs.mu.assign(d, std::vector<Real>(d, Real(0, prec)));
  gs.norm.assign(d, Real(0, prec));
  RealMatrix star = rows;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < k; ++l) {
      Real m(dot(rows[k], star[l], prec) / gs.norm[l], prec);
      gs.mu[k][l] = m;
      for (std::size_t i = 0; i < star[k].size(); ++i) star[k][i] -= m * star[l][i];
    }
    gs.norm[k] = dot(star[k], star[k], prec);
    if (gs.norm[k] <= 0) throw Error(ErrorCode::PrecisionUnreachable, "lattice basis is numerically degenerate");
  }
  return gs;
}

inline RealMatrix apply_transform(const IntMatrix& u, const RealMatrix& original, mp_bitcnt_t prec) {
  RealMatrix out(u.size(), std::vector<Real>(original[0].size(), Real(0, prec)));
  for (std::size_t k = 0; k < u.size(); ++k)
    for (std::size_t l = 0; l < u[k].size(); ++l) {
      if (u[k][l] == 0) continue;
      Real c = real(u[k][l], prec);
      for (std::size_t i = 0; i < out[k].size(); ++i) out[k][i] += c * original[l][i];
    }
  return out;
}

}  // namespace detail

/// LLL-reduced basis of the lattice spanned by `original`, as an exact
/// unimodular transform U (reduced row k = sum_l U[k][l] original[l]).
inline IntMatrix lll_transform(const RealMatrix& original, mp_bitcnt_t prec, double delta = 0.99) {
  const std::size_t d = original.size();
  IntMatrix u(d, std::vector<BigInt>(d, BigInt(0)));
  for (std::size_t k = 0; k < d; ++k) u[k][k] = 1;
  if (d < 2) return u;
  const Real delta_r(delta, prec);
  const Real half(0.5, prec);
  std::size_t k = 1;
  std::size_t guard = 0;
  while (k < d) {
    if (++guard > 100000) throw Error(ErrorCode::PrecisionUnreachable, "lattice reduction did not terminate");
    RealMatrix rows = detail::apply_transform(u, original, prec);
    auto gs = detail::gram_schmidt(rows, prec);
    for (std::size_t l = k; l-- > 0;) {
      if (abs(gs.mu[k][l]) > half) {
        BigInt r = detail::round_real(gs.mu[k][l], prec);
        for (std::size_t c = 0; c < d; ++c) u[k][c] -= r * u[l][c];
        rows = detail::apply_transform(u, original, prec);
        gs = detail::gram_schmidt(rows, prec);
      }
    }
    Real lhs(gs.norm[k], prec);
    Real rhs((delta_r - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm[k - 1], prec);
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(u[k], u[k - 1]);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return u;
}

/// All nonzero integer vectors c (coordinates in `original`) with
/// |sum_k c_k original[k]|^2 <= radius_sq. Throws BudgetExceeded beyond max_points.
inline std::vector<std::vector<BigInt>> enumerate_short_vectors(const RealMatrix& original, const Real& radius_sq,
                                                                mp_bitcnt_t prec, std::size_t max_points) {
  const std::size_t d = original.size();
  IntMatrix u = lll_transform(original, prec);
  RealMatrix rows = detail::apply_transform(u, original, prec);
  auto gs = detail::gram_schmidt(rows, prec);

  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> coeff(d, BigInt(0));
  std::function<void(std::size_t, const Real&)> recurse = [&](std::size_t level, const Real& used) {
    // level counts down from d; coordinate index k = level - 1.
    const std::size_t k = level - 1;
    Real center(0, prec);
    for (std::size_t l = k + 1; l < d; ++l) center -= gs.mu[l][k] * detail::real(coeff[l], prec);
    Real room(radius_sq - used, prec);
    if (room < 0) return;
    Real span(sqrt(Real(room / gs.norm[k], prec)), prec);
    BigInt lo(ceil(Real(center - span, prec)));
    BigInt hi(floor(Real(center + span, prec)));
    for (BigInt c = lo; c <= hi; ++c) {
      Real diff(detail::real(c, prec) - center, prec);
      Real next(used + gs.norm[k] * diff * diff, prec);
      if (next > radius_sq) continue;
      coeff[k] = c;
      if (k == 0) {
        bool zero = true;
        for (const auto& v : coeff) zero = zero && v == 0;
        if (!zero) {
          std::vector<BigInt> a(d, BigInt(0));
          for (std::size_t r = 0; r < d; ++r)
            if (coeff[r] != 0)
              for (std::size_t i = 0; i < d; ++i) a[i] += coeff[r] * u[r][i];
          out.push_back(std::move(a));
          if (out.size() > max_points)
            throw Error(ErrorCode::BudgetExceeded, "lattice enumeration exceeded " + std::to_string(max_points));
        }
      } else {
        recurse(level - 1, next);
      }
    }
    coeff[k] = 0;
  };
  recurse(d, Real(0, prec));
  return out;
}

}  // namespace dioph
