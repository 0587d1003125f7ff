#pragma once

// Empirical Mahler duality: fitted simultaneous and polynomial successive
// minima exponents, checked against the duality identities.

#include <map>
#include <vector>

#include "dioph/estimator/fit.hpp"
#include "dioph/estimator/minima.hpp"
#include "dioph/exponents/profile.hpp"
#include "dioph/exponents/rules.hpp"

namespace dioph {

/// Profile with lambda_{n,j}, lambda_hat_{n,j}, w_{n,j}, w_hat_{n,j} for
/// j = 1..n+1 fitted on `grid`. Polynomial minima count vanishing
/// polynomials, as the duality concerns the full convex body.
inline ExponentProfile empirical_minima_profile(const NumberSpec& spec, int n, const std::vector<BigInt>& grid,
                                                const EstimatorConfig& cfg = {}) {
  ExponentProfile profile;
  EstimatorConfig poly_cfg = cfg;
  poly_cfg.include_vanishing = true;
  for (Problem problem : {Problem::Simultaneous, Problem::Polynomial}) {
    const auto& c = problem == Problem::Polynomial ? poly_cfg : cfg;
    auto records = estimate_grid(spec, problem, n, grid, n + 1, c);
    for (const auto& [j, recs] : split_by_index(records)) {
      ExponentFit fit = fit_exponent(recs);
      if (problem == Problem::Simultaneous) {
        profile = profile.with(lambda(n, j), fit.ordinary).with(lambda_hat(n, j), fit.uniform);
      } else {
        profile = profile.with(w(n, j), fit.ordinary).with(w_hat(n, j), fit.uniform);
      }
    }
  }
  // The identities hold for every irrational number.
  return profile.with_transcendental(true);
}

/// MAHLER_A and MAHLER_B for j = 1..n+1 on the fitted profile widened by `tolerance`.
inline std::vector<BoundReport> duality_report(const NumberSpec& spec, int n, const std::vector<BigInt>& grid,
                                               const BigRational& tolerance, const EstimatorConfig& cfg = {}) {
  ExponentProfile profile = empirical_minima_profile(spec, n, grid, cfg).widened(tolerance);
  std::vector<BoundReport> out;
  for (const char* id : {"MAHLER_A", "MAHLER_B"})
    for (int j = 1; j <= n + 1; ++j) out.push_back(evaluate_rule(id, profile, RuleParams{{"n", n}, {"j", j}}));
  return out;
}

}  // namespace dioph
