// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dioph.hpp"

using namespace dioph;

namespace {

// Pinned tolerances.
constexpr double kThetaTableSeconds = 1.0;
constexpr double kResidualBound = 1.0;
constexpr double kAsymptoticsSeconds = 10.0;
constexpr double kIdentityTolerance = 1e-12;
constexpr double kEquivalenceSeconds = 60.0;
constexpr double kExponentTolerance = 0.05;
constexpr double kPolynomialUniformFloor = 1.9;
constexpr double kEmpiricalSeconds = 300.0;
constexpr long kDualityTolerancePercent = 15;
constexpr int kHeightTrials = 10000;
constexpr double kInverseTolerance = 1e-10;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

bool interval_near(const Interval& x, double v, double tol) {
  return x.lo().finite() && x.hi().finite() && x.lo().to_double() >= v - tol && x.hi().to_double() <= v + tol;
}

std::set<std::string> violated_ids(const std::vector<BoundReport>& reports) {
  std::set<std::string> ids;
  for (const auto& r : reports)
    if (r.status == Status::Violated) ids.insert(r.rule_id);
  return ids;
}

Outcome theta_table() {
  auto start = std::chrono::steady_clock::now();
  const char* expected[] = {"0.6823", "0.4395", "0.3140", "0.2417"};
  bool ok = true;
  std::string got;
  for (int n = 1; n <= 4; ++n) {
    Interval t = theta(n, BigRational(1, 100000000));
    std::string lo = to_decimal(t.lo().value(), 4), hi = to_decimal(t.hi().value(), 4);
    ok = ok && lo == expected[n - 1] && hi == expected[n - 1];
    got += (n > 1 ? " " : "") + lo;
  }
  double secs = seconds_since(start);
  return {ok && secs < kThetaTableSeconds, got + " in " + fmt(secs, 3) + " s"};
}

Outcome theta_asymptotics() {
  auto start = std::chrono::steady_clock::now();
  double worst = 0;
  for (int n : {10, 100, 1000, 10000}) {
    BigRational nn(n);
    BigRational n5 = nn * nn * nn * nn * nn;
    Interval t = theta(n, BigRational(1, 1000000) / n5);
    Interval a = theta_asymptote(n);
    BigRational lo = abs_rational(t.lo().value() - a.lo().value()) * n5;
    BigRational hi = abs_rational(t.hi().value() - a.lo().value()) * n5;
    worst = std::max({worst, lo.get_d(), hi.get_d()});
  }
  double secs = seconds_since(start);
  return {worst < kResidualBound && secs < kAsymptoticsSeconds,
          "max residual*n^5 = " + fmt(worst) + " (bound " + fmt(kResidualBound, 1) + ") in " + fmt(secs, 3) + " s"};
}

Outcome constant_identities() {
  const Interval g = constants::gamma(), s = constants::sigma(), s5 = constants::sqrt5();
  const Interval s2 = sqrt_interval(Interval(2));
  const Interval impro = Interval(1) + s2;
  bool ok = interval_near(Interval(1) - recip_nonneg(g), s.mid_double(), kIdentityTolerance) &&
            interval_near(s, (std::sqrt(5.0) - 1) / 2, kIdentityTolerance);
  ok = ok && interval_near(g / (g - Interval(2)), (Interval(2) + s5).mid_double(), kIdentityTolerance) &&
       interval_near(g / (g - Interval(2)), 2 + std::sqrt(5.0), kIdentityTolerance);
  const Interval har = (Interval(6) + Interval(2) * s2) / (Interval(2) + s2);
  ok = ok && interval_near(har, 4 - std::sqrt(2.0), kIdentityTolerance);
  ok = ok && interval_near((impro - Interval(2)) * impro, 1.0, kIdentityTolerance);
  ok = ok && to_decimal(from_double(har.mid_double()), 4) == "2.5858" &&
       to_decimal(from_double(impro.mid_double()), 4) == "2.4142" &&
       to_decimal(from_double((g / (g - Interval(2))).mid_double()), 4) == "4.2361";
  return {ok, "1-1/gamma = " + fmt(s.mid_double(), 6) + ", gamma/(gamma-2) = " +
                  fmt((g / (g - Interval(2))).mid_double()) + ", threshold " + fmt(har.mid_double()) + ", 1+sqrt2 = " +
                  fmt(impro.mid_double())};
}

Outcome rule_suite() {
  const int n_max = 8;
  std::ostringstream detail;
  bool ok = true;
  for (const char* id : {"extremal", "liouville", "sturmian_cf_family"}) {
    auto reports = run_all_rules(known_profile(id).profile, n_max);
    std::size_t v = count_status(reports, Status::Violated);
    ok = ok && v == 0;
    detail << id << ":" << v << " ";
  }
  const ExponentProfile sturm = known_profile("sturmian_cf_family").profile;
  const ExponentProfile extremal = known_profile("extremal").profile;
  const BigRational p6(6, 10), p42(42, 100), p3(3, 10), p25(25, 10);
  struct Edit {
    std::string name;
    std::set<std::string> targets;
    ExponentProfile profile;
  };
  std::vector<Edit> edits{
      // COR_PUHA at n = 2 is the same inequality as DREII.
      {"DREII", {"DREII", "COR_PUHA"}, sturm.with(lambda_hat(2), Interval(p6)).with(lambda_hat(3), Interval(p42))},
      {"DIRICHLET_L", {"DIRICHLET_L"}, sturm.with(lambda_hat(3), Interval(p3))},
      {"FRITZ", {"FRITZ"}, extremal.with(w(2, 2), Interval(p25))},
  };
  for (const auto& e : edits) {
    auto ids = violated_ids(run_all_rules(e.profile, n_max));
    bool exact = ids == e.targets;
    ok = ok && exact;
    detail << e.name << (exact ? ":exact " : ":mismatch ");
  }
  return {ok, detail.str()};
}

Outcome oracle_equivalence() {
  auto start = std::chrono::steady_clock::now();
  std::vector<BigInt> grid = geometric_grid(5, 50, 1.5);
  std::size_t compared = 0, mismatched = 0;
  for (const char* id : {"golden", "cbrt2", "e_digits"}) {
    NumberSpec spec = find_spec(id);
    for (Problem problem : {Problem::Simultaneous, Problem::Polynomial})
      for (int n = 1; n <= 2; ++n) {
        auto a = minima_grid(spec, problem, n, grid, n + 1, Method::Exhaustive);
        auto b = minima_grid(spec, problem, n, grid, n + 1, Method::Lattice);
        for (std::size_t i = 0; i < a.size(); ++i) {
          ++compared;
          if (i >= b.size() || a[i].witnesses != b[i].witnesses || a[i].minimum.lo() != b[i].minimum.lo() ||
              a[i].minimum.hi() != b[i].minimum.hi())
            ++mismatched;
        }
        if (a.size() != b.size()) ++mismatched;
      }
  }
  double secs = seconds_since(start);
  return {mismatched == 0 && secs < kEquivalenceSeconds,
          std::to_string(compared) + " records, " + std::to_string(mismatched) + " mismatches in " + fmt(secs, 1) + " s"};
}

Outcome empirical_exponents() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream detail;
  auto grid = geometric_grid(10, 1000000, 1.5);
  for (const char* id : {"sqrt2", "golden"}) {
    ExponentFit fit = fit_exponent(simultaneous_scan(find_spec(id), 1, grid));
    bool near = interval_near(fit.ordinary, 1.0, kExponentTolerance);
    ok = ok && near;
    detail << id << " lambda_1 = [" << fmt(fit.ordinary.lo().to_double()) << ", " << fmt(fit.ordinary.hi().to_double())
           << "]; ";
  }
  auto poly = estimate_grid(find_spec("sqrt2"), Problem::Polynomial, 2, geometric_grid(10, 10000, 1.5), 1);
  ExponentFit pfit = fit_exponent(poly);
  bool floor = pfit.uniform.hi().to_double() >= kPolynomialUniformFloor;
  ok = ok && floor;
  double secs = seconds_since(start);
  detail << "sqrt2 polynomial n=2 uniform = [" << fmt(pfit.uniform.lo().to_double()) << ", "
         << fmt(pfit.uniform.hi().to_double()) << "] (needs >= " << fmt(kPolynomialUniformFloor, 1) << ") in "
         << fmt(secs, 1) << " s";
  return {ok && secs < kEmpiricalSeconds, detail.str()};
}

Outcome mahler_duality() {
  const BigRational tol(kDualityTolerancePercent, 100);
  auto a = duality_report(find_spec("sqrt2"), 1, geometric_grid(10, 100000, 1.5), tol);
  auto b = duality_report(find_spec("golden"), 2, geometric_grid(10, 10000, 1.5), tol);
  std::size_t va = count_status(a, Status::Violated), vb = count_status(b, Status::Violated);
  return {va == 0 && vb == 0, "sqrt2 n=1: " + std::to_string(va) + " of " + std::to_string(a.size()) +
                                  " violated; golden n=2: " + std::to_string(vb) + " of " + std::to_string(b.size()) +
                                  " violated"};
}

Outcome witness_mechanics() {
  WitnessFamily fam = witness_family(IntegerPolynomial{-2, 0, 1}, IntegerPolynomial{-3, 0, 0, 1}, 3);
  bool ok = fam.resultant != 0 && fam.rank == 5 && fam.members.size() == 5;
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<long> coef(-100, 100);
  std::uniform_int_distribution<int> deg(0, 5);
  int violations = 0;
  for (int trial = 0; trial < kHeightTrials; ++trial) {
    std::vector<BigInt> pc, qc;
    const int dp = deg(rng), dq = deg(rng);
    for (int k = 0; k <= dp; ++k) pc.emplace_back(coef(rng));
    for (int k = 0; k <= dq; ++k) qc.emplace_back(coef(rng));
    if (pc.back() == 0) pc.back() = 1;
    if (qc.back() == 0) qc.back() = 1;
    const int n = std::max({1, dp, dq});
    if (height_inequality_check(IntegerPolynomial(pc), IntegerPolynomial(qc), n).status == Status::Violated) ++violations;
  }
  ok = ok && violations == 0;
  return {ok, "resultant " + fam.resultant.get_str() + ", rank " + std::to_string(fam.rank) + ", " +
                  std::to_string(violations) + " violations in " + std::to_string(kHeightTrials) + " trials"};
}

Outcome transform_inverse() {
  double worst = 0;
  int points = 0;
  for (int n = 2; n <= 11; ++n)
    for (int k = 1; k <= 10; ++k) {
      BigRational x(k, 11);
      Interval back = ss_upper_transform(n, ss_lower(n, Interval(x)));
      worst = std::max({worst, std::fabs(back.lo().to_double() - x.get_d()), std::fabs(back.hi().to_double() - x.get_d())});
      ++points;
    }
  return {worst <= kInverseTolerance, std::to_string(points) + " points, max deviation " + fmt(worst * 1e12, 3) + "e-12"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"theta table", theta_table},
      {"theta asymptotics", theta_asymptotics},
      {"constant identities", constant_identities},
      {"rule-suite consistency", rule_suite},
      {"lattice/exhaustive equivalence", oracle_equivalence},
      {"empirical exponent sanity", empirical_exponents},
      {"empirical Mahler duality", mahler_duality},
      {"witness mechanics", witness_mechanics},
      {"transform inverse", transform_inverse},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << "  " << criteria[i].name << ": " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
