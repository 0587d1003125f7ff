#pragma once

// Shifted polynomial families, their resultant independence criterion, and
// the multiplicative height inequality.

#include <string>
#include <vector>

#include "dioph/atlas/number_spec.hpp"
#include "dioph/estimator/integer_poly.hpp"
#include "dioph/exponents/rules.hpp"
#include "dioph/numerics/interval.hpp"

namespace dioph {

struct WitnessFamily {
  IntegerPolynomial p;  // degree l
  IntegerPolynomial q;  // degree n
  /// P, TP, ..., T^(n-1) P, Q, TQ, ..., T^(l-1) Q.
  std::vector<IntegerPolynomial> members;
  BigInt resultant;
  std::size_t rank = 0;

  bool independent() const { return resultant != 0; }
};

inline WitnessFamily witness_family(const IntegerPolynomial& p, const IntegerPolynomial& q, int n) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidParams, "P must have degree >= 1");
  if (q.degree() != n || n < 1) throw Error(ErrorCode::InvalidParams, "Q must have degree n >= 1");
  WitnessFamily fam;
  fam.p = p;
  fam.q = q;
  const int l = p.degree();
  for (int k = 0; k < n; ++k) fam.members.push_back(p.shifted(k));
  for (int k = 0; k < l; ++k) fam.members.push_back(q.shifted(k));
  fam.resultant = resultant(p, q);
  IntMatrix rows;
  for (const auto& m : fam.members) rows.push_back(m.padded(static_cast<std::size_t>(l + n)));
  fam.rank = dioph::rank(rows);
  return fam;
}

/// The constant in H(P)H(Q)/K <= H(PQ) <= K H(P)H(Q) for deg P + deg Q <= 2n.
inline BigInt height_constant(int n) { return pow2(static_cast<unsigned long>(2 * n)); }

inline BoundReport height_inequality_check(const IntegerPolynomial& p, const IntegerPolynomial& q, int n) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::InvalidParams, "height inequality needs nonzero P, Q");
  if (p.degree() + q.degree() > 2 * n) throw Error(ErrorCode::InvalidParams, "deg P + deg Q exceeds 2n");
  const BigInt k = height_constant(n);
  const BigInt hp = p.height() * q.height();
  const BigInt hpq = (p * q).height();
  BoundReport report;
  report.rule_id = "HEIGHT_PRODUCT";
  report.params = {{"n", n}};
  report.comparisons.push_back(
      Comparison{"H(P)H(Q)/K <= H(PQ)", Interval(make_rational(hp, k)), Interval(BigRational(hpq))});
  report.comparisons.push_back(Comparison{"H(PQ) <= K H(P)H(Q)", Interval(BigRational(hpq)), Interval(BigRational(k * hp))});
  report.slack = min(report.comparisons[0].slack(), report.comparisons[1].slack());
  report.status = status_from_slack(report.slack);
  report.details = "H(P)H(Q) = " + hp.get_str() + ", H(PQ) = " + hpq.get_str() + ", K = " + k.get_str();
  return report;
}

/// Enclosure of P(zeta) from an oracle value at 10^-digits precision.
inline Interval eval_at(const IntegerPolynomial& poly, const NumberSpec& spec, int digits) {
  BigRational q = spec.approximate(digits);
  BigRational r = make_rational(BigInt(1), pow10(static_cast<unsigned long>(digits)));
  Interval zeta(ExtReal(BigRational(q - r)), ExtReal(BigRational(q + r)));
  Interval acc(0);
  const auto& c = poly.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * zeta + Interval(BigRational(*it));
  return acc;
}

/// Checks on a concrete family at height X: every member has height <= X and
/// |R(zeta)| <= max(1, |zeta|)^(l+n-1) max(|P(zeta)|, |Q(zeta)|).
struct FamilyAssessment {
  bool heights_ok = true;
  bool values_ok = true;
  BigInt max_height;
  std::vector<Interval> member_values;  // |R(zeta)| enclosures
  Interval bound;                        // right-hand side above
};

inline FamilyAssessment assess_family(const WitnessFamily& fam, const NumberSpec& spec, const BigInt& x_bound,
                                      int digits = 60) {
  FamilyAssessment out;
  out.max_height = 0;
  auto abs_iv = [](const Interval& v) {
    if (v.lo() >= ExtReal(0)) return v;
    if (v.hi() <= ExtReal(0)) return -v;
    return Interval(ExtReal(0), std::max(-v.lo(), v.hi()));
  };
  Interval zeta_abs = abs_iv(eval_at(IntegerPolynomial{0, 1}, spec, digits));
  Interval base = max(Interval(1), zeta_abs);
  Interval growth(1);
  const int shifts = fam.p.degree() + fam.q.degree() - 1;
  for (int k = 0; k < shifts; ++k) growth = growth * base;
  out.bound = growth * max(abs_iv(eval_at(fam.p, spec, digits)), abs_iv(eval_at(fam.q, spec, digits)));
  for (const auto& m : fam.members) {
    BigInt h = m.height();
    out.max_height = std::max(out.max_height, h);
    if (h > x_bound) out.heights_ok = false;
    Interval v = abs_iv(eval_at(m, spec, digits));
    out.member_values.push_back(v);
    if (out.bound.hi() < v.lo()) out.values_ok = false;
  }
  return out;
}

}  // namespace dioph
