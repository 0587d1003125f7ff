#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "dioph/numerics/cubic.hpp"
#include "dioph/numerics/exact_matrix.hpp"
#include "dioph/numerics/interval.hpp"
#include "dioph/numerics/rational.hpp"
#include "dioph/exponents/theta.hpp"

using namespace dioph;

namespace {

BigRational random_rational(std::mt19937_64& rng, long span = 50) {
  std::uniform_int_distribution<long> num(-span * 97, span * 97);
  std::uniform_int_distribution<long> den(1, 97);
  return make_rational(BigInt(num(rng)), BigInt(den(rng)));
}

Interval random_interval(std::mt19937_64& rng, std::vector<BigRational>& samples) {
  BigRational a = random_rational(rng), b = random_rational(rng);
  if (b < a) std::swap(a, b);
  samples = {a, b, (a + b) / 2, a + (b - a) / 3};
  return Interval(ExtReal(a), ExtReal(b));
}

// Rank over Q by plain Gaussian elimination on rationals.
std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<BigRational>> a;
  for (const auto& row : m) {
    std::vector<BigRational> r;
    for (const auto& v : row) r.emplace_back(v);
    a.push_back(r);
  }
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      BigRational f = a[i][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Determinant by the Leibniz permutation sum.
BigInt leibniz_det(const IntMatrix& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Rational, StaysNormalized) {
  BigRational q = make_rational(BigInt(6), BigInt(-4));
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  BigRational s = q + BigRational(1, 2);
  EXPECT_EQ(s, BigRational(-1));
  EXPECT_EQ(s.get_den(), 1);
}

TEST(Rational, ParsesDecimalsAndFractions) {
  EXPECT_EQ(parse_rational("-3/7"), BigRational(-3, 7));
  EXPECT_EQ(parse_rational("0.125"), BigRational(1, 8));
  EXPECT_EQ(parse_rational("1.5e-3"), BigRational(3, 2000));
  EXPECT_EQ(parse_rational("12"), BigRational(12));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(to_decimal(BigRational(2, 3), 4), "0.6667");
  EXPECT_EQ(to_decimal(BigRational(2, 3), 4, Rounding::Down), "0.6666");
  EXPECT_EQ(to_decimal(BigRational(-2, 3), 2, Rounding::Up), "-0.66");
  EXPECT_EQ(to_decimal(BigRational(1, 4), 4), "0.2500");
}

TEST(Rational, FloorCeilRound) {
  EXPECT_EQ(floor_of(BigRational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(BigRational(-7, 2)), -3);
  EXPECT_EQ(round_of(BigRational(5, 2)), 3);
  EXPECT_EQ(isqrt_floor(BigInt(99)), 9);
  EXPECT_EQ(isqrt_ceil(BigInt(99)), 10);
  EXPECT_EQ(isqrt_ceil(BigInt(100)), 10);
}

TEST(Interval, ArithmeticContainsPointResults) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<BigRational> xs, ys;
    Interval x = random_interval(rng, xs);
    Interval y = random_interval(rng, ys);
    for (const auto& a : xs)
      for (const auto& b : ys) {
        EXPECT_TRUE((x + y).contains(ExtReal(BigRational(a + b))));
        EXPECT_TRUE((x - y).contains(ExtReal(BigRational(a - b))));
        EXPECT_TRUE((x * y).contains(ExtReal(BigRational(a * b))));
        if (b != 0) EXPECT_TRUE((x / y).contains(ExtReal(BigRational(a / b))));
      }
  }
}

TEST(Interval, DivisionByZeroStraddleIsEntire) {
  Interval r = Interval(1) / Interval(ExtReal(-1), ExtReal(1));
  EXPECT_TRUE(r.lo().is_neg_inf());
  EXPECT_TRUE(r.hi().is_pos_inf());
}

TEST(Interval, ReciprocalConventions) {
  EXPECT_TRUE(recip_nonneg(Interval(0)).lo().is_pos_inf());
  EXPECT_EQ(recip_nonneg(Interval::infinity()).hi(), ExtReal(0));
  Interval r = recip_nonneg(Interval(ExtReal(2), ExtReal::pos_inf()));
  EXPECT_EQ(r.lo(), ExtReal(0));
  EXPECT_EQ(r.hi(), ExtReal(BigRational(1, 2)));
}

TEST(Interval, InfinityIsLegalValue) {
  Interval w = Interval::infinity();
  EXPECT_TRUE((w + Interval(3)).lo().is_pos_inf());
  EXPECT_TRUE(max(w, Interval(5)).lo().is_pos_inf());
  EXPECT_EQ(min(w, Interval(5)).hi(), ExtReal(5));
}

TEST(Interval, DyadicRoundingIsOutward) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    BigRational a = random_rational(rng) / BigRational(pow_int(BigInt(3), 90));
    Interval x(a);
    Interval r = x.rounded(64);
    EXPECT_TRUE(r.contains(x));
    EXPECT_LE(r.hi().value().get_den(), pow2(64));
  }
}

TEST(Interval, SqrtExamples) {
  EXPECT_TRUE(sqrt_interval(Interval(4)).contains(ExtReal(2)));
  Interval s5 = sqrt_interval(Interval(5));
  EXPECT_LE(s5.lo().value() * s5.lo().value(), 5);
  EXPECT_GE(s5.hi().value() * s5.hi().value(), 5);
  Interval gamma = (Interval(3) + s5) * Interval(BigRational(1, 2));
  EXPECT_NEAR(gamma.mid_double(), 2.6180, 5e-5);
  Interval s2 = sqrt_interval(Interval(2));
  EXPECT_NEAR((Interval(3) + s2).mid_double(), 4.4142, 5e-5);
  EXPECT_THROW(sqrt_interval(Interval(ExtReal(-1), ExtReal(1))), Error);
}

TEST(Cubic, EvalExamples) {
  CubicPoly p1 = theta_cubic(1);
  EXPECT_TRUE(eval_poly(p1, Interval(0)).contains(ExtReal(-1)));
  EXPECT_TRUE(eval_poly(p1, Interval(1)).contains(ExtReal(1)));
  CubicPoly p2 = theta_cubic(2);
  EXPECT_EQ(p2.coeff(2), BigRational(1, 2));
  EXPECT_EQ(p2.coeff(1), BigRational(3));
  EXPECT_EQ(p2.coeff(0), BigRational(-3, 2));
  Interval v = eval_poly(p2, Interval(ExtReal(BigRational(4394, 10000)), ExtReal(BigRational(4396, 10000))));
  EXPECT_TRUE(v.contains_zero());
  EXPECT_LT((v.hi().value() - v.lo().value()), BigRational(1, 100));
}

TEST(Cubic, EvalContainsExactValue) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    CubicPoly p(random_rational(rng) + BigRational(1, 1000), random_rational(rng), random_rational(rng),
                random_rational(rng));
    BigRational t = random_rational(rng, 5);
    EXPECT_TRUE(eval_poly(p, Interval(t)).contains(ExtReal(p(t))));
  }
}

TEST(Cubic, CertifiedRootExamples) {
  const BigRational eps5(1, 100000);
  Interval r1 = certified_root(theta_cubic(1), 0, 1, eps5);
  EXPECT_LE(r1.hi().value() - r1.lo().value(), eps5);
  EXPECT_NEAR(r1.mid_double(), 0.68233, 1e-5);
  Interval r3 = certified_root(theta_cubic(3), 0, BigRational(1, 3), eps5);
  EXPECT_NEAR(r3.mid_double(), 0.313996, 1e-5);
  EXPECT_EQ(to_decimal(r3.lo().value(), 4), "0.3140");
  CubicPoly t3_minus_t(1, 0, -1, 0);
  Interval r = certified_root(t3_minus_t, BigRational(1, 2), 2, BigRational(1, 1000000));
  EXPECT_TRUE(r.contains(ExtReal(1)));
  EXPECT_THROW(certified_root(t3_minus_t, 2, 3, eps5), Error);
}

TEST(Cubic, RefinementStaysInside) {
  for (int n = 1; n <= 6; ++n) {
    BigRational eps(1, 1000);
    Interval prev = certified_root(theta_cubic(n), 0, BigRational(1, n), eps);
    for (int k = 0; k < 12; ++k) {
      eps /= 2;
      Interval next = certified_root(theta_cubic(n), 0, BigRational(1, n), eps);
      EXPECT_TRUE(prev.contains(next)) << "n=" << n << " step " << k;
      prev = next;
    }
  }
}

TEST(Cubic, SignChangeOnUnitFractionInterval) {
  for (int n = 1; n <= 10000; ++n) {
    CubicPoly p = theta_cubic(n);
    ASSERT_LT(p(0), 0) << n;
    ASSERT_GT(p(BigRational(1, n)), 0) << n;
  }
}

TEST(ExactMatrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 5);
    IntMatrix m(d, std::vector<BigInt>(d));
    for (auto& row : m)
      for (auto& v : row) v = (trial % 4 == 0 && entry(rng) > 2) ? 0L : entry(rng);
    EXPECT_EQ(determinant(m), leibniz_det(m));
  }
}

TEST(ExactMatrix, RankMatchesRationalElimination) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(trial % 5);
    const std::size_t inner = 1 + static_cast<std::size_t>((trial / 5) % 4);
    const std::size_t cols = 1 + static_cast<std::size_t>((trial / 3) % 5);
    IntMatrix a(rows, std::vector<BigInt>(inner)), b(inner, std::vector<BigInt>(cols));
    for (auto& row : a)
      for (auto& v : row) v = entry(rng);
    for (auto& row : b)
      for (auto& v : row) v = entry(rng);
    IntMatrix m(rows, std::vector<BigInt>(cols, BigInt(0)));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < inner; ++k)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] += a[i][k] * b[k][j];
    EXPECT_EQ(rank(m), rational_rank(m));
  }
}
