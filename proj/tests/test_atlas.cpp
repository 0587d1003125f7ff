#include <set>

#include <gtest/gtest.h>

#include "dioph/atlas/catalog.hpp"
#include "dioph/exponents/classify.hpp"

using namespace dioph;

namespace {

BigRational tenth_power(int p) { return make_rational(BigInt(1), pow10(static_cast<unsigned long>(p))); }

bool within(const BigRational& a, const BigRational& b, const BigRational& tol) { return abs_rational(a - b) <= tol; }

// floor(10^p * c^(1/k)) by bisection on integers.
BigInt scaled_root(long c, int k, int p) {
  BigInt target = BigInt(c) * pow10(static_cast<unsigned long>(k * p));
  BigInt lo = 0, hi = pow10(static_cast<unsigned long>(p)) * (c + 1);
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    (pow_int(mid, static_cast<unsigned long>(k)) <= target ? lo : hi) = mid;
  }
  return lo;
}

// Convergent p/q of [a0; a1, ...].
BigRational convergent(const std::vector<long>& quotients) {
  BigRational v = quotients.back();
  for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it) v = BigRational(*it) + 1 / v;
  return v;
}

// Fibonacci word over {1, 2} built by concatenation s_k = s_{k-1} s_{k-2}.
std::vector<long> fibonacci_quotients(std::size_t count) {
  std::string a = "1", b = "12";
  while (b.size() < count) {
    std::string next = b + a;
    a = b;
    b = next;
  }
  std::vector<long> out{0};
  for (std::size_t i = 0; i + 1 < count; ++i) out.push_back(b[i] - '0');
  return out;
}

BigRational e_partial_sum(int terms) {
  BigRational sum = 0, term = 1;
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term /= k + 1;
  }
  return sum;
}

}  // namespace

TEST(Atlas, ListsFixedCatalog) {
  std::set<std::string> ids;
  for (const auto& s : list_atlas()) ids.insert(s.id());
  EXPECT_EQ(ids, (std::set<std::string>{"sqrt2", "cbrt2", "golden", "liouville_b10", "fibonacci_cf_12", "e_digits"}));
  EXPECT_THROW(find_spec("pi"), Error);
}

TEST(Atlas, RecordRoundTrip) {
  auto specs = list_atlas();
  auto back = parse_atlas(emit_atlas(specs));
  ASSERT_EQ(back.size(), specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) EXPECT_EQ(back[i], specs[i]);
  NumberSpec inline_spec = resolve_spec("half_sqrt3; ALGEBRAIC; -3,0,4 @ 0,1");
  EXPECT_EQ(inline_spec.degree(), 2);
  EXPECT_TRUE(within(inline_spec.approximate(20), BigRational(scaled_root(3, 2, 20), 2) * tenth_power(20),
                     2 * tenth_power(20)));
}

TEST(Atlas, MalformedRecordsAreRejected) {
  EXPECT_THROW(parse_spec_record("x; ALGEBRAIC; -2,0,1"), Error);
  EXPECT_THROW(parse_spec_record("x; QUATERNION; 1"), Error);
  EXPECT_THROW(parse_spec_record("x; LIOUVILLE_SERIES; 1"), Error);
  EXPECT_THROW(parse_spec_record("no separators"), Error);
}

TEST(Atlas, Sqrt2Example) {
  BigRational q = find_spec("sqrt2").approximate(10);
  EXPECT_TRUE(within(q, make_rational(BigInt("14142135623"), pow10(10)), 2 * tenth_power(10)));
}

TEST(Atlas, LiouvilleExample) {
  BigRational q = find_spec("liouville_b10").approximate(8);
  BigRational partial = BigRational(11000100, 100000000);
  EXPECT_TRUE(within(q, partial, 2 * tenth_power(8)));
}

TEST(Atlas, FibonacciExample) {
  NumberSpec spec = find_spec("fibonacci_cf_12");
  auto quotients = spec.partial_quotients(6);
  const long expected[] = {0, 1, 2, 1, 1, 2};
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(quotients[k], expected[k]) << k;
  EXPECT_TRUE(within(spec.approximate(6), convergent(fibonacci_quotients(40)), 2 * tenth_power(6)));
}

TEST(Atlas, OraclesMatchIndependentComputations) {
  NumberSpec sqrt2 = find_spec("sqrt2"), cbrt2 = find_spec("cbrt2"), golden = find_spec("golden");
  NumberSpec liouville = find_spec("liouville_b10"), fib = find_spec("fibonacci_cf_12"), e = find_spec("e_digits");
  const BigRational e_exact = e_partial_sum(90);
  const BigRational fib_exact = convergent(fibonacci_quotients(260));
  for (int p = 1; p <= 100; ++p) {
    const BigRational tol = 2 * tenth_power(p);
    const BigRational scale = tenth_power(p);
    EXPECT_TRUE(within(sqrt2.approximate(p), BigRational(scaled_root(2, 2, p)) * scale, tol)) << p;
    EXPECT_TRUE(within(cbrt2.approximate(p), BigRational(scaled_root(2, 3, p)) * scale, tol)) << p;
    BigRational phi = (BigRational(1) + BigRational(scaled_root(5, 2, p)) * scale) / 2;
    EXPECT_TRUE(within(golden.approximate(p), phi, tol)) << p;
    BigRational series = 0;
    long fact = 1;
    for (int k = 1; fact <= p + 2; ++k, fact *= k) series += tenth_power(static_cast<int>(fact));
    EXPECT_TRUE(within(liouville.approximate(p), series, tol)) << p;
    EXPECT_TRUE(within(fib.approximate(p), fib_exact, tol)) << p;
    EXPECT_TRUE(within(e.approximate(p), e_exact, tol)) << p;
  }
}

TEST(Atlas, OracleIsSelfConsistentAcrossPrecisions) {
  for (const auto& spec : list_atlas())
    for (int p = 1; p <= 60; p += 3) {
      EXPECT_TRUE(within(spec.approximate(p), spec.approximate(p + 25), tenth_power(p) + tenth_power(p + 25)))
          << spec.id() << " " << p;
      EXPECT_EQ(spec.approximate(p), spec.approximate(p)) << spec.id();
    }
}

TEST(Atlas, DecimalLiteralRunsOut) {
  EXPECT_THROW(find_spec("e_digits").approximate(5000), Error);
  EXPECT_THROW(find_spec("sqrt2").approximate(0), Error);
}

TEST(Atlas, LiouvilleWitnesses) {
  NumberSpec spec = find_spec("liouville_b10");
  long fact = 1;
  for (int k = 1; k <= 4; ++k) {
    fact *= k;
    long next = fact * (k + 1);
    BigInt x = pow10(static_cast<unsigned long>(fact));
    BigRational zeta = spec.approximate(static_cast<int>(next + 40));
    BigRational scaled = zeta * BigRational(x);
    BigRational dist = abs_rational(scaled - BigRational(round_of(scaled)));
    BigRational expected = tenth_power(static_cast<int>(next - fact));
    EXPECT_GE(dist, expected) << k;
    EXPECT_LE(dist, expected * BigRational(11, 10)) << k;
  }
}

TEST(KnownProfiles, EveryEntryIsCited) {
  for (const auto& id : curated_profile_ids()) {
    KnownProfile k = known_profile(id);
    EXPECT_EQ(k.spec_id, id);
    for (const auto& [key, entry] : k.profile.entries()) {
      ASSERT_TRUE(k.citations.count(key)) << id << " " << key.to_string();
      EXPECT_FALSE(k.citations.at(key).empty());
    }
  }
  EXPECT_THROW(known_profile("nope"), Error);
}

TEST(KnownProfiles, Examples) {
  KnownProfile liouville = known_profile("liouville");
  for (int n = 1; n <= kLiouvilleHorizon; ++n) {
    EXPECT_TRUE(liouville.profile.get(w(n))->lo().is_pos_inf());
    EXPECT_EQ(liouville.profile.get(lambda_hat(n))->lo(), ExtReal(BigRational(1, n)));
  }
  EXPECT_EQ(classify(liouville.profile).tag, MahlerClass::Tag::Liouville);
  KnownProfile algebraic = known_profile("algebraic_d");
  EXPECT_FALSE(algebraic.profile.transcendental());
  EXPECT_TRUE(algebraic.profile.empty());
  KnownProfile extremal = known_profile("extremal");
  EXPECT_TRUE(extremal.profile.get(w_hat(2))->overlaps(constants::gamma()));
  EXPECT_EQ(*extremal.profile.provenance(w_hat(2)), Provenance::KnownExact);
}
