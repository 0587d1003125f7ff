#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dioph/atlas/catalog.hpp"
#include "dioph/exponents/rules.hpp"

using namespace dioph;

namespace {

Interval dec(const char* text) { return Interval(parse_rational(text)); }

const BoundReport& only(const std::vector<BoundReport>& reports, Status s) {
  static BoundReport none;
  for (const auto& r : reports)
    if (r.status == s) return r;
  return none;
}

std::set<std::string> violated_ids(const std::vector<BoundReport>& reports) {
  std::set<std::string> ids;
  for (const auto& r : reports)
    if (r.status == Status::Violated) ids.insert(r.rule_id);
  return ids;
}

ExponentProfile random_profile(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<long> num(0, 600);
  ExponentProfile p;
  for (int n = 1; n <= 3; ++n)
    for (Kind k : {Kind::Lambda, Kind::LambdaHat, Kind::W, Kind::WHat, Kind::WStar, Kind::WHatStar}) {
      for (int j = 1; j <= (is_starred(k) ? 1 : n + 1); ++j) {
        if (pick(rng) == 0) continue;
        BigRational a(num(rng), 100), b(num(rng), 100);
        if (b < a) std::swap(a, b);
        Interval v = pick(rng) == 0 ? Interval(ExtReal(a), ExtReal::pos_inf()) : Interval(ExtReal(a), ExtReal(b));
        p = p.with(ExponentKey::make(k, n, j), v);
      }
    }
  return p;
}

}  // namespace

TEST(Registry, HasUniqueIdsAndAnchors) {
  std::set<std::string> ids;
  for (const auto& rule : rule_registry()) {
    EXPECT_TRUE(ids.insert(rule.id).second) << rule.id;
    EXPECT_FALSE(rule.anchor.empty()) << rule.id;
  }
  for (const char* id : {"DIRICHLET_L", "MAHLER_A", "MAHLER_B", "FRITZ", "GERMAN", "JARNIK", "DS_W2", "COR_HAR",
                         "COR_PUHA", "DREII", "THEOREM_NEU", "THEOREM_LAUVERB", "ORCOR_IMPRO", "U_M_A2"})
    EXPECT_TRUE(rule_exists(id)) << id;
  EXPECT_THROW(evaluate_rule("NO_SUCH_RULE", ExponentProfile(), {}), Error);
  EXPECT_THROW(evaluate_rule("GERMAN", ExponentProfile(), {{"n", 1}}), Error);
}

TEST(Rules, TheoremNeuExample) {
  ExponentProfile p = ExponentProfile()
                          .with(w(2), Interval(2) + constants::sqrt5())
                          .with(w_hat(2), constants::gamma())
                          .with(lambda_hat(3), Interval(BigRational(1, 3)));
  BoundReport r = evaluate_rule("THEOREM_NEU", p, {{"m", 2}, {"n", 2}});
  EXPECT_EQ(r.status, Status::Satisfied);
  ASSERT_EQ(r.comparisons.size(), 1u);
  EXPECT_NEAR(r.comparisons[0].rhs.mid_double(), 0.382, 1e-3);
}

TEST(Rules, DreiiExample) {
  ExponentProfile p = ExponentProfile().with(lambda_hat(2), dec("0.62")).with(lambda_hat(3), dec("0.45"));
  BoundReport r = evaluate_rule("DREII", p, {});
  EXPECT_EQ(r.status, Status::Violated);
  EXPECT_EQ(r.slack.lo(), ExtReal(BigRational(-7, 100)));
}

TEST(Rules, CorHarExample) {
  ExponentProfile p = ExponentProfile().with(w_hat(2), constants::gamma()).with(w_hat(3), dec("4.2360"));
  BoundReport ok = evaluate_rule("COR_HAR", p, {{"n", 2}});
  EXPECT_EQ(ok.status, Status::Satisfied);
  ASSERT_FALSE(ok.comparisons.empty());
  EXPECT_NEAR(ok.comparisons.back().rhs.mid_double(), 4.2361, 5e-5);
  BoundReport bad = evaluate_rule("COR_HAR", p.with(w_hat(3), dec("4.2362")), {{"n", 2}});
  EXPECT_EQ(bad.status, Status::Violated);
}

TEST(Rules, DsW2Example) {
  EXPECT_EQ(evaluate_rule("DS_W2", ExponentProfile().with(w_hat(2), dec("2.7")), {}).status, Status::Violated);
  EXPECT_EQ(evaluate_rule("DS_W2", ExponentProfile().with(w_hat(2), dec("2.618")), {}).status, Status::Satisfied);
}

TEST(Rules, MissingEntriesAreInapplicable) {
  std::vector<BoundReport> all = run_all_rules(ExponentProfile(), 4);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(count_status(all, Status::Inapplicable), all.size());
}

TEST(Rules, NonTranscendentalIsInapplicable) {
  ExponentProfile p = ExponentProfile().with(lambda_hat(3), dec("0.2")).with_transcendental(false);
  EXPECT_EQ(evaluate_rule("DIRICHLET_L", p, {{"n", 3}}).status, Status::Inapplicable);
}

TEST(Rules, ReportsAreOrderedById) {
  std::vector<BoundReport> all = run_all_rules(ExponentProfile(), 3);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LE(all[i - 1].rule_id, all[i].rule_id);
}

TEST(Rules, LiouvilleProfileHasNoViolation) {
  ExponentProfile p = known_profile("liouville").profile;
  std::vector<BoundReport> all = run_all_rules(p, 6);
  EXPECT_EQ(count_status(all, Status::Violated), 0u);
  for (int n = 1; n <= 6; ++n) {
    BoundReport r = evaluate_rule("U_M_A2", p, {{"m", 1}, {"n", n}});
    EXPECT_EQ(r.status, Status::Satisfied) << n;
    EXPECT_EQ(r.comparisons.front().rhs.lo(), ExtReal(BigRational(1, n)));
  }
}

TEST(Rules, CuratedProfilesHaveNoViolation) {
  for (const char* id : {"extremal", "sturmian_cf_family", "liouville"})
    EXPECT_EQ(count_status(run_all_rules(known_profile(id).profile, 8), Status::Violated), 0u) << id;
}

TEST(Rules, CorPuhaAdversarialEdit) {
  // 0.62 also exceeds sigma, and COR_PUHA at n = 2 coincides with DREII.
  ExponentProfile p = ExponentProfile().with(lambda_hat(2), dec("0.62")).with(lambda_hat(3), dec("0.40"));
  std::vector<BoundReport> all = run_all_rules(p, 3);
  EXPECT_EQ(violated_ids(all), (std::set<std::string>{"COR_PUHA", "DREII", "L2_SIGMA"}));
  BoundReport puha = evaluate_rule("COR_PUHA", p, {{"n", 2}});
  EXPECT_EQ(puha.status, Status::Violated);
  EXPECT_TRUE(puha.slack.contains(ExtReal(BigRational(-2, 100))));
  EXPECT_LT(puha.slack.width(), ExtReal(BigRational(1, 1000000000)));
  ExponentProfile only_puha = ExponentProfile().with(lambda_hat(3), dec("0.42")).with(lambda_hat(5), dec("0.3"));
  EXPECT_EQ(violated_ids(run_all_rules(only_puha, 5)), std::set<std::string>{"COR_PUHA"});
}

TEST(Rules, GermanAndJarnikAgreeInDimensionTwo) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(200, 261);
  for (int trial = 0; trial < 100; ++trial) {
    BigRational hat(num(rng), 100);
    ExponentProfile p =
        ExponentProfile().with(w_hat(2), Interval(hat)).with(lambda_hat(2), Interval(BigRational(1 - 1 / hat)));
    BoundReport german = evaluate_rule("GERMAN", p, {{"n", 2}});
    BoundReport jarnik = evaluate_rule("JARNIK", p, {});
    EXPECT_EQ(german.status, Status::Satisfied);
    EXPECT_EQ(jarnik.status, Status::Satisfied);
    EXPECT_EQ(german.slack.lo(), ExtReal(0));
    EXPECT_EQ(jarnik.slack.lo(), ExtReal(0));
    ExponentProfile off = p.with(lambda_hat(2), Interval(BigRational(1 - 1 / hat + BigRational(1, 1000))));
    EXPECT_EQ(evaluate_rule("GERMAN", off, {{"n", 2}}).status, Status::Violated);
    EXPECT_EQ(evaluate_rule("JARNIK", off, {}).status, Status::Violated);
  }
}

TEST(Rules, OrcorImprovedBoundBecomesNontrivialAtOnePlusSqrt2) {
  ExponentProfile base = ExponentProfile().with(lambda(3), Interval(1)).with(w(1), Interval(1));
  EXPECT_EQ(evaluate_rule("ORCOR_IMPRO", base.with(w_hat(2), dec("2.4142")), {}).status, Status::Satisfied);
  EXPECT_EQ(evaluate_rule("ORCOR_IMPRO", base.with(w_hat(2), dec("2.4143")), {}).status, Status::Violated);
}

TEST(Rules, CorNeuesAtDirichletFloorIsLaurent) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(1, 100);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 8;
    int half = (n + 1) / 2;
    Interval x(BigRational(num(rng), 100));
    ExponentProfile p = ExponentProfile().with(lambda_hat(n), x).with(w_hat(half), Interval(half));
    BoundReport neues = evaluate_rule("COR_NEUES", p, {{"n", n}});
    BoundReport laurent = evaluate_rule("LAURENT", p, {{"n", n}});
    EXPECT_EQ(neues.status, laurent.status) << n;
    EXPECT_EQ(neues.slack.lo(), laurent.slack.lo()) << n;
  }
}

TEST(Rules, WideningNeverSharpensVerdicts) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> by(1, 50);
  for (int trial = 0; trial < 40; ++trial) {
    ExponentProfile p = random_profile(rng);
    ExponentProfile wide = p.widened(BigRational(by(rng), 100));
    std::vector<BoundReport> narrow_reports = run_all_rules(p, 3);
    std::vector<BoundReport> wide_reports = run_all_rules(wide, 3);
    ASSERT_EQ(narrow_reports.size(), wide_reports.size());
    for (std::size_t i = 0; i < narrow_reports.size(); ++i) {
      const auto& a = narrow_reports[i];
      const auto& b = wide_reports[i];
      ASSERT_EQ(a.rule_id, b.rule_id);
      if (a.status == Status::Inapplicable || b.status == Status::Inapplicable) continue;
      EXPECT_TRUE(b.slack.contains(a.slack)) << a.rule_id << " " << params_to_string(a.params);
      if (b.status == Status::Satisfied || b.status == Status::Violated)
        EXPECT_EQ(a.status, b.status) << a.rule_id << " " << params_to_string(a.params);
    }
  }
}

TEST(ProfileCheck, FloorViolation) {
  auto reports = profile_check(ExponentProfile().with(lambda_hat(3), dec("0.2")));
  EXPECT_EQ(violated_ids(reports), std::set<std::string>{"DIRICHLET_L"});
}

TEST(ProfileCheck, ChainViolation) {
  auto reports = profile_check(ExponentProfile().with(w(2), Interval(3)).with(w(1), Interval(4)));
  EXPECT_EQ(violated_ids(reports).count("CHAIN_W"), 1u);
  EXPECT_EQ(violated_ids(reports).count("DIRICHLET_W"), 0u);
}

TEST(ProfileCheck, FritzViolation) {
  auto reports = profile_check(ExponentProfile().with(w_hat(2), constants::gamma()).with(w(2, 2), dec("2.5")));
  EXPECT_EQ(violated_ids(reports), std::set<std::string>{"FRITZ"});
}

TEST(ProfileCheck, AdversarialEditsOnCuratedProfiles) {
  ExponentProfile sturm = known_profile("sturmian_cf_family").profile;
  ExponentProfile extremal = known_profile("extremal").profile;
  auto dreii = run_all_rules(sturm.with(lambda_hat(2), dec("0.6")).with(lambda_hat(3), dec("0.42")), 8);
  EXPECT_EQ(violated_ids(dreii), (std::set<std::string>{"DREII", "COR_PUHA"}));
  auto floor = run_all_rules(sturm.with(lambda_hat(3), dec("0.3")), 8);
  EXPECT_EQ(violated_ids(floor), std::set<std::string>{"DIRICHLET_L"});
  auto fritz = run_all_rules(extremal.with(w(2, 2), dec("2.5")), 8);
  EXPECT_EQ(violated_ids(fritz), std::set<std::string>{"FRITZ"});
  EXPECT_EQ(only(fritz, Status::Violated).rule_id, "FRITZ");
}
