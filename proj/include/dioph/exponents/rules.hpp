#pragma once

// Registry of proven inequalities and identities between exponents, and their
// evaluation against interval profiles.
//
// A rule is a list of claims lhs <= rhs (identities contribute both
// directions). The report's slack is the interval minimum of rhs - lhs over
// the claims that could be evaluated; its sign decides the status.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/exponents/key.hpp"
#include "dioph/exponents/profile.hpp"
#include "dioph/exponents/theta.hpp"
#include "dioph/numerics/interval.hpp"

namespace dioph {

enum class Status { Satisfied, Violated, Inapplicable, Indeterminate };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::Satisfied: return "SATISFIED";
    case Status::Violated: return "VIOLATED";
    case Status::Inapplicable: return "INAPPLICABLE";
    case Status::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

using RuleParams = std::map<std::string, int>;

inline std::string params_to_string(const RuleParams& params) {
  std::string s;
  for (const auto& [name, value] : params) {
    if (!s.empty()) s += ",";
    s += name + "=" + std::to_string(value);
  }
  return s;
}

/// One evaluated claim lhs <= rhs.
struct Comparison {
  std::string label;
  Interval lhs;
  Interval rhs;
  Interval slack() const { return rhs - lhs; }
};

struct BoundReport {
  std::string rule_id;
  RuleParams params;
  Status status = Status::Inapplicable;
  Interval slack = Interval::entire();
  std::string details;
  std::vector<Comparison> comparisons;
};

inline Status status_from_slack(const Interval& slack) {
  if (slack.hi() < ExtReal(0)) return Status::Violated;
  if (slack.lo() >= ExtReal(0)) return Status::Satisfied;
  return Status::Indeterminate;
}

enum class Truth { True, False, Unknown };

/// Evaluation state handed to a rule body.
class RuleContext {
 public:
  RuleContext(const ExponentProfile& profile, const RuleParams& params) : profile_(profile), params_(params) {}

  int param(const std::string& name) const {
    auto it = params_.find(name);
    if (it == params_.end()) throw Error(ErrorCode::InvalidParams, "missing parameter " + name);
    return it->second;
  }

  const ExponentProfile& profile() const { return profile_; }

  std::optional<Interval> find(const ExponentKey& key) const { return profile_.get(key); }

  /// Profile value; inside `leq` a missing entry drops only that claim.
  Interval get(const ExponentKey& key) {
    auto v = profile_.get(key);
    if (!v) {
      missing_.push_back(key.to_string());
      throw MissingEntry{};
    }
    return *v;
  }

  /// Adds the claim lhs <= rhs built by `build` (returns {lhs, rhs}).
  template <typename F>
  void leq(const std::string& label, F build) {
    try {
      auto [lhs, rhs] = build();
      comparisons_.push_back(Comparison{label, lhs, rhs});
    } catch (const MissingEntry&) {
    }
  }

  /// Marks the rule inapplicable unless `t` is certainly true.
  void require(Truth t, const std::string& what) {
    if (t == Truth::True) return;
    throw HypothesisFailed{what + (t == Truth::False ? " fails" : " undetermined")};
  }

  // Hypothesis helpers: certain strict order between two profile entries.
  Truth less(const std::optional<Interval>& a, const std::optional<Interval>& b) const {
    if (!a || !b) return Truth::Unknown;
    if (a->hi() < b->lo()) return Truth::True;
    if (a->lo() >= b->hi()) return Truth::False;
    return Truth::Unknown;
  }

  /// w_{n-1} < w_hat_n. Also established by w_{n-1} < n (Dirichlet floor of
  /// w_hat_n) and, for n = 2, by w_hat_2 > 2 (which forces w_1 <= 2).
  Truth wika(int n) const {
    auto prev = find(w(n - 1));
    auto hat = find(w_hat(n));
    Truth direct = less(prev, hat);
    if (direct == Truth::True) return direct;
    if (prev && prev->hi() < ExtReal(n)) return Truth::True;
    if (n == 2 && hat && hat->lo() > ExtReal(2)) return Truth::True;
    return direct;
  }

  /// zeta is a U_m-number: w_m infinite, w_{m-1} finite.
  Truth is_u_number(int m) const {
    auto wm = find(w(m));
    if (!wm) return Truth::Unknown;
    if (wm->hi().finite()) return Truth::False;
    if (!wm->lo().is_pos_inf()) return Truth::Unknown;
    if (m == 1) return Truth::True;
    auto prev = find(w(m - 1));
    if (!prev) return Truth::Unknown;
    if (prev->hi().finite()) return Truth::True;
    if (prev->lo().is_pos_inf()) return Truth::False;
    return Truth::Unknown;
  }

  /// w_1 < 2 or w_hat_2 > 2.
  Truth or_condition() const {
    auto w1 = find(w(1));
    auto hat2 = find(w_hat(2));
    if ((w1 && w1->hi() < ExtReal(2)) || (hat2 && hat2->lo() > ExtReal(2))) return Truth::True;
    bool w1_fails = w1 && w1->lo() >= ExtReal(2);
    bool hat_fails = hat2 && hat2->hi() <= ExtReal(2);
    return (w1_fails && hat_fails) ? Truth::False : Truth::Unknown;
  }

  struct MissingEntry {};
  struct HypothesisFailed {
    std::string reason;
  };

  const std::vector<Comparison>& comparisons() const { return comparisons_; }
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  const ExponentProfile& profile_;
  const RuleParams& params_;
  std::vector<Comparison> comparisons_;
  std::vector<std::string> missing_;
};

/// One numbered inequality or identity.
struct BoundRule {
  std::string id;
  std::string anchor;
  std::vector<std::string> param_names;
  /// Parameter legality (beyond 1 <= value).
  std::function<bool(const RuleParams&)> legal;
  /// Largest dimension an instance touches; run_all_rules keeps instances <= n_max.
  std::function<int(const RuleParams&)> max_dimension;
  std::function<void(RuleContext&)> body;
  bool structural = false;
};

namespace detail {

inline Interval I(long v) { return Interval(v); }
inline Interval Q(long num, long den) { return Interval(BigRational(num, den)); }
inline Interval inv(const Interval& x) { return recip_nonneg(x); }
inline Interval nonneg(const Interval& x) {
  return x.lo() < ExtReal(0) ? Interval(ExtReal(0), std::max(x.hi(), ExtReal(0))) : x;
}
inline int ceil_half(int n) { return (n + 1) / 2; }

inline Interval theta_enclosure(int n) { return theta(n, BigRational(1) / BigRational(pow2(100))); }

inline std::vector<BoundRule> build_registry() {
  std::vector<BoundRule> rules;
  auto any = [](const RuleParams&) { return true; };
  auto dim_n = [](const RuleParams& p) { return p.at("n"); };
  auto add = [&](std::string id, std::string anchor, std::vector<std::string> names,
                 std::function<bool(const RuleParams&)> legal, std::function<int(const RuleParams&)> dims,
                 std::function<void(RuleContext&)> body, bool structural = false) {
    rules.push_back(BoundRule{std::move(id), std::move(anchor), std::move(names), std::move(legal), std::move(dims),
                              std::move(body), structural});
  };

  // Structural facts.
  add("DIRICHLET_L", "Dirichlet: lambda_n >= lambda_hat_n >= 1/n", {"n"}, any, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("lambda_hat <= lambda", [&] { return std::pair(c.get(lambda_hat(n)), c.get(lambda(n))); });
        c.leq("1/n <= lambda_hat", [&] { return std::pair(Q(1, n), c.get(lambda_hat(n))); });
        c.leq("1/n <= lambda", [&] { return std::pair(Q(1, n), c.get(lambda(n))); });
      },
      true);
  add("CHAIN_L", "lambda and lambda_hat are nonincreasing in n", {"n"}, any,
      [](const RuleParams& p) { return p.at("n") + 1; },
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("lambda_{n+1} <= lambda_n", [&] { return std::pair(c.get(lambda(n + 1)), c.get(lambda(n))); });
        c.leq("lambda_hat_{n+1} <= lambda_hat_n",
              [&] { return std::pair(c.get(lambda_hat(n + 1)), c.get(lambda_hat(n))); });
      },
      true);
  add("DIRICHLET_W", "Dirichlet: w_n >= w_hat_n >= n", {"n"}, any, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("w_hat <= w", [&] { return std::pair(c.get(w_hat(n)), c.get(w(n))); });
        c.leq("n <= w_hat", [&] { return std::pair(I(n), c.get(w_hat(n))); });
        c.leq("n <= w", [&] { return std::pair(I(n), c.get(w(n))); });
      },
      true);
  add("CHAIN_W", "w and w_hat are nondecreasing in n", {"n"}, any, [](const RuleParams& p) { return p.at("n") + 1; },
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("w_n <= w_{n+1}", [&] { return std::pair(c.get(w(n)), c.get(w(n + 1))); });
        c.leq("w_hat_n <= w_hat_{n+1}", [&] { return std::pair(c.get(w_hat(n)), c.get(w_hat(n + 1))); });
      },
      true);
  add("CHAIN_STAR", "w*, w_hat* nondecreasing in n and w_hat* <= w*", {"n"}, any, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("w_hat*_n <= w*_n", [&] { return std::pair(c.get(w_hat_star(n)), c.get(w_star(n))); });
        if (n >= 2) {
          c.leq("w*_{n-1} <= w*_n", [&] { return std::pair(c.get(w_star(n - 1)), c.get(w_star(n))); });
          c.leq("w_hat*_{n-1} <= w_hat*_n",
                [&] { return std::pair(c.get(w_hat_star(n - 1)), c.get(w_hat_star(n))); });
        }
      },
      true);
  add("CHAIN_J", "successive minima exponents are nonincreasing in j", {"n", "j"},
      [](const RuleParams& p) { return p.at("j") <= p.at("n"); }, dim_n,
      [](RuleContext& c) {
        int n = c.param("n"), j = c.param("j");
        for (Kind k : {Kind::Lambda, Kind::LambdaHat, Kind::W, Kind::WHat}) {
          std::string name(kind_name(k));
          c.leq(name + "_{n,j+1} <= " + name + "_{n,j}", [&] {
            return std::pair(c.get(ExponentKey::make(k, n, j + 1)), c.get(ExponentKey::make(k, n, j)));
          });
        }
      },
      true);
  add("MAHLER_A", "Mahler duality: lambda_{n,j} = 1/w_hat_{n,n+2-j}", {"n", "j"},
      [](const RuleParams& p) { return p.at("j") <= p.at("n") + 1; }, dim_n,
      [](RuleContext& c) {
        int n = c.param("n"), j = c.param("j");
        ExponentKey key = lambda(n, j);
        c.leq("lambda <= 1/w_hat", [&] { return std::pair(c.get(key), inv(c.get(mahler_dual(key)))); });
        c.leq("1/w_hat <= lambda", [&] { return std::pair(inv(c.get(mahler_dual(key))), c.get(key)); });
      },
      true);
  add("MAHLER_B", "Mahler duality: w_{n,j} = 1/lambda_hat_{n,n+2-j}", {"n", "j"},
      [](const RuleParams& p) { return p.at("j") <= p.at("n") + 1; }, dim_n,
      [](RuleContext& c) {
        int n = c.param("n"), j = c.param("j");
        ExponentKey key = w(n, j);
        c.leq("w <= 1/lambda_hat", [&] { return std::pair(c.get(key), inv(c.get(mahler_dual(key)))); });
        c.leq("1/lambda_hat <= w", [&] { return std::pair(inv(c.get(mahler_dual(key))), c.get(key)); });
      },
      true);
  add("FRITZ", "successive best approximations are independent: w_{n,j+1} >= w_hat_{n,j}", {"n", "j"},
      [](const RuleParams& p) { return p.at("j") <= p.at("n"); }, dim_n,
      [](RuleContext& c) {
        int n = c.param("n"), j = c.param("j");
        c.leq("w_hat_{n,j} <= w_{n,j+1}", [&] { return std::pair(c.get(w_hat(n, j)), c.get(w(n, j + 1))); });
      },
      true);

  // Known transference and bounds.
  add("KHINTCHINE", "Khintchine transference: w/((n-1)w+n) <= lambda_n <= (w-n+1)/n", {"n"}, any, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("w/((n-1)w+n) <= lambda", [&] {
          Interval wn = c.get(w(n));
          return std::pair(inv(I(n - 1) + I(n) * inv(wn)), c.get(lambda(n)));
        });
        c.leq("lambda <= (w-n+1)/n",
              [&] { return std::pair(c.get(lambda(n)), (c.get(w(n)) - I(n - 1)) * Q(1, n)); });
      });
  add("GERMAN", "German transference between uniform exponents", {"n"},
      [](const RuleParams& p) { return p.at("n") >= 2; }, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("(w_hat-1)/((n-1)w_hat) <= lambda_hat", [&] {
          return std::pair((I(1) - inv(c.get(w_hat(n)))) * Q(1, n - 1), c.get(lambda_hat(n)));
        });
        c.leq("lambda_hat <= (w_hat-n+1)/w_hat",
              [&] { return std::pair(c.get(lambda_hat(n)), I(1) - I(n - 1) * inv(c.get(w_hat(n)))); });
      });
  add("JARNIK", "Jarnik identity: lambda_hat_2 = 1 - 1/w_hat_2", {}, any, [](const RuleParams&) { return 2; },
      [](RuleContext& c) {
        c.leq("lambda_hat_2 <= 1 - 1/w_hat_2",
              [&] { return std::pair(c.get(lambda_hat(2)), I(1) - inv(c.get(w_hat(2)))); });
        c.leq("1 - 1/w_hat_2 <= lambda_hat_2",
              [&] { return std::pair(I(1) - inv(c.get(w_hat(2))), c.get(lambda_hat(2))); });
      });
  add("DS_W2", "Davenport-Schmidt: w_hat_2 <= (3+sqrt5)/2", {}, any, [](const RuleParams&) { return 2; },
      [](RuleContext& c) { c.leq("w_hat_2 <= gamma", [&] { return std::pair(c.get(w_hat(2)), constants::gamma()); }); });
  add("BUGSCHL", "Bugeaud-Schleischitz: w_hat_n <= n - 1/2 + sqrt(n^2-2n+5/4)", {"n"},
      [](const RuleParams& p) { return p.at("n") >= 3; }, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("w_hat_n <= bound", [&] {
          Interval rad = sqrt_interval(Interval(BigRational(4L * n * n - 8L * n + 5, 4)));
          return std::pair(c.get(w_hat(n)), Q(2L * n - 1, 2) + rad);
        });
      });
  add("W3_SQRT2", "w_hat_3 <= 3 + sqrt2", {}, any, [](const RuleParams&) { return 3; },
      [](RuleContext& c) {
        c.leq("w_hat_3 <= 3+sqrt2", [&] { return std::pair(c.get(w_hat(3)), I(3) + sqrt_interval(I(2))); });
      });
  add("LAURENT", "Davenport-Schmidt/Laurent: lambda_hat_n <= 1/ceil(n/2)", {"n"}, any, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("lambda_hat_n <= 1/ceil(n/2)", [&] { return std::pair(c.get(lambda_hat(n)), Q(1, ceil_half(n))); });
      });
  add("L2_SIGMA", "lambda_hat_2 <= (sqrt5-1)/2", {}, any, [](const RuleParams&) { return 2; },
      [](RuleContext& c) {
        c.leq("lambda_hat_2 <= sigma", [&] { return std::pair(c.get(lambda_hat(2)), constants::sigma()); });
      });
  add("ROY_L3", "Roy: lambda_hat_3 <= (2+sqrt5-sqrt(7+2sqrt5))/2", {}, any, [](const RuleParams&) { return 3; },
      [](RuleContext& c) {
        c.leq("lambda_hat_3 <= rho", [&] { return std::pair(c.get(lambda_hat(3)), constants::rho()); });
      });
  add("SS_LOWER", "Schmidt-Summerer lower bound for lambda_n in terms of lambda_hat_n", {"n"},
      [](const RuleParams& p) { return p.at("n") >= 2; }, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        auto hat = c.find(lambda_hat(n));
        if (hat) c.require(hat->hi() < ExtReal(1) ? Truth::True : Truth::Unknown, "lambda_hat_n < 1");
        c.leq("ss_lower(lambda_hat) <= lambda",
              [&] { return std::pair(ss_lower(n, nonneg(c.get(lambda_hat(n)))), c.get(lambda(n))); });
      });
  add("STAR_SANDWICH", "w_n-n+1 <= w*_n <= w_n and the uniform analogue", {"n"}, any, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("w-n+1 <= w*", [&] { return std::pair(c.get(w(n)) - I(n - 1), c.get(w_star(n))); });
        c.leq("w* <= w", [&] { return std::pair(c.get(w_star(n)), c.get(w(n))); });
        c.leq("w_hat-n+1 <= w_hat*", [&] { return std::pair(c.get(w_hat(n)) - I(n - 1), c.get(w_hat_star(n))); });
        c.leq("w_hat* <= w_hat", [&] { return std::pair(c.get(w_hat_star(n)), c.get(w_hat(n))); });
      });
  add("BERNIK_TISH", "Bernik-Tishchenko: w*_n >= (n+sqrt(n^2+16n-8))/4", {"n"}, any, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("bound <= w*_n", [&] {
          Interval b = (I(n) + sqrt_interval(I(static_cast<long>(n) * n + 16L * n - 8))) * Q(1, 4);
          return std::pair(b, c.get(w_star(n)));
        });
      });
  add("DS_WSTAR", "Davenport-Schmidt: w*_n >= 1/lambda_hat_n", {"n"}, any, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("1/lambda_hat <= w*", [&] { return std::pair(inv(c.get(lambda_hat(n))), c.get(w_star(n))); });
      });
  add("ICHDEB", "w_hat*_n >= 1/lambda_n", {"n"}, any, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("1/lambda <= w_hat*", [&] { return std::pair(inv(c.get(lambda(n))), c.get(w_hat_star(n))); });
      });

  // Bounds for uniform simultaneous exponents.
  add("THEOREM_NEU", "lambda_hat_{m+n-1} <= max{1/w_m, 1/w_hat_n}", {"m", "n"}, any,
      [](const RuleParams& p) { return p.at("m") + p.at("n") - 1; },
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.leq("lambda_hat_{m+n-1} <= max", [&] {
          return std::pair(c.get(lambda_hat(m + n - 1)), max(inv(c.get(w(m))), inv(c.get(w_hat(n)))));
        });
      });
  add("COR_NEUES", "lambda_hat_n <= 1/w_hat_{ceil(n/2)}", {"n"}, any, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("lambda_hat_n <= 1/w_hat_{ceil(n/2)}",
              [&] { return std::pair(c.get(lambda_hat(n)), inv(c.get(w_hat(ceil_half(n))))); });
      });
  add("UNTE", "min{w_m, w_hat_n} <= m+n-1", {"m", "n"}, any,
      [](const RuleParams& p) { return p.at("m") + p.at("n") - 1; },
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.leq("min{w_m, w_hat_n} <= m+n-1",
              [&] { return std::pair(min(c.get(w(m)), c.get(w_hat(n))), I(m + n - 1)); });
      });
  add("THEOREM_LAUVERB", "lambda_hat_{2n} <= theta_n, the root of the cubic P_n in (0,1/n)", {"n"}, any,
      [](const RuleParams& p) { return 2 * p.at("n"); },
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("lambda_hat_{2n} <= theta_n", [&] { return std::pair(c.get(lambda_hat(2 * n)), theta_enclosure(n)); });
      });
  add("COR_PUHA", "lambda_hat_{2n-1} <= (1 - lambda_hat_n)/(n-1)", {"n"},
      [](const RuleParams& p) { return p.at("n") >= 2; }, [](const RuleParams& p) { return 2 * p.at("n") - 1; },
      [](RuleContext& c) {
        int n = c.param("n");
        c.leq("lambda_hat_{2n-1} <= (1-lambda_hat_n)/(n-1)", [&] {
          return std::pair(c.get(lambda_hat(2 * n - 1)), (I(1) - c.get(lambda_hat(n))) * Q(1, n - 1));
        });
      });
  add("COR_HAR", "w_hat_{2n-1} <= w_hat_n/(w_hat_n-2n+2) when w_hat_n > 2n-2", {"n"},
      [](const RuleParams& p) { return p.at("n") >= 2; }, [](const RuleParams& p) { return 2 * p.at("n") - 1; },
      [](RuleContext& c) {
        int n = c.param("n");
        auto hat = c.find(w_hat(n));
        Truth hyp = !hat ? Truth::Unknown
                         : (hat->lo() > ExtReal(2 * n - 2) ? Truth::True
                                                           : (hat->hi() <= ExtReal(2 * n - 2) ? Truth::False
                                                                                              : Truth::Unknown));
        c.require(hyp, "w_hat_n > 2n-2");
        c.leq("w_hat_{2n-1} <= w_hat_n/(w_hat_n-2n+2)", [&] {
          Interval excess = c.get(w_hat(n)) - I(2 * n - 2);
          return std::pair(c.get(w_hat(2 * n - 1)), I(1) + I(2 * n - 2) * inv(excess));
        });
      });
  add("DREII", "lambda_hat_2 + lambda_hat_3 <= 1", {}, any, [](const RuleParams&) { return 3; },
      [](RuleContext& c) {
        c.leq("lambda_hat_2 + lambda_hat_3 <= 1",
              [&] { return std::pair(c.get(lambda_hat(2)) + c.get(lambda_hat(3)), I(1)); });
      });
  add("U_M_A1", "U_m-number: lambda_hat_n <= 1/m for m <= n <= 2m-1", {"m", "n"},
      [](const RuleParams& p) { return p.at("m") <= p.at("n") && p.at("n") <= 2 * p.at("m") - 1; }, dim_n,
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.require(c.is_u_number(m), "U_m-number");
        c.leq("lambda_hat_n <= 1/m", [&] { return std::pair(c.get(lambda_hat(n)), Q(1, m)); });
      });
  add("U_M_A2", "U_m-number: lambda_hat_n <= 1/(n-m+1) for n >= 2m-1", {"m", "n"},
      [](const RuleParams& p) { return p.at("n") >= 2 * p.at("m") - 1; }, dim_n,
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.require(c.is_u_number(m), "U_m-number");
        c.leq("lambda_hat_n <= 1/(n-m+1)", [&] { return std::pair(c.get(lambda_hat(n)), Q(1, n - m + 1)); });
      });
  add("U_M_HUCHEN", "U_m-number: w_hat_n <= m for n <= m", {"m", "n"},
      [](const RuleParams& p) { return p.at("n") <= p.at("m"); }, [](const RuleParams& p) { return p.at("m"); },
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.require(c.is_u_number(m), "U_m-number");
        c.leq("w_hat_n <= m", [&] { return std::pair(c.get(w_hat(n)), I(m)); });
      });
  add("U_M_KUCHEN", "U_m-number: w_hat_n <= m+n-1", {"m", "n"}, any,
      [](const RuleParams& p) { return std::max(p.at("m"), p.at("n")); },
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.require(c.is_u_number(m), "U_m-number");
        c.leq("w_hat_n <= m+n-1", [&] { return std::pair(c.get(w_hat(n)), I(m + n - 1)); });
      });
  add("STERNCHEN", "w*_{m+n-1} >= min{w_m, w_hat_n}", {"m", "n"}, any,
      [](const RuleParams& p) { return p.at("m") + p.at("n") - 1; },
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.leq("min{w_m, w_hat_n} <= w*_{m+n-1}",
              [&] { return std::pair(min(c.get(w(m)), c.get(w_hat(n))), c.get(w_star(m + n - 1))); });
      });
  add("CONDITIO", "lambda_hat_{2n-1} <= 1/w_{n,2} when w_{n-1} < w_{n,2}", {"n"},
      [](const RuleParams& p) { return p.at("n") >= 2; }, [](const RuleParams& p) { return 2 * p.at("n") - 1; },
      [](RuleContext& c) {
        int n = c.param("n");
        Truth bedin = c.less(c.find(w(n - 1)), c.find(w(n, 2)));
        if (bedin != Truth::True && c.wika(n) == Truth::True) bedin = Truth::True;
        c.require(bedin, "w_{n-1} < w_{n,2}");
        c.leq("lambda_hat_{2n-1} <= 1/w_{n,2}",
              [&] { return std::pair(c.get(lambda_hat(2 * n - 1)), inv(c.get(w(n, 2)))); });
      });

  // Bounds for ordinary simultaneous exponents (gated by w_{n-1} < w_hat_n).
  add("BEDTHM", "lambda_{m+n-1} <= max{w_n/(w_hat_m w_hat_n), 1/w_hat_n}", {"m", "n"},
      [](const RuleParams& p) { return p.at("n") >= 2; }, [](const RuleParams& p) { return p.at("m") + p.at("n") - 1; },
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.require(c.wika(n), "w_{n-1} < w_hat_n");
        c.leq("lambda_{m+n-1} <= max", [&] {
          Interval first = c.get(w(n)) * inv(c.get(w_hat(m)) * c.get(w_hat(n)));
          return std::pair(c.get(lambda(m + n - 1)), max(first, inv(c.get(w_hat(n)))));
        });
      });
  add("REFTHM_HOEMSCH", "lambda_{m+n-1} <= w_n/(w_hat_m w_hat_n) for m <= n", {"m", "n"},
      [](const RuleParams& p) { return p.at("n") >= 2 && p.at("m") <= p.at("n"); },
      [](const RuleParams& p) { return p.at("m") + p.at("n") - 1; },
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.require(c.wika(n), "w_{n-1} < w_hat_n");
        c.leq("lambda_{m+n-1} <= w_n/(w_hat_m w_hat_n)", [&] {
          return std::pair(c.get(lambda(m + n - 1)), c.get(w(n)) * inv(c.get(w_hat(m)) * c.get(w_hat(n))));
        });
      });
  add("REFTHM_SPEZIALE", "lambda_n <= w_n/w_hat_n", {"n"}, [](const RuleParams& p) { return p.at("n") >= 2; }, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.require(c.wika(n), "w_{n-1} < w_hat_n");
        c.leq("lambda_n <= w_n/w_hat_n",
              [&] { return std::pair(c.get(lambda(n)), c.get(w(n)) * inv(c.get(w_hat(n)))); });
      });
  add("REFTHM_SPEZIAL", "lambda_{2n-1} <= w_n/w_hat_n^2", {"n"}, [](const RuleParams& p) { return p.at("n") >= 2; },
      [](const RuleParams& p) { return 2 * p.at("n") - 1; },
      [](RuleContext& c) {
        int n = c.param("n");
        c.require(c.wika(n), "w_{n-1} < w_hat_n");
        c.leq("lambda_{2n-1} <= w_n/w_hat_n^2", [&] {
          Interval hat = c.get(w_hat(n));
          return std::pair(c.get(lambda(2 * n - 1)), c.get(w(n)) * inv(hat * hat));
        });
      });
  add("AUFMUCKEN", "w_n <= (n-1) w_hat_n/(w_hat_n-n) when w_{n-1} < w_n", {"n"},
      [](const RuleParams& p) { return p.at("n") >= 2; }, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        Truth hyp = c.less(c.find(w(n - 1)), c.find(w(n)));
        if (hyp != Truth::True && c.wika(n) == Truth::True) hyp = Truth::True;
        c.require(hyp, "w_{n-1} < w_n");
        c.leq("w_n <= (n-1) w_hat/(w_hat-n)", [&] {
          Interval excess = nonneg(c.get(w_hat(n)) - I(n));
          return std::pair(c.get(w(n)), I(n - 1) * (I(1) + I(n) * inv(excess)));
        });
      });
  add("JUCK", "lambda_{m+n-1} <= (n-1)/((w_hat_n-n) w_hat_m) for m <= n", {"m", "n"},
      [](const RuleParams& p) { return p.at("n") >= 2 && p.at("m") <= p.at("n"); },
      [](const RuleParams& p) { return p.at("m") + p.at("n") - 1; },
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.require(c.wika(n), "w_{n-1} < w_hat_n");
        c.leq("lambda_{m+n-1} <= (n-1)/((w_hat_n-n) w_hat_m)", [&] {
          Interval excess = nonneg(c.get(w_hat(n)) - I(n));
          return std::pair(c.get(lambda(m + n - 1)), I(n - 1) * inv(excess * c.get(w_hat(m))));
        });
      });
  add("ORCOR_MAIN", "lambda_3 <= min{w_2/w_hat_2^2, 1} when w_1 < 2 or w_hat_2 > 2", {}, any,
      [](const RuleParams&) { return 3; },
      [](RuleContext& c) {
        c.require(c.or_condition(), "w_1 < 2 or w_hat_2 > 2");
        c.leq("lambda_3 <= min{w_2/w_hat_2^2, 1}", [&] {
          Interval hat = c.get(w_hat(2));
          return std::pair(c.get(lambda(3)), min(c.get(w(2)) * inv(hat * hat), I(1)));
        });
      });
  add("ORCOR_IMPRO", "lambda_3 <= min{1/((w_hat_2-2) w_hat_2), 1} when w_1 < 2 or w_hat_2 > 2", {}, any,
      [](const RuleParams&) { return 3; },
      [](RuleContext& c) {
        c.require(c.or_condition(), "w_1 < 2 or w_hat_2 > 2");
        c.leq("lambda_3 <= min{1/((w_hat_2-2) w_hat_2), 1}", [&] {
          Interval hat = c.get(w_hat(2));
          return std::pair(c.get(lambda(3)), min(inv(nonneg(hat - I(2)) * hat), I(1)));
        });
      });
  add("TZJA", "lambda_m <= 1/w_hat_2 <= 1/2 for large m (applied once m-1 >= w_2)", {"m"},
      [](const RuleParams& p) { return p.at("m") >= 3; }, [](const RuleParams& p) { return p.at("m"); },
      [](RuleContext& c) {
        int m = c.param("m");
        c.require(c.or_condition(), "w_1 < 2 or w_hat_2 > 2");
        auto w2 = c.find(w(2));
        c.require(!w2 ? Truth::Unknown : (w2->hi().finite() ? Truth::True : Truth::Unknown), "not a U_2-number");
        c.require(w2->hi() <= ExtReal(m - 1) ? Truth::True : Truth::False, "m-1 >= w_2");
        c.leq("lambda_m <= 1/w_hat_2", [&] { return std::pair(c.get(lambda(m)), inv(c.get(w_hat(2)))); });
        c.leq("1/w_hat_2 <= 1/2", [&] { return std::pair(inv(c.get(w_hat(2))), Q(1, 2)); });
      });
  add("DOCHIN", "w_hat*_{m+n-1} >= min{w_hat_m w_hat_n/w_n, w_hat_n} and the uniform-only variant", {"m", "n"},
      [](const RuleParams& p) { return p.at("n") >= 2; }, [](const RuleParams& p) { return p.at("m") + p.at("n") - 1; },
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.require(c.wika(n), "w_{n-1} < w_hat_n");
        c.leq("min{w_hat_m w_hat_n/w_n, w_hat_n} <= w_hat*", [&] {
          Interval hat_n = c.get(w_hat(n));
          Interval v = c.get(w_hat(m)) * hat_n * inv(c.get(w(n)));
          return std::pair(min(v, hat_n), c.get(w_hat_star(m + n - 1)));
        });
        c.leq("min{(w_hat_n-n) w_hat_m/(n-1), w_hat_n} <= w_hat*", [&] {
          Interval hat_n = c.get(w_hat(n));
          Interval v = nonneg(hat_n - I(n)) * c.get(w_hat(m)) * Q(1, n - 1);
          return std::pair(min(v, hat_n), c.get(w_hat_star(m + n - 1)));
        });
      });
  add("LEMUR_W2", "w_hat_{n,2} >= w_hat_n^2/w_n", {"n"}, [](const RuleParams& p) { return p.at("n") >= 2; }, dim_n,
      [](RuleContext& c) {
        int n = c.param("n");
        c.require(c.wika(n), "w_{n-1} < w_hat_n");
        c.leq("w_hat_n^2/w_n <= w_hat_{n,2}", [&] {
          Interval hat = c.get(w_hat(n));
          return std::pair(hat * hat * inv(c.get(w(n))), c.get(w_hat(n, 2)));
        });
      });
  add("KHINTCHINE_COMPOSED", "lambda_{m+n-1} <= lambda_n <= (w_n-n+1)/n", {"m", "n"}, any,
      [](const RuleParams& p) { return p.at("m") + p.at("n") - 1; },
      [](RuleContext& c) {
        int m = c.param("m"), n = c.param("n");
        c.leq("lambda_{m+n-1} <= lambda_n", [&] { return std::pair(c.get(lambda(m + n - 1)), c.get(lambda(n))); });
        c.leq("lambda_n <= (w_n-n+1)/n",
              [&] { return std::pair(c.get(lambda(n)), (c.get(w(n)) - I(n - 1)) * Q(1, n)); });
      });
  return rules;
}

}  // namespace detail

/// The registry, built once.
inline const std::vector<BoundRule>& rule_registry() {
  static const std::vector<BoundRule> registry = detail::build_registry();
  return registry;
}

inline const BoundRule& find_rule(const std::string& id) {
  for (const auto& rule : rule_registry())
    if (rule.id == id) return rule;
  throw Error(ErrorCode::UnknownRule, id);
}

inline bool rule_exists(const std::string& id) {
  for (const auto& rule : rule_registry())
    if (rule.id == id) return true;
  return false;
}

inline bool params_legal(const BoundRule& rule, const RuleParams& params) {
  if (params.size() != rule.param_names.size()) return false;
  for (const auto& name : rule.param_names) {
    auto it = params.find(name);
    if (it == params.end() || it->second < 1) return false;
  }
  return rule.legal(params);
}

inline BoundReport evaluate_rule(const BoundRule& rule, const ExponentProfile& profile, const RuleParams& params) {
  if (!params_legal(rule, params))
    throw Error(ErrorCode::InvalidParams, rule.id + " does not accept {" + params_to_string(params) + "}");
  BoundReport report;
  report.rule_id = rule.id;
  report.params = params;
  if (!profile.transcendental()) {
    report.details = "profile is not flagged transcendental";
    return report;
  }
  RuleContext ctx(profile, params);
  try {
    rule.body(ctx);
  } catch (const RuleContext::HypothesisFailed& h) {
    report.details = "hypothesis " + h.reason;
    return report;
  }
  report.comparisons = ctx.comparisons();
  if (report.comparisons.empty()) {
    std::string missing;
    for (const auto& m : ctx.missing()) missing += (missing.empty() ? "" : ", ") + m;
    report.details = "missing entries: " + missing;
    return report;
  }
  Interval slack = report.comparisons.front().slack();
  for (std::size_t i = 1; i < report.comparisons.size(); ++i) slack = min(slack, report.comparisons[i].slack());
  report.slack = slack;
  report.status = status_from_slack(slack);
  std::ostringstream details;
  for (const auto& cmp : report.comparisons) {
    Status s = status_from_slack(cmp.slack());
    details << (details.tellp() > 0 ? "; " : "") << cmp.label << ": " << status_name(s);
  }
  report.details = details.str();
  return report;
}

inline BoundReport evaluate_rule(const std::string& rule_id, const ExponentProfile& profile,
                                 const RuleParams& params) {
  return evaluate_rule(find_rule(rule_id), profile, params);
}

/// Every legal parameter choice of `rule` whose dimensions stay <= n_max, in
/// lexicographic order of parameter values.
inline std::vector<RuleParams> enumerate_params(const BoundRule& rule, int n_max) {
  std::vector<RuleParams> out;
  std::size_t arity = rule.param_names.size();
  if (arity == 0) {
    if (rule.max_dimension({}) <= n_max) out.push_back({});
    return out;
  }
  std::vector<int> values(arity, 1);
  int limit = n_max + 1;
  while (true) {
    RuleParams p;
    for (std::size_t i = 0; i < arity; ++i) p[rule.param_names[i]] = values[i];
    if (rule.legal(p) && rule.max_dimension(p) <= n_max) out.push_back(p);
    std::size_t k = arity;
    while (k > 0) {
      --k;
      if (values[k] < limit) {
        ++values[k];
        break;
      }
      values[k] = 1;
      if (k == 0) return out;
    }
  }
}

/// All rules over all legal parameters up to n_max; ordered by (rule_id, params).
inline std::vector<BoundReport> run_all_rules(const ExponentProfile& profile, int n_max) {
  if (n_max < 1) throw Error(ErrorCode::InvalidParams, "n_max must be >= 1");
  std::vector<const BoundRule*> rules;
  for (const auto& rule : rule_registry()) rules.push_back(&rule);
  std::sort(rules.begin(), rules.end(), [](const BoundRule* a, const BoundRule* b) { return a->id < b->id; });
  std::vector<BoundReport> reports;
  for (const BoundRule* rule : rules)
    for (const auto& params : enumerate_params(*rule, n_max)) reports.push_back(evaluate_rule(*rule, profile, params));
  return reports;
}

/// Structural invariants only: floors, chains, duality, w_{n,j+1} >= w_hat_{n,j}.
inline std::vector<BoundReport> profile_check(const ExponentProfile& profile) {
  int n_max = std::max(1, profile.max_dimension());
  std::vector<BoundReport> reports;
  for (const auto& rule : rule_registry()) {
    if (!rule.structural) continue;
    // Chains look one dimension ahead.
    for (const auto& params : enumerate_params(rule, n_max + 1)) reports.push_back(evaluate_rule(rule, profile, params));
  }
  return reports;
}

inline std::size_t count_status(const std::vector<BoundReport>& reports, Status s) {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [s](const BoundReport& r) { return r.status == s; }));
}

}  // namespace dioph
