#pragma once

// Built-in numbers and curated exponent profiles with literature citations.

#include <map>
#include <string>
#include <vector>

#include "dioph/atlas/number_spec.hpp"
#include "dioph/exponents/profile.hpp"
#include "dioph/exponents/theta.hpp"

namespace dioph {

namespace detail {

// First 300 decimals of e.
inline constexpr const char* kEDigits =
    "2."
    "718281828459045235360287471352662497757247093699959574966967627724076630353547594571382178525166427427466391932003"
    "059921817413596629043572900334295260595630738132328627943490763233829880753195251019011573834187930702154089149934"
    "884167509244761460668082264800168477411853742345442437107539077744992069";

}  // namespace detail

inline std::vector<NumberSpec> list_atlas() {
  using Tag = MahlerClass::Tag;
  return {
      NumberSpec("sqrt2", SpecKind::Algebraic, "-2,0,1 @ 1,2"),
      NumberSpec("cbrt2", SpecKind::Algebraic, "-2,0,0,1 @ 1,2"),
      NumberSpec("golden", SpecKind::Algebraic, "-1,-1,1 @ 1,2"),
      NumberSpec("liouville_b10", SpecKind::LiouvilleSeries, "10", MahlerClass{Tag::Liouville, 1}),
      NumberSpec("fibonacci_cf_12", SpecKind::ContinuedFraction, "fibonacci 0 1 2"),
      NumberSpec("e_digits", SpecKind::DecimalLiteral, detail::kEDigits, MahlerClass{Tag::S, 0}),
  };
}

inline NumberSpec find_spec(const std::string& id) {
  for (auto& spec : list_atlas())
    if (spec.id() == id) return spec;
  throw Error(ErrorCode::UnknownSpec, "no atlas entry '" + id + "'");
}

/// Resolves an atlas id, or parses an inline "id; KIND; payload" record.
inline NumberSpec resolve_spec(const std::string& text) {
  if (text.find(';') != std::string::npos) return parse_spec_record(text);
  return find_spec(text);
}

struct KnownProfile {
  std::string spec_id;
  ExponentProfile profile;
  std::map<ExponentKey, std::string> citations;
};

inline const std::vector<std::string>& curated_profile_ids() {
  static const std::vector<std::string> ids{"extremal", "sturmian_cf_family", "liouville", "algebraic_d"};
  return ids;
}

/// Dimensions covered by the curated Liouville profile.
inline constexpr int kLiouvilleHorizon = 8;

namespace detail {

class ProfileBuilder {
 public:
  ProfileBuilder& add(const ExponentKey& key, Interval value, Provenance prov, std::string citation) {
    known_.profile = known_.profile.with(key, std::move(value), prov);
    known_.citations[key] = std::move(citation);
    return *this;
  }
  KnownProfile done(std::string id) {
    known_.spec_id = std::move(id);
    return known_;
  }
  KnownProfile& raw() { return known_; }

 private:
  KnownProfile known_;
};

inline KnownProfile extremal_profile() {
  using P = Provenance;
  ProfileBuilder b;
  b.add(w_hat(2), constants::gamma(), P::KnownExact, "Roy: extremal numbers attain the Davenport-Schmidt bound")
      .add(lambda_hat(2), constants::sigma(), P::KnownExact, "Jarnik identity at the extremal value of w_hat_2")
      .add(w(2), Interval(2) + constants::sqrt5(), P::KnownExact,
           "w_2 >= 2+sqrt5 for Sturmian continued fractions, equality only for extremal numbers")
      .add(lambda_hat(3), Interval(BigRational(1, 3)), P::KnownExact, "extremal numbers have lambda_hat_3 = 1/3")
      .add(w_hat(3), Interval(3), P::KnownExact, "extremal numbers have w_hat_3 = 3")
      .add(lambda(3), recip_nonneg(constants::sqrt5()), P::KnownExact, "extremal numbers have lambda_3 = 1/sqrt5")
      .add(lambda(2), Interval(1), P::KnownExact, "Schmidt-Summerer lower bound at lambda_hat_2 = sigma, with lambda_2 <= 1");
  return b.done("extremal");
}

inline KnownProfile sturmian_profile() {
  using P = Provenance;
  ProfileBuilder b;
  b.add(w_hat(2), Interval(ExtReal(2), constants::gamma().hi()), P::PaperBound,
        "Sturmian continued fractions have w_hat_2 > 2; Davenport-Schmidt upper bound")
      .add(lambda_hat(2), Interval(ExtReal(BigRational(1, 2)), constants::sigma().hi()), P::PaperBound,
           "Jarnik identity applied to the range of w_hat_2")
      .add(w(2), Interval((Interval(2) + constants::sqrt5()).lo(), ExtReal::pos_inf()), P::PaperBound,
           "w_2 >= 2+sqrt5 for Sturmian continued fractions")
      .add(lambda_hat(3), Interval(BigRational(1, 3)), P::PaperBound,
           "lambda_hat_3 = 1/3 for all Sturmian continued fractions");
  return b.done("sturmian_cf_family");
}

inline KnownProfile liouville_profile() {
  using P = Provenance;
  ProfileBuilder b;
  for (int n = 1; n <= kLiouvilleHorizon; ++n) {
    b.add(w(n), Interval::infinity(), P::KnownExact, "Liouville numbers are U_1-numbers: w_1 = inf, w_n >= w_1")
        .add(lambda_hat(n), Interval(BigRational(1, n)), P::KnownExact,
             "Liouville numbers satisfy lambda_hat_n = 1/n")
        .add(lambda(n), Interval::infinity(), P::KnownExact, "lambda_n = inf precisely for Liouville numbers")
        .add(w_hat(n), Interval(n), P::KnownExact, "U_1 bound w_hat_n <= n meets the Dirichlet floor")
        .add(w_star(n), Interval::infinity(), P::KnownExact, "w*_n >= w_n - n + 1 = inf")
        .add(w_hat_star(n), Interval(1), P::KnownExact, "w_hat*_m = 1 for Liouville numbers");
  }
  return b.done("liouville");
}

inline KnownProfile algebraic_profile() {
  KnownProfile k;
  k.spec_id = "algebraic_d";
  k.profile = ExponentProfile().with_transcendental(false);
  return k;
}

}  // namespace detail

inline KnownProfile known_profile(const std::string& id) {
  if (id == "extremal") return detail::extremal_profile();
  if (id == "sturmian_cf_family") return detail::sturmian_profile();
  if (id == "liouville") return detail::liouville_profile();
  if (id == "algebraic_d") return detail::algebraic_profile();
  throw Error(ErrorCode::UnknownSpec, "no curated profile '" + id + "'");
}

}  // namespace dioph
