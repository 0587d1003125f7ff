#pragma once

#include <string>

#include "dioph/exponents/profile.hpp"

namespace dioph {

/// Mahler's partition of the transcendental reals into S, T and U_m classes.
struct MahlerClass {
  enum class Tag { S, T, U, Liouville, Unknown };
  Tag tag = Tag::Unknown;
  int m = 0;  // degree index for U (1 for Liouville)

  std::string to_string() const {
    switch (tag) {
      case Tag::S: return "S";
      case Tag::T: return "T";
      case Tag::U: return "U(" + std::to_string(m) + ")";
      case Tag::Liouville: return "LIOUVILLE";
      case Tag::Unknown: return "UNKNOWN";
    }
    return "?";
  }

  /// U(1) and LIOUVILLE denote the same class.
  bool is_u(int degree) const {
    return (tag == Tag::U && m == degree) || (tag == Tag::Liouville && degree == 1);
  }

  friend bool operator==(const MahlerClass& a, const MahlerClass& b) {
    if (a.is_u(1) && b.is_u(1)) return true;
    return a.tag == b.tag && a.m == b.m;
  }
};

/// Bound on w_n/n accepted as evidence of class S in a complete profile.
inline constexpr long kSClassRatioBound = 1000;

inline MahlerClass classify(const ExponentProfile& profile) {
  using Tag = MahlerClass::Tag;
  if (!profile.transcendental()) return {};
  int horizon = profile.max_dimension();

  // U(m): w_m certainly infinite, every lower w_k present and certainly finite.
  for (int m = 1; m <= horizon; ++m) {
    auto wm = profile.get(w(m));
    if (!wm) break;
    if (wm->lo().is_pos_inf()) {
      if (m == 1) return {Tag::Liouville, 1};
      return {Tag::U, m};
    }
    if (!wm->hi().finite()) break;
  }

  bool all_finite = horizon > 0;
  bool bounded = true;
  for (int n = 1; n <= horizon && all_finite; ++n) {
    auto wn = profile.get(w(n));
    if (!wn || !wn->hi().finite()) {
      all_finite = false;
      break;
    }
    if (wn->hi() > ExtReal(BigRational(kSClassRatioBound * n))) bounded = false;
  }
  if (profile.asserts_t() && all_finite) return {Tag::T, 0};
  if (profile.complete() && all_finite && bounded) return {Tag::S, 0};
  return {};
}

}  // namespace dioph
