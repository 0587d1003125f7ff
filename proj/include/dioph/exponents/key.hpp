#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "dioph/error.hpp"

namespace dioph {

/// Exponent families: simultaneous (lambda), polynomial (w), algebraic (w*),
/// each in ordinary and uniform flavour.
enum class Kind { Lambda, LambdaHat, W, WHat, WStar, WHatStar };

inline std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Lambda: return "lambda";
    case Kind::LambdaHat: return "lambda_hat";
    case Kind::W: return "w";
    case Kind::WHat: return "w_hat";
    case Kind::WStar: return "w_star";
    case Kind::WHatStar: return "w_hat_star";
  }
  return "?";
}

inline Kind parse_kind(std::string_view s) {
  for (Kind k : {Kind::Lambda, Kind::LambdaHat, Kind::W, Kind::WHat, Kind::WStar, Kind::WHatStar})
    if (kind_name(k) == s) return k;
  throw Error(ErrorCode::ParseError, "unknown exponent kind '" + std::string(s) + "'");
}

inline bool is_starred(Kind k) { return k == Kind::WStar || k == Kind::WHatStar; }
inline bool is_uniform(Kind k) { return k == Kind::LambdaHat || k == Kind::WHat || k == Kind::WHatStar; }

/// One exponent symbol: kind, dimension n >= 1 and minima index 1 <= j <= n+1.
struct ExponentKey {
  Kind kind = Kind::Lambda;
  int n = 1;
  int j = 1;

  static ExponentKey make(Kind kind, int n, int j = 1) {
    if (n < 1) throw Error(ErrorCode::BadIndex, "dimension must be >= 1");
    if (j < 1 || j > n + 1) throw Error(ErrorCode::BadIndex, "minima index out of range 1..n+1");
    if (is_starred(kind) && j != 1) throw Error(ErrorCode::BadIndex, "starred exponents carry j = 1");
    return ExponentKey{kind, n, j};
  }

  std::string to_string() const {
    return std::string(kind_name(kind)) + "." + std::to_string(n) + "." + std::to_string(j);
  }

  auto operator<=>(const ExponentKey&) const = default;
};

inline ExponentKey lambda(int n, int j = 1) { return ExponentKey::make(Kind::Lambda, n, j); }
inline ExponentKey lambda_hat(int n, int j = 1) { return ExponentKey::make(Kind::LambdaHat, n, j); }
inline ExponentKey w(int n, int j = 1) { return ExponentKey::make(Kind::W, n, j); }
inline ExponentKey w_hat(int n, int j = 1) { return ExponentKey::make(Kind::WHat, n, j); }
inline ExponentKey w_star(int n) { return ExponentKey::make(Kind::WStar, n); }
inline ExponentKey w_hat_star(int n) { return ExponentKey::make(Kind::WHatStar, n); }

/// Parses "kind.n.j" or "kind.n".
inline ExponentKey parse_key(std::string_view text) {
  std::string s(text);
  auto first = s.find('.');
  if (first == std::string::npos) throw Error(ErrorCode::ParseError, "bad exponent key '" + s + "'");
  Kind kind = parse_kind(s.substr(0, first));
  auto second = s.find('.', first + 1);
  try {
    int n = std::stoi(s.substr(first + 1, second == std::string::npos ? std::string::npos : second - first - 1));
    int j = second == std::string::npos ? 1 : std::stoi(s.substr(second + 1));
    return ExponentKey::make(kind, n, j);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad exponent key '" + s + "'");
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::ParseError, "bad exponent key '" + s + "'");
  }
}

/// Mahler duality partner: lambda_{n,j} <-> w_hat_{n,n+2-j}, w_{n,j} <-> lambda_hat_{n,n+2-j}.
/// The value of the partner is the reciprocal of the value of `key`.
inline ExponentKey mahler_dual(const ExponentKey& key) {
  if (key.n < 1 || key.j < 1 || key.j > key.n + 1) throw Error(ErrorCode::BadIndex, "index out of range");
  int dual_j = key.n + 2 - key.j;
  switch (key.kind) {
    case Kind::Lambda: return ExponentKey{Kind::WHat, key.n, dual_j};
    case Kind::WHat: return ExponentKey{Kind::Lambda, key.n, dual_j};
    case Kind::W: return ExponentKey{Kind::LambdaHat, key.n, dual_j};
    case Kind::LambdaHat: return ExponentKey{Kind::W, key.n, dual_j};
    default: throw Error(ErrorCode::BadKind, "no Mahler dual for " + key.to_string());
  }
}

}  // namespace dioph
