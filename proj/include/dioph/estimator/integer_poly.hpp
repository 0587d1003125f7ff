#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/numerics/exact_matrix.hpp"
#include "dioph/numerics/rational.hpp"

namespace dioph {

/// Integer polynomial a_0 + a_1 T + ... + a_d T^d, stored constant first and
/// trimmed so the leading coefficient is nonzero (the zero polynomial is empty).
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntegerPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coefficients() const { return c_; }
  BigInt coeff(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : BigInt(0); }

  /// Maximum absolute coefficient.
  BigInt height() const {
    BigInt h = 0;
    for (const auto& a : c_) h = std::max(h, BigInt(abs(a)));
    return h;
  }

  BigRational operator()(const BigRational& t) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + BigRational(*it);
    return acc;
  }

  /// T^k * P.
  IntegerPolynomial shifted(int k) const {
    if (is_zero()) return {};
    std::vector<BigInt> out(static_cast<std::size_t>(k), BigInt(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return IntegerPolynomial(std::move(out));
  }

  /// Coefficient vector of length `size` (constant first, zero padded).
  std::vector<BigInt> padded(std::size_t size) const {
    if (c_.size() > size) throw Error(ErrorCode::InvalidParams, "polynomial does not fit the requested length");
    std::vector<BigInt> out = c_;
    out.resize(size, BigInt(0));
    return out;
  }

  friend IntegerPolynomial operator*(const IntegerPolynomial& p, const IntegerPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> out(p.c_.size() + q.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    return IntegerPolynomial(std::move(out));
  }

  friend bool operator==(const IntegerPolynomial& p, const IntegerPolynomial& q) { return p.c_ == q.c_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const BigInt& a = c_[static_cast<std::size_t>(k)];
      if (a == 0) continue;
      std::string mag = BigInt(abs(a)).get_str();
      if (s.empty()) {
        s += a < 0 ? "-" : "";
      } else {
        s += a < 0 ? " - " : " + ";
      }
      if (k == 0 || mag != "1") s += mag;
      if (k > 0) s += (mag != "1" ? "*T" : "T") + (k > 1 ? "^" + std::to_string(k) : std::string());
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

/// True iff `divisor` divides `p` in Q[T].
inline bool divides(const IntegerPolynomial& divisor, const IntegerPolynomial& p) {
  if (divisor.is_zero()) return p.is_zero();
  if (p.is_zero()) return true;
  if (p.degree() < divisor.degree()) return false;
  std::vector<BigRational> rem;
  for (const auto& a : p.coefficients()) rem.emplace_back(a);
  const int dd = divisor.degree();
  const BigRational lead(divisor.coeff(dd));
  for (int k = p.degree(); k >= dd; --k) {
    BigRational factor = rem[static_cast<std::size_t>(k)] / lead;
    if (factor == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= factor * BigRational(divisor.coeff(i));
  }
  return std::all_of(rem.begin(), rem.end(), [](const BigRational& r) { return r == 0; });
}

/// Sylvester matrix of P (degree l) and Q (degree n): n shifted copies of P
/// followed by l shifted copies of Q, as coefficient rows of length l + n.
inline IntMatrix sylvester_matrix(const IntegerPolynomial& p, const IntegerPolynomial& q) {
  const int l = p.degree();
  const int n = q.degree();
  if (l < 1 || n < 1) throw Error(ErrorCode::InvalidParams, "resultant needs positive degrees");
  const auto size = static_cast<std::size_t>(l + n);
  IntMatrix rows;
  for (int k = 0; k < n; ++k) rows.push_back(p.shifted(k).padded(size));
  for (int k = 0; k < l; ++k) rows.push_back(q.shifted(k).padded(size));
  return rows;
}

/// Resultant as the classical Sylvester determinant (coefficients from the top
/// degree down), so res(T^2 - 2, T - 1) = -1.
inline BigInt resultant(const IntegerPolynomial& p, const IntegerPolynomial& q) {
  IntMatrix rows = sylvester_matrix(p, q);
  // Classical layout lists coefficients from the top degree down.
  for (auto& row : rows) std::reverse(row.begin(), row.end());
  // ... and shifts run from T^(n-1) P down to P.
  const auto n = static_cast<std::size_t>(q.degree());
  std::reverse(rows.begin(), rows.begin() + static_cast<long>(n));
  std::reverse(rows.begin() + static_cast<long>(n), rows.end());
  return determinant(std::move(rows));
}

}  // namespace dioph
