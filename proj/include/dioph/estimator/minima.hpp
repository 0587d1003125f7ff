#pragma once

// Successive minima of the simultaneous problem
//   |x| <= X, max_i |x zeta^i - y_i| small
// and of the polynomial problem
//   H(P) <= X, deg P <= n, |P(zeta)| small,
// by exhaustive search or by lattice reduction plus enumeration.
//
// Every candidate is keyed by an exact integer computed from fixed-point
// powers Z_i = round(zeta^i 2^F); both search methods rank candidates by the
// same key and tie-break, so they return identical witnesses.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dioph/atlas/number_spec.hpp"
#include "dioph/error.hpp"
#include "dioph/estimator/integer_poly.hpp"
#include "dioph/estimator/lattice.hpp"
#include "dioph/numerics/exact_matrix.hpp"
#include "dioph/numerics/interval.hpp"

namespace dioph {

enum class Problem { Simultaneous, Polynomial };
enum class Method { Exhaustive, Lattice };

inline std::string_view problem_name(Problem p) {
  return p == Problem::Simultaneous ? "SIMULTANEOUS" : "POLYNOMIAL";
}
inline std::string_view method_name(Method m) { return m == Method::Exhaustive ? "EXHAUSTIVE" : "LATTICE"; }

inline Problem parse_problem(std::string_view s) {
  if (s == "SIMULTANEOUS") return Problem::Simultaneous;
  if (s == "POLYNOMIAL") return Problem::Polynomial;
  throw Error(ErrorCode::ParseError, "unknown problem '" + std::string(s) + "'");
}
inline Method parse_method(std::string_view s) {
  if (s == "EXHAUSTIVE") return Method::Exhaustive;
  if (s == "LATTICE") return Method::Lattice;
  throw Error(ErrorCode::ParseError, "unknown method '" + std::string(s) + "'");
}

struct EstimatorConfig {
  int guard_digits = 10;
  /// Largest (2X+1)^(n+1) for exhaustive polynomial search.
  double exhaustive_budget = 1e8;
  /// Largest X for exhaustive simultaneous search.
  long simultaneous_limit = 1000000;
  /// Largest candidate list held in memory for higher minima.
  std::size_t candidate_memory = 4000000;
  std::size_t lattice_max_points = 2000000;
  /// Count polynomials with P(zeta) = 0 (only possible for algebraic zeta).
  bool include_vanishing = false;
};

/// Fixed-point powers: z[i] = round(zeta^i 2^F) with |zeta^i 2^F - z[i]| <= err.
struct PowerTable {
  int n = 0;
  unsigned long frac_bits = 0;
  std::vector<BigInt> z;
  BigInt err;

  const BigInt& one() const { return z[0]; }
};

inline double log10_of(const BigInt& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log10(std::fabs(mant)) + static_cast<double>(exp) * std::log10(2.0);
}

/// Precision: zeta^i known to 10^-(guard + (n+1) log10 X) or better.
inline PowerTable make_power_table(const NumberSpec& spec, int n, const BigInt& x_max, int guard_digits) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "dimension must be >= 1");
  if (x_max < 1) throw Error(ErrorCode::InvalidParams, "height bound must be >= 1");
  PowerTable t;
  t.n = n;
  const double digits = guard_digits + std::ceil((n + 1) * log10_of(x_max));
  t.frac_bits = static_cast<unsigned long>(std::ceil(digits * std::log2(10.0))) + 8;
  const BigInt m = floor_of(abs_rational(spec.approximate(2))) + 2;  // |zeta| < m
  const double slack = std::log10(static_cast<double>(n)) + (n - 1) * log10_of(m);
  const int p = static_cast<int>(std::ceil(static_cast<double>(t.frac_bits) * std::log10(2.0) + slack)) + 3;
  const BigRational q = spec.approximate(p);
  const BigInt scale = pow2(t.frac_bits);
  t.z.push_back(scale);
  BigRational qi = 1;
  for (int i = 1; i <= n; ++i) {
    qi *= q;
    t.z.push_back(round_of(qi * BigRational(scale)));
  }
  // |zeta^i - q^i| <= i m^(i-1) 10^-p, plus half a unit of rounding.
  BigRational e = make_rational(BigInt(n) * pow_int(m, static_cast<unsigned long>(n - 1)) * scale,
                                pow10(static_cast<unsigned long>(p))) +
                  BigRational(1, 2);
  t.err = ceil_of(e);
  return t;
}

/// Integer vector with its fixed-point key and key uncertainty (both in units of 2^-F).
struct Candidate {
  std::vector<BigInt> v;
  BigInt key;
  BigInt err;
  bool vanishing = false;
};

/// Orders by key, then lexicographically by the normalized vector.
inline bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.key != b.key) return a.key < b.key;
  return a.v < b.v;
}

/// One j-th minimum at one height bound.
struct MinimaRecord {
  std::string spec_id;
  Problem problem = Problem::Simultaneous;
  int n = 1;
  int j = 1;
  BigInt X;
  /// j linearly independent witnesses, best first. Simultaneous: (x, y_1..y_n);
  /// polynomial: coefficients a_0..a_n.
  std::vector<std::vector<BigInt>> witnesses;
  Interval minimum;
  Method method = Method::Exhaustive;
};

/// Approximation vector (x, y_1, ..., y_n) of the simultaneous problem.
struct ApproxVector {
  BigInt x;
  std::vector<BigInt> y;

  static ApproxVector from(const std::vector<BigInt>& v) {
    return ApproxVector{v.at(0), std::vector<BigInt>(v.begin() + 1, v.end())};
  }

  /// max_i |zeta^i x - y_i| enclosed from an oracle value at 10^-digits.
  Interval quality(const NumberSpec& spec, int digits) const {
    BigRational q = spec.approximate(digits);
    BigRational r = make_rational(BigInt(1), pow10(static_cast<unsigned long>(digits)));
    Interval zeta(ExtReal(BigRational(q - r)), ExtReal(BigRational(q + r)));
    Interval power(1);
    Interval best(0);
    for (const auto& yi : y) {
      power = power * zeta;
      Interval d = power * Interval(BigRational(x)) - Interval(BigRational(yi));
      Interval a = d.lo() >= ExtReal(0)   ? d
                   : d.hi() <= ExtReal(0) ? -d
                                          : Interval(ExtReal(0), std::max(-d.lo(), d.hi()));
      best = max(best, a);
    }
    return best;
  }
};

/// Search state for one (spec, problem, n) at precision good up to height x_max.
class MinimaSearch {
 public:
  MinimaSearch(const NumberSpec& spec, Problem problem, int n, const BigInt& x_max, const EstimatorConfig& cfg)
      : spec_(spec), problem_(problem), n_(n), cfg_(cfg), table_(make_power_table(spec, n, x_max, cfg.guard_digits)) {
    if (problem == Problem::Polynomial && spec.is_algebraic() && spec.degree() <= n)
      minimal_ = IntegerPolynomial(spec.minimal_polynomial());
  }

  const PowerTable& table() const { return table_; }
  Problem problem() const { return problem_; }
  int n() const { return n_; }

  /// Sign-normalized candidate. Simultaneous: first nonzero entry positive.
  /// Polynomial: leading coefficient positive.
  Candidate make(std::vector<BigInt> v) const {
    if (problem_ == Problem::Simultaneous) {
      auto nz = std::find_if(v.begin(), v.end(), [](const BigInt& a) { return a != 0; });
      if (nz != v.end() && *nz < 0)
        for (auto& a : v) a = -a;
    } else {
      auto nz = std::find_if(v.rbegin(), v.rend(), [](const BigInt& a) { return a != 0; });
      if (nz != v.rend() && *nz < 0)
        for (auto& a : v) a = -a;
    }
    Candidate c;
    c.v = std::move(v);
    if (problem_ == Problem::Simultaneous) {
      c.key = 0;
      for (int i = 1; i <= n_; ++i) {
        BigInt d = c.v[0] * table_.z[static_cast<std::size_t>(i)] - c.v[static_cast<std::size_t>(i)] * table_.one();
        c.key = std::max(c.key, BigInt(abs(d)));
      }
      c.err = BigInt(abs(c.v[0])) * table_.err;
    } else {
      BigInt s = 0;
      c.err = 0;
      for (int i = 0; i <= n_; ++i) {
        s += c.v[static_cast<std::size_t>(i)] * table_.z[static_cast<std::size_t>(i)];
        if (i > 0) c.err += BigInt(abs(c.v[static_cast<std::size_t>(i)])) * table_.err;
      }
      c.key = abs(s);
      // P(zeta) = 0 forces key <= err, so the exact test only runs then.
      if (minimal_ && c.key <= c.err && divides(*minimal_, IntegerPolynomial(c.v))) {
        c.key = 0;
        c.err = 0;
        c.vanishing = true;
      }
    }
    return c;
  }

  /// Certified enclosure of the candidate's quality (|P(zeta)| or max |x zeta^i - y_i|).
  Interval value(const Candidate& c) const {
    if (c.vanishing) return Interval(0);
    BigInt lo = c.key - c.err;
    if (lo < 0) lo = 0;
    return Interval(ExtReal(make_rational(lo, table_.one())), ExtReal(make_rational(c.key + c.err, table_.one())));
  }

  bool in_box(const Candidate& c, const BigInt& x) const {
    if (problem_ == Problem::Simultaneous) return abs(c.v[0]) <= x;
    return std::all_of(c.v.begin(), c.v.end(), [&](const BigInt& a) { return abs(a) <= x; });
  }

  bool admissible(const Candidate& c) const { return !c.vanishing || cfg_.include_vanishing; }

  /// Key not known to three significant digits at this precision.
  bool unresolved(const Candidate& c) const { return !c.vanishing && c.key < 1000 * c.err; }

  /// Exhaustive candidate list for height bound x (unsorted).
  std::vector<Candidate> exhaustive_candidates(const BigInt& x) const {
    std::vector<Candidate> out;
    if (problem_ == Problem::Simultaneous) {
      const double count = x.get_d() * std::pow(2.0, n_);
      if (count > static_cast<double>(cfg_.candidate_memory))
        throw Error(ErrorCode::BudgetExceeded, "simultaneous candidate list too large");
      // x = 0: y in {-1, 0, 1}^n.
      std::vector<BigInt> y(static_cast<std::size_t>(n_), BigInt(-1));
      while (true) {
        if (std::any_of(y.begin(), y.end(), [](const BigInt& a) { return a != 0; })) {
          std::vector<BigInt> v{BigInt(0)};
          v.insert(v.end(), y.begin(), y.end());
          Candidate c = make(std::move(v));
          if (c.v[1 + static_cast<std::size_t>(std::find_if(y.begin(), y.end(), [](const BigInt& a) {
                                                     return a != 0;
                                                   }) - y.begin())] > 0)
            out.push_back(std::move(c));
        }
        std::size_t k = 0;
        while (k < y.size() && y[k] == 1) y[k++] = -1;
        if (k == y.size()) break;
        ++y[k];
      }
      dedupe(out);
      std::vector<BigInt> acc(static_cast<std::size_t>(n_ + 1), BigInt(0));
      std::vector<BigInt> fl(static_cast<std::size_t>(n_ + 1));
      for (BigInt xx = 1; xx <= x; ++xx) {
        for (int i = 1; i <= n_; ++i) {
          acc[static_cast<std::size_t>(i)] += table_.z[static_cast<std::size_t>(i)];
          mpz_fdiv_q_2exp(fl[static_cast<std::size_t>(i)].get_mpz_t(), acc[static_cast<std::size_t>(i)].get_mpz_t(),
                          table_.frac_bits);
        }
        for (unsigned mask = 0; mask < (1u << n_); ++mask) {
          std::vector<BigInt> v{xx};
          for (int i = 1; i <= n_; ++i) v.push_back(fl[static_cast<std::size_t>(i)] + ((mask >> (i - 1)) & 1u));
          out.push_back(make(std::move(v)));
        }
      }
      return out;
    }
    check_polynomial_budget(x);
    std::vector<BigInt> a(static_cast<std::size_t>(n_ + 1), BigInt(0));
    for (std::size_t i = 1; i < a.size(); ++i) a[i] = -x;
    while (true) {
      auto top = std::find_if(a.rbegin(), a.rend() - 1, [](const BigInt& c) { return c != 0; });
      if (top == a.rend() - 1) {
        std::vector<BigInt> v(a.size(), BigInt(0));
        v[0] = 1;
        push_admissible(out, make(std::move(v)));
      } else if (*top > 0) {
        BigInt s = 0;
        for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * table_.z[i];
        BigInt neg = -s;
        BigInt f;
        mpz_fdiv_q_2exp(f.get_mpz_t(), neg.get_mpz_t(), table_.frac_bits);
        BigInt lo_a0 = std::clamp(BigInt(f), BigInt(-x), x);
        BigInt hi_a0 = std::clamp(BigInt(f + 1), BigInt(-x), x);
        a[0] = lo_a0;
        push_admissible(out, make(a));
        if (hi_a0 != lo_a0) {
          a[0] = hi_a0;
          push_admissible(out, make(a));
        }
        a[0] = 0;
      }
      std::size_t k = 1;
      while (k < a.size() && a[k] == x) a[k++] = -x;
      if (k == a.size()) break;
      ++a[k];
    }
    return out;
  }

  /// All admissible box vectors with value <= bound found by lattice enumeration (unsorted).
  std::vector<Candidate> lattice_candidates(const BigInt& x, const BigRational& bound) const {
    if (x < 2) throw Error(ErrorCode::InvalidParams, "lattice search needs X >= 2");
    const mp_bitcnt_t prec = 2 * table_.frac_bits + 256;
    const std::size_t d = static_cast<std::size_t>(n_ + 1);
    Real inv_x(BigRational(1) / BigRational(x), prec);
    Real inv_b(BigRational(1) / bound, prec);
    std::vector<Real> zeta_pow;
    for (int i = 0; i <= n_; ++i) zeta_pow.emplace_back(make_rational(table_.z[static_cast<std::size_t>(i)], table_.one()), prec);
    RealMatrix rows;
    Real radius(0, prec);
    if (problem_ == Problem::Polynomial) {
      for (std::size_t l = 0; l < d; ++l) {
        std::vector<Real> row(d + 1, Real(0, prec));
        row[l] = inv_x;
        row[d] = Real(zeta_pow[l] * inv_b, prec);
        rows.push_back(std::move(row));
      }
      radius = Real(n_ + 2, prec);
    } else {
      std::vector<Real> row0(d, Real(0, prec));
      row0[0] = inv_x;
      for (std::size_t i = 1; i < d; ++i) row0[i] = Real(zeta_pow[i] * inv_b, prec);
      rows.push_back(std::move(row0));
      for (std::size_t i = 1; i < d; ++i) {
        std::vector<Real> row(d, Real(0, prec));
        row[i] = Real(-inv_b, prec);
        rows.push_back(std::move(row));
      }
      radius = Real(n_ + 1, prec);
    }
    // Slack for fixed-point powers and float rounding; exact filtering follows.
    radius *= Real(1.000001, prec);
    auto points = enumerate_short_vectors(rows, radius, prec, cfg_.lattice_max_points);
    std::vector<Candidate> out;
    for (auto& v : points) {
      Candidate c = make(std::move(v));
      if (in_box(c, x)) push_admissible(out, std::move(c));
    }
    dedupe(out);
    return out;
  }

  /// Greedy scan of sorted candidates (restricted to the box of height x):
  /// the first `j` linearly independent ones.
  static std::vector<const Candidate*> greedy(const std::vector<Candidate>& sorted, std::size_t j,
                                              const std::function<bool(const Candidate&)>& keep) {
    std::vector<const Candidate*> chosen;
    IntMatrix rows;
    for (const auto& c : sorted) {
      if (chosen.size() == j) break;
      if (!keep(c)) continue;
      rows.push_back(c.v);
      if (rank(rows) == rows.size()) {
        chosen.push_back(&c);
      } else {
        rows.pop_back();
      }
    }
    return chosen;
  }

  MinimaRecord record(const std::vector<const Candidate*>& chosen, const BigInt& x, Method method) const {
    MinimaRecord r;
    r.spec_id = spec_.id();
    r.problem = problem_;
    r.n = n_;
    r.j = static_cast<int>(chosen.size());
    r.X = x;
    r.method = method;
    for (const auto* c : chosen) r.witnesses.push_back(c->v);
    r.minimum = value(*chosen.back());
    return r;
  }

  void check_polynomial_budget(const BigInt& x) const {
    const double count = std::pow(2.0 * x.get_d() + 1.0, n_ + 1);
    if (count > cfg_.exhaustive_budget)
      throw Error(ErrorCode::BudgetExceeded, "(2X+1)^(n+1) = " + std::to_string(count) + " exceeds the budget");
  }

  static void sort_candidates(std::vector<Candidate>& cands) {
    std::sort(cands.begin(), cands.end(), candidate_less);
  }

 private:
  void push_admissible(std::vector<Candidate>& out, Candidate c) const {
    if (admissible(c)) out.push_back(std::move(c));
  }

  static void dedupe(std::vector<Candidate>& cands) {
    std::sort(cands.begin(), cands.end(), candidate_less);
    cands.erase(std::unique(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.v == b.v; }),
                cands.end());
  }

  const NumberSpec& spec_;
  Problem problem_;
  int n_;
  EstimatorConfig cfg_;
  PowerTable table_;
  std::optional<IntegerPolynomial> minimal_;
};

namespace detail {

struct PrecisionShortfall {};

inline void require_resolved(const MinimaSearch& s, const std::vector<const Candidate*>& chosen) {
  for (const auto* c : chosen)
    if (s.unresolved(*c)) throw PrecisionShortfall{};
}

/// Runs `body` with increasing guard digits until every reported key is resolved.
template <typename F>
auto with_precision_retry(const EstimatorConfig& cfg, F body) {
  EstimatorConfig c = cfg;
  for (int attempt = 0; attempt < 4; ++attempt) {
    try {
      return body(c);
    } catch (const PrecisionShortfall&) {
      c.guard_digits *= 2;
    }
  }
  throw Error(ErrorCode::PrecisionUnreachable, "minimum indistinguishable from zero at the working precision");
}

inline void check_request(int n, const BigInt& x, int j) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "dimension must be >= 1");
  if (x < 1) throw Error(ErrorCode::InvalidParams, "height bound must be >= 1");
  if (j < 1 || j > n + 1) throw Error(ErrorCode::BadIndex, "minima index must lie in 1..n+1");
}

/// Minima j = 1..j_max from one enumeration.
/// `hint` is an upper bound for the j_max-th value (e.g. from a smaller height).
inline std::vector<MinimaRecord> lattice_minima(const MinimaSearch& s, const BigInt& x, int j_max,
                                                const std::optional<BigRational>& hint = std::nullopt) {
  // Start near the Dirichlet scale and widen until the j-th pick sits well inside the searched slab.
  const int n = s.n();
  BigRational bound;
  if (s.problem() == Problem::Polynomial) {
    bound = BigRational(1) / BigRational(4 * pow_int(x, static_cast<unsigned long>(n)));
  } else {
    BigInt root = 1;
    while (pow_int(root + 1, static_cast<unsigned long>(n)) <= x) ++root;
    bound = BigRational(1) / BigRational(4 * root);
  }
  if (hint && *hint * 2 > bound) bound = *hint * 2;
  while (bound <= 4) {
    auto cands = s.lattice_candidates(x, bound);
    MinimaSearch::sort_candidates(cands);
    auto chosen = MinimaSearch::greedy(cands, static_cast<std::size_t>(j_max), [](const Candidate&) { return true; });
    if (chosen.size() == static_cast<std::size_t>(j_max)) {
      Interval v = s.value(*chosen.back());
      if (v.hi() <= ExtReal(BigRational(bound / 2))) {
        require_resolved(s, chosen);
        std::vector<MinimaRecord> out;
        for (int j = 1; j <= j_max; ++j)
          out.push_back(s.record(std::vector<const Candidate*>(chosen.begin(), chosen.begin() + j), x, Method::Lattice));
        return out;
      }
    }
    bound *= 4;
  }
  throw Error(ErrorCode::BudgetExceeded, "lattice search did not isolate the minimum");
}

}  // namespace detail

/// j-th successive minimum at height X.
inline MinimaRecord jth_minima(const NumberSpec& spec, Problem problem, int n, const BigInt& x, int j,
                               Method method = Method::Exhaustive, const EstimatorConfig& cfg = {}) {
  detail::check_request(n, x, j);
  return detail::with_precision_retry(cfg, [&](const EstimatorConfig& c) {
    MinimaSearch s(spec, problem, n, x, c);
    if (method == Method::Lattice) return detail::lattice_minima(s, x, j).back();
    if (problem == Problem::Simultaneous && x > c.simultaneous_limit)
      throw Error(ErrorCode::BudgetExceeded, "X exceeds the exhaustive simultaneous limit");
    auto cands = s.exhaustive_candidates(x);
    MinimaSearch::sort_candidates(cands);
    auto chosen = MinimaSearch::greedy(cands, static_cast<std::size_t>(j), [](const Candidate&) { return true; });
    if (chosen.size() < static_cast<std::size_t>(j))
      throw Error(ErrorCode::InsufficientData, "fewer than j independent candidates at this height");
    detail::require_resolved(s, chosen);
    return s.record(chosen, x, Method::Exhaustive);
  });
}

inline MinimaRecord polynomial_minimum(const NumberSpec& spec, int n, const BigInt& x,
                                       Method method = Method::Exhaustive, const EstimatorConfig& cfg = {}) {
  return jth_minima(spec, Problem::Polynomial, n, x, 1, method, cfg);
}

/// First simultaneous minima at every X of an increasing grid, by one pass
/// over x = 1..max(grid); ties go to the smallest x.
inline std::vector<MinimaRecord> simultaneous_scan(const NumberSpec& spec, int n, const std::vector<BigInt>& grid,
                                                   const EstimatorConfig& cfg = {}) {
  if (grid.empty()) return {};
  if (!std::is_sorted(grid.begin(), grid.end())) throw Error(ErrorCode::InvalidParams, "grid must be increasing");
  detail::check_request(n, grid.back(), 1);
  if (grid.back() > cfg.simultaneous_limit)
    throw Error(ErrorCode::BudgetExceeded, "X exceeds the exhaustive simultaneous limit");
  return detail::with_precision_retry(cfg, [&](const EstimatorConfig& c) {
    MinimaSearch s(spec, Problem::Simultaneous, n, grid.back(), c);
    const PowerTable& t = s.table();
    const auto dim = static_cast<std::size_t>(n);
    std::vector<BigInt> acc(dim + 1, BigInt(0));
    std::vector<BigInt> y(dim + 1), dev(dim + 1);
    BigInt half = pow2(t.frac_bits - 1);
    BigInt best_key = -1;
    BigInt best_x = 0;
    std::vector<BigInt> best_v;
    std::vector<MinimaRecord> out;
    std::size_t next = 0;
    BigInt shifted;
    for (BigInt xx = 1; next < grid.size(); ++xx) {
      BigInt key = 0;
      for (std::size_t i = 1; i <= dim; ++i) {
        acc[i] += t.z[i];
        shifted = acc[i] + half;
        mpz_fdiv_q_2exp(y[i].get_mpz_t(), shifted.get_mpz_t(), t.frac_bits);
        dev[i] = acc[i] - (y[i] << static_cast<mp_bitcnt_t>(t.frac_bits));
        if (abs(dev[i]) > key) key = abs(dev[i]);
      }
      if (best_key < 0 || key < best_key) {
        best_key = key;
        best_x = xx;
        best_v.assign(1, xx);
        best_v.insert(best_v.end(), y.begin() + 1, y.end());
      }
      while (next < grid.size() && grid[next] == xx) {
        Candidate c = s.make(best_v);
        std::vector<const Candidate*> chosen{&c};
        detail::require_resolved(s, chosen);
        out.push_back(s.record(chosen, xx, Method::Exhaustive));
        ++next;
      }
    }
    return out;
  });
}

inline MinimaRecord simultaneous_minimum(const NumberSpec& spec, int n, const BigInt& x,
                                         const EstimatorConfig& cfg = {}) {
  return simultaneous_scan(spec, n, {x}, cfg).front();
}

/// j-th minima for j = 1..j_max at every grid height. Exhaustive mode builds
/// one candidate list at the largest height and filters it per height.
inline std::vector<MinimaRecord> minima_grid(const NumberSpec& spec, Problem problem, int n,
                                             const std::vector<BigInt>& grid, int j_max, Method method,
                                             const EstimatorConfig& cfg = {}) {
  std::vector<MinimaRecord> out;
  if (grid.empty()) return out;
  if (!std::is_sorted(grid.begin(), grid.end())) throw Error(ErrorCode::InvalidParams, "grid must be increasing");
  detail::check_request(n, grid.back(), j_max);
  if (method == Method::Lattice) {
    std::optional<BigRational> hint;
    for (const auto& x : grid) {
      auto recs = detail::with_precision_retry(cfg, [&](const EstimatorConfig& c) {
        return detail::lattice_minima(MinimaSearch(spec, problem, n, x, c), x, j_max, hint);
      });
      const ExtReal& top = recs.back().minimum.hi();
      if (top.finite() && top.value() > 0) hint = top.value();
      out.insert(out.end(), recs.begin(), recs.end());
    }
    return out;
  }
  if (problem == Problem::Simultaneous && grid.back() > cfg.simultaneous_limit)
    throw Error(ErrorCode::BudgetExceeded, "X exceeds the exhaustive simultaneous limit");
  return detail::with_precision_retry(cfg, [&](const EstimatorConfig& c) {
    std::vector<MinimaRecord> recs;
    MinimaSearch s(spec, problem, n, grid.back(), c);
    auto cands = s.exhaustive_candidates(grid.back());
    MinimaSearch::sort_candidates(cands);
    for (const auto& x : grid) {
      auto chosen = MinimaSearch::greedy(cands, static_cast<std::size_t>(j_max),
                                         [&](const Candidate& cand) { return s.in_box(cand, x); });
      if (chosen.size() < static_cast<std::size_t>(j_max))
        throw Error(ErrorCode::InsufficientData, "fewer than j independent candidates at this height");
      detail::require_resolved(s, chosen);
      // Enclosures at the per-height precision, as a single-height search reports them.
      MinimaSearch at(spec, problem, n, x, c);
      for (int j = 1; j <= j_max; ++j) {
        recs.push_back(s.record(std::vector<const Candidate*>(chosen.begin(), chosen.begin() + j), x, Method::Exhaustive));
        recs.back().minimum = at.value(at.make(chosen[static_cast<std::size_t>(j - 1)]->v));
      }
    }
    return recs;
  });
}

/// Exhaustive when the largest height fits the budget, lattice otherwise.
inline Method choose_method(Problem problem, int n, const BigInt& x_max, int j_max, const EstimatorConfig& cfg = {}) {
  if (problem == Problem::Polynomial)
    return std::pow(2.0 * x_max.get_d() + 1.0, n + 1) <= cfg.exhaustive_budget ? Method::Exhaustive : Method::Lattice;
  if (x_max > cfg.simultaneous_limit) return Method::Lattice;
  if (j_max > 1 && x_max.get_d() * std::pow(2.0, n) > static_cast<double>(cfg.candidate_memory)) return Method::Lattice;
  return Method::Exhaustive;
}

/// minima_grid with the first simultaneous minimum taken from a single scan.
inline std::vector<MinimaRecord> estimate_grid(const NumberSpec& spec, Problem problem, int n,
                                               const std::vector<BigInt>& grid, int j_max,
                                               const EstimatorConfig& cfg = {}) {
  if (grid.empty()) return {};
  const Method method = choose_method(problem, n, grid.back(), j_max, cfg);
  if (problem == Problem::Simultaneous && j_max == 1 && method == Method::Exhaustive)
    return simultaneous_scan(spec, n, grid, cfg);
  return minima_grid(spec, problem, n, grid, j_max, method, cfg);
}

/// Geometric grid lo, ~lo*r, ~lo*r^2, ... capped by hi (always included).
inline std::vector<BigInt> geometric_grid(const BigInt& lo, const BigInt& hi, double ratio) {
  if (lo < 1 || hi < lo) throw Error(ErrorCode::InvalidParams, "grid needs 1 <= lo <= hi");
  if (!(ratio > 1.0)) throw Error(ErrorCode::InvalidParams, "grid ratio must exceed 1");
  std::vector<BigInt> grid{lo};
  double current = lo.get_d();
  while (true) {
    current *= ratio;
    BigInt next(std::ceil(current - 1e-9));
    if (next <= grid.back()) next = grid.back() + 1;
    if (next >= hi) break;
    grid.push_back(next);
  }
  if (grid.back() != hi) grid.push_back(hi);
  return grid;
}

}  // namespace dioph
