#pragma once

// Exact residual checkers for the combinatorial identities that the delta
// calculus rests on. Each checker sums both sides of its identity directly
// (no closed-form shortcuts) and returns LHS - RHS, which is zero on the
// identity's valid range.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bochner/errors.hpp"
#include "bochner/exact.hpp"

namespace bochner {

using LemmaParams = std::map<std::string, Rational>;

namespace detail {

inline int int_param(const LemmaParams& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw DomainError("missing parameter '" + name + "'");
  if (!is_integer(it->second))
    throw DomainError("parameter '" + name + "' must be an integer");
  if (!it->second.get_num().fits_sint_p())
    throw DomainError("parameter '" + name + "' out of range");
  return static_cast<int>(it->second.get_num().get_si());
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("parameters outside identity range: " + what);
}

struct LemmaDef {
  std::string id;
  std::string statement;
  std::vector<std::string> params;
  std::function<Rational(const LemmaParams&)> residual;
};

// sum_{r=k}^{m+1} (-1)^{r-k} C(r,k) C(m+1,r) = 0,  0 <= k <= m
inline Rational alternating_binomial_product(const LemmaParams& p) {
  int m = int_param(p, "m"), k = int_param(p, "k");
  require(m >= 0 && k >= 0 && k <= m, "m >= 0, 0 <= k <= m");
  Integer lhs = 0;
  for (int r = k; r <= m + 1; ++r)
    lhs += parity_sign(r - k) * binomial(r, k) * binomial(m + 1, r);
  return Rational(lhs);
}

// sum_{r=0}^{m} C(m+k+1,r) (-1)^r = (-1)^m C(m+k,k)
inline Rational alternating_partial_row(const LemmaParams& p) {
  int m = int_param(p, "m"), k = int_param(p, "k");
  require(m >= 0 && k >= 0, "m >= 0, k >= 0");
  Integer lhs = 0;
  for (int r = 0; r <= m; ++r) lhs += parity_sign(r) * binomial(m + k + 1, r);
  Integer rhs = parity_sign(m) * binomial(m + k, k);
  return Rational(lhs - rhs);
}

// sum_{j=0}^{k-1} C(k-1,j) (-1)^j / (j+m+1) = 1 / (k C(m+k,k))
inline Rational reciprocal_binomial(const LemmaParams& p) {
  int k = int_param(p, "k"), m = int_param(p, "m");
  require(k >= 1 && m >= 1, "k >= 1, m >= 1");
  Rational lhs = 0;
  for (int j = 0; j <= k - 1; ++j)
    lhs += Rational(parity_sign(j) * binomial(k - 1, j)) / (j + m + 1);
  Rational rhs = Rational(1) / Rational(k * binomial(m + k, k));
  return lhs - rhs;
}

// sum_{s=0}^{q} (-1)^s C(q,s) C(n-q+s,r) = 0 if r < q, (-1)^q C(n-q,r-q) else
inline Rational shifted_difference(const LemmaParams& p) {
  int n = int_param(p, "n"), q = int_param(p, "q"), r = int_param(p, "r");
  require(n >= 0 && q >= 0 && q <= n && r >= 0, "n >= 0, 0 <= q <= n, r >= 0");
  Integer lhs = 0;
  for (int s = 0; s <= q; ++s)
    lhs += parity_sign(s) * binomial(q, s) * binomial(n - q + s, r);
  Integer rhs = r < q ? Integer(0) : parity_sign(q) * binomial(n - q, r - q);
  return Rational(lhs - rhs);
}

// sum_{s=1}^{m+1} s/(s+k) (-1)^s C(m+1,s) C(n-m+s,r)
//   = -C(n-m-k, r) / C(m+k+1, k),   r <= m <= n, k <= n-m
inline Rational weighted_difference(const LemmaParams& p) {
  int n = int_param(p, "n"), m = int_param(p, "m"), r = int_param(p, "r"),
      k = int_param(p, "k");
  require(r >= 0 && k >= 0 && r <= m && m <= n && k <= n - m,
          "0 <= r <= m <= n, 0 <= k <= n-m");
  Rational lhs = 0;
  for (int s = 1; s <= m + 1; ++s)
    lhs += make_rational(s, s + k) *
           Rational(parity_sign(s) * binomial(m + 1, s) * binomial(n - m + s, r));
  Rational rhs = -Rational(binomial(n - m - k, r)) / Rational(binomial(m + k + 1, k));
  return lhs - rhs;
}

// 1 / prod_{j=1}^{M} (j-s) = sum_{i=1}^{M} (-1)^{i-1} / ((M-i)! (i-1)! (i-s)),
// M = n-N+1, s not in {1..M}
inline Rational partial_fraction(const LemmaParams& p) {
  int n = int_param(p, "n"), order = int_param(p, "N");
  auto it = p.find("s");
  if (it == p.end()) throw DomainError("missing parameter 's'");
  const Rational& s = it->second;
  require(order >= 0 && n >= order, "n >= N >= 0");
  int count = n - order + 1;
  require(!(is_integer(s) && s >= 1 && s <= count), "s not in {1..n-N+1}");
  Rational product = 1;
  for (int j = 1; j <= count; ++j) product *= Rational(j) - s;
  Rational lhs = Rational(1) / product;
  Rational rhs = 0;
  for (int i = 1; i <= count; ++i)
    rhs += Rational(parity_sign(i - 1)) /
           (Rational(factorial(count - i) * factorial(i - 1)) * (Rational(i) - s));
  return lhs - rhs;
}

inline const std::vector<LemmaDef>& lemma_table() {
  static const std::vector<LemmaDef> table = {
      {"alternating-binomial-product",
       "sum_{r=k}^{m+1} (-1)^(r-k) C(r,k) C(m+1,r) = 0, 0<=k<=m",
       {"m", "k"},
       alternating_binomial_product},
      {"alternating-partial-row",
       "sum_{r=0}^{m} (-1)^r C(m+k+1,r) = (-1)^m C(m+k,k)",
       {"m", "k"},
       alternating_partial_row},
      {"reciprocal-binomial",
       "sum_{j=0}^{k-1} (-1)^j C(k-1,j)/(j+m+1) = 1/(k C(m+k,k)), k,m>=1",
       {"k", "m"},
       reciprocal_binomial},
      {"shifted-difference",
       "sum_{s=0}^{q} (-1)^s C(q,s) C(n-q+s,r) = [r>=q] (-1)^q C(n-q,r-q)",
       {"n", "q", "r"},
       shifted_difference},
      {"weighted-difference",
       "sum_{s=1}^{m+1} s/(s+k) (-1)^s C(m+1,s) C(n-m+s,r) = -C(n-m-k,r)/C(m+k+1,k)",
       {"n", "m", "r", "k"},
       weighted_difference},
      {"partial-fraction",
       "1/prod_{j=1}^{n-N+1}(j-s) = sum_i (-1)^(i-1)/((n-N+1-i)!(i-1)!(i-s))",
       {"n", "N", "s"},
       partial_fraction},
  };
  return table;
}

inline const LemmaDef& find_lemma(const std::string& id) {
  for (const auto& def : lemma_table())
    if (def.id == id) return def;
  throw DomainError("unknown identity '" + id + "'");
}

}  // namespace detail

inline std::vector<std::string> lemma_ids() {
  std::vector<std::string> ids;
  for (const auto& def : detail::lemma_table()) ids.push_back(def.id);
  return ids;
}

inline bool is_lemma_id(const std::string& id) {
  auto ids = lemma_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

inline const std::vector<std::string>& lemma_params(const std::string& id) {
  return detail::find_lemma(id).params;
}

inline const std::string& lemma_statement(const std::string& id) {
  return detail::find_lemma(id).statement;
}

/// LHS - RHS of the named identity at `params`.
/// Throws DomainError for an unknown id or parameters outside its range.
inline Scalar lemma_residual(const std::string& id, const LemmaParams& params) {
  return Scalar(detail::find_lemma(id).residual(params));
}

/// Inclusive range lo, lo+step, ..., <= hi.
struct ParamRange {
  std::string name;
  Rational lo;
  Rational hi;
  Rational step{1};
};

/// Grid that an identity is swept over when no override is given.
inline std::vector<ParamRange> default_lemma_grid(const std::string& id) {
  auto r = [](std::string name, long lo, long hi, Rational step = 1) {
    return ParamRange{std::move(name), Rational(lo), Rational(hi), std::move(step)};
  };
  if (id == "alternating-binomial-product") return {r("m", 0, 12), r("k", 0, 12)};
  if (id == "alternating-partial-row") return {r("m", 0, 12), r("k", 0, 8)};
  if (id == "reciprocal-binomial") return {r("k", 1, 10), r("m", 1, 10)};
  if (id == "shifted-difference") return {r("n", 0, 10), r("q", 0, 10), r("r", 0, 12)};
  if (id == "weighted-difference")
    return {r("n", 0, 10), r("m", 0, 10), r("r", 0, 10), r("k", 0, 10)};
  if (id == "partial-fraction")
    return {r("n", 0, 12), r("N", 0, 12), r("s", -10, 20, Rational(1, 2))};
  throw DomainError("unknown identity '" + id + "'");
}

struct LemmaCounterexample {
  std::string id;
  LemmaParams params;
  Scalar residual;
};

struct LemmaSweepReport {
  long checked = 0;
  long skipped = 0;
  std::optional<LemmaCounterexample> counterexample;

  bool ok() const { return !counterexample.has_value(); }
};

/// Evaluates the identity on every grid point. Tuples outside the identity's
/// range are counted as skipped. Stops at the first nonzero residual.
inline LemmaSweepReport sweep_lemma(const std::string& id,
                                    const std::vector<ParamRange>& grid,
                                    LemmaSweepReport report = {}) {
  const auto& def = detail::find_lemma(id);
  for (const auto& range : grid)
    if (sgn(range.step) <= 0) throw DomainError("range step must be positive");

  LemmaParams point;
  std::function<bool(std::size_t)> walk = [&](std::size_t depth) -> bool {
    if (depth == grid.size()) {
      Rational residual;
      try {
        residual = def.residual(point);
      } catch (const DomainError&) {
        ++report.skipped;
        return true;
      }
      ++report.checked;
      if (sgn(residual) != 0) {
        report.counterexample = LemmaCounterexample{id, point, Scalar(residual)};
        return false;
      }
      return true;
    }
    const auto& range = grid[depth];
    for (Rational v = range.lo; v <= range.hi; v += range.step) {
      point[range.name] = v;
      if (!walk(depth + 1)) return false;
    }
    return true;
  };
  walk(0);
  return report;
}

}  // namespace bochner
