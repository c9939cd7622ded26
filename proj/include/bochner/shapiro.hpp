#pragma once

/*
 * The operator
 *
 *   L = sum_{i=1}^{N} c_i x^{i-1} d^i/dx^i + x d/dx,    c_N != 0,
 *
 * whose monic eigenpolynomials satisfy an (N+1)-term recurrence. Its delta
 * table collapses to delta_n^(0) = n, delta_n^(1) = sum_s C(n,s) s! c_s and
 * zero elsewhere, which gives product formulas for both the eigenpolynomial
 * coefficients and the recurrence coefficients.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bochner/errors.hpp"
#include "bochner/exact.hpp"
#include "bochner/operator.hpp"
#include "bochner/poly.hpp"

namespace bochner {

class ShapiroOperator {
 public:
  /// c = (c_1, ..., c_N).
  explicit ShapiroOperator(std::vector<Scalar> c) : c_(std::move(c)) {
    if (c_.empty()) throw InvalidOperator("shapiro operator needs at least c_1");
    if (c_.back().is_zero())
      throw InvalidOperator("shapiro operator needs c_N != 0 (N = " + std::to_string(c_.size()) +
                            ")");
  }

  int order() const noexcept { return static_cast<int>(c_.size()); }

  /// c_i for i >= 1; zero past the order.
  Scalar c(int i) const {
    if (i < 1) throw DomainError("shapiro coefficients start at c_1");
    return i <= order() ? c_[static_cast<std::size_t>(i - 1)] : Scalar(0);
  }

  const std::vector<Scalar>& coefficients() const noexcept { return c_; }

  /// a_1 = x + c_1, a_i = c_i x^{i-1} for i >= 2.
  BochnerOperator to_bochner() const {
    std::vector<Poly> a;
    a.emplace_back();
    a.push_back(Poly{c_[0], Scalar(1)});
    for (int i = 2; i <= order(); ++i) a.push_back(Poly::monomial(static_cast<std::size_t>(i - 1), c(i)));
    return BochnerOperator(std::move(a));
  }

 private:
  std::vector<Scalar> c_;
};

/// delta_n^(1) = sum_{s=1}^{n} C(n,s) s! c_s; zero for n <= 0.
inline Scalar shapiro_delta1(const ShapiroOperator& op, int n) {
  Scalar sum;
  for (int s = 1; s <= std::min(n, op.order()); ++s)
    sum += op.c(s) * Rational(binomial(n, s) * factorial(s));
  return sum;
}

namespace detail {

// delta^(1)_m for m in [lo, hi], with delta_m = 0 for m <= 0.
class ShapiroDeltas {
 public:
  ShapiroDeltas(const ShapiroOperator& op, int hi) {
    values_.reserve(static_cast<std::size_t>(std::max(hi, 0)) + 1);
    for (int m = 0; m <= hi; ++m) values_.push_back(shapiro_delta1(op, m));
  }
  const Scalar& operator()(int m) const {
    static const Scalar zero;
    if (m <= 0) return zero;
    return values_.at(static_cast<std::size_t>(m));
  }

 private:
  std::vector<Scalar> values_;
};

// delta_n delta_{n-1} ... delta_{n-count+1}; 1 for count = 0.
inline Scalar falling_delta_product(const ShapiroDeltas& d, int n, int count) {
  Scalar p(1);
  for (int j = 0; j < count; ++j) {
    p *= d(n - j);
    if (p.is_zero()) break;
  }
  return p;
}

inline Scalar shapiro_alpha(const ShapiroDeltas& d, int n, int s) {
  Scalar head = falling_delta_product(d, n, s);
  if (head.is_zero()) return head;
  Scalar diff;
  for (int j = 0; j <= s + 1; ++j)
    diff += d(n - s + j) * Rational(parity_sign(j) * binomial(s + 1, j));
  return head * diff / Rational(factorial(s + 1));
}

inline Poly shapiro_eigenpoly(const ShapiroDeltas& d, int n) {
  std::vector<Scalar> b(static_cast<std::size_t>(n) + 1);
  Scalar product(1);
  b[static_cast<std::size_t>(n)] = product;
  for (int i = 1; i <= n; ++i) {
    product *= d(n - i + 1);
    b[static_cast<std::size_t>(n - i)] = product / Rational(factorial(i));
  }
  return Poly(std::move(b));
}

}  // namespace detail

/// b_{n,n-i} = delta_n^(1) delta_{n-1}^(1) ... delta_{n-i+1}^(1) / i!
inline Scalar shapiro_coeff(const ShapiroOperator& op, int n, int i) {
  if (i < 0 || i > n) throw DomainError("need 0 <= i <= n");
  detail::ShapiroDeltas d(op, n);
  return detail::falling_delta_product(d, n, i) / Rational(factorial(i));
}

inline Poly shapiro_eigenpoly(const ShapiroOperator& op, int n) {
  if (n < 0) throw DomainError("negative degree");
  return detail::shapiro_eigenpoly(detail::ShapiroDeltas(op, n), n);
}

/// alpha_{n,n-s} = (delta_n ... delta_{n-s+1} / (s+1)!) sum_{j=0}^{s+1} C(s+1,j) (-1)^j delta_{n-s+j},
/// all deltas of order one, 0 <= s <= N-1.
inline Scalar shapiro_alpha(const ShapiroOperator& op, int n, int s) {
  if (s < 0 || s > op.order() - 1)
    throw DomainError("need 0 <= s <= N-1 (N = " + std::to_string(op.order()) + ")");
  if (n < 0) throw DomainError("negative index");
  return detail::shapiro_alpha(detail::ShapiroDeltas(op, n + 1), n, s);
}

/// band[n][s] = alpha_{n,n-s} for n = 0..n_max, s = 0..N-1.
using ShapiroBand = std::vector<std::vector<Scalar>>;

inline ShapiroBand shapiro_alpha_band(const ShapiroOperator& op, int n_max) {
  detail::ShapiroDeltas d(op, n_max + 1);
  ShapiroBand band(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    for (int s = 0; s < op.order(); ++s)
      band[static_cast<std::size_t>(n)].push_back(detail::shapiro_alpha(d, n, s));
  return band;
}

struct RecurrenceCheck {
  bool ok = true;
  /// First failing row and the power of x whose coefficient is nonzero.
  std::optional<int> n;
  std::optional<int> coefficient;

  explicit operator bool() const noexcept { return ok; }
};

/*
 * Checks, as exact polynomial identities for n = 0..n_max,
 *
 *   sum_{s=1}^{N-1} alpha_{n,n-s} P_{n-s} + (alpha_{n,n} - x) P_n + P_{n+1} = 0
 *
 * with P_m = 0 for m < 0. The band defaults to shapiro_alpha_band; pass a
 * modified band to test a candidate table.
 */
inline RecurrenceCheck verify_shapiro_recurrence(const ShapiroOperator& op, int n_max,
                                                 std::optional<ShapiroBand> band = std::nullopt) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  detail::ShapiroDeltas d(op, n_max + 1);
  if (!band) band = shapiro_alpha_band(op, n_max);
  if (band->size() < static_cast<std::size_t>(n_max) + 1)
    throw InsufficientData("alpha band must cover n = 0.." + std::to_string(n_max));

  std::vector<Poly> family;
  for (int m = 0; m <= n_max + 1; ++m) family.push_back(detail::shapiro_eigenpoly(d, m));
  const Poly x = Poly::monomial(1);

  for (int n = 0; n <= n_max; ++n) {
    const auto& row = (*band)[static_cast<std::size_t>(n)];
    Poly residual = family[static_cast<std::size_t>(n + 1)] - x * family[static_cast<std::size_t>(n)];
    for (int s = 0; s < static_cast<int>(row.size()) && s <= n; ++s)
      residual += family[static_cast<std::size_t>(n - s)] * row[static_cast<std::size_t>(s)];
    if (!residual.is_zero()) {
      int idx = 0;
      while (residual[static_cast<std::size_t>(idx)].is_zero()) ++idx;
      return RecurrenceCheck{false, n, idx};
    }
  }
  return {};
}

}  // namespace bochner
