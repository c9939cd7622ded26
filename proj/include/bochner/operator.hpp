#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bochner/errors.hpp"
#include "bochner/exact.hpp"
#include "bochner/poly.hpp"

namespace bochner {

/*
 * L = sum_{i=0}^{N} a_i(x) d^i/dx^i with deg a_i <= i.
 *
 * The order N is the highest index with a nonzero coefficient; trailing
 * zero coefficients passed to the constructor are dropped. An operator
 * must contain at least one derivative term.
 */
class BochnerOperator {
 public:
  explicit BochnerOperator(std::vector<Poly> coeffs) : a_(std::move(coeffs)) {
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
    if (a_.size() < 2) throw InvalidOperator("operator has no derivative terms");
    for (std::size_t i = 0; i < a_.size(); ++i) {
      auto d = a_[i].degree();
      if (d && *d > i)
        throw InvalidOperator("Bochner condition violated: deg a_" + std::to_string(i) +
                              " = " + std::to_string(*d) + " > " + std::to_string(i));
    }
  }

  int order() const noexcept { return static_cast<int>(a_.size()) - 1; }

  std::span<const Poly> coeffs() const noexcept { return a_; }

  /// a_i(x); zero for i > N.
  Poly coeff(int i) const {
    return i >= 0 && i <= order() ? a_[static_cast<std::size_t>(i)] : Poly{};
  }

  /// a_{i,j}: coefficient of x^j in a_i.
  Scalar coeff(int i, int j) const {
    if (i < 0 || i > order() || j < 0) return Scalar(0);
    return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  bool is_normalized() const { return a_[0].is_zero(); }

  friend bool operator==(const BochnerOperator&, const BochnerOperator&) = default;

 private:
  std::vector<Poly> a_;
};

/// Applies L to p symbolically: sum a_i(x) p^(i)(x).
inline Poly apply_operator(const BochnerOperator& op, const Poly& p) {
  return apply_operator<Scalar>(op.coeffs(), p);
}

/// True iff L p = lambda p exactly.
inline bool is_eigenpair(const BochnerOperator& op, const Poly& p, const Scalar& lambda) {
  return apply_operator(op, p) == p * lambda;
}

struct Normalized {
  BochnerOperator op;
  /// The constant a_0 removed from the operator. Eigenvalues of the input
  /// are the eigenvalues of `op` plus `shift`.
  Scalar shift;
};

/// Moves the constant term a_0 into a spectral shift so that a_0 == 0.
inline Normalized normalize(const BochnerOperator& op) {
  Scalar shift = op.coeff(0, 0);
  std::vector<Poly> a(op.coeffs().begin(), op.coeffs().end());
  a[0] = Poly{};
  return {BochnerOperator(std::move(a)), shift};
}

/*
 * Triangular table delta_n^(k), 0 <= k <= n <= n_max.
 *
 * Entries with k > n are zero. When the table carries an order tag N,
 * entries with k > N are zero as well and are not stored.
 */
class DeltaTable {
 public:
  DeltaTable() = default;
  explicit DeltaTable(std::optional<int> order) : order_(order) {}

  std::optional<int> order() const noexcept { return order_; }

  /// Number of rows; the table covers n = 0 .. size()-1.
  int size() const noexcept { return static_cast<int>(rows_.size()); }
  bool empty() const noexcept { return rows_.empty(); }
  int n_max() const noexcept { return size() - 1; }

  /// Number of entries stored in row n.
  int stored(int n) const { return order_ ? std::min(n, *order_) + 1 : n + 1; }

  /// Appends row n = size(). Entries beyond stored(n) must be zero.
  void push_row(std::vector<Scalar> row) {
    int n = size();
    auto keep = static_cast<std::size_t>(stored(n));
    if (row.size() > static_cast<std::size_t>(n) + 1)
      throw DomainError("delta row " + std::to_string(n) + " is longer than n+1");
    for (std::size_t k = keep; k < row.size(); ++k)
      if (!row[k].is_zero())
        throw DomainError("nonzero delta_" + std::to_string(n) + "^(" + std::to_string(k) +
                          ") beyond the table order");
    row.resize(keep);
    rows_.push_back(std::move(row));
  }

  /// delta_n^(k). Throws InsufficientData when row n is not populated.
  Scalar at(int n, int k) const {
    if (n < 0 || n >= size())
      throw InsufficientData("delta table has no row " + std::to_string(n));
    if (k < 0 || k > n || (order_ && k > *order_)) return Scalar(0);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  const std::vector<Scalar>& row(int n) const {
    if (n < 0 || n >= size())
      throw InsufficientData("delta table has no row " + std::to_string(n));
    return rows_[static_cast<std::size_t>(n)];
  }

  /// Copy of the first `rows` rows.
  DeltaTable truncated(int rows) const {
    DeltaTable t(order_);
    for (int n = 0; n < std::min(rows, size()); ++n) t.rows_.push_back(rows_[static_cast<std::size_t>(n)]);
    return t;
  }

  /// Entrywise comparison over the full triangle (implicit zeros included).
  friend bool operator==(const DeltaTable& a, const DeltaTable& b) {
    if (a.size() != b.size()) return false;
    for (int n = 0; n < a.size(); ++n)
      for (int k = 0; k <= n; ++k)
        if (!(a.at(n, k) == b.at(n, k))) return false;
    return true;
  }

 private:
  std::optional<int> order_;
  std::vector<std::vector<Scalar>> rows_;
};

/// delta_n^(k) = sum_{i=k}^{n} C(n,i) i! a_{i,i-k} for n <= n_max.
/// The table is tagged with the operator order.
inline DeltaTable deltas_from_operator(const BochnerOperator& op, int n_max) {
  if (!op.is_normalized())
    throw InvalidOperator("operator must be normalized (a_0 == 0) before computing deltas");
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  const int order = op.order();
  DeltaTable table(order);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Scalar> row(static_cast<std::size_t>(std::min(n, order)) + 1);
    for (int k = 0; k < static_cast<int>(row.size()); ++k) {
      Scalar sum;
      // a_{i,i-k} vanishes for i > N.
      for (int i = k; i <= std::min(n, order); ++i) {
        Scalar a = op.coeff(i, i - k);
        if (a.is_zero()) continue;
        sum += a * Rational(binomial(n, i) * factorial(i));
      }
      row[static_cast<std::size_t>(k)] = std::move(sum);
    }
    table.push_row(std::move(row));
  }
  return table;
}

/// a_{n,n-k} = (1/n!) sum_{i=k}^{n} C(n,i) (-1)^{n-i} delta_i^(k).
inline Scalar operator_coeffs_from_deltas(const DeltaTable& deltas, int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("need 0 <= k <= n");
  if (deltas.size() <= n)
    throw InsufficientData("delta table must cover n = " + std::to_string(n));
  Scalar sum;
  for (int i = k; i <= n; ++i) {
    Scalar d = deltas.at(i, k);
    if (d.is_zero()) continue;
    sum += d * Rational(parity_sign(n - i) * binomial(n, i));
  }
  return sum / Rational(factorial(n));
}

/// Inverts deltas_from_operator for a given order N.
inline BochnerOperator operator_from_deltas(const DeltaTable& deltas, int order) {
  if (order < 1) throw DomainError("operator order must be positive");
  if (deltas.size() <= order)
    throw InsufficientData("delta table must cover n = 0.." + std::to_string(order));
  std::vector<Poly> a;
  a.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      c[static_cast<std::size_t>(n - k)] = operator_coeffs_from_deltas(deltas, n, k);
    a.emplace_back(std::move(c));
  }
  return BochnerOperator(std::move(a));
}

}  // namespace bochner
