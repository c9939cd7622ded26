#pragma once

// Inverse problem: recover a finite-order Bochner operator from prescribed
// eigenvalues and monic eigenpolynomials, when one exists.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bochner/errors.hpp"
#include "bochner/exact.hpp"
#include "bochner/hessenberg.hpp"
#include "bochner/operator.hpp"
#include "bochner/poly.hpp"
#include "bochner/recurrence.hpp"
#include "bochner/spectral.hpp"

namespace bochner {

/// Prescribed eigen-data: lambda_0 = 0 and monic P_n with deg P_n = n.
class EigenData {
 public:
  EigenData(std::vector<Scalar> lambdas, std::vector<Poly> polys)
      : lambdas_(std::move(lambdas)), polys_(std::move(polys)) {
    if (lambdas_.empty()) throw InvalidEigenSystem("eigen-data needs at least lambda_0 and P_0");
    if (lambdas_.size() != polys_.size())
      throw InvalidEigenSystem("eigen-data has " + std::to_string(lambdas_.size()) +
                               " eigenvalues but " + std::to_string(polys_.size()) + " polynomials");
    if (!lambdas_[0].is_zero()) throw InvalidEigenSystem("lambda_0 must be 0");
    detail::check_monic_family(polys_);
  }

  explicit EigenData(EigenSystem sys) : EigenData(std::move(sys.lambdas), std::move(sys.polys)) {}

  int m_max() const noexcept { return static_cast<int>(lambdas_.size()) - 1; }
  const std::vector<Scalar>& lambdas() const noexcept { return lambdas_; }
  const std::vector<Poly>& polys() const noexcept { return polys_; }

  const Scalar& lambda(int n) const { return lambdas_.at(static_cast<std::size_t>(n)); }

  /// b_{n,i}; zero for i > n or i < 0.
  Scalar b(int n, int i) const {
    if (i < 0) return Scalar(0);
    return polys_.at(static_cast<std::size_t>(n))[static_cast<std::size_t>(i)];
  }

  /// Copy with one coefficient of P_n changed by `delta` (for negative controls).
  EigenData perturbed(int n, int i, const Scalar& delta) const {
    if (n < 0 || n > m_max() || i < 0 || i >= n)
      throw DomainError("perturbation must target a non-leading coefficient of an existing P_n");
    auto polys = polys_;
    polys[static_cast<std::size_t>(n)] += Poly::monomial(static_cast<std::size_t>(i), delta);
    return EigenData(lambdas_, std::move(polys));
  }

 private:
  std::vector<Scalar> lambdas_;
  std::vector<Poly> polys_;
};

/*
 * delta_n^(k) straight from the determinant definition: delta_n^(0) = lambda_n
 * and, for 1 <= k <= n, (-1)^k times the k x k upper Hessenberg determinant
 *
 *   row 1:        (lambda_{n-k} - lambda_{n-k+c}) b_{n-k+c, n-k},   c = 1..k
 *   row r >= 2:   b_{n-k+c, n-k+r-1}                                 c >= r-1
 *
 * (the subdiagonal entries are b_{m,m} = 1). Zero for k > n.
 */
inline Scalar deltas_from_eigendata_det(const EigenData& data, int n, int k) {
  if (n < 0 || k < 0) throw DomainError("negative index");
  if (n > data.m_max()) throw InsufficientData("eigen-data must cover n = " + std::to_string(n));
  if (k == 0) return data.lambda(n);
  if (k > n) return Scalar(0);
  const int base = n - k;
  auto entry = [&](int r, int c) -> Scalar {
    if (r == 1) return (data.lambda(base) - data.lambda(base + c)) * data.b(base + c, base);
    return data.b(base + c, base + r - 1);
  };
  Scalar det = hessenberg_determinant<Scalar>(k, entry);
  return k % 2 == 0 ? det : -det;
}

/*
 * Full delta table by increasing n, from the last-column expansion of the
 * determinant:
 *
 *   delta_n^(k) = (lambda_n - lambda_{n-k}) b_{n,n-k} - sum_{j=1}^{k-1} delta_{n-k+j}^(j) b_{n,n-k+j}
 *
 * The returned table carries no order tag.
 */
inline DeltaTable deltas_from_eigendata_rec(const EigenData& data, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  if (n_max > data.m_max())
    throw InsufficientData("eigen-data must cover n = " + std::to_string(n_max));
  DeltaTable table(std::nullopt);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Scalar> row(static_cast<std::size_t>(n) + 1);
    row[0] = data.lambda(n);
    for (int k = 1; k <= n; ++k) {
      Scalar value = (data.lambda(n) - data.lambda(n - k)) * data.b(n, n - k);
      for (int j = 1; j < k; ++j) {
        Scalar b = data.b(n, n - k + j);
        if (b.is_zero()) continue;
        const Scalar& d = table.row(n - k + j)[static_cast<std::size_t>(j)];
        if (!d.is_zero()) value -= d * b;
      }
      row[static_cast<std::size_t>(k)] = std::move(value);
    }
    table.push_row(std::move(row));
  }
  return table;
}

struct FiniteOrderFailure {
  int n;
  int k;
};

/*
 * First (n, k), scanning n = N+1..n_max and then k, where the table breaks
 * the finite-order criterion: delta_n^(k) must equal delta_extend(seed, N, n, k)
 * for k <= N and vanish for N < k <= n. nullopt when the criterion holds on
 * the whole window.
 */
inline std::optional<FiniteOrderFailure> finite_order_violation(const DeltaTable& deltas, int order,
                                                                int n_max) {
  if (order < 1) throw DomainError("operator order must be positive");
  if (n_max <= order)
    throw InsufficientData("finite-order test needs n_max > N (n_max = " + std::to_string(n_max) +
                           ", N = " + std::to_string(order) + ")");
  if (deltas.size() <= n_max)
    throw InsufficientData("delta table must cover n = " + std::to_string(n_max));
  for (int n = order + 1; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      Scalar expected = k <= order ? delta_extend(deltas, order, n, k) : Scalar(0);
      if (!(deltas.at(n, k) == expected)) return FiniteOrderFailure{n, k};
    }
  return std::nullopt;
}

inline bool finite_order_test(const DeltaTable& deltas, int order, int n_max) {
  return !finite_order_violation(deltas, order, n_max).has_value();
}

/*
 * The order-N operator having `data` as eigen-pairs. Throws
 * NoFiniteOrderOperator when the finite-order criterion fails on the data
 * window, DegenerateSpectrum when two eigenvalues coincide. The criterion is
 * checked up to degree m_max only; the result is re-checked against every
 * eigen-pair before it is returned.
 */
inline BochnerOperator reconstruct(const EigenData& data, int order) {
  if (order < 1) throw DomainError("operator order must be positive");
  if (data.m_max() < order + 1)
    throw InsufficientData("reconstruction of order " + std::to_string(order) +
                           " needs eigen-data up to degree " + std::to_string(order + 1));
  detail::check_spectrum(data.lambdas(), data.m_max());
  DeltaTable deltas = deltas_from_eigendata_rec(data, data.m_max());
  if (auto bad = finite_order_violation(deltas, order, data.m_max()))
    throw NoFiniteOrderOperator(order, bad->n, bad->k);
  BochnerOperator op = operator_from_deltas(deltas, order);
  for (int n = 0; n <= data.m_max(); ++n)
    if (!is_eigenpair(op, data.polys()[static_cast<std::size_t>(n)], data.lambda(n)))
      throw Error("reconstructed operator fails L P_" + std::to_string(n) + " = lambda_" +
                  std::to_string(n) + " P_" + std::to_string(n));
  return op;
}

/// Smallest N in [1, m_max-1] passing the finite-order criterion.
inline std::optional<int> search_order(const EigenData& data) {
  if (data.m_max() < 2) throw InsufficientData("order search needs eigen-data up to degree 2");
  detail::check_spectrum(data.lambdas(), data.m_max());
  DeltaTable deltas = deltas_from_eigendata_rec(data, data.m_max());
  for (int order = 1; order < data.m_max(); ++order)
    if (finite_order_test(deltas, order, data.m_max())) return order;
  return std::nullopt;
}

}  // namespace bochner
