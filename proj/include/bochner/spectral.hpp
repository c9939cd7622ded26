#pragma once

// Direct problem: eigenvalues and monic eigenpolynomials of a normalized
// Bochner operator, computed from its delta table.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bochner/errors.hpp"
#include "bochner/exact.hpp"
#include "bochner/hessenberg.hpp"
#include "bochner/operator.hpp"
#include "bochner/poly.hpp"

namespace bochner {

/// lambdas[n] and the monic P_n with L P_n = lambda_n P_n, n = 0..n_max.
struct EigenSystem {
  std::vector<Scalar> lambdas;
  std::vector<Poly> polys;

  int n_max() const noexcept { return static_cast<int>(lambdas.size()) - 1; }
};

namespace detail {

// lambda_0 = 0 and lambda_n pairwise distinct for n <= upto.
inline void check_spectrum(std::span<const Scalar> lambdas, int upto) {
  for (int n = 1; n <= upto; ++n)
    for (int m = 0; m < n; ++m)
      if (lambdas[static_cast<std::size_t>(m)] == lambdas[static_cast<std::size_t>(n)])
        throw DegenerateSpectrum(m, n);
}

inline std::vector<Scalar> lambda_column(const DeltaTable& deltas, int upto) {
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(upto) + 1);
  for (int n = 0; n <= upto; ++n) out.push_back(deltas.at(n, 0));
  return out;
}

}  // namespace detail

/// lambda_n = delta_n^(0). Throws DegenerateSpectrum on a collision; since
/// lambda_0 = 0 for a normalized operator, lambda_n = 0 is a collision with 0.
inline std::vector<Scalar> eigenvalues(const DeltaTable& deltas) {
  if (deltas.empty()) throw InsufficientData("empty delta table");
  auto lambdas = detail::lambda_column(deltas, deltas.n_max());
  if (!lambdas[0].is_zero())
    throw DomainError("delta_0^(0) must be zero (operator not normalized)");
  detail::check_spectrum(lambdas, deltas.n_max());
  return lambdas;
}

/*
 * Monic P_n by descending recursion on the coefficient index:
 *
 *   b_{n,n-i} = sum_{k=1}^{N} delta_{n-i+k}^(k) b_{n,n-i+k} / (lambda_n - lambda_{n-i})
 *
 * with b_{n,n} = 1 and b_{n,s} = 0 for s > n. O(n N) scalar operations.
 */
inline Poly eigenpoly_recursive(const DeltaTable& deltas, int n) {
  if (n < 0) throw DomainError("negative degree");
  if (deltas.size() <= n)
    throw InsufficientData("delta table must cover n = " + std::to_string(n));
  auto lambdas = detail::lambda_column(deltas, n);
  for (int m = 0; m < n; ++m)
    if (lambdas[static_cast<std::size_t>(m)] == lambdas[static_cast<std::size_t>(n)])
      throw DegenerateSpectrum(m, n);

  const int width = deltas.order() ? *deltas.order() : n;
  std::vector<Scalar> b(static_cast<std::size_t>(n) + 1);
  b[static_cast<std::size_t>(n)] = Scalar(1);
  for (int i = 1; i <= n; ++i) {
    const int m = n - i;
    Scalar sum;
    for (int k = 1; k <= std::min(width, i); ++k) {
      const Scalar& upper = b[static_cast<std::size_t>(m + k)];
      if (upper.is_zero()) continue;
      Scalar d = deltas.at(m + k, k);
      if (d.is_zero()) continue;
      sum += d * upper;
    }
    b[static_cast<std::size_t>(m)] =
        sum / (lambdas[static_cast<std::size_t>(n)] - lambdas[static_cast<std::size_t>(m)]);
  }
  return Poly(std::move(b));
}

/*
 * b_{n,n-i} as the determinant of the i x i upper Hessenberg matrix with
 *
 *   H(r, c) = delta_{n+1-r}^(c+1-r) / (lambda_n - lambda_{n-c}),  r <= c
 *   H(c+1, c) = -1
 *
 * expanded along its last column. For n <= N the band is cut off by
 * delta_m^(k) = 0 for k > m, so no separate truncation is needed.
 */
inline Scalar eigenpoly_coeff_det(const DeltaTable& deltas, std::span<const Scalar> lambdas,
                                  int n, int i) {
  if (i < 1 || i > n) throw DomainError("need 1 <= i <= n");
  if (deltas.size() <= n || static_cast<int>(lambdas.size()) <= n)
    throw InsufficientData("delta table and eigenvalues must cover n = " + std::to_string(n));
  for (int c = 1; c <= i; ++c)
    if (lambdas[static_cast<std::size_t>(n)] == lambdas[static_cast<std::size_t>(n - c)])
      throw DegenerateSpectrum(n - c, n);

  std::vector<Scalar> gaps;
  gaps.reserve(static_cast<std::size_t>(i));
  for (int c = 1; c <= i; ++c)
    gaps.push_back(lambdas[static_cast<std::size_t>(n)] - lambdas[static_cast<std::size_t>(n - c)]);

  auto entry = [&](int r, int c) -> Scalar {
    if (r == c + 1) return Scalar(-1);
    Scalar d = deltas.at(n + 1 - r, c + 1 - r);
    if (d.is_zero()) return d;
    return d / gaps[static_cast<std::size_t>(c - 1)];
  };
  return hessenberg_determinant<Scalar>(i, entry);
}

/// P_n with every lower coefficient taken from eigenpoly_coeff_det.
inline Poly eigenpoly_determinant(const DeltaTable& deltas, int n) {
  auto lambdas = detail::lambda_column(deltas, n);
  std::vector<Scalar> b(static_cast<std::size_t>(n) + 1);
  b[static_cast<std::size_t>(n)] = Scalar(1);
  for (int i = 1; i <= n; ++i)
    b[static_cast<std::size_t>(n - i)] = eigenpoly_coeff_det(deltas, lambdas, n, i);
  return Poly(std::move(b));
}

enum class CoefficientMethod { Recursive, Determinant };

inline EigenSystem eigen_system(const DeltaTable& deltas, int n_max,
                                CoefficientMethod method = CoefficientMethod::Recursive) {
  if (deltas.size() <= n_max)
    throw InsufficientData("delta table must cover n = " + std::to_string(n_max));
  EigenSystem sys;
  sys.lambdas = eigenvalues(deltas.truncated(n_max + 1));
  sys.polys.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    sys.polys.push_back(method == CoefficientMethod::Recursive ? eigenpoly_recursive(deltas, n)
                                                               : eigenpoly_determinant(deltas, n));
  return sys;
}

/// Eigen-system of a (not necessarily normalized) operator. The returned
/// eigenvalues belong to the normalized operator; add normalize(op).shift
/// to recover those of `op`.
inline EigenSystem eigen_system(const BochnerOperator& op, int n_max,
                                CoefficientMethod method = CoefficientMethod::Recursive) {
  return eigen_system(deltas_from_operator(normalize(op).op, n_max), n_max, method);
}

/*
 * Extension of a delta column past the order:
 *
 *   delta_n^(k) = sum_{i=k}^{N} (-1)^{N-i} C(n,i) C(n-i-1,N-i) delta_i^(k),  n >= N+1
 *   delta_n^(k) = 0,                                                         k > N
 *
 * `seed` must cover rows 0..N.
 */
inline Scalar delta_extend(const DeltaTable& seed, int order, int n, int k) {
  if (order < 1) throw DomainError("operator order must be positive");
  if (k < 0 || n < 0) throw DomainError("negative index");
  if (k > order) return Scalar(0);
  if (n <= order) throw DomainError("extension needs n >= N+1 or k > N");
  if (seed.size() <= order)
    throw InsufficientData("seed must cover rows 0.." + std::to_string(order));
  Scalar sum;
  for (int i = k; i <= order; ++i) {
    Scalar d = seed.at(i, k);
    if (d.is_zero()) continue;
    sum += d * Rational(parity_sign(order - i) * binomial(n, i) * binomial(n - i - 1, order - i));
  }
  return sum;
}

/// lambda_n = -n(n-2) lambda_1 + n(n-1)/2 lambda_2, valid for every order-2 operator.
inline Scalar lambda_via_N2_identity(const Scalar& lambda1, const Scalar& lambda2, int n) {
  if (n < 0) throw DomainError("negative index");
  return lambda1 * Scalar(-n * (n - 2)) + lambda2 * Scalar(make_rational(n * (n - 1), 2));
}

}  // namespace bochner
