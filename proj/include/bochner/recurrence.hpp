#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bochner/errors.hpp"
#include "bochner/exact.hpp"
#include "bochner/poly.hpp"
#include "bochner/spectral.hpp"

namespace bochner {

/*
 * Coefficients of
 *
 *   x P_n = P_{n+1} + sum_{k=0}^{n} alpha_{n,k} P_k,    n = 0..n_max,
 *
 * stored row by row; alpha(n, k) is zero for k < 0.
 */
class RecurrenceCoeffs {
 public:
  RecurrenceCoeffs() = default;
  explicit RecurrenceCoeffs(std::vector<std::vector<Scalar>> rows) : rows_(std::move(rows)) {
    for (std::size_t n = 0; n < rows_.size(); ++n)
      if (rows_[n].size() != n + 1)
        throw DomainError("recurrence row " + std::to_string(n) + " must have n+1 entries");
  }

  int n_max() const noexcept { return static_cast<int>(rows_.size()) - 1; }

  Scalar alpha(int n, int k) const {
    if (n < 0 || n > n_max()) throw InsufficientData("no recurrence row " + std::to_string(n));
    if (k < 0) return Scalar(0);
    if (k > n) throw DomainError("alpha_{n,k} needs k <= n");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  void set(int n, int k, Scalar value) {
    rows_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k)) = std::move(value);
  }

  const std::vector<std::vector<Scalar>>& rows() const noexcept { return rows_; }

  friend bool operator==(const RecurrenceCoeffs&, const RecurrenceCoeffs&) = default;

 private:
  std::vector<std::vector<Scalar>> rows_;
};

namespace detail {

inline void check_monic_family(std::span<const Poly> family) {
  for (std::size_t n = 0; n < family.size(); ++n) {
    auto d = family[n].degree();
    if (!d || *d != n)
      throw InvalidEigenSystem("P_" + std::to_string(n) + " must have degree " + std::to_string(n));
    if (!family[n].is_monic()) throw InvalidEigenSystem("P_" + std::to_string(n) + " is not monic");
  }
}

}  // namespace detail

/*
 * Fits alpha_{n,k} for n = 0..family.size()-2. Comparing coefficients of x^i
 * gives, for each n, the triangular system
 *
 *   sum_{s=0}^{n} alpha_{n,n-s} b_{n-s,i} = b_{n,i-1} - b_{n+1,i},   i = 0..n,
 *
 * solved for i = n, n-1, ..., 0 (each step uses b_{m,m} = 1).
 */
inline RecurrenceCoeffs fit_recurrence(std::span<const Poly> family) {
  if (family.size() < 2)
    throw InvalidEigenSystem("fitting a recurrence needs at least P_0 and P_1");
  detail::check_monic_family(family);
  const int n_max = static_cast<int>(family.size()) - 2;
  auto b = [&](int m, int i) -> Scalar {
    if (i < 0) return Scalar(0);
    return family[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)];
  };

  std::vector<std::vector<Scalar>> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    // row[s] holds alpha_{n,n-s} while solving.
    std::vector<Scalar> by_shift(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
      const int i = n - j;
      Scalar value = b(n, i - 1) - b(n + 1, i);
      for (int s = 0; s < j; ++s) {
        const Scalar& a = by_shift[static_cast<std::size_t>(s)];
        if (a.is_zero()) continue;
        value -= a * b(n - s, i);
      }
      by_shift[static_cast<std::size_t>(j)] = std::move(value);
    }
    std::vector<Scalar> row(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) row[static_cast<std::size_t>(n - s)] = by_shift[static_cast<std::size_t>(s)];
    rows.push_back(std::move(row));
  }
  return RecurrenceCoeffs(std::move(rows));
}

/// Uses P_0..P_{n_max} of the eigen-system; the fit covers n = 0..n_max-1.
inline RecurrenceCoeffs fit_recurrence(const EigenSystem& sys) {
  return fit_recurrence(std::span<const Poly>(sys.polys));
}

/// sum_{k=0}^{n} alpha_{n,k} P_k - x P_n + P_{n+1}; zero when row n fits.
inline Poly recurrence_residual(const RecurrenceCoeffs& rec, std::span<const Poly> family, int n) {
  if (n < 0 || n > rec.n_max() || static_cast<std::size_t>(n) + 1 >= family.size())
    throw InsufficientData("residual needs row n and P_{n+1}");
  Poly out = family[static_cast<std::size_t>(n + 1)] -
             Poly::monomial(1) * family[static_cast<std::size_t>(n)];
  for (int k = 0; k <= n; ++k) {
    Scalar a = rec.alpha(n, k);
    if (!a.is_zero()) out += family[static_cast<std::size_t>(k)] * a;
  }
  return out;
}

/*
 * Smallest p with alpha_{n,n-s} = 0 for every s > p and every n in
 * [n_start, n_max], i.e. the family obeys a (p+2)-term recurrence on that
 * window. A band only counts when every row of the window has at least one
 * entry outside it (p < n_start); otherwise the result is nullopt.
 */
inline std::optional<int> bandwidth(const RecurrenceCoeffs& rec, int n_start) {
  if (n_start < 0 || n_start > rec.n_max())
    throw DomainError("window start must lie in [0, n_max]");
  int p = 0;
  for (int n = n_start; n <= rec.n_max(); ++n)
    for (int s = n; s > p; --s)
      if (!rec.alpha(n, n - s).is_zero()) {
        p = s;
        break;
      }
  if (p >= n_start) return std::nullopt;
  return p;
}

}  // namespace bochner
