#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bochner/exact.hpp"

namespace bochner {

/*
 * Dense univariate polynomial; coeffs()[i] is the coefficient of x^i.
 * Trailing zeros are never stored, so the zero polynomial has no
 * coefficients and no degree (degree() returns nullopt).
 */
template <class T>
class BasicPoly {
 public:
  BasicPoly() = default;
  BasicPoly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit BasicPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static BasicPoly constant(T c) { return BasicPoly(std::vector<T>{std::move(c)}); }

  /// c * x^n
  static BasicPoly monomial(std::size_t n, T c = T(1)) {
    std::vector<T> v(n + 1);
    v[n] = std::move(c);
    return BasicPoly(std::move(v));
  }

  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Coefficient of x^i; zero beyond the stored range.
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  const T& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == T(1); }

  BasicPoly operator-() const {
    std::vector<T> v(coeffs_);
    for (auto& c : v) c = -c;
    return BasicPoly(std::move(v));
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPoly& operator*=(const T& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator*(BasicPoly a, const T& c) { return a *= c; }
  friend BasicPoly operator*(const T& c, BasicPoly a) { return a *= c; }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return BasicPoly(std::move(v));
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Horner evaluation.
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using Poly = BasicPoly<Scalar>;

/// Exact order-th derivative. Order zero is the identity.
template <class T>
BasicPoly<T> derivative(const BasicPoly<T>& p, std::size_t order) {
  const auto& c = p.coeffs();
  if (order >= c.size()) return {};
  std::vector<T> out(c.size() - order);
  for (std::size_t i = order; i < c.size(); ++i) {
    // i (i-1) ... (i-order+1)
    Integer falling = 1;
    for (std::size_t j = 0; j < order; ++j) falling *= static_cast<unsigned long>(i - j);
    out[i - order] = c[i] * T(Rational(falling));
  }
  return BasicPoly<T>(std::move(out));
}

/// sum_i a[i](x) * p^(i)(x), computed term by term from the definition.
template <class T>
BasicPoly<T> apply_operator(std::span<const BasicPoly<T>> a, const BasicPoly<T>& p) {
  BasicPoly<T> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    out += a[i] * derivative(p, i);
  }
  return out;
}

}  // namespace bochner
