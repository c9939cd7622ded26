#pragma once

// Classical operators in the normalization where
//   hermite:  lambda_n = -2n
//   laguerre: lambda_n = -n
//   jacobi:   lambda_n = -n(n + 1 + alpha + beta)

#include <string>
#include <vector>

#include "bochner/errors.hpp"
#include "bochner/exact.hpp"
#include "bochner/operator.hpp"
#include "bochner/poly.hpp"
#include "bochner/shapiro.hpp"

namespace bochner::presets {

/// d^2 - 2x d
inline BochnerOperator hermite() {
  return BochnerOperator({Poly{}, Poly{Scalar(0), Scalar(-2)}, Poly{Scalar(1)}});
}

/// x d^2 + (alpha + 1 - x) d
inline BochnerOperator laguerre(const Rational& alpha = 0) {
  return BochnerOperator(
      {Poly{}, Poly{Scalar(alpha + 1), Scalar(-1)}, Poly{Scalar(0), Scalar(1)}});
}

/// (1 - x^2) d^2 + (beta - alpha - (alpha + beta + 2) x) d
inline BochnerOperator jacobi(const Rational& alpha, const Rational& beta) {
  return BochnerOperator({Poly{},
                          Poly{Scalar(Rational(beta - alpha)), Scalar(Rational(-(alpha + beta + 2)))},
                          Poly{Scalar(1), Scalar(0), Scalar(-1)}});
}

inline BochnerOperator shapiro(std::vector<Scalar> c) {
  return ShapiroOperator(std::move(c)).to_bochner();
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> list{"hermite", "laguerre", "jacobi", "shapiro"};
  return list;
}

}  // namespace bochner::presets
