#pragma once

// Operators shared by the unit and acceptance tests: the classical presets
// plus seeded random Bochner operators of order 1..5.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bochner/bochner.hpp"

namespace corpus {

using namespace bochner;

struct Entry {
  std::string name;
  BochnerOperator op;
};

inline Rational random_rational(std::mt19937_64& rng, long bound = 1000) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return make_rational(num(rng), den(rng));
}

inline Scalar random_scalar(std::mt19937_64& rng, bool complex, long bound = 1000) {
  if (!complex) return Scalar(random_rational(rng, bound));
  return Scalar(random_rational(rng, bound), random_rational(rng, bound));
}

inline Scalar random_nonzero(std::mt19937_64& rng, bool complex, long bound = 1000) {
  for (;;) {
    Scalar s = random_scalar(rng, complex, bound);
    if (!s.is_zero()) return s;
  }
}

// lambda_n of the normalized operator, n = 0..upto.
inline bool nondegenerate(const BochnerOperator& op, int upto) {
  try {
    eigenvalues(deltas_from_operator(normalize(op).op, upto));
    return true;
  } catch (const DegenerateSpectrum&) {
    return false;
  }
}

/// Random order-`order` operator with deg a_i <= i, a nonzero leading
/// coefficient and a spectrum without collisions up to degree `upto`.
inline BochnerOperator random_operator(std::mt19937_64& rng, int order, bool complex, int upto = 40) {
  for (;;) {
    std::vector<Poly> a;
    a.push_back(Poly{random_scalar(rng, complex)});
    for (int i = 1; i <= order; ++i) {
      std::vector<Scalar> c;
      for (int j = 0; j <= i; ++j) c.push_back(random_scalar(rng, complex));
      if (i == order) c.back() = random_nonzero(rng, complex);
      a.emplace_back(std::move(c));
    }
    BochnerOperator op(std::move(a));
    if (nondegenerate(op, upto)) return op;
  }
}

inline std::vector<Scalar> random_shapiro_c(std::mt19937_64& rng, int order, long bound = 1000) {
  std::vector<Scalar> c;
  for (int i = 1; i < order; ++i) c.push_back(Scalar(random_rational(rng, bound)));
  c.push_back(Scalar(random_rational(rng, bound)));
  while (c.back().is_zero()) c.back() = Scalar(random_rational(rng, bound));
  return c;
}

inline constexpr std::uint64_t kSeed = 0xB0C4'4E12'2024'0001ULL;

/// Presets plus 25 random operators (orders cycling 1..5, every other one
/// with Gaussian-rational coefficients).
inline const std::vector<Entry>& operators() {
  static const std::vector<Entry> list = [] {
    std::vector<Entry> out;
    out.push_back({"hermite", presets::hermite()});
    out.push_back({"laguerre(0)", presets::laguerre(0)});
    out.push_back({"laguerre(5/2)", presets::laguerre(make_rational(5, 2))});
    out.push_back({"jacobi(1/2,1/3)", presets::jacobi(make_rational(1, 2), make_rational(1, 3))});
    out.push_back({"shapiro(1,0,1/2)", presets::shapiro({Scalar(1), Scalar(0), Scalar(make_rational(1, 2))})});
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 25; ++i) {
      int order = 1 + i % 5;
      bool complex = i % 2 == 1;
      out.push_back({"random#" + std::to_string(i) + "(N=" + std::to_string(order) + ")",
                     random_operator(rng, order, complex)});
    }
    return out;
  }();
  return list;
}

}  // namespace corpus
