#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bochner/operator.hpp"
#include "bochner/poly.hpp"
#include "bochner/presets.hpp"
#include "corpus.hpp"

using namespace bochner;

namespace {

Poly random_poly(std::mt19937_64& rng, std::size_t degree, bool complex) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i <= degree; ++i) c.push_back(corpus::random_scalar(rng, complex, 50));
  return Poly(std::move(c));
}

Scalar q(long n, long d = 1) { return Scalar(make_rational(n, d)); }

}  // namespace

TEST(Poly, TrimsTrailingZeros) {
  Poly p{q(1), q(0), q(0)};
  EXPECT_EQ(p.degree(), 0u);
  EXPECT_EQ(p.coeffs().size(), 1u);
  EXPECT_FALSE(Poly{q(0)}.degree().has_value());
  EXPECT_TRUE(Poly{}.is_zero());
  EXPECT_EQ(Poly{q(0)}, Poly{});
}

TEST(Poly, IndexPastDegreeIsZero) {
  Poly p{q(1), q(2)};
  EXPECT_EQ(p[5], Scalar(0));
}

TEST(Poly, Arithmetic) {
  Poly x = Poly::monomial(1);
  Poly p = x * x - Poly{q(1)};
  EXPECT_EQ(p, (x - Poly{q(1)}) * (x + Poly{q(1)}));
  EXPECT_EQ(p(q(3)), Scalar(8));
  EXPECT_EQ(p - p, Poly{});
  EXPECT_TRUE(p.is_monic());
  EXPECT_FALSE((p * q(2)).is_monic());
}

TEST(Derivative, Examples) {
  Poly x3 = Poly::monomial(3);
  EXPECT_EQ(derivative(x3, 1), Poly::monomial(2, q(3)));
  EXPECT_EQ(derivative(x3, 0), x3);
  EXPECT_EQ(derivative(Poly{q(-1, 2), q(0), q(1)}, 2), Poly{q(2)});
  EXPECT_EQ(derivative(x3, 4), Poly{});
}

TEST(Derivative, OrdersCompose) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = random_poly(rng, static_cast<std::size_t>(rng() % 21), trial % 2 == 1);
    for (std::size_t a = 0; a <= 5; ++a)
      for (std::size_t b = 0; b <= 5; ++b)
        EXPECT_EQ(derivative(derivative(p, a), b), derivative(p, a + b));
  }
}

TEST(ApplyOperator, HermiteOnSecondDegree) {
  Poly p{q(-1, 2), q(0), q(1)};
  Poly image = apply_operator(presets::hermite(), p);
  EXPECT_EQ(image, Poly({q(2), q(0), q(-4)}));
  EXPECT_TRUE(is_eigenpair(presets::hermite(), p, Scalar(-4)));
  EXPECT_FALSE(is_eigenpair(presets::hermite(), p, Scalar(-2)));
}

TEST(ApplyOperator, LaguerreOnFirstDegree) {
  Poly p{q(-1), q(1)};
  EXPECT_EQ(apply_operator(presets::laguerre(0), p), Poly({q(1), q(-1)}));
  EXPECT_TRUE(is_eigenpair(presets::laguerre(0), p, Scalar(-1)));
}

TEST(ApplyOperator, ConstantsAndZero) {
  for (const auto& e : corpus::operators()) {
    auto norm = normalize(e.op).op;
    EXPECT_EQ(apply_operator(norm, Poly{q(1)}), Poly{}) << e.name;
    EXPECT_TRUE(is_eigenpair(e.op, Poly{}, Scalar(17))) << e.name;
  }
}

TEST(ApplyOperator, Linear) {
  std::mt19937_64 rng(22);
  for (const auto& e : corpus::operators()) {
    Poly p = random_poly(rng, 8, true), r = random_poly(rng, 6, false);
    Scalar a = corpus::random_scalar(rng, true, 50), b = corpus::random_scalar(rng, false, 50);
    EXPECT_EQ(apply_operator(e.op, p * a + r * b),
              apply_operator(e.op, p) * a + apply_operator(e.op, r) * b)
        << e.name;
  }
}

TEST(ApplyOperator, DegreeDoesNotIncrease) {
  std::mt19937_64 rng(23);
  for (const auto& e : corpus::operators())
    for (std::size_t d = 0; d <= 12; ++d) {
      Poly image = apply_operator(e.op, random_poly(rng, d, true));
      if (image.degree()) {
        EXPECT_LE(*image.degree(), d) << e.name;
      }
    }
}
