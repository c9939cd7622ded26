#include <random>

#include <gtest/gtest.h>

#include "bochner/recurrence.hpp"
#include "bochner/shapiro.hpp"
#include "bochner/spectral.hpp"
#include "corpus.hpp"

using namespace bochner;

namespace {

Scalar q(long n, long d = 1) { return Scalar(make_rational(n, d)); }

std::vector<ShapiroOperator> random_family(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ShapiroOperator> out;
  for (int order = 1; order <= 5; ++order)
    for (int t = 0; t < 3; ++t) out.emplace_back(corpus::random_shapiro_c(rng, order));
  return out;
}

}  // namespace

TEST(ShapiroOperator, Construction) {
  EXPECT_THROW(ShapiroOperator({}), InvalidOperator);
  EXPECT_THROW(ShapiroOperator({q(1), q(0)}), InvalidOperator);
  ShapiroOperator s({q(1), q(0), q(1, 2)});
  EXPECT_EQ(s.order(), 3);
  EXPECT_EQ(s.c(4), Scalar(0));
  auto op = s.to_bochner();
  EXPECT_EQ(op.coeff(1), Poly({q(1), q(1)}));
  EXPECT_EQ(op.coeff(2), Poly{});
  EXPECT_EQ(op.coeff(3), Poly::monomial(2, q(1, 2)));
}

TEST(ShapiroOperator, EigenvaluesAreIndices) {
  for (const auto& s : random_family(51)) {
    auto l = eigenvalues(deltas_from_operator(s.to_bochner(), 20));
    for (int n = 0; n <= 20; ++n) EXPECT_EQ(l[static_cast<std::size_t>(n)], Scalar(n));
  }
}

TEST(ShapiroDelta, Examples) {
  const Scalar a = q(3, 7), b = q(-2, 5);
  ShapiroOperator s2({a, b});
  EXPECT_EQ(shapiro_delta1(s2, 3), a * 3 + b * 6);
  EXPECT_EQ(shapiro_delta1(s2, 0), Scalar(0));
  EXPECT_EQ(shapiro_delta1(ShapiroOperator({q(1)}), 5), Scalar(5));
}

TEST(ShapiroDelta, MatchesGeneralTable) {
  for (const auto& s : random_family(52)) {
    auto d = deltas_from_operator(s.to_bochner(), 30);
    for (int n = 0; n <= 30; ++n) {
      EXPECT_EQ(d.at(n, 0), Scalar(n));
      EXPECT_EQ(d.at(n, 1), shapiro_delta1(s, n));
      for (int k = 2; k <= n; ++k) EXPECT_TRUE(d.at(n, k).is_zero());
    }
  }
}

TEST(ShapiroCoeff, Examples) {
  ShapiroOperator s1({q(1)});
  EXPECT_EQ(shapiro_coeff(s1, 3, 0), Scalar(1));
  EXPECT_EQ(shapiro_coeff(s1, 3, 2), Scalar(3));
  EXPECT_EQ(shapiro_coeff(ShapiroOperator({q(0), q(1)}), 2, 1), Scalar(2));
  EXPECT_THROW(shapiro_coeff(s1, 3, 4), DomainError);
}

TEST(ShapiroCoeff, MatchesGeneralRecursion) {
  for (const auto& s : random_family(53)) {
    auto d = deltas_from_operator(s.to_bochner(), 25);
    for (int n = 0; n <= 25; ++n) {
      Poly p = eigenpoly_recursive(d, n);
      EXPECT_EQ(shapiro_eigenpoly(s, n), p);
      for (int i = 0; i <= n; i += 5) EXPECT_EQ(shapiro_coeff(s, n, i), p[static_cast<std::size_t>(n - i)]);
    }
  }
}

TEST(ShapiroAlpha, Examples) {
  const Scalar c1 = q(3, 7), c2 = q(-2, 5);
  ShapiroOperator s2({c1, c2});
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(shapiro_alpha(s2, n, 0), -c1 - c2 * (2 * n));
    EXPECT_EQ(shapiro_alpha(s2, n, 1), c2 * (c1 * n + c2 * (n * (n - 1))));
  }
  ShapiroOperator s1({c1});
  EXPECT_EQ(shapiro_alpha(s1, 4, 0), -c1);
  EXPECT_THROW(shapiro_alpha(s1, 4, 1), DomainError);
  EXPECT_THROW(shapiro_alpha(s2, 4, -1), DomainError);
}

TEST(ShapiroRecurrence, Holds) {
  EXPECT_TRUE(verify_shapiro_recurrence(ShapiroOperator({q(1)}), 10));
  std::mt19937_64 rng(54);
  EXPECT_TRUE(verify_shapiro_recurrence(ShapiroOperator(corpus::random_shapiro_c(rng, 3)), 20));
}

TEST(ShapiroRecurrence, PerturbedBandFailsWithLocation) {
  std::mt19937_64 rng(55);
  ShapiroOperator s(corpus::random_shapiro_c(rng, 3));
  auto band = shapiro_alpha_band(s, 12);
  band[7][1] += Scalar(1);
  auto check = verify_shapiro_recurrence(s, 12, band);
  EXPECT_FALSE(check);
  EXPECT_EQ(check.n, 7);
  // The error term is P_6, which is monic of degree 6, so its lowest nonzero
  // coefficient locates the failure.
  ASSERT_TRUE(check.coefficient.has_value());
  EXPECT_LE(*check.coefficient, 6);
}

TEST(ShapiroRecurrence, FitMatchesClosedFormBand) {
  for (const auto& s : random_family(56)) {
    auto sys = eigen_system(s.to_bochner(), 16);
    auto rec = fit_recurrence(sys);
    auto band = shapiro_alpha_band(s, rec.n_max());
    for (int n = 0; n <= rec.n_max(); ++n)
      for (int k = 0; k <= n; ++k) {
        int shift = n - k;
        Scalar expected = shift < s.order() ? band[static_cast<std::size_t>(n)][static_cast<std::size_t>(shift)]
                                            : Scalar(0);
        EXPECT_EQ(rec.alpha(n, k), expected) << "N=" << s.order() << " n=" << n << " k=" << k;
      }
    EXPECT_EQ(bandwidth(rec, s.order()), s.order() - 1);
  }
}
