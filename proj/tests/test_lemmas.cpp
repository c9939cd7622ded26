#include <gtest/gtest.h>

#include "bochner/lemmas.hpp"

using namespace bochner;

namespace {

LemmaParams params(std::initializer_list<std::pair<const char*, Rational>> list) {
  LemmaParams p;
  for (const auto& [name, value] : list) p[name] = value;
  return p;
}

}  // namespace

TEST(Lemmas, HandCheckedPoints) {
  EXPECT_TRUE(lemma_residual("alternating-partial-row", params({{"m", 2}, {"k", 1}})).is_zero());
  EXPECT_TRUE(lemma_residual("reciprocal-binomial", params({{"k", 2}, {"m", 1}})).is_zero());
  EXPECT_TRUE(
      lemma_residual("shifted-difference", params({{"n", 5}, {"q", 3}, {"r", 2}})).is_zero());
}

TEST(Lemmas, UnknownIdThrows) {
  EXPECT_THROW(lemma_residual("no-such-identity", {}), DomainError);
  EXPECT_FALSE(is_lemma_id("no-such-identity"));
  EXPECT_THROW(default_lemma_grid("no-such-identity"), DomainError);
}

TEST(Lemmas, OutOfRangeThrows) {
  EXPECT_THROW(lemma_residual("alternating-binomial-product", params({{"m", 2}, {"k", 3}})),
               DomainError);
  EXPECT_THROW(lemma_residual("reciprocal-binomial", params({{"k", 0}, {"m", 1}})), DomainError);
  EXPECT_THROW(lemma_residual("partial-fraction", params({{"n", 4}, {"N", 2}, {"s", 2}})),
               DomainError);
  EXPECT_THROW(lemma_residual("shifted-difference", params({{"n", 2}, {"q", 1}})), DomainError);
  EXPECT_THROW(lemma_residual("alternating-partial-row", params({{"m", Rational(1, 2)}, {"k", 1}})),
               DomainError);
}

TEST(Lemmas, PartialFractionAtRationalPoints) {
  EXPECT_TRUE(
      lemma_residual("partial-fraction", params({{"n", 6}, {"N", 2}, {"s", Rational(7, 2)}}))
          .is_zero());
  EXPECT_TRUE(lemma_residual("partial-fraction", params({{"n", 6}, {"N", 2}, {"s", 6}})).is_zero());
}

class DefaultGrid : public ::testing::TestWithParam<std::string> {};

TEST_P(DefaultGrid, AllResidualsVanish) {
  auto report = sweep_lemma(GetParam(), default_lemma_grid(GetParam()));
  EXPECT_TRUE(report.ok()) << report.counterexample->residual;
  EXPECT_GT(report.checked, 0);
}

INSTANTIATE_TEST_SUITE_P(Identities, DefaultGrid, ::testing::ValuesIn(lemma_ids()),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (auto& c : name)
                             if (c == '-') c = '_';
                           return name;
                         });

TEST(Lemmas, SweepCountsSkippedTuples) {
  std::vector<ParamRange> grid{{"m", 0, 3, 1}, {"k", 0, 5, 1}};
  auto report = sweep_lemma("alternating-binomial-product", grid);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.checked, 1 + 2 + 3 + 4);
  EXPECT_EQ(report.skipped, 24 - 10);
}

TEST(Lemmas, SweepRejectsNonPositiveStep) {
  std::vector<ParamRange> grid{{"m", 0, 3, 0}};
  EXPECT_THROW(sweep_lemma("alternating-binomial-product", grid), DomainError);
}

TEST(Lemmas, DefaultGridSize) {
  long total = 0;
  for (const auto& id : lemma_ids()) total += sweep_lemma(id, default_lemma_grid(id)).checked;
  EXPECT_GE(total, 5000);
}
