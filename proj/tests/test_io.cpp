#include <random>

#include <gtest/gtest.h>

#include "bochner/io.hpp"
#include "bochner/presets.hpp"
#include "corpus.hpp"

using namespace bochner;
using nlohmann::json;

namespace {

Scalar q(long n, long d = 1) { return Scalar(make_rational(n, d)); }

}  // namespace

TEST(Io, HermiteOperatorText) {
  auto j = io::to_json(presets::hermite());
  EXPECT_EQ(j, json::parse(R"({"N":2,"a":[["0"],["0","-2"],["1"]]})"));
}

TEST(Io, LaguerreOperatorText) {
  auto j = io::to_json(presets::laguerre(0));
  EXPECT_EQ(j, json::parse(R"({"N":2,"a":[["0"],["1","-1"],["0","1"]]})"));
}

TEST(Io, OperatorAcceptsIntegersAndEmptyPolys) {
  auto op = io::operator_from_json(json::parse(R"({"N":2,"a":[[],[0,-2],["1"]]})"));
  EXPECT_EQ(op, presets::hermite());
}

TEST(Io, OperatorErrors) {
  EXPECT_THROW(io::operator_from_json(json::parse(R"({"a":[["0"],["1"]]})")), ParseError);
  EXPECT_THROW(io::operator_from_json(json::parse(R"({"N":2,"a":[["0"],["1"]]})")), ParseError);
  EXPECT_THROW(io::operator_from_json(json::parse(R"({"N":1,"a":[["0"],["0","0","1"]]})")),
               InvalidOperator);
  EXPECT_THROW(io::operator_from_json(json::parse(R"({"N":2,"a":[["0"],["1"],["0"]]})")),
               InvalidOperator);
  EXPECT_THROW(io::operator_from_json(json::parse(R"({"N":1,"a":[["0"],["x"]]})")), ParseError);
  EXPECT_THROW(io::operator_from_json(json::parse(R"({"N":1,"a":[["0"],[1.5]]})")), ParseError);
  EXPECT_THROW(io::parse_text("{"), ParseError);
  EXPECT_THROW(io::read_file("/nonexistent/operator.json"), ParseError);
}

TEST(Io, OperatorRoundTripOnCorpus) {
  for (const auto& e : corpus::operators()) {
    auto text = io::to_json(e.op).dump();
    EXPECT_EQ(io::operator_from_json(io::parse_text(text)), e.op) << e.name;
  }
}

TEST(Io, EigenDataRoundTrip) {
  for (const auto& e : corpus::operators()) {
    EigenData data(eigen_system(e.op, 6));
    auto back = io::eigendata_from_json(io::parse_text(io::to_json(data).dump()));
    EXPECT_EQ(back.lambdas(), data.lambdas()) << e.name;
    EXPECT_EQ(back.polys(), data.polys()) << e.name;
  }
}

TEST(Io, EigenDataValidation) {
  EXPECT_THROW(io::eigendata_from_json(json::parse(R"({"lambda":["0","1"],"P":[["1"]]})")),
               InvalidEigenSystem);
  EXPECT_THROW(io::eigendata_from_json(json::parse(R"({"lambda":["0"]})")), ParseError);
}

TEST(Io, DeltaTableRoundTrip) {
  for (const auto& e : corpus::operators()) {
    auto t = deltas_from_operator(normalize(e.op).op, 9);
    auto back = io::delta_table_from_json(io::parse_text(io::to_json(t).dump()));
    EXPECT_EQ(back, t) << e.name;
  }
  EXPECT_THROW(io::delta_table_from_json(json::parse(R"([["0"],["1"]])")), ParseError);
}

TEST(Io, RecurrenceRoundTrip) {
  for (const auto& e : corpus::operators()) {
    auto rec = fit_recurrence(eigen_system(e.op, 8));
    auto back = io::recurrence_from_json(io::parse_text(io::to_json(rec).dump()));
    EXPECT_EQ(back, rec) << e.name;
  }
  EXPECT_THROW(io::recurrence_from_json(json::parse(R"([["0","1"]])")), ParseError);
}

TEST(Io, ZeroPolynomialIsSingleZero) {
  EXPECT_EQ(io::to_json(Poly{}), json::parse(R"(["0"])"));
  EXPECT_EQ(io::poly_from_json(json::parse(R"(["0"])")), Poly{});
  EXPECT_EQ(io::poly_from_json(json::parse(R"(["1/2+i", "0"])")), Poly{Scalar(Rational(1, 2), Rational(1))});
  EXPECT_EQ(io::to_json(q(-4, 6)), "-2/3");
}
