#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "plurigen/errors.hpp"
#include "plurigen/riemann_roch.hpp"
#include "plurigen/table.hpp"

namespace plurigen {
namespace {

using testing::brute_point_correction;
using testing::Frac;

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

Rational from_frac(Frac f) {
  return Rational(Integer(static_cast<long>(f.num)), Integer(static_cast<long>(f.den)));
}

NumericalData x66() { return NumericalData(q(1, 330), parse_basket("1/2,2/5,1/3,2/11")); }
NumericalData x12() { return NumericalData(q(1, 2), parse_basket("1/2")); }

TEST(PointCorrectionTest, Examples) {
  EXPECT_EQ(point_correction(OrbifoldPoint(1, 2), 1), q(1, 4));
  EXPECT_EQ(point_correction(OrbifoldPoint(2, 5), 0), Rational(0));
  EXPECT_EQ(point_correction(OrbifoldPoint(2, 11), 0), Rational(0));
  EXPECT_EQ(point_correction(OrbifoldPoint(2, 5), 4), Rational(2));
  EXPECT_THROW(point_correction(OrbifoldPoint(1, 2), -1), PreconditionError);
}

TEST(BasketCorrectionTest, Examples) {
  EXPECT_EQ(basket_correction(x66().basket(), 1), q(1321, 660));
  EXPECT_EQ(basket_correction(Basket(), 0), Rational(0));
  EXPECT_EQ(basket_correction(Basket(), 37), Rational(0));
  EXPECT_EQ(basket_correction(parse_basket("3x1/2,1/3"), 1), q(13, 12));
}

TEST(BasketCorrectionTest, BatchAgreesWithSingle) {
  Basket basket = parse_basket("3x1/2,3/7,1/5");
  auto batch = basket_corrections(basket, 60);
  for (std::int64_t m = 0; m <= 60; ++m) EXPECT_EQ(batch[m], basket_correction(basket, m));
}

TEST(ReidH0Test, Examples) {
  EXPECT_EQ(reid_h0(x66(), 1), 1);
  EXPECT_EQ(reid_h0(x66(), 0), 1);
  EXPECT_EQ(reid_h0(x12(), 0), 1);
  EXPECT_EQ(reid_h0(x12(), 1), 3);
  EXPECT_EQ(reid_h0(x66(), 5), 2);
}

TEST(ReidH0Test, Sequences) {
  auto seq = h0_sequence(x66(), 6);
  EXPECT_EQ(seq, (std::vector<Integer>{1, 1, 1, 1, 1, 2, 3}));
  EXPECT_EQ(h0_sequence(x66(), 0), std::vector<Integer>{1});
  // RR and the six quadratic monomials in x,y,z agree on 6 at m = 2.
  EXPECT_EQ(h0_sequence(x12(), 2), (std::vector<Integer>{1, 3, 6}));
}

TEST(ReidH0Test, InconsistentDataIsAnError) {
  NumericalData bad(q(1, 330), parse_basket("1/2,2/5,1/4,2/11"));
  EXPECT_EQ(rr_value(bad, 1), q(23, 24));
  EXPECT_THROW(reid_h0(bad, 1), InconsistentDataError);
  try {
    h0_sequence(bad, 10);
    FAIL();
  } catch (const InconsistentDataError& e) {
    EXPECT_NE(std::string(e.what()).find("m=1"), std::string::npos);
  }
  EXPECT_THROW(NumericalData(Rational(0), Basket()), PreconditionError);
  EXPECT_THROW(NumericalData(q(-1, 2), Basket()), PreconditionError);
}

// Full sum over one period: (r^2 - 1)/12, for every valid point with r <= 50.
TEST(PointCorrectionProperty, PeriodSum) {
  for (std::int64_t r = 2; r <= 50; ++r) {
    for (std::int64_t b = 1; 2 * b <= r; ++b) {
      if (!OrbifoldPoint::is_valid(b, r)) continue;
      OrbifoldPoint p(b, r);
      Rational expected(Integer(r * r - 1), Integer(12));
      EXPECT_EQ(point_correction(p, r - 1), expected) << b << "/" << r;
      EXPECT_EQ(from_frac(brute_point_correction(b, r, r - 1)), expected);
    }
  }
}

TEST(PointCorrectionProperty, MatchesBruteForceAndIsPeriodic) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> rdist(2, 40);
  std::uniform_int_distribution<std::int64_t> mdist(0, 150);
  for (int i = 0; i < 300; ++i) {
    std::int64_t r = rdist(rng);
    std::int64_t b = std::uniform_int_distribution<std::int64_t>(1, r / 2)(rng);
    if (!OrbifoldPoint::is_valid(b, r)) continue;
    OrbifoldPoint p(b, r);
    std::int64_t m = mdist(rng);
    EXPECT_EQ(point_correction(p, m), from_frac(brute_point_correction(b, r, m)));
    EXPECT_EQ(point_correction(p, m + r) - point_correction(p, m),
              Rational(Integer(r * r - 1), Integer(12)));
  }
}

// Non-decreasing plurigenera for every table row up to N = 400.
TEST(ReidH0Property, MonotoneOnTable) {
  for (const auto& row : builtin_table()) {
    auto seq = h0_sequence(row.numerical_data(), 400);
    for (std::size_t m = 1; m < seq.size(); ++m) EXPECT_LE(seq[m - 1], seq[m]) << row.row_no;
  }
}

TEST(ReidH0Property, MatchesOracleArithmetic) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts{{1, 2}, {2, 5}, {1, 3}, {2, 11}};
  for (std::int64_t m = 0; m <= 80; ++m) {
    EXPECT_EQ(rr_value(x66(), m), from_frac(testing::brute_rr(Frac{1, 330}, pts, m))) << m;
  }
}

TEST(ReidH0Property, OrderIndependent) {
  NumericalData a(q(1, 84), parse_basket("1/2,2x1/3,2/7,1/4"));
  NumericalData b(q(1, 84), parse_basket("1/4,2/7,1/3,1/2,1/3"));
  EXPECT_EQ(h0_sequence(a, 120), h0_sequence(b, 120));
}

}  // namespace
}  // namespace plurigen
