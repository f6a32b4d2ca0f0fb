#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "plurigen/basket.hpp"
#include "plurigen/errors.hpp"

namespace plurigen {
namespace {

TEST(OrbifoldPointTest, Validity) {
  EXPECT_NO_THROW(OrbifoldPoint(1, 2));
  EXPECT_NO_THROW(OrbifoldPoint(2, 5));
  EXPECT_THROW(OrbifoldPoint(3, 5), PreconditionError);  // 2b > r
  EXPECT_THROW(OrbifoldPoint(2, 4), PreconditionError);  // gcd
  EXPECT_THROW(OrbifoldPoint(1, 1), PreconditionError);
  EXPECT_THROW(OrbifoldPoint(0, 3), PreconditionError);
}

TEST(BasketTest, ParseX66) {
  Basket basket = parse_basket("1/2,2/5,1/3,2/11");
  std::vector<OrbifoldPoint> expected{{1, 2}, {1, 3}, {2, 5}, {2, 11}};
  EXPECT_EQ(basket.points(), expected);
  EXPECT_EQ(basket.size(), 4);
  EXPECT_EQ(basket.max_index(), 11);
  EXPECT_EQ(basket.to_string(), "1/2,1/3,2/5,2/11");
}

TEST(BasketTest, ParseMultiplicity) {
  Basket basket = parse_basket("3x1/2,1/3");
  ASSERT_EQ(basket.entries().size(), 2u);
  EXPECT_EQ(basket.entries()[0], (Basket::Entry{OrbifoldPoint(1, 2), 3}));
  EXPECT_EQ(basket.entries()[1], (Basket::Entry{OrbifoldPoint(1, 3), 1}));
  EXPECT_EQ(basket.size(), 4);
  EXPECT_EQ(parse_basket(" 3 x 1 / 2 , 1/3 "), basket);
  EXPECT_EQ(parse_basket("1/2,1/3,1/2,1/2"), basket);
  EXPECT_EQ(parse_basket("2X1/2,1/2,1/3"), basket);
}

TEST(BasketTest, ParseEmpty) {
  EXPECT_TRUE(parse_basket("").empty());
  EXPECT_TRUE(parse_basket("   ").empty());
  EXPECT_EQ(Basket().max_index(), 0);
}

TEST(BasketTest, ParseErrorsNameTheItem) {
  auto message = [](const char* text) {
    try {
      parse_basket(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("2/4").find("'2/4'"), std::string::npos);
  EXPECT_NE(message("1/2,3/5").find("'3/5'"), std::string::npos);
  EXPECT_NE(message("1/2,,1/3").find("''"), std::string::npos);
  EXPECT_NE(message("0x1/2").find("multiplicity"), std::string::npos);
  EXPECT_NE(message("1/1").find("r >= 2"), std::string::npos);
  EXPECT_NE(message("a/b").find("'a/b'"), std::string::npos);
  EXPECT_THROW(parse_basket("1/2,"), ParseError);
  EXPECT_THROW(parse_basket("1-2"), ParseError);
}

// Storage order of the input never changes the canonical basket.
TEST(BasketProperty, CanonicalUnderPermutation) {
  std::vector<OrbifoldPoint> points{{1, 2}, {1, 2}, {2, 5}, {1, 3}, {2, 11}, {3, 8}, {1, 3}};
  Basket reference(points);
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    std::shuffle(points.begin(), points.end(), rng);
    Basket b(points);
    EXPECT_EQ(b, reference);
    EXPECT_EQ(parse_basket(b.to_string()), reference);
    EXPECT_TRUE(std::is_sorted(b.entries().begin(), b.entries().end(),
                               [](const auto& x, const auto& y) { return x.point < y.point; }));
  }
}

}  // namespace
}  // namespace plurigen
