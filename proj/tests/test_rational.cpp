#include <gtest/gtest.h>

#include "curvegraph/error.hpp"
#include "curvegraph/rational.hpp"
#include "support.hpp"

using namespace curvegraph;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("+3"), Rational(3));
  EXPECT_EQ(parse_rational("6/4"), rational(3, 2));
  EXPECT_EQ(parse_rational("-2/6"), rational(-1, 3));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "1/-2", "1 /2", "--1", "1e3"}) {
    EXPECT_ERROR_KIND(parse_rational(bad), ErrorKind::parse_error);
  }
}

TEST(Rational, CanonicalRenderingKeepsDenominator) {
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_EQ(to_string(rational(4, -6)), "-2/3");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
}

TEST(Rational, RoundTripsLargeValues) {
  const std::string big = "123456789012345678901234567891/2";
  EXPECT_EQ(to_string(parse_rational(big)), big);
}

TEST(Rational, IntegerTest) {
  EXPECT_TRUE(is_integer(rational(4, 2)));
  EXPECT_FALSE(is_integer(rational(1, 2)));
}
