#include "apfree/rational.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using apfree::ceil_div;
using apfree::integer;
using apfree::rational;

TEST(Rational, LowestTermsAndSign) {
  rational r(integer(6), integer(4));
  EXPECT_EQ(r.num(), 3);
  EXPECT_EQ(r.den(), 2);
  rational neg(integer(6), integer(-4));
  EXPECT_EQ(neg.num(), -3);
  EXPECT_EQ(neg.den(), 2);
  EXPECT_EQ(rational(integer(-6), integer(-4)), rational(integer(3), integer(2)));
  EXPECT_EQ(rational(0).sign(), 0);
  EXPECT_EQ(neg.sign(), -1);
  EXPECT_THROW(rational(integer(1), integer(0)), std::invalid_argument);
}

TEST(Rational, FloorCeilFrac) {
  EXPECT_EQ(rational(integer(7), integer(3)).floor(), 2);
  EXPECT_EQ(rational(integer(7), integer(3)).ceil(), 3);
  EXPECT_EQ(rational(integer(-1), integer(2)).floor(), -1);
  EXPECT_EQ(rational(integer(-1), integer(2)).ceil(), 0);
  EXPECT_EQ(rational(6).floor(), 6);
  EXPECT_EQ(rational(6).ceil(), 6);
  EXPECT_EQ(rational(integer(-7), integer(3)).floor(), -3);
  EXPECT_EQ(rational(integer(7), integer(3)).frac(), rational(integer(1), integer(3)));
  EXPECT_EQ(rational(integer(-1), integer(2)).frac(), rational(integer(1), integer(2)));
  EXPECT_EQ(rational(-5).frac(), rational(0));
}

TEST(Rational, CeilDivExamples) {
  EXPECT_EQ(ceil_div(rational(integer(9), integer(2)), rational(1)), 5);
  EXPECT_EQ(ceil_div(rational(0), rational(integer(7), integer(3))), 0);
  EXPECT_EQ(ceil_div(rational(integer(-1), integer(2)), rational(1)), 0);
  EXPECT_EQ(ceil_div(rational(6), rational(2)), 3);
  EXPECT_THROW(ceil_div(rational(1), rational(0)), std::invalid_argument);
  EXPECT_THROW(ceil_div(rational(1), rational(-2)), std::invalid_argument);
}

TEST(Rational, CeilDivMatchesEnumeration) {
  // ceil((a-x0)/delta) counts progression terms below a; check against a loop.
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    rational x0 = oracle::random_rational(rng, 0, 5, 12);
    rational delta = oracle::random_rational(rng, 1, 4, 9);
    if (delta.sign() <= 0) continue;
    rational a = oracle::random_rational(rng, 0, 40, 12);
    integer expect = oracle::count_below(x0, delta, a);
    integer got = a > x0 ? ceil_div(a - x0, delta) : integer(0);
    EXPECT_EQ(got, expect) << "x0=" << x0 << " delta=" << delta << " a=" << a;
  }
}

TEST(Rational, ArithmeticIdentities) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    rational a = oracle::random_rational(rng, -20, 20, 30);
    rational b = oracle::random_rational(rng, -20, 20, 30);
    rational c = oracle::random_rational(rng, -20, 20, 30);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - b, -(b - a));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_GE(a.frac(), rational(0));
    EXPECT_LT(a.frac(), rational(1));
    EXPECT_EQ(rational(a.floor()) + a.frac(), a);
  }
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(rational::parse("3/4"), rational(integer(3), integer(4)));
  EXPECT_EQ(rational::parse("-3/4"), rational(integer(-3), integer(4)));
  EXPECT_EQ(rational::parse("12"), rational(12));
  EXPECT_EQ(rational::parse("-12"), rational(-12));
  EXPECT_EQ(rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(rational(integer(-1), integer(2)).str(), "-1/2");
  EXPECT_EQ(rational(5).str(), "5");
  EXPECT_THROW(rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(rational::parse("a/2"), std::invalid_argument);
  EXPECT_THROW(rational::parse("1.5"), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    rational r = oracle::random_rational(rng, -1000, 1000, 997);
    EXPECT_EQ(rational::parse(r.str()), r);
  }
}

TEST(Rational, FloorDivIsMathematical) {
  EXPECT_EQ(apfree::floor_div(integer(7), integer(2)), 3);
  EXPECT_EQ(apfree::floor_div(integer(-7), integer(2)), -4);
  EXPECT_EQ(apfree::floor_div(integer(-8), integer(2)), -4);
  EXPECT_EQ(apfree::floor_div(integer(0), integer(5)), 0);
  for (long long a = -30; a <= 30; ++a) {
    for (long long b = 1; b <= 7; ++b) {
      integer q = apfree::floor_div(integer(a), integer(b));
      EXPECT_LE(q * b, a);
      EXPECT_GT((q + 1) * b, a);
    }
  }
}

TEST(Rational, PowInt) {
  EXPECT_EQ(apfree::pow_int(integer(4), 0), 1);
  EXPECT_EQ(apfree::pow_int(integer(4), 5), 1024);
  EXPECT_EQ(apfree::pow_int(integer(21), 3), 9261);
}
