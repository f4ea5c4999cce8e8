#include <gtest/gtest.h>

#include <vector>

#include "hyperivt/rational.hpp"
#include "support/generators.hpp"

using hyperivt::Error;
using hyperivt::ErrorCode;
using hyperivt::Integer;
using hyperivt::Rational;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

}  // namespace

TEST(Rational, Arithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(0) * q(7, 5), q(0));
  EXPECT_TRUE((q(0) * q(7, 5)).is_zero());

  // Cross-multiplication oracle: a/b = c/d iff a*d = b*c, no gcd involved.
  Rational r = q(2, 3) / q(4, 9);
  EXPECT_EQ(r.numerator() * 12, r.denominator() * 18);
  EXPECT_EQ(r, q(3, 2));
}

TEST(Rational, CanonicalForm) {
  Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(q(8, 4).to_string(), "2");
}

TEST(Rational, DivisionByZero) {
  try {
    (void)(q(1) / q(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  EXPECT_THROW(Rational(Integer(1), Integer(0)), Error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/4"), q(3, 4));
  EXPECT_EQ(Rational::parse("-6/8"), q(-3, 4));
  EXPECT_EQ(Rational::parse("+7"), q(7));
  EXPECT_EQ(Rational::parse("0012"), q(12));
  EXPECT_EQ(Rational::parse("1.25"), q(5, 4));
  EXPECT_EQ(Rational::parse("-.5"), q(-1, 2));
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.2.3", "--1", "1e5"}) {
    try {
      Rational::parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rational, ArchimedeanBound) {
  EXPECT_EQ(hyperivt::archimedean_bound(q(7, 2)), 4);
  EXPECT_EQ(hyperivt::archimedean_bound(q(-5)), 1);
  EXPECT_EQ(hyperivt::archimedean_bound(q(0)), 1);
  EXPECT_EQ(hyperivt::archimedean_bound(q(3)), 4);

  // Integer-part oracle: truncating division on the decimal digits.
  Rational big = q(1000000) + q(1, 3);
  Integer ip = big.numerator() / big.denominator();
  EXPECT_EQ(ip, 1000000);
  EXPECT_EQ(hyperivt::archimedean_bound(big), ip + 1);
}

TEST(RationalProperty, FieldAxioms) {
  gen::Source src(11);
  for (int i = 0; i < 1000; ++i) {
    Rational a = src.rational(50, 20), b = src.rational(50, 20), c = src.rational(50, 20);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + (-a), Rational(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * (Rational(1) / a), Rational(1));
    }
    // Canonical after every operation.
    Rational s = a * b + c;
    EXPECT_GT(s.denominator(), 0);
    EXPECT_EQ(gcd(s.numerator(), s.denominator()), s.is_zero() ? s.denominator() : 1);
  }
}

TEST(RationalProperty, TotalOrder) {
  gen::Source src(12);
  for (int i = 0; i < 1000; ++i) {
    Rational a = src.rational(), b = src.rational(), c = src.rational();
    int relations = (a < b) + (a == b) + (a > b);
    EXPECT_EQ(relations, 1);
    if (a < b) {
      EXPECT_LT(a + c, b + c);
      if (c.sign() > 0) {
        EXPECT_LT(a * c, b * c);
      }
    }
  }
}

TEST(RationalProperty, ArchimedeanBoundIsLeast) {
  gen::Source src(13);
  for (int i = 0; i < 1000; ++i) {
    Rational x = src.rational(1000, 97);
    Integer n = hyperivt::archimedean_bound(x);
    EXPECT_GE(n, 1);
    EXPECT_GT(Rational(n), x);
    if (n > 1) {
      EXPECT_LE(Rational(n) - Rational(1), x);
    }
  }
}

TEST(RationalProperty, SumOfSquaresVanishesOnlyTrivially) {
  gen::Source src(14);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Rational> xs(static_cast<std::size_t>(src.integer(1, 6)));
    bool all_zero = true;
    for (auto& x : xs) {
      x = src.coin() ? Rational(0) : src.rational(3, 3);
      all_zero &= x.is_zero();
    }
    Rational sum(0);
    for (const auto& x : xs) sum += x * x;
    EXPECT_EQ(sum.is_zero(), all_zero);
  }
}
