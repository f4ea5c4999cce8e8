#include <gtest/gtest.h>

#include <optional>

#include "hyperivt/parse.hpp"
#include "hyperivt/ultrapower.hpp"
#include "support/generators.hpp"

using hyperivt::Classification;
using hyperivt::Error;
using hyperivt::ErrorCode;
using hyperivt::HyperSeq;
using hyperivt::Integer;
using hyperivt::Rational;
using hyperivt::SeqOrdering;

namespace {

HyperSeq seq(const char* text) { return hyperivt::parse_sequence(text); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Ultrapower, StarEmbed) {
  HyperSeq three = hyperivt::star_embed(Rational(3));
  for (long n = 1; n <= 20; ++n) EXPECT_EQ(three.term(Integer(n)), Rational(3));
  EXPECT_EQ(three.valid_from(), 1);

  HyperSeq zero = hyperivt::star_embed(Rational(0));
  HyperSeq x = seq("(3*n + 1)/(n + 2)");
  EXPECT_EQ(hyperivt::seq_compare(x + zero, x), SeqOrdering::Equal);

  EXPECT_EQ(hyperivt::seq_compare(hyperivt::star_embed(Rational(Integer(1), Integer(2))),
                                  hyperivt::star_embed(Rational(Integer(1), Integer(3)))),
            SeqOrdering::Greater);
}

TEST(Ultrapower, PointwiseArithmetic) {
  HyperSeq inv = seq("1/n");
  EXPECT_EQ(hyperivt::seq_compare(inv + inv, seq("2/n")), SeqOrdering::Equal);

  // Evaluate both sides termwise at indices 1..100.
  HyperSeq prod = seq("n") * seq("1/n");
  for (long n = 1; n <= 100; ++n) EXPECT_EQ(prod.term(Integer(n)), Rational(1));
  EXPECT_EQ(hyperivt::seq_compare(prod, hyperivt::star_embed(Rational(1))), SeqOrdering::Equal);

  HyperSeq q = hyperivt::star_embed(Rational(1)) / seq("n");
  EXPECT_EQ(hyperivt::seq_compare(q, inv), SeqOrdering::Equal);
  EXPECT_EQ(hyperivt::seq_classify(q), Classification::InfinitesimalNonzero);
}

TEST(Ultrapower, DivisorChecks) {
  EXPECT_EQ(code_of([] { seq("1/(n - n)"); }), ErrorCode::EventuallyZeroDivisor);
  EXPECT_EQ(code_of([] { seq("1/alt{0; 1}"); }), ErrorCode::UltrafilterDependent);
  EXPECT_EQ(code_of([] { (void)(seq("n") / hyperivt::star_embed(Rational(0))); }),
            ErrorCode::EventuallyZeroDivisor);

  // Cauchy bound of n - 5 is 6, so terms are defined from index 7 on.
  HyperSeq s = seq("1/(n - 5)");
  EXPECT_EQ(s.valid_from(), 7);
  for (long n = 7; n < 40; ++n) EXPECT_NO_THROW(s.term(Integer(n)));
  EXPECT_THROW(s.term(Integer(5)), Error);
}

TEST(Ultrapower, ValidFromCoversEveryDivisor) {
  gen::Source src(30);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto s = src.sequence();
    if (!s) continue;
    ++checked;
    for (Integer n = s->valid_from(); n < s->valid_from() + 30; ++n) {
      Rational t;
      ASSERT_NO_THROW(t = s->term(n)) << s->expr().to_string() << " at " << n.get_str();
      EXPECT_EQ(t, s->on_class(0).at(Rational(n)));
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Ultrapower, Compare) {
  HyperSeq zero = hyperivt::star_embed(Rational(0));
  EXPECT_EQ(hyperivt::seq_compare(seq("1/n"), zero), SeqOrdering::Greater);
  EXPECT_EQ(code_of([&] { hyperivt::seq_compare(seq("alt{1; -1}"), zero); }),
            ErrorCode::UltrafilterDependent);
  Integer billion;
  mpz_ui_pow_ui(billion.get_mpz_t(), 10, 9);
  EXPECT_EQ(hyperivt::seq_compare(seq("n"), hyperivt::star_embed(Rational(billion))),
            SeqOrdering::Greater);
  // Classes agree even though a selector is present.
  EXPECT_EQ(hyperivt::seq_compare(seq("alt{1; 2}"), zero), SeqOrdering::Greater);
}

TEST(Ultrapower, Classify) {
  EXPECT_EQ(hyperivt::seq_classify(seq("1/n")), Classification::InfinitesimalNonzero);
  EXPECT_EQ(hyperivt::seq_classify(seq("n")), Classification::Infinite);
  EXPECT_EQ(hyperivt::seq_classify(seq("n - n")), Classification::Zero);
  EXPECT_EQ(hyperivt::seq_classify(seq("(3*n+1)/(n+2)")), Classification::Appreciable);
  EXPECT_EQ(code_of([] { hyperivt::seq_classify(seq("alt{1/n; n}")); }),
            ErrorCode::UltrafilterDependent);
}

TEST(Ultrapower, Shadow) {
  EXPECT_EQ(hyperivt::seq_shadow(seq("1/n")), Rational(0));
  HyperSeq s = seq("(3*n+1)/(n+2)");
  EXPECT_EQ(hyperivt::seq_shadow(s), Rational(3));
  for (unsigned k = 1; k <= 6; ++k) {
    Integer n;
    mpz_ui_pow_ui(n.get_mpz_t(), 10, k);
    EXPECT_LT(hyperivt::abs(s.term(n) - Rational(3)), Rational(Integer(6), n));
  }
  EXPECT_EQ(code_of([] { hyperivt::seq_shadow(seq("n")); }), ErrorCode::NotLimited);
  EXPECT_EQ(code_of([] { hyperivt::seq_shadow(seq("alt{1; 2}")); }),
            ErrorCode::UltrafilterDependent);
  EXPECT_EQ(code_of([] { hyperivt::seq_shadow(seq("alt{1; n}")); }),
            ErrorCode::UltrafilterDependent);
  EXPECT_EQ(hyperivt::seq_shadow(seq("alt{0; 1/n}")), Rational(0));
}

TEST(Ultrapower, SelectorBranchesFollowIndexParity) {
  HyperSeq s = seq("alt{1; -1}");
  EXPECT_EQ(s.period(), 2u);
  EXPECT_EQ(s.term(Integer(4)), Rational(1));
  EXPECT_EQ(s.term(Integer(7)), Rational(-1));
  HyperSeq nested = seq("alt{n; alt{1; 2; 3}}");
  EXPECT_EQ(nested.period(), 6u);
  EXPECT_EQ(nested.term(Integer(6)), Rational(6));
  EXPECT_EQ(nested.term(Integer(5)), Rational(3));  // odd, 5 mod 3 = 2
  EXPECT_EQ(code_of([] { seq("alt{1}"); }), ErrorCode::ParseError);
}

TEST(Ultrapower, FromSeq) {
  EXPECT_EQ(hyperivt::from_seq(seq("1/n")), hyperivt::RFunc(1) / hyperivt::RFunc::omega());
  EXPECT_EQ(hyperivt::from_seq(seq("(3*n+1)/(n+2)")).to_string(), "(3*w + 1)/(w + 2)");
  EXPECT_EQ(code_of([] { hyperivt::from_seq(seq("alt{-1; 1}")); }),
            ErrorCode::NotRationalFunction);
}

TEST(UltrapowerProperty, StandardRealsAreLimitedAndApart) {
  gen::Source src(31);
  for (int i = 0; i < 1000; ++i) {
    Rational r = src.rational(1000, 50), s = src.rational(1000, 50);
    EXPECT_NE(hyperivt::seq_classify(hyperivt::star_embed(r)), Classification::Infinite);
    if (r == s) continue;
    HyperSeq a = hyperivt::star_embed(r), b = hyperivt::star_embed(s);
    EXPECT_NE(hyperivt::seq_compare(a, b), SeqOrdering::Equal);
    EXPECT_EQ(hyperivt::seq_classify(a - b), Classification::Appreciable);
  }
}

TEST(UltrapowerProperty, IdealAndInverseDuality) {
  gen::Source src(32);
  int products = 0, inverses = 0;
  while (products < 500 || inverses < 200) {
    auto a = src.sequence(), b = src.sequence();
    if (!a || !b) continue;
    Classification ca = hyperivt::seq_classify(*a), cb = hyperivt::seq_classify(*b);
    if (hyperivt::is_infinitesimal(ca) && hyperivt::is_limited(cb) && products < 500) {
      ++products;
      EXPECT_TRUE(hyperivt::is_infinitesimal(hyperivt::seq_classify(*a * *b)));
    }
    if (ca == Classification::InfinitesimalNonzero) {
      ++inverses;
      EXPECT_EQ(hyperivt::seq_classify(hyperivt::star_embed(Rational(1)) / *a),
                Classification::Infinite);
    }
    if (ca == Classification::Infinite) {
      EXPECT_EQ(hyperivt::seq_classify(hyperivt::star_embed(Rational(1)) / *a),
                Classification::InfinitesimalNonzero);
    }
  }
}

TEST(UltrapowerProperty, ShadowUniqueAndIdempotent) {
  gen::Source src(33);
  int seen = 0;
  while (seen < 300) {
    auto a = src.sequence();
    if (!a || !hyperivt::is_limited(hyperivt::seq_classify(*a))) continue;
    ++seen;
    Rational z = hyperivt::seq_shadow(*a);
    EXPECT_TRUE(hyperivt::is_infinitesimal(
        hyperivt::seq_classify(*a - hyperivt::star_embed(z))));
    EXPECT_EQ(hyperivt::seq_shadow(hyperivt::star_embed(z)), z);
  }
}

TEST(Ultrapower, TextForm) {
  EXPECT_EQ(seq("n/(2*n)").expr().to_string(), "n/(2*n)");
  EXPECT_EQ(seq("alt{1; -1}").expr().to_string(), "alt{1; (-1)}");
  EXPECT_EQ(hyperivt::seq_shadow(seq(seq("n/(2*n)").expr().to_string().c_str())),
            Rational(Integer(1), Integer(2)));
}

TEST(UltrapowerProperty, TextRoundTrip) {
  gen::Source src(34);
  int seen = 0;
  while (seen < 300) {
    auto a = src.sequence();
    if (!a) continue;
    ++seen;
    const std::string text = a->expr().to_string();
    HyperSeq b = seq(text.c_str());
    EXPECT_EQ(b.on_class(0), a->on_class(0)) << text;
  }
}
