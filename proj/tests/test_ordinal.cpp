#include <gtest/gtest.h>

#include <set>

#include "ordia/ordinal.hpp"

using ordia::Ordinal;
using ordia::OrdinalKind;
using ordia::parse_ordinal;

TEST(Ordinal, ParsesBasicForms) {
  EXPECT_TRUE(parse_ordinal("0").is_zero());
  Ordinal w = parse_ordinal("w");
  ASSERT_EQ(w.terms().size(), 1u);
  EXPECT_EQ(w.terms()[0].exponent, Ordinal::natural(1));
  EXPECT_EQ(w.terms()[0].coefficient, 1u);
  Ordinal a = parse_ordinal("w^2*3+w+4");
  ASSERT_EQ(a.terms().size(), 3u);
  EXPECT_EQ(a.terms()[0].coefficient, 3u);
  EXPECT_EQ(a.to_string(), "w^2*3+w+4");
}

TEST(Ordinal, NormalizesAbsorbedTerms) {
  EXPECT_EQ(parse_ordinal("w+w^2").to_string(), "w^2");
  EXPECT_EQ(parse_ordinal("3+w").to_string(), "w");
  EXPECT_EQ(parse_ordinal("w+w").to_string(), "w*2");
  EXPECT_EQ(parse_ordinal(" w ^ ( w + 1 ) + 2 ").to_string(), "w^(w+1)+2");
}

TEST(Ordinal, RejectsMalformedText) {
  for (const char* bad : {"", "w^^2", "x", "w+", "(w", "w*", "2w", "w^"}) {
    EXPECT_THROW(parse_ordinal(bad), ordia::OrdinalSyntaxError) << bad;
  }
}

TEST(Ordinal, PrintParseRoundTrip) {
  for (const char* text : {"0", "7", "w", "w*2+3", "w^2", "w^w", "w^(w*2+1)*4+w^3+1", "w^(w^w)"}) {
    Ordinal a = parse_ordinal(text);
    EXPECT_EQ(parse_ordinal(a.to_string()), a) << text;
  }
}

TEST(Ordinal, Classification) {
  auto five = ordia::classify(Ordinal::natural(5));
  EXPECT_EQ(five.kind, OrdinalKind::Successor);
  EXPECT_EQ(*five.predecessor, Ordinal::natural(4));
  EXPECT_EQ(ordia::classify(Ordinal::omega()).kind, OrdinalKind::Limit);
  EXPECT_EQ(ordia::classify(Ordinal()).kind, OrdinalKind::Zero);
  auto a = ordia::classify(parse_ordinal("w*2+3"));
  EXPECT_EQ(a.kind, OrdinalKind::Successor);
  EXPECT_EQ(*a.predecessor, parse_ordinal("w*2+2"));
  EXPECT_THROW(ordia::predecessor(Ordinal::omega()), std::domain_error);
}

TEST(Ordinal, Comparison) {
  EXPECT_GT(Ordinal::omega(), Ordinal::natural(5));
  EXPECT_GT(parse_ordinal("w+1"), Ordinal::omega());
  EXPECT_GT(parse_ordinal("w^2"), parse_ordinal("w*7+3"));
  EXPECT_LT(parse_ordinal("w^w"), parse_ordinal("w^(w+1)"));
  EXPECT_EQ(parse_ordinal("w*2"), parse_ordinal("w+w"));
}

TEST(Ordinal, AdditionIsOrdinalAddition) {
  EXPECT_EQ(Ordinal::natural(1) + Ordinal::omega(), Ordinal::omega());
  EXPECT_EQ((Ordinal::omega() + Ordinal::natural(1)).to_string(), "w+1");
  EXPECT_EQ((parse_ordinal("w^2+w") + parse_ordinal("w*3+2")).to_string(), "w^2+w*4+2");
}

TEST(Ordinal, CantorPairing) {
  EXPECT_EQ(ordia::cantor_pair(0, 0), 0u);
  EXPECT_EQ(ordia::cantor_pair(1, 0), 1u);
  EXPECT_EQ(ordia::cantor_pair(0, 1), 2u);
  EXPECT_EQ(ordia::cantor_pair(2, 3), 18u);
  for (std::uint64_t n = 0; n < 5000; ++n) {
    auto [m, k] = ordia::cantor_unpair(n);
    EXPECT_EQ(ordia::cantor_pair(m, k), n);
  }
  EXPECT_THROW(ordia::cantor_pair(std::uint64_t{1} << 40, std::uint64_t{1} << 40), std::overflow_error);
}

TEST(Ordinal, OmegaEnumerationIsIdentity) {
  for (std::uint64_t n = 0; n < 100; ++n) EXPECT_EQ(ordia::enumerate_below(Ordinal::omega(), n), Ordinal::natural(n));
}

TEST(Ordinal, OmegaTimesTwoInterleaves) {
  Ordinal a = parse_ordinal("w*2");
  for (std::uint64_t n = 0; n < 200; ++n) {
    Ordinal b = ordia::enumerate_below(a, n);
    if (n % 2 == 0) {
      EXPECT_EQ(b, Ordinal::natural(n / 2));
    } else {
      EXPECT_EQ(b, Ordinal::omega() + Ordinal::natural(n / 2));
    }
  }
}

TEST(Ordinal, RejectsNonLimitEnumeration) {
  EXPECT_THROW(ordia::enumerate_below(Ordinal::natural(3), 0), std::domain_error);
  EXPECT_THROW(ordia::enumerate_below(parse_ordinal("w+1"), 0), std::domain_error);
}

class Enumeration : public ::testing::TestWithParam<const char*> {};

TEST_P(Enumeration, InjectiveBoundedAndInvertible) {
  Ordinal alpha = parse_ordinal(GetParam());
  std::set<std::string> seen;
  for (std::uint64_t n = 0; n < 10000; ++n) {
    Ordinal b = ordia::enumerate_below(alpha, n);
    ASSERT_LT(b, alpha) << n;
    ASSERT_TRUE(seen.insert(b.to_string()).second) << "repeat at " << n << ": " << b.to_string();
    ASSERT_EQ(ordia::enumeration_index(alpha, b), n);
  }
}

TEST_P(Enumeration, CoversSmallOrdinals) {
  Ordinal alpha = parse_ordinal(GetParam());
  std::vector<Ordinal> targets;
  for (std::uint64_t a = 0; a < 4; ++a) {
    for (std::uint64_t b = 0; b < 4; ++b) {
      for (std::uint64_t c = 0; c < 4; ++c) {
        targets.push_back(Ordinal::from_terms({{Ordinal::natural(2), a}, {Ordinal::natural(1), b}, {Ordinal(), c}}));
      }
    }
  }
  targets.push_back(parse_ordinal("w^w+3"));
  targets.push_back(parse_ordinal("w^(w+1)*2+w"));
  for (const auto& beta : targets) {
    if (!(beta < alpha)) continue;
    std::uint64_t n = ordia::enumeration_index(alpha, beta);
    EXPECT_EQ(ordia::enumerate_below(alpha, n), beta) << beta.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Limits, Enumeration,
                         ::testing::Values("w", "w*2", "w*3", "w^2", "w^2+w", "w^3", "w^w", "w^(w+1)", "w^w*2"));
